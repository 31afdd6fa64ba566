#include "hyperent/ttrain.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace hyperent {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// Truncation rank: discards trailing singular values whose energy fits in
// delta^2, never below the numeric-noise floor, and keeps at least one.
int choose_rank(const Eigen::VectorXd& sv, double delta, Eigen::Index rows,
                Eigen::Index cols) {
  const int m = static_cast<int>(sv.size());
  if (m == 0) return 1;
  const double floor_thresh =
      sv[0] * kEps * static_cast<double>(std::max(rows, cols));
  int r = m;
  while (r > 1 && sv[r - 1] <= floor_thresh) --r;
  double budget = delta * delta;
  while (r > 1 && sv[r - 1] * sv[r - 1] <= budget) {
    budget -= sv[r - 1] * sv[r - 1];
    --r;
  }
  if (sv[0] == 0.0) return 1;
  return r;
}

// Two-sided Jacobi for every TT-internal factorization: BDCSVD's
// divide-and-conquer deflation has produced inaccurate factors on the
// structured, rank-deficient carry matrices that appear mid-sweep, and
// the core matrices are small enough that Jacobi costs nothing.
Eigen::JacobiSVD<Eigen::MatrixXd> thin_svd(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
}

TTTensor::Core make_core(int rl, int dim, int rr) {
  TTTensor::Core c;
  c.rank_left = rl;
  c.dim = dim;
  c.rank_right = rr;
  c.left = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rl) * dim, rr);
  return c;
}

// Rebuild a core from its right unfolding (rl x dim*rr).
TTTensor::Core core_from_right(const Eigen::MatrixXd& right, int dim) {
  const int rl = static_cast<int>(right.rows());
  const int rr = static_cast<int>(right.cols()) / dim;
  TTTensor::Core c = make_core(rl, dim, rr);
  for (int b = 0; b < rr; ++b)
    for (int j = 0; j < dim; ++j)
      for (int a = 0; a < rl; ++a)
        c.at(a, j, b) = right(a, j + static_cast<Eigen::Index>(b) * dim);
  return c;
}

Eigen::MatrixXd right_copy(const TTTensor::Core& c) {
  return Eigen::MatrixXd(c.right());
}

// Thin QR; returns {Q (rows x r), R (r x cols)} with r = min(rows, cols).
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> thin_qr(const Eigen::MatrixXd& a) {
  const Eigen::Index r = std::min(a.rows(), a.cols());
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(a.rows(), r);
  Eigen::MatrixXd rr = qr.matrixQR()
                           .topRows(r)
                           .template triangularView<Eigen::Upper>();
  return {std::move(q), std::move(rr)};
}

// Right-orthonormalize core p and absorb the remainder into core p-1.
// Ranks can only shrink: the new R_{p-1} is min(old R_{p-1}, n_p * R_p).
void right_orthonormalize_core(std::vector<TTTensor::Core>& cores, int p) {
  TTTensor::Core& c = cores[p - 1];
  Eigen::MatrixXd w = right_copy(c);             // rl x (n*rr)
  auto [q, r] = thin_qr(w.transpose());          // w^T = q r
  // w = r^T q^T with q^T having orthonormal rows.
  Eigen::MatrixXd qt = q.transpose();
  cores[p - 1] = core_from_right(qt, c.dim);
  TTTensor::Core& prev = cores[p - 2];
  prev.left = prev.left * r.transpose();
  prev.rank_right = static_cast<int>(prev.left.cols());
}

// Left-orthonormalize core p and absorb the remainder into core p+1.
void left_orthonormalize_core(std::vector<TTTensor::Core>& cores, int p) {
  TTTensor::Core& c = cores[p - 1];
  auto [q, r] = thin_qr(c.left);
  c.left = std::move(q);
  c.rank_right = static_cast<int>(c.left.cols());
  TTTensor::Core& next = cores[p];
  Eigen::MatrixXd new_right = r * right_copy(next);
  cores[p] = core_from_right(new_right, next.dim);
}

}  // namespace

TTTensor TTTensor::zeros(std::vector<int> dims) {
  std::vector<Core> cores;
  cores.reserve(dims.size());
  for (int d : dims) cores.push_back(make_core(1, d, 1));
  return from_cores(std::move(dims), std::move(cores));
}

TTTensor TTTensor::from_cores(std::vector<int> dims, std::vector<Core> cores) {
  if (dims.size() < 2) fail(Errc::UnsupportedOrder, "TT order must be >= 2");
  if (dims.size() != cores.size())
    fail(Errc::ShapeMismatch, "core count does not match order");
  for (std::size_t p = 0; p < cores.size(); ++p) {
    const Core& c = cores[p];
    if (c.dim != dims[p])
      fail(Errc::ShapeMismatch, "core dimension mismatch at mode " +
                                    std::to_string(p + 1));
    if (c.left.rows() != static_cast<Eigen::Index>(c.rank_left) * c.dim ||
        c.left.cols() != c.rank_right)
      fail(Errc::ShapeMismatch, "core storage shape mismatch");
    if (p > 0 && cores[p - 1].rank_right != c.rank_left)
      fail(Errc::ShapeMismatch, "rank chain mismatch between cores " +
                                    std::to_string(p) + " and " +
                                    std::to_string(p + 1));
  }
  if (cores.front().rank_left != 1 || cores.back().rank_right != 1)
    fail(Errc::ShapeMismatch, "boundary TT ranks must be 1");
  TTTensor t;
  t.dims_ = std::move(dims);
  t.cores_ = std::move(cores);
  t.flags_.assign(t.cores_.size(), Ortho::None);
  return t;
}

std::vector<int> TTTensor::ranks() const {
  std::vector<int> r;
  r.reserve(cores_.size() + 1);
  r.push_back(1);
  for (const Core& c : cores_) r.push_back(c.rank_right);
  return r;
}

int TTTensor::max_rank() const {
  int m = 1;
  for (const Core& c : cores_) m = std::max(m, c.rank_right);
  return m;
}

TTTensor tt_from_dense(const DenseTensor& t, double tol) {
  const int k = t.order();
  if (k < 2) fail(Errc::UnsupportedOrder, "TT order must be >= 2");
  const double norm = t.frobenius_norm();
  const double delta = tol > 0.0 ? tol * norm / std::sqrt(k - 1.0) : 0.0;

  std::vector<TTTensor::Core> cores;
  cores.reserve(k);
  Eigen::MatrixXd c = Eigen::Map<const Eigen::MatrixXd>(
      t.values().data(), t.dims()[0],
      static_cast<Eigen::Index>(t.size()) / t.dims()[0]);
  int rank_prev = 1;
  for (int p = 1; p < k; ++p) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd = thin_svd(c);
    const int r = choose_rank(svd.singularValues(), delta, c.rows(), c.cols());
    TTTensor::Core core = make_core(rank_prev, t.dims()[p - 1], r);
    core.left = svd.matrixU().leftCols(r);
    if (svd.singularValues().size() == 0 || svd.singularValues()[0] == 0.0)
      core.left.setZero();
    cores.push_back(std::move(core));
    Eigen::MatrixXd next = svd.singularValues().head(r).asDiagonal() *
                           svd.matrixV().leftCols(r).transpose();
    if (svd.singularValues().size() == 0 || svd.singularValues()[0] == 0.0)
      next.setZero();
    // Reshape r x (n_{p+1} * rest) into (r * n_{p+1}) x rest; the buffer is
    // column-major with the rank index fastest, so this is a remap.
    const Eigen::Index rest = next.cols() / t.dims()[p];
    c = Eigen::Map<const Eigen::MatrixXd>(
        next.data(), static_cast<Eigen::Index>(r) * t.dims()[p], rest);
    rank_prev = r;
  }
  TTTensor::Core last = make_core(rank_prev, t.dims()[k - 1], 1);
  last.left = Eigen::Map<const Eigen::MatrixXd>(
      c.data(), static_cast<Eigen::Index>(rank_prev) * t.dims()[k - 1], 1);
  cores.push_back(std::move(last));
  return TTTensor::from_cores(t.dims(), std::move(cores));
}

DenseTensor tt_to_dense(const TTTensor& x) {
  const int k = x.order();
  std::int64_t total = 1;
  for (int d : x.dims()) {
    total *= d;
    if (total > kDenseLimit)
      fail(Errc::TooLargeForDense, "TT reconstruction exceeds the dense limit");
  }
  Eigen::MatrixXd m = x.core(1).left;  // n_1 x R_1
  for (int p = 2; p <= k; ++p) {
    Eigen::MatrixXd prod = m * x.core(p).right();  // N x (n_p * R_p)
    const Eigen::Index rows = prod.rows() * x.dims()[p - 1];
    m = Eigen::Map<const Eigen::MatrixXd>(prod.data(), rows,
                                          prod.cols() / x.dims()[p - 1]);
  }
  DenseTensor out(x.dims());
  Eigen::Map<Eigen::VectorXd>(out.values().data(), out.size()) = m.col(0);
  return out;
}

TTTensor tt_add(const TTTensor& x, const TTTensor& y) {
  if (x.dims() != y.dims())
    fail(Errc::ShapeMismatch, "TT summands must share order and dimensions");
  const int k = x.order();
  std::vector<TTTensor::Core> cores;
  cores.reserve(k);
  for (int p = 1; p <= k; ++p) {
    const auto& a = x.core(p);
    const auto& b = y.core(p);
    const int n = a.dim;
    if (p == 1) {
      TTTensor::Core c = make_core(1, n, a.rank_right + b.rank_right);
      c.left << a.left, b.left;
      cores.push_back(std::move(c));
    } else if (p == k) {
      TTTensor::Core c = make_core(a.rank_left + b.rank_left, n, 1);
      for (int j = 0; j < n; ++j) {
        for (int r = 0; r < a.rank_left; ++r) c.at(r, j, 0) = a.at(r, j, 0);
        for (int r = 0; r < b.rank_left; ++r)
          c.at(a.rank_left + r, j, 0) = b.at(r, j, 0);
      }
      cores.push_back(std::move(c));
    } else {
      TTTensor::Core c = make_core(a.rank_left + b.rank_left, n,
                                   a.rank_right + b.rank_right);
      for (int j = 0; j < n; ++j) {
        for (int r = 0; r < a.rank_left; ++r)
          for (int s = 0; s < a.rank_right; ++s)
            c.at(r, j, s) = a.at(r, j, s);
        for (int r = 0; r < b.rank_left; ++r)
          for (int s = 0; s < b.rank_right; ++s)
            c.at(a.rank_left + r, j, a.rank_right + s) = b.at(r, j, s);
      }
      cores.push_back(std::move(c));
    }
  }
  return TTTensor::from_cores(x.dims(), std::move(cores));
}

TTTensor tt_scale(const TTTensor& x, double s) {
  std::vector<TTTensor::Core> cores;
  cores.reserve(x.order());
  for (int p = 1; p <= x.order(); ++p) cores.push_back(x.core(p));
  cores[0].left *= s;
  return TTTensor::from_cores(x.dims(), std::move(cores));
}

double tt_dot(const TTTensor& x, const TTTensor& y) {
  if (x.dims() != y.dims())
    fail(Errc::ShapeMismatch, "TT inner product needs matching dimensions");
  Eigen::MatrixXd w = Eigen::MatrixXd::Ones(1, 1);
  for (int p = 1; p <= x.order(); ++p) {
    const auto& a = x.core(p);
    const auto& b = y.core(p);
    Eigen::MatrixXd next =
        Eigen::MatrixXd::Zero(a.rank_right, b.rank_right);
    for (int j = 0; j < a.dim; ++j) {
      auto aj = a.left.middleRows(static_cast<Eigen::Index>(j) * a.rank_left,
                                  a.rank_left);
      auto bj = b.left.middleRows(static_cast<Eigen::Index>(j) * b.rank_left,
                                  b.rank_left);
      next.noalias() += aj.transpose() * w * bj;
    }
    w = std::move(next);
  }
  return w(0, 0);
}

double tt_norm(const TTTensor& x) {
  return std::sqrt(std::max(tt_dot(x, x), 0.0));
}

TTTensor tt_round(const TTTensor& x, double tol) {
  const int k = x.order();
  std::vector<TTTensor::Core> cores;
  cores.reserve(k);
  for (int p = 1; p <= k; ++p) cores.push_back(x.core(p));

  for (int p = k; p >= 2; --p) right_orthonormalize_core(cores, p);

  const double norm = cores[0].left.norm();
  if (norm == 0.0) return TTTensor::zeros(x.dims());
  const double delta = tol > 0.0 ? tol * norm / std::sqrt(k - 1.0) : 0.0;

  for (int p = 1; p < k; ++p) {
    TTTensor::Core& c = cores[p - 1];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd = thin_svd(c.left);
    const int r =
        choose_rank(svd.singularValues(), delta, c.left.rows(), c.left.cols());
    Eigen::MatrixXd carry = svd.singularValues().head(r).asDiagonal() *
                            svd.matrixV().leftCols(r).transpose();
    c.left = svd.matrixU().leftCols(r);
    c.rank_right = r;
    Eigen::MatrixXd new_right = carry * right_copy(cores[p]);
    cores[p] = core_from_right(new_right, cores[p].dim);
  }
  TTTensor out = TTTensor::from_cores(x.dims(), std::move(cores));
  for (int p = 1; p < k; ++p) out.set_ortho_flag(p, TTTensor::Ortho::Left);
  return out;
}

TTTensor laplacian_tt(const UniformHypergraph& h, double tol_build) {
  const int k = h.uniformity();
  const int n = h.vertex_count();
  const std::vector<int> dims(k, n);
  if (h.edge_count() == 0) return TTTensor::zeros(dims);

  // Degree part: one selector channel per vertex with nonzero degree.
  const std::vector<int> deg = degrees(h);
  std::vector<int> support;
  for (int j = 0; j < n; ++j)
    if (deg[j] > 0) support.push_back(j);
  const int s = static_cast<int>(support.size());

  std::vector<TTTensor::Core> dcores;
  dcores.reserve(k);
  {
    TTTensor::Core first = make_core(1, n, s);
    for (int r = 0; r < s; ++r)
      first.at(0, support[r], r) = static_cast<double>(deg[support[r]]);
    dcores.push_back(std::move(first));
    for (int p = 2; p < k; ++p) {
      TTTensor::Core mid = make_core(s, n, s);
      for (int r = 0; r < s; ++r) mid.at(r, support[r], r) = 1.0;
      dcores.push_back(std::move(mid));
    }
    TTTensor::Core last = make_core(s, n, 1);
    for (int r = 0; r < s; ++r) last.at(r, support[r], 0) = 1.0;
    dcores.push_back(std::move(last));
  }
  TTTensor acc = TTTensor::from_cores(dims, std::move(dcores));

  // Adjacency part, one edge at a time. The edge tensor (value 1 on every
  // permutation of the edge) factors exactly with rank C(k,p) at cut p:
  // the rank index enumerates which p-subset of the edge has been placed.
  double neg_w = -1.0;
  for (int i = 2; i <= k - 1; ++i) neg_w /= i;  // 1/(k-1)!
  for (const Edge& e : h.edges()) {
    // Subsets of e by size, each sorted ascending, in lexicographic order.
    std::vector<std::vector<std::vector<int>>> subsets(k + 1);
    const int masks = 1 << k;
    for (int mask = 0; mask < masks; ++mask) {
      std::vector<int> sub;
      for (int t = 0; t < k; ++t)
        if (mask & (1 << t)) sub.push_back(e[t]);
      subsets[sub.size()].push_back(std::move(sub));
    }
    for (auto& level : subsets) std::sort(level.begin(), level.end());

    auto index_of = [](const std::vector<std::vector<int>>& level,
                       const std::vector<int>& sub) {
      return static_cast<int>(
          std::lower_bound(level.begin(), level.end(), sub) - level.begin());
    };

    std::vector<TTTensor::Core> ecores;
    ecores.reserve(k);
    for (int p = 1; p <= k; ++p) {
      const auto& from = subsets[p - 1];
      const auto& to = subsets[p];
      TTTensor::Core c = make_core(static_cast<int>(from.size()), n,
                                   static_cast<int>(to.size()));
      for (std::size_t a = 0; a < from.size(); ++a) {
        for (int v : e) {
          if (std::binary_search(from[a].begin(), from[a].end(), v)) continue;
          std::vector<int> grown = from[a];
          grown.insert(std::upper_bound(grown.begin(), grown.end(), v), v);
          c.at(static_cast<int>(a), v - 1, index_of(to, grown)) = 1.0;
        }
      }
      ecores.push_back(std::move(c));
    }
    ecores[0].left *= neg_w;
    TTTensor edge_tt = TTTensor::from_cores(dims, std::move(ecores));
    acc = tt_round(tt_add(acc, edge_tt), tol_build);
  }
  return acc;
}

TTTensor orthonormalize_for_entropy(const TTTensor& x) {
  const int k = x.order();
  if (k < 3)
    fail(Errc::OrderTooSmall,
         "the entropy sweep needs order k >= 3, got k=" + std::to_string(k));
  std::vector<TTTensor::Core> cores;
  cores.reserve(k);
  for (int p = 1; p <= k; ++p) cores.push_back(x.core(p));

  for (int p = 1; p <= k - 2; ++p) left_orthonormalize_core(cores, p);
  right_orthonormalize_core(cores, k);

  TTTensor out = TTTensor::from_cores(x.dims(), std::move(cores));
  for (int p = 1; p <= k - 2; ++p) out.set_ortho_flag(p, TTTensor::Ortho::Left);
  out.set_ortho_flag(k, TTTensor::Ortho::Right);
  return out;
}

std::vector<double> entropy_singular_values(const TTTensor& swept) {
  const int k = swept.order();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(swept.core(k - 1).left);
  const Eigen::VectorXd& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

bool core_orthonormal(const TTTensor& x, int p, TTTensor::Ortho which,
                      double tol) {
  const auto& c = x.core(p);
  if (which == TTTensor::Ortho::Left) {
    Eigen::MatrixXd g = c.left.transpose() * c.left;
    return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols()))
               .cwiseAbs()
               .maxCoeff() <= tol;
  }
  if (which == TTTensor::Ortho::Right) {
    Eigen::MatrixXd r = right_copy(c);
    Eigen::MatrixXd g = r * r.transpose();
    return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols()))
               .cwiseAbs()
               .maxCoeff() <= tol;
  }
  return true;
}

}  // namespace hyperent
