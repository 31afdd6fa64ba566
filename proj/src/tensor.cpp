#include "hyperent/tensor.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hyperent {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t checked_pow(int base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kDenseLimit) return kDenseLimit + 1;
    r *= base;
  }
  return r;
}

void require_mode(const SparseSymTensor& t, int p) {
  if (p < 1 || p > t.order())
    fail(Errc::ModeOutOfRange, "mode " + std::to_string(p) +
                                   " outside 1.." + std::to_string(t.order()));
}

}  // namespace

DenseTensor::DenseTensor(std::vector<int> dims) : dims_(std::move(dims)) {
  std::int64_t total = 1;
  for (int d : dims_) {
    if (d < 1) fail(Errc::ShapeMismatch, "tensor dimensions must be positive");
    total *= d;
    if (total > kDenseLimit)
      fail(Errc::TooLargeForDense,
           "dense tensor would exceed " + std::to_string(kDenseLimit) +
               " entries");
  }
  values_.assign(static_cast<std::size_t>(total), 0.0);
}

std::int64_t DenseTensor::offset(const std::vector<int>& idx) const {
  std::int64_t off = 0, stride = 1;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    off += static_cast<std::int64_t>(idx[i] - 1) * stride;
    stride *= dims_[i];
  }
  return off;
}

double DenseTensor::frobenius_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

SparseSymTensor::SparseSymTensor(int order, int dim)
    : order_(order), dim_(dim) {
  if (order < 2) fail(Errc::UnsupportedOrder, "tensor order must be >= 2");
  if (dim < 1) fail(Errc::ShapeMismatch, "tensor dimension must be positive");
}

double SparseSymTensor::value_at(std::vector<int> idx) const {
  std::sort(idx.begin(), idx.end());
  auto it = entries_.find(idx);
  return it == entries_.end() ? 0.0 : it->second;
}

void SparseSymTensor::add(std::vector<int> idx, double value) {
  if (static_cast<int>(idx.size()) != order_)
    fail(Errc::ShapeMismatch, "index arity does not match tensor order");
  for (int j : idx)
    if (j < 1 || j > dim_)
      fail(Errc::VertexOutOfRange, "tensor index outside 1..n");
  std::sort(idx.begin(), idx.end());
  double& slot = entries_[idx];
  slot += value;
  if (slot == 0.0) entries_.erase(idx);
}

SparseSymTensor adjacency_tensor(const UniformHypergraph& h) {
  const int k = h.uniformity();
  SparseSymTensor t(k, h.vertex_count());
  const double w = 1.0 / factorial(k - 1);
  for (const Edge& e : h.edges()) t.add(e, w);
  return t;
}

SparseSymTensor degree_tensor(const UniformHypergraph& h) {
  const int k = h.uniformity();
  SparseSymTensor t(k, h.vertex_count());
  auto d = degrees(h);
  for (int j = 0; j < h.vertex_count(); ++j)
    if (d[j] > 0) t.add(std::vector<int>(k, j + 1), static_cast<double>(d[j]));
  return t;
}

SparseSymTensor laplacian_tensor(const UniformHypergraph& h) {
  const int k = h.uniformity();
  SparseSymTensor t = degree_tensor(h);
  const double w = -1.0 / factorial(k - 1);
  for (const Edge& e : h.edges()) t.add(e, w);
  return t;
}

UnfoldingMatrix mode_unfold(const SparseSymTensor& t, int p) {
  require_mode(t, p);
  const int k = t.order();
  const int n = t.dim();
  UnfoldingMatrix u;
  u.mode = p;
  u.rows = n;
  u.cols = 1;
  for (int i = 0; i < k - 1; ++i) u.cols *= n;

  std::vector<int> idx;
  for (const auto& [key, value] : t.canonical_entries()) {
    idx = key;  // nondecreasing, so next_permutation enumerates each
                // distinct arrangement exactly once
    do {
      std::int64_t col = 1, w = 1;
      for (int m = 1; m <= k; ++m) {
        if (m == p) continue;
        col += static_cast<std::int64_t>(idx[m - 1] - 1) * w;
        w *= n;
      }
      u.entries.push_back({idx[p - 1], col, value});
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  std::sort(u.entries.begin(), u.entries.end(),
            [](const UnfoldingEntry& a, const UnfoldingEntry& b) {
              return a.col != b.col ? a.col < b.col : a.row < b.row;
            });
  return u;
}

DenseTensor mode_product(const DenseTensor& t, const Eigen::MatrixXd& m,
                         int p) {
  const int k = t.order();
  if (p < 1 || p > k)
    fail(Errc::ModeOutOfRange, "mode " + std::to_string(p) + " outside 1.." +
                                   std::to_string(k));
  if (m.cols() != t.dims()[p - 1])
    fail(Errc::ShapeMismatch,
         "matrix has " + std::to_string(m.cols()) +
             " columns but mode " + std::to_string(p) + " has size " +
             std::to_string(t.dims()[p - 1]));

  std::vector<int> out_dims = t.dims();
  out_dims[p - 1] = static_cast<int>(m.rows());
  DenseTensor out(out_dims);

  std::int64_t stride = 1;
  for (int i = 0; i < p - 1; ++i) stride *= t.dims()[i];
  const std::int64_t np = t.dims()[p - 1];
  const std::int64_t mp = m.rows();

  const auto& in = t.values();
  auto& ov = out.values();
  for (std::int64_t off = 0; off < static_cast<std::int64_t>(in.size());
       ++off) {
    const double v = in[off];
    if (v == 0.0) continue;
    const std::int64_t low = off % stride;
    const std::int64_t jp = (off / stride) % np;
    const std::int64_t high = off / (stride * np);
    const std::int64_t base = low + high * stride * mp;
    for (std::int64_t i = 0; i < mp; ++i)
      ov[base + i * stride] += v * m(i, jp);
  }
  return out;
}

DenseTensor mode_product(const SparseSymTensor& t, const Eigen::MatrixXd& m,
                         int p) {
  return mode_product(to_dense(t), m, p);
}

DenseTensor to_dense(const SparseSymTensor& t) {
  const int k = t.order();
  const int n = t.dim();
  if (checked_pow(n, k) > kDenseLimit)
    fail(Errc::TooLargeForDense, "n^k exceeds the dense materialization limit");
  DenseTensor out(std::vector<int>(k, n));
  std::vector<int> idx;
  for (const auto& [key, value] : t.canonical_entries()) {
    idx = key;
    do {
      out.at(idx) = value;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return out;
}

Eigen::MatrixXd unfolding_dense(const SparseSymTensor& t, int p) {
  require_mode(t, p);
  const int n = t.dim();
  if (checked_pow(n, t.order()) > kDenseLimit)
    fail(Errc::TooLargeForDense, "unfolding exceeds the dense limit");
  UnfoldingMatrix u = mode_unfold(t, p);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(u.rows, u.cols);
  for (const auto& e : u.entries) m(e.row - 1, e.col - 1) = e.value;
  return m;
}

Eigen::MatrixXd gram_matrix(const SparseSymTensor& t, int p) {
  require_mode(t, p);
  const int n = t.dim();
  UnfoldingMatrix u = mode_unfold(t, p);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  // Entries arrive sorted by column; rows sharing a column interact.
  std::size_t i = 0;
  while (i < u.entries.size()) {
    std::size_t j = i;
    while (j < u.entries.size() && u.entries[j].col == u.entries[i].col) ++j;
    for (std::size_t a = i; a < j; ++a)
      for (std::size_t b = a; b < j; ++b) {
        const double prod = u.entries[a].value * u.entries[b].value;
        g(u.entries[a].row - 1, u.entries[b].row - 1) += prod;
        if (a != b) g(u.entries[b].row - 1, u.entries[a].row - 1) += prod;
      }
    i = j;
  }
  return g;
}

std::vector<double> mode_singular_values(const SparseSymTensor& t, int p) {
  Eigen::MatrixXd g = gram_matrix(t, p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g,
                                                    Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  std::vector<double> sv(t.dim());
  for (int i = 0; i < t.dim(); ++i)
    sv[i] = std::sqrt(std::max(ev[t.dim() - 1 - i], 0.0));
  return sv;
}

std::vector<double> mode_singular_values_direct(const SparseSymTensor& t,
                                                int p) {
  Eigen::MatrixXd m = unfolding_dense(t, p);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  Eigen::VectorXd s = svd.singularValues();
  std::vector<double> sv(t.dim(), 0.0);
  for (int i = 0; i < s.size() && i < t.dim(); ++i) sv[i] = s[i];
  return sv;
}

}  // namespace hyperent
