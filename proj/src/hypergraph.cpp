#include "hyperent/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "hyperent/models.hpp"

namespace hyperent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// binom(n, k) in double precision; exact for the sizes handled here.
double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

}  // namespace

std::string format_edge(const Edge& e) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  os << '}';
  return os.str();
}

UniformHypergraph::UniformHypergraph(int n, int k, std::vector<Edge> edges)
    : n_(n), k_(k) {
  if (n < 1) fail(Errc::MalformedInput, "vertex count must be positive");
  if (k < 2 || k > n)
    fail(Errc::MalformedInput,
         "uniformity k must satisfy 2 <= k <= n, got k=" + std::to_string(k) +
             ", n=" + std::to_string(n));
  for (Edge& e : edges) {
    if (static_cast<int>(e.size()) != k)
      fail(Errc::WrongEdgeArity, format_edge(e) + " does not have " +
                                     std::to_string(k) + " vertices");
    std::sort(e.begin(), e.end());
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 1 || e[i] > n)
        fail(Errc::VertexOutOfRange,
             format_edge(e) + " has vertex " + std::to_string(e[i]) +
                 " outside 1.." + std::to_string(n));
      if (i > 0 && e[i] == e[i - 1])
        fail(Errc::DuplicateVertexInEdge,
             format_edge(e) + " repeats vertex " + std::to_string(e[i]));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool UniformHypergraph::has_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

bool UniformHypergraph::is_complete() const {
  double total = 1.0;
  for (int i = 1; i <= k_; ++i) total = total * (n_ - k_ + i) / i;
  return static_cast<double>(edges_.size()) >= std::round(total) - 0.5;
}

UniformHypergraph UniformHypergraph::with_edge(Edge e) const {
  std::vector<Edge> es = edges_;
  es.push_back(std::move(e));
  return UniformHypergraph(n_, k_, std::move(es));
}

std::vector<std::vector<int>> UniformHypergraph::clique_neighbors() const {
  std::vector<std::set<int>> nb(n_);
  for (const Edge& e : edges_)
    for (int u : e)
      for (int v : e)
        if (u != v) nb[u - 1].insert(v);
  std::vector<std::vector<int>> out(n_);
  for (int j = 0; j < n_; ++j) out[j].assign(nb[j].begin(), nb[j].end());
  return out;
}

bool UniformHypergraph::is_connected() const {
  if (n_ == 1) return true;
  auto nb = clique_neighbors();
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : nb[u])
      if (!seen[v - 1]) {
        seen[v - 1] = 1;
        ++count;
        queue.push_back(v - 1);
      }
  }
  return count == n_;
}

std::vector<int> degrees(const UniformHypergraph& h) {
  std::vector<int> d(h.vertex_count(), 0);
  for (const Edge& e : h.edges())
    for (int v : e) ++d[v - 1];
  return d;
}

std::vector<int> isolated_vertices(const UniformHypergraph& h) {
  std::vector<int> out;
  auto d = degrees(h);
  for (int j = 0; j < h.vertex_count(); ++j)
    if (d[j] == 0) out.push_back(j + 1);
  return out;
}

Eigen::MatrixXd shortest_distances(const UniformHypergraph& h) {
  const int n = h.vertex_count();
  auto nb = h.clique_neighbors();
  Eigen::MatrixXd dist = Eigen::MatrixXd::Constant(n, n, kInf);
  for (int s = 0; s < n; ++s) {
    dist(s, s) = 0.0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : nb[u]) {
        if (dist(s, v - 1) == kInf) {
          dist(s, v - 1) = dist(s, u) + 1.0;
          queue.push_back(v - 1);
        }
      }
    }
  }
  return dist;
}

double average_path_length(const UniformHypergraph& h,
                           std::optional<double> disconnected_cap) {
  const int n = h.vertex_count();
  if (n < 2) return 0.0;
  Eigen::MatrixXd dist = shortest_distances(h);
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double d = dist(i, j);
      if (d == kInf) {
        if (!disconnected_cap) return kInf;
        d = *disconnected_cap;
      }
      sum += d;
    }
  return sum / (static_cast<double>(n) * (n - 1));
}

double index_of_dispersion(const UniformHypergraph& h) {
  auto d = degrees(h);
  const int n = h.vertex_count();
  double mean = 0.0;
  for (int x : d) mean += x;
  mean /= n;
  if (mean == 0.0)
    fail(Errc::ZeroMeanDegree, "degree mean is zero (empty edge set)");
  if (n < 2) return 0.0;
  double ss = 0.0;
  for (int x : d) ss += (x - mean) * (x - mean);
  return ss / (n - 1) / mean;
}

ClusteringResult clustering_coefficients(const UniformHypergraph& h) {
  const int n = h.vertex_count();
  const int k = h.uniformity();
  auto nb = h.clique_neighbors();
  ClusteringResult res;
  res.per_vertex.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    const auto& nbrs = nb[j];
    if (static_cast<int>(nbrs.size()) < k) continue;
    int inside = 0;
    for (const Edge& e : h.edges()) {
      bool contained = true;
      for (int v : e)
        if (!std::binary_search(nbrs.begin(), nbrs.end(), v)) {
          contained = false;
          break;
        }
      if (contained) ++inside;
    }
    res.per_vertex[j] = inside / binom(static_cast<int>(nbrs.size()), k);
  }
  double sum = 0.0;
  for (double c : res.per_vertex) sum += c;
  res.average = sum / n;
  return res;
}

double small_world_coefficient(const UniformHypergraph& h, int samples,
                               std::uint64_t seed,
                               std::optional<double> disconnected_cap) {
  if (samples < 1) fail(Errc::MalformedInput, "samples must be >= 1");
  const double c_avg = clustering_coefficients(h).average;
  const double l_avg = average_path_length(h, disconnected_cap);
  if (!std::isfinite(l_avg))
    fail(Errc::DegenerateRandomEnsemble,
         "hypergraph is disconnected and no distance cap was supplied");

  double c_rand = 0.0, l_rand = 0.0;
  for (int s = 0; s < samples; ++s) {
    UniformHypergraph r = random_uniform_hypergraph(
        h.vertex_count(), h.uniformity(), h.edge_count(), seed + s);
    c_rand += clustering_coefficients(r).average;
    l_rand += average_path_length(r, disconnected_cap);
  }
  c_rand /= samples;
  l_rand /= samples;
  if (c_rand == 0.0 || l_rand == 0.0 || !std::isfinite(l_rand))
    fail(Errc::DegenerateRandomEnsemble,
         "random ensemble produced C_rand or L_rand without a usable value");
  return (c_avg / c_rand) / (l_avg / l_rand);
}

MetricReport metric_report(const UniformHypergraph& h,
                           std::optional<double> disconnected_cap,
                           int small_world_samples, std::uint64_t seed) {
  MetricReport rep;
  rep.degree_vector = degrees(h);
  if (h.edge_count() > 0) rep.index_of_dispersion = index_of_dispersion(h);
  rep.avg_path_length = average_path_length(h, disconnected_cap);
  rep.avg_clustering = clustering_coefficients(h).average;
  if (small_world_samples > 0)
    rep.small_world =
        small_world_coefficient(h, small_world_samples, seed, disconnected_cap);
  return rep;
}

}  // namespace hyperent
