#include "hyperent/models.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "hyperent/entropy.hpp"

namespace hyperent {

namespace {

double binom_exact(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Unbiased draw from [0, bound); rejection keeps results identical across
// standard libraries, unlike uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(std::mt19937_64& rng) {
  return (rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

Edge sample_k_subset(std::mt19937_64& rng, int n, int k) {
  // Floyd's algorithm: k distinct values in 1..n.
  std::set<int> chosen;
  for (int j = n - k + 1; j <= n; ++j) {
    int t = static_cast<int>(uniform_below(rng, j)) + 1;
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return Edge(chosen.begin(), chosen.end());
}

// First k-combination of 1..n, then lexicographic successor.
bool next_combination(Edge& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

GrowthStep growth_step(const UniformHypergraph& h, GrowthObjective objective) {
  const int n = h.vertex_count();
  const int k = h.uniformity();
  if (h.is_complete())
    fail(Errc::AlreadyComplete, "no hyperedge can be added");

  bool found = false;
  Edge best_edge;
  double best = 0.0;
  Edge candidate(k);
  for (int i = 0; i < k; ++i) candidate[i] = i + 1;
  do {
    if (h.has_edge(candidate)) continue;
    const double s = tensor_entropy_svd(h.with_edge(candidate)).entropy;
    const bool better = !found || (objective == GrowthObjective::Max
                                       ? s > best
                                       : s < best);
    if (better) {
      found = true;
      best = s;
      best_edge = candidate;
    }
  } while (next_combination(candidate, n));

  return {best_edge, h.with_edge(best_edge), best};
}

EvolutionTrace growth_evolution(int n, int k, int steps,
                                GrowthObjective objective,
                                double disconnected_cap) {
  if (steps < 0 || static_cast<double>(steps) > binom_exact(n, k))
    fail(Errc::TooManySteps,
         "steps exceed the number of available hyperedges");
  EvolutionTrace trace;
  trace.n = n;
  trace.k = k;
  UniformHypergraph h(n, k, {});
  for (int step = 1; step <= steps; ++step) {
    GrowthStep g = growth_step(h, objective);
    h = g.next;
    EvolutionRecord rec;
    rec.step_index = step;
    rec.edge_added = g.edge;
    rec.entropy = g.entropy;
    rec.metrics = metric_report(h, disconnected_cap);
    rec.resistance = effective_resistance(h).value;
    trace.steps.push_back(std::move(rec));
  }
  return trace;
}

UniformHypergraph random_uniform_hypergraph(int n, int k, std::size_t m,
                                            std::uint64_t seed) {
  const double total = binom_exact(n, k);
  if (static_cast<double>(m) > total)
    fail(Errc::TooManyEdges, "requested " + std::to_string(m) +
                                 " edges but only " +
                                 std::to_string(static_cast<long long>(total)) +
                                 " k-subsets exist");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  if (total <= 2e6) {
    std::vector<Edge> all;
    all.reserve(static_cast<std::size_t>(total));
    Edge c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    do {
      all.push_back(c);
    } while (next_combination(c, n));
    fisher_yates(all, rng);
    edges.assign(all.begin(), all.begin() + m);
  } else {
    std::set<Edge> chosen;
    while (chosen.size() < m) chosen.insert(sample_k_subset(rng, n, k));
    edges.assign(chosen.begin(), chosen.end());
  }
  return UniformHypergraph(n, k, std::move(edges));
}

UniformHypergraph watts_strogatz(int n, int k, int q, double p,
                                 std::uint64_t seed) {
  if (k < 2 || n % k != 0)
    fail(Errc::BadDivisibility,
         "the lattice needs k >= 2 and k dividing n");
  if (n < 2 * k)
    fail(Errc::BadDivisibility, "the ring lattice needs n >= 2k");
  if (q < 0 || q > k - 1)
    fail(Errc::BadQ, "q must lie in 0.." + std::to_string(k - 1));
  if (!(p >= 0.0 && p <= 1.0))
    fail(Errc::MalformedInput, "rewiring probability outside [0,1]");

  // Extra edges are k-subsets of the (k+1)-window; each omits one interior
  // offset. For k = 4 the order is {1,2,4,5}, {1,3,4,5}, {1,2,3,5}.
  std::vector<int> omitted(k - 1, 0);
  {
    int mid = (k + 2) / 2;  // = 3 for k = 4
    omitted[0] = mid;
    int lo = mid - 1, hi = mid + 1, idx = 1;
    while (idx < k - 1) {
      if (lo >= 2) omitted[idx++] = lo--;
      if (idx < k - 1 && hi <= k) omitted[idx++] = hi++;
    }
  }

  std::vector<Edge> edges;
  const int windows = n / k;
  for (int i = 0; i < windows; ++i) {
    auto vertex = [&](int offset) {  // 1-based window offset
      return (k * i + offset - 1) % n + 1;
    };
    Edge first(k), last(k);
    for (int t = 0; t < k; ++t) {
      first[t] = vertex(t + 1);
      last[t] = vertex(t + 2);
    }
    edges.push_back(first);
    edges.push_back(last);
    for (int extra = 0; extra < q; ++extra) {
      Edge e;
      for (int offset = 1; offset <= k + 1; ++offset)
        if (offset != omitted[extra]) e.push_back(vertex(offset));
      edges.push_back(e);
    }
  }
  UniformHypergraph base(n, k, edges);

  if (p == 0.0) return base;

  std::mt19937_64 rng(seed);
  std::set<Edge> current(base.edges().begin(), base.edges().end());
  for (const Edge& e : base.edges()) {
    if (uniform_unit(rng) >= p) continue;
    current.erase(e);
    Edge replacement;
    do {
      replacement = sample_k_subset(rng, n, k);
    } while (current.count(replacement));
    current.insert(replacement);
  }
  return UniformHypergraph(n, k, {current.begin(), current.end()});
}

UniformHypergraph strip_hypergraph(int n, int k) {
  if (k < 2 || n < k || (n - k) % (k - 1) != 0)
    fail(Errc::BadStripSize,
         "strip needs n >= k with n ≡ 1 (mod k-1), got n=" +
             std::to_string(n) + ", k=" + std::to_string(k));
  std::vector<Edge> edges;
  for (int start = 1; start + k - 1 <= n; start += k - 1) {
    Edge e(k);
    for (int t = 0; t < k; ++t) e[t] = start + t;
    edges.push_back(e);
  }
  return UniformHypergraph(n, k, std::move(edges));
}

}  // namespace hyperent
