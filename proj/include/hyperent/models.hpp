#pragma once

#include <cstdint>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

enum class GrowthObjective { Max, Min };

struct GrowthStep {
  Edge edge;
  UniformHypergraph next;
  double entropy;
};

// Scans every absent k-subset, scores the spectral entropy of H + e and
// returns an optimizer; ties break toward the lexicographically smallest
// edge. Throws AlreadyComplete when no candidate exists.
GrowthStep growth_step(const UniformHypergraph& h, GrowthObjective objective);

struct EvolutionRecord {
  int step_index = 0;  // 1-based
  Edge edge_added;
  double entropy = 0.0;
  MetricReport metrics;
  double resistance = 0.0;  // may be infinite
};

struct EvolutionTrace {
  int n = 0;
  int k = 0;
  std::vector<EvolutionRecord> steps;
};

// Iterated greedy growth from the empty hypergraph. Path lengths in the
// per-step metrics use `disconnected_cap` for unreachable pairs.
EvolutionTrace growth_evolution(int n, int k, int steps,
                                GrowthObjective objective,
                                double disconnected_cap = 4.0);

// Ring-lattice small-world model: overlapping windows of k+1 consecutive
// vertices at stride k, two base edges per window (2-regular backbone),
// q extra window edges, then independent rewiring of every edge with
// probability p to a uniformly random absent k-subset.
UniformHypergraph watts_strogatz(int n, int k, int q, double p,
                                 std::uint64_t seed);

// m distinct k-subsets drawn uniformly without replacement.
UniformHypergraph random_uniform_hypergraph(int n, int k, std::size_t m,
                                            std::uint64_t seed);

// Chain of hyperedges in which consecutive edges share exactly one vertex
// and all n vertices are covered; requires n ≡ 1 (mod k-1), n >= k.
UniformHypergraph strip_hypergraph(int n, int k);

}  // namespace hyperent
