#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperent/errors.hpp"

namespace hyperent {

// A hyperedge: k distinct vertex labels, stored sorted ascending (1-based).
using Edge = std::vector<int>;

std::string format_edge(const Edge& e);

// Immutable k-uniform hypergraph on vertices 1..n.
//
// Edges are canonicalized (sorted tuples), deduplicated and kept in
// lexicographic order, so iteration is deterministic. All member queries
// are const and safe for concurrent shared reads.
class UniformHypergraph {
 public:
  UniformHypergraph(int n, int k, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int uniformity() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Accepts an unsorted tuple.
  bool has_edge(Edge e) const;
  bool is_complete() const;

  // Copy of this hypergraph with one extra edge.
  UniformHypergraph with_edge(Edge e) const;

  // Adjacency lists of the clique expansion (0-based vertex -> sorted
  // neighbors, 1-based labels, self excluded).
  std::vector<std::vector<int>> clique_neighbors() const;

  bool is_connected() const;

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
};

// Per-vertex hyperedge membership counts; sums to k * |E|.
std::vector<int> degrees(const UniformHypergraph& h);

// Vertices of degree zero, ascending.
std::vector<int> isolated_vertices(const UniformHypergraph& h);

// Hop counts on the clique expansion; infinity where unreachable,
// zero diagonal, symmetric.
Eigen::MatrixXd shortest_distances(const UniformHypergraph& h);

// Mean shortest distance over ordered pairs j != i. Unreachable pairs
// contribute `disconnected_cap` when given; otherwise the result is
// infinite for a disconnected hypergraph.
double average_path_length(const UniformHypergraph& h,
                           std::optional<double> disconnected_cap = {});

// Unbiased (n-1) variance of the degree vector divided by its mean.
// Throws ZeroMeanDegree on an empty edge set.
double index_of_dispersion(const UniformHypergraph& h);

struct ClusteringResult {
  std::vector<double> per_vertex;
  double average = 0.0;
};

// C_j = (# edges inside the neighborhood of j) / binom(|N_j|, k), with
// N_j excluding j itself and C_j = 0 when |N_j| < k.
ClusteringResult clustering_coefficients(const UniformHypergraph& h);

// sigma = (C_avg/C_rand) / (L_avg/L_rand) against `samples` random
// hypergraphs with the same (n, k, m), seeded deterministically.
// Throws DegenerateRandomEnsemble when the ensemble means degenerate
// (C_rand = 0, L_rand = 0 or non-finite path lengths).
double small_world_coefficient(const UniformHypergraph& h, int samples,
                               std::uint64_t seed,
                               std::optional<double> disconnected_cap = {});

struct MetricReport {
  std::vector<int> degree_vector;
  std::optional<double> index_of_dispersion;  // absent for an empty edge set
  double avg_path_length = 0.0;               // may be infinite
  double avg_clustering = 0.0;
  std::optional<double> small_world;          // filled only when sampled
};

MetricReport metric_report(const UniformHypergraph& h,
                           std::optional<double> disconnected_cap = {},
                           int small_world_samples = 0,
                           std::uint64_t seed = 0);

}  // namespace hyperent
