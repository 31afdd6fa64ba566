// Brute-force reference computations for cross-checking the library.
// Everything here works from first principles on explicit dense arrays and
// stays independent of the sparse/Gram/TT code paths it validates.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "hyperent/hypergraph.hpp"

namespace oracle {

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Dense Laplacian entries enumerated index by index: degree on the
// all-equal diagonal, -1/(k-1)! on every permutation of an edge.
inline std::vector<double> laplacian_dense(const hyperent::UniformHypergraph& h) {
  const int n = h.vertex_count();
  const int k = h.uniformity();
  std::vector<int> deg(n, 0);
  for (const auto& e : h.edges())
    for (int v : e) ++deg[v - 1];

  std::vector<hyperent::Edge> sorted_edges = h.edges();
  std::sort(sorted_edges.begin(), sorted_edges.end());
  const double w = -1.0 / factorial(k - 1);

  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) total *= n;
  std::vector<double> dense(total, 0.0);

  std::vector<int> idx(k, 1);
  for (std::int64_t off = 0; off < total; ++off) {
    bool all_equal = true;
    for (int i = 1; i < k; ++i)
      if (idx[i] != idx[0]) all_equal = false;
    if (all_equal) {
      dense[off] = deg[idx[0] - 1];
    } else {
      std::vector<int> s = idx;
      std::sort(s.begin(), s.end());
      bool distinct = true;
      for (int i = 1; i < k; ++i)
        if (s[i] == s[i - 1]) distinct = false;
      if (distinct &&
          std::binary_search(sorted_edges.begin(), sorted_edges.end(), s))
        dense[off] = w;
    }
    // advance odometer, first index fastest
    for (int i = 0; i < k; ++i) {
      if (++idx[i] <= n) break;
      idx[i] = 1;
    }
  }
  return dense;
}

// p-mode unfolding of a dense cubical order-k tensor by the column-index
// formula col = 1 + sum_{m != p} (j_m - 1) * n^{#(i < m, i != p)}.
inline Eigen::MatrixXd unfold(const std::vector<double>& dense, int n, int k,
                              int p) {
  std::int64_t cols = 1;
  for (int i = 0; i < k - 1; ++i) cols *= n;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, cols);

  std::vector<int> idx(k, 1);
  for (std::int64_t off = 0; off < static_cast<std::int64_t>(dense.size());
       ++off) {
    if (dense[off] != 0.0) {
      std::int64_t col = 0, w = 1;
      for (int mm = 1; mm <= k; ++mm) {
        if (mm == p) continue;
        col += static_cast<std::int64_t>(idx[mm - 1] - 1) * w;
        w *= n;
      }
      m(idx[p - 1] - 1, col) = dense[off];
    }
    for (int i = 0; i < k; ++i) {
      if (++idx[i] <= n) break;
      idx[i] = 1;
    }
  }
  return m;
}

// k-mode singular values through a plain dense SVD, padded to length n.
inline std::vector<double> mode_k_singular_values(
    const hyperent::UniformHypergraph& h) {
  const int n = h.vertex_count();
  const int k = h.uniformity();
  Eigen::MatrixXd m = unfold(laplacian_dense(h), n, k, k);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m);
  std::vector<double> sv(n, 0.0);
  for (int i = 0; i < svd.singularValues().size() && i < n; ++i)
    sv[i] = svd.singularValues()[i];
  return sv;
}

inline double shannon_entropy(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  if (sum == 0.0) return 0.0;
  double s = 0.0;
  for (double v : values)
    if (v > 0.0) s -= (v / sum) * std::log(v / sum);
  return s;
}

inline double tensor_entropy(const hyperent::UniformHypergraph& h) {
  return shannon_entropy(mode_k_singular_values(h));
}

}  // namespace oracle
