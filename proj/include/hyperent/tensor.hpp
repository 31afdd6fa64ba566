#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// Refuse to materialize anything denser than this many doubles.
inline constexpr std::int64_t kDenseLimit = 100'000'000;

// Dense order-k tensor with per-mode dimensions. Values are stored with
// the first index fastest, matching the reshape convention used by the
// unfolding column formula. All public indices are 1-based.
class DenseTensor {
 public:
  DenseTensor(std::vector<int> dims);

  int order() const noexcept { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::int64_t size() const noexcept {
    return static_cast<std::int64_t>(values_.size());
  }
  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double>& values() noexcept { return values_; }

  std::int64_t offset(const std::vector<int>& idx) const;
  double at(const std::vector<int>& idx) const { return values_[offset(idx)]; }
  double& at(const std::vector<int>& idx) { return values_[offset(idx)]; }

  double frobenius_norm() const;

 private:
  std::vector<int> dims_;
  std::vector<double> values_;
};

// Cubical supersymmetric tensor stored as canonical (nondecreasing) index
// tuple -> value; every permutation of a key shares its value. Zero values
// are never stored. Immutable once built through the factory helpers.
class SparseSymTensor {
 public:
  SparseSymTensor(int order, int dim);

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }

  // Canonical entries in lexicographic key order.
  const std::map<std::vector<int>, double>& canonical_entries() const noexcept {
    return entries_;
  }
  std::size_t nonzero_count() const noexcept { return entries_.size(); }

  // `idx` in any order; returns the symmetric closure value.
  double value_at(std::vector<int> idx) const;

  // Accumulate into the canonical slot for `idx` (sorted internally).
  void add(std::vector<int> idx, double value);

 private:
  int order_;
  int dim_;
  std::map<std::vector<int>, double> entries_;
};

SparseSymTensor adjacency_tensor(const UniformHypergraph& h);
SparseSymTensor degree_tensor(const UniformHypergraph& h);
SparseSymTensor laplacian_tensor(const UniformHypergraph& h);

struct UnfoldingEntry {
  int row;           // 1-based, in 1..n
  std::int64_t col;  // 1-based, in 1..n^(k-1)
  double value;
};

// Sparse p-mode unfolding; entries sorted by (col, row).
struct UnfoldingMatrix {
  int mode = 0;
  int rows = 0;
  std::int64_t cols = 0;
  std::vector<UnfoldingEntry> entries;
};

UnfoldingMatrix mode_unfold(const SparseSymTensor& t, int p);

// Contraction of mode p with an m x n_p matrix; the result holds m along
// mode p. Guarded by kDenseLimit.
DenseTensor mode_product(const DenseTensor& t, const Eigen::MatrixXd& m, int p);
DenseTensor mode_product(const SparseSymTensor& t, const Eigen::MatrixXd& m,
                         int p);

DenseTensor to_dense(const SparseSymTensor& t);

// Dense p-mode unfolding, n x n^(k-1). Guarded by kDenseLimit.
Eigen::MatrixXd unfolding_dense(const SparseSymTensor& t, int p);

// X_(p) * X_(p)^T assembled from the sparse entries with a fixed
// summation order; never materializes the unfolding.
Eigen::MatrixXd gram_matrix(const SparseSymTensor& t, int p);

// p-mode singular values, nonincreasing, length n. The production route
// takes square roots of the Gram eigenvalues (tiny negatives clamped);
// the direct route runs an economy SVD of the materialized unfolding and
// exists as a cross-check and benchmark subject.
std::vector<double> mode_singular_values(const SparseSymTensor& t, int p);
std::vector<double> mode_singular_values_direct(const SparseSymTensor& t, int p);

}  // namespace hyperent
