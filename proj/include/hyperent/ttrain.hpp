#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hyperent/hypergraph.hpp"
#include "hyperent/tensor.hpp"

namespace hyperent {

// Chain of order-3 cores X^(p) of shape R_{p-1} x n_p x R_p with
// R_0 = R_k = 1. Each core is held in left-unfolding layout, an
// (R_{p-1} * n_p) x R_p matrix with the rank-left index fastest; the
// right unfolding R_{p-1} x (n_p * R_p) is a zero-copy remap of the same
// column-major buffer. Operations return new values; a TTTensor is never
// mutated after construction.
class TTTensor {
 public:
  enum class Ortho { None, Left, Right };

  struct Core {
    int rank_left = 1;
    int dim = 1;
    int rank_right = 1;
    Eigen::MatrixXd left;  // (rank_left * dim) x rank_right

    double& at(int a, int j, int b) { return left(a + j * rank_left, b); }
    double at(int a, int j, int b) const { return left(a + j * rank_left, b); }
    Eigen::Map<const Eigen::MatrixXd> right() const {
      return {left.data(), rank_left,
              static_cast<Eigen::Index>(dim) * rank_right};
    }
  };

  static TTTensor zeros(std::vector<int> dims);
  static TTTensor from_cores(std::vector<int> dims, std::vector<Core> cores);

  int order() const noexcept { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const noexcept { return dims_; }
  std::vector<int> ranks() const;  // length k+1, R_0 = R_k = 1
  int max_rank() const;

  const Core& core(int p) const { return cores_[p - 1]; }  // p in 1..k
  Core& core(int p) { return cores_[p - 1]; }

  Ortho ortho_flag(int p) const { return flags_[p - 1]; }
  void set_ortho_flag(int p, Ortho o) { flags_[p - 1] = o; }

 private:
  TTTensor() = default;
  std::vector<int> dims_;
  std::vector<Core> cores_;
  std::vector<Ortho> flags_;
};

// Sequential-SVD construction; relative Frobenius reconstruction error
// bounded by `tol` (tol = 0 keeps exact reshape ranks).
TTTensor tt_from_dense(const DenseTensor& t, double tol);

// Evaluates the TT sum; guarded by kDenseLimit.
DenseTensor tt_to_dense(const TTTensor& x);

// Exact sum; intermediate ranks add.
TTTensor tt_add(const TTTensor& x, const TTTensor& y);

TTTensor tt_scale(const TTTensor& x, double s);

// <X, Y> without densifying.
double tt_dot(const TTTensor& x, const TTTensor& y);

double tt_norm(const TTTensor& x);

// Rank truncation with relative Frobenius error <= tol.
TTTensor tt_round(const TTTensor& x, double tol);

// Structural TT of the Laplacian: selector cores carry the degree part,
// each edge contributes its permutation tensor directly at the optimal
// edge ranks, and the accumulating sum is rounded at tol_build.
TTTensor laplacian_tt(const UniformHypergraph& h, double tol_build = 1e-13);

// Left-orthonormalizes cores 1..k-2 (QR) and right-orthonormalizes core k
// (LQ) without changing the represented tensor. Requires k >= 3
// (OrderTooSmall). After the sweep the nonzero singular values of the
// core k-1 left-unfolding are exactly the nonzero mode-k singular values
// of the represented tensor.
TTTensor orthonormalize_for_entropy(const TTTensor& x);

// Economy SVD of the core k-1 left-unfolding of a swept chain;
// nonincreasing, at most n values.
std::vector<double> entropy_singular_values(const TTTensor& swept);

// True when core p satisfies its claimed orthonormality within tol.
bool core_orthonormal(const TTTensor& x, int p, TTTensor::Ortho which,
                      double tol = 1e-12);

}  // namespace hyperent
