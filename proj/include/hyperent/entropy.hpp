#pragma once

#include <utility>
#include <vector>

#include "hyperent/hypergraph.hpp"

namespace hyperent {

// A singular value counts as numerically zero below this fraction of the
// largest one.
inline constexpr double kSingularZeroRel = 1e-10;

struct SpectralSummary {
  std::vector<double> singular_values;  // nonincreasing, length n
  std::vector<double> normalized;       // empty when all values are zero
  double entropy = 0.0;
  int zero_multiplicity = 0;
};

// Shannon entropy of `values` normalized to sum one, with 0 ln 0 = 0.
// All-zero input gives 0. Throws NegativeInput.
double entropy_from_values(const std::vector<double>& values);

// Normalization, entropy and numerical-zero count for a nonincreasing
// singular value list.
SpectralSummary summarize_spectrum(std::vector<double> singular_values);

// Entropy of the k-mode singular values of the Laplacian tensor,
// computed through the Gram eigenvalue route.
SpectralSummary tensor_entropy_svd(const UniformHypergraph& h);

// Same quantity through the tensor-train route: structural Laplacian TT,
// orthonormalization sweep, economy SVD of the core k-1 left-unfolding.
// Requires k >= 3 (OrderTooSmall). `tol` controls the rounding applied
// while assembling the Laplacian TT.
SpectralSummary tensor_entropy_tt(const UniformHypergraph& h,
                                  double tol = 1e-13);

// (ln k, ln n) for 3 <= k <= n; UnsupportedOrder otherwise.
std::pair<double, double> entropy_bounds(int n, int k);

// Closed-form entropy of the complete k-uniform hypergraph, evaluated
// through log-gamma so large n cannot overflow. The Gram matrix of the
// complete hypergraph is d on the diagonal and rho elsewhere with
//   d   = binom(n-1,k-1)^2 + binom(n-1,k-1)/(k-1)!
//   rho = binom(n-2,k-1)/(k-1)!
// giving eigenvalues d - rho (multiplicity n-1) and d + (n-1) rho.
double complete_entropy(int n, int k);

// Shannon entropy of externally computed eigenvalue moduli. The expected
// count is n(k-1)^(n-1); CountMismatch unless `allow_count_mismatch`.
double eigenvalue_entropy(const std::vector<double>& moduli, int n, int k,
                          bool allow_count_mismatch = false);

struct ResistanceResult {
  double value = 0.0;  // n * sum(1/gamma_j); infinite on a zero value
  bool connected = false;
};

ResistanceResult effective_resistance(const UniformHypergraph& h);

}  // namespace hyperent
