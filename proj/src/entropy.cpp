#include "hyperent/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyperent/tensor.hpp"
#include "hyperent/ttrain.hpp"

namespace hyperent {

namespace {

double log_binom(int n, int k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
         std::lgamma(n - k + 1.0);
}

}  // namespace

double entropy_from_values(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) {
    if (v < 0.0)
      fail(Errc::NegativeInput, "entropy input contains a negative value");
    sum += v;
  }
  if (sum == 0.0) return 0.0;
  double s = 0.0;
  for (double v : values) {
    if (v == 0.0) continue;
    const double p = v / sum;
    s -= p * std::log(p);
  }
  return s;
}

SpectralSummary summarize_spectrum(std::vector<double> singular_values) {
  std::sort(singular_values.begin(), singular_values.end(),
            std::greater<double>());
  SpectralSummary out;
  out.entropy = entropy_from_values(singular_values);
  const double top = singular_values.empty() ? 0.0 : singular_values.front();
  double sum = 0.0;
  for (double v : singular_values) sum += v;
  for (double v : singular_values)
    if (top == 0.0 || v <= kSingularZeroRel * top) ++out.zero_multiplicity;
  if (sum > 0.0) {
    out.normalized.reserve(singular_values.size());
    for (double v : singular_values) out.normalized.push_back(v / sum);
  }
  out.singular_values = std::move(singular_values);
  return out;
}

SpectralSummary tensor_entropy_svd(const UniformHypergraph& h) {
  SparseSymTensor lap = laplacian_tensor(h);
  return summarize_spectrum(mode_singular_values(lap, h.uniformity()));
}

SpectralSummary tensor_entropy_tt(const UniformHypergraph& h, double tol) {
  if (h.uniformity() < 3)
    fail(Errc::OrderTooSmall,
         "tensor-train entropy needs order k >= 3, got k=" +
             std::to_string(h.uniformity()));
  TTTensor lap = laplacian_tt(h, tol);
  TTTensor swept = orthonormalize_for_entropy(lap);
  std::vector<double> sv = entropy_singular_values(swept);
  sv.resize(h.vertex_count(), 0.0);
  return summarize_spectrum(std::move(sv));
}

std::pair<double, double> entropy_bounds(int n, int k) {
  if (k < 3 || k > n)
    fail(Errc::UnsupportedOrder,
         "entropy bounds require 3 <= k <= n, got k=" + std::to_string(k) +
             ", n=" + std::to_string(n));
  return {std::log(static_cast<double>(k)), std::log(static_cast<double>(n))};
}

double complete_entropy(int n, int k) {
  if (k < 3 || k > n)
    fail(Errc::UnsupportedOrder,
         "complete-hypergraph entropy requires 3 <= k <= n");
  const double log_gamma_k = std::lgamma(static_cast<double>(k));
  const double log_c = log_binom(n - 1, k - 1);
  // log d via logsumexp of the two diagonal contributions.
  const double a = 2.0 * log_c;
  const double b = log_c - log_gamma_k;
  const double log_d = std::max(a, b) + std::log1p(std::exp(-std::abs(a - b)));
  const double log_rho = log_binom(n - 2, k - 1) - log_gamma_k;
  // Scale-free: only rho/d enters the normalized spectrum.
  const double x = std::isinf(log_rho) ? 0.0 : std::exp(log_rho - log_d);
  const double t = std::sqrt(1.0 + (n - 1) * x);  // large eigenvalue dir
  const double u = std::sqrt(1.0 - x);            // small, multiplicity n-1
  const double z = t + (n - 1) * u;
  const double pb = t / z;
  const double ps = u / z;
  double s = -pb * std::log(pb);
  if (ps > 0.0) s -= (n - 1) * ps * std::log(ps);
  return s;
}

double eigenvalue_entropy(const std::vector<double>& moduli, int n, int k,
                          bool allow_count_mismatch) {
  if (!allow_count_mismatch) {
    // d = n (k-1)^(n-1), saturating well above any representable list.
    long double expected = n;
    for (int i = 0; i < n - 1; ++i) {
      expected *= (k - 1);
      if (expected > 1e18L) break;
    }
    if (expected > 1e18L ||
        static_cast<long double>(moduli.size()) != expected)
      fail(Errc::CountMismatch,
           "expected n(k-1)^(n-1) eigenvalue moduli, got " +
               std::to_string(moduli.size()));
  }
  return entropy_from_values(moduli);
}

ResistanceResult effective_resistance(const UniformHypergraph& h) {
  ResistanceResult res;
  res.connected = h.is_connected();
  SpectralSummary s = tensor_entropy_svd(h);
  if (s.zero_multiplicity > 0) {
    res.value = std::numeric_limits<double>::infinity();
    return res;
  }
  double sum = 0.0;
  for (double g : s.singular_values) sum += 1.0 / g;
  res.value = h.vertex_count() * sum;
  return res;
}

}  // namespace hyperent
