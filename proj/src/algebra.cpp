#include "qdwigner/algebra.hpp"

#include "qdwigner/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qdw {

void DeformationSpec::validate() const {
  if (kind == DeformationKind::Identity)
    return;
  if (!std::isfinite(q) || q <= 0.0)
    throw ParameterError("deformation parameter q must be positive, got " +
                         std::to_string(q));
  if (q >= 1.0 && !allow_q_above_one)
    throw ParameterError("deformation parameter q must lie in (0,1), got " +
                         std::to_string(q) +
                         " (q >= 1 requires an explicit override)");
}

void SystemParams::validate() const {
  if (!std::isfinite(lambda) || lambda < 0.0)
    throw ParameterError("lambda must be >= 0");
  if (!std::isfinite(kappa_d) || kappa_d < 0.0)
    throw ParameterError("kappa_d must be >= 0");
  if (!std::isfinite(delta))
    throw ParameterError("delta must be finite");
  deformation.validate();
}

double deformation_factor(int n, const DeformationSpec &spec) {
  if (n < 1)
    throw DomainError("deformation_factor requires n >= 1, got " +
                      std::to_string(n));
  spec.validate();
  if (spec.kind == DeformationKind::Identity)
    return 1.0;

  // Horner form of 1 + q + ... + q^(n-1); all terms positive.
  double sum = 1.0;
  for (int k = 1; k < n; ++k)
    sum = 1.0 + spec.q * sum;
  return std::sqrt(sum / n);
}

double coupling_nu(int n, int j, const SystemParams &params) {
  if (n < 0 || (j != 1 && j != 2))
    throw DomainError("coupling_nu requires n >= 0 and j in {1,2}");
  const int m = n + j;
  return params.lambda * deformation_factor(m, params.deformation) *
         std::sqrt(static_cast<double>(m));
}

double rabi_mu(int n, const SystemParams &params) {
  const double nu1 = coupling_nu(n, 1, params);
  const double nu2 = coupling_nu(n, 2, params);
  const double mu2 = params.delta * params.delta +
                     2.0 * (nu1 * nu1 + nu2 * nu2) +
                     params.kappa_d * params.kappa_d;
  if (mu2 == 0.0)
    throw DegenerateBlockError("block " + std::to_string(n) +
                               " has a vanishing generator (mu = 0)");
  return std::sqrt(mu2);
}

namespace {

double log_poisson(double mean, int n) {
  return n * std::log(mean) - mean - std::lgamma(n + 1.0);
}

} // namespace

double poisson_tail(double mean, int n_max) {
  if (mean <= 0.0)
    return n_max >= 0 ? 0.0 : 1.0;
  double tail = 0.0;
  for (int n = n_max + 1;; ++n) {
    const double term = std::exp(log_poisson(mean, n));
    tail += term;
    if (n > mean && (term == 0.0 || term < 1e-18 * tail))
      break;
  }
  return tail;
}

int minimal_n_max(cplx alpha, double tail_tol) {
  const double r = std::abs(alpha);
  const double mean = r * r;
  int n = std::max(2, static_cast<int>(std::ceil(mean + 10.0 * r + 20.0)));
  while (poisson_tail(mean, n) >= tail_tol)
    ++n;
  while (n > 2 && poisson_tail(mean, n - 1) < tail_tol)
    --n;
  return n;
}

std::vector<cplx> coherent_amplitudes(cplx alpha, int n_max, double tail_tol) {
  if (n_max < 2)
    throw DomainError("coherent_amplitudes requires n_max >= 2");
  const double r = std::abs(alpha);
  const double mean = r * r;
  if (poisson_tail(mean, n_max) >= tail_tol) {
    const int needed = minimal_n_max(alpha, tail_tol);
    throw TruncationError("n_max = " + std::to_string(n_max) +
                              " leaves a coherent-state tail above tolerance; "
                              "minimal admissible n_max is " +
                              std::to_string(needed),
                          needed);
  }

  std::vector<cplx> amps(static_cast<std::size_t>(n_max) + 1, cplx{0.0, 0.0});
  if (r == 0.0) {
    amps[0] = 1.0;
    return amps;
  }
  const double phase = std::arg(alpha);
  const double log_r = std::log(r);
  for (int n = 0; n <= n_max; ++n) {
    const double log_mag = n * log_r - 0.5 * std::lgamma(n + 1.0) - 0.5 * mean;
    amps[n] = std::polar(std::exp(log_mag), n * phase);
  }
  return amps;
}

} // namespace qdw
