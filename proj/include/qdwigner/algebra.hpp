#pragma once

#include <complex>
#include <vector>

namespace qdw {

using cplx = std::complex<double>;

enum class DeformationKind { Identity, QDeformed };

/// Selects the deformation function f(n) of the cavity ladder operators.
///
/// QDeformed uses f(n) = sqrt((1 - q^n) / (n (1 - q))). Only q in (0,1) is
/// accepted unless `allow_q_above_one` is set, in which case any q > 0 is
/// admitted and f(n) grows with n.
struct DeformationSpec {
  DeformationKind kind = DeformationKind::Identity;
  double q = 1.0;
  bool allow_q_above_one = false;

  static DeformationSpec identity() { return {}; }
  static DeformationSpec q_deformed(double q, bool allow_q_above_one = false) {
    return {DeformationKind::QDeformed, q, allow_q_above_one};
  }

  /// Throws ParameterError if q is not admissible.
  void validate() const;

  bool operator==(const DeformationSpec &) const = default;
};

/// Coupling constants of the two-atom interaction Hamiltonian.
///
/// `lambda` is the atom-field coupling and sets the time unit (all
/// trajectories are reported against lambda*t). The atomic detunings are
/// always Delta_1 = delta, Delta_2 = -delta.
struct SystemParams {
  double lambda = 1.0;
  double kappa_d = 0.0;
  double delta = 0.0;
  DeformationSpec deformation{};

  /// Requires lambda >= 0 and kappa_d >= 0 (time evolution additionally
  /// requires lambda > 0, checked there).
  void validate() const;

  bool operator==(const SystemParams &) const = default;
};

/// f(n) for n >= 1, evaluated as sqrt((1/n) * sum_{k<n} q^k) so that the
/// q -> 1 limit is exact.
double deformation_factor(int n, const DeformationSpec &spec);

/// nu_j(n) = lambda * f(n+j) * sqrt(n+j), j in {1,2}.
double coupling_nu(int n, int j, const SystemParams &params);

/// Effective Rabi frequency of excitation block n:
/// mu(n) = sqrt(delta^2 + 2 (nu_1^2 + nu_2^2) + kappa_d^2).
/// Throws DegenerateBlockError when every term vanishes.
double rabi_mu(int n, const SystemParams &params);

/// Probability weight of a Poisson(mean) distribution above n_max.
double poisson_tail(double mean, int n_max);

/// Smallest n_max >= 2 whose coherent-state tail is below `tail_tol`.
/// Starts from ceil(|alpha|^2 + 10|alpha| + 20) and tightens.
int minimal_n_max(cplx alpha, double tail_tol = 1e-12);

/// Fock amplitudes alpha^n / sqrt(n!) * exp(-|alpha|^2/2) for n = 0..n_max,
/// evaluated in the log domain.
///
/// Throws TruncationError (carrying the minimal admissible n_max) when the
/// discarded tail is not below `tail_tol`, and DomainError for n_max < 2.
std::vector<cplx> coherent_amplitudes(cplx alpha, int n_max,
                                      double tail_tol = 1e-12);

} // namespace qdw
