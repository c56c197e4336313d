#include "qdwigner/printed.hpp"

#include "qdwigner/errors.hpp"

#include <cmath>

namespace qdw {

std::string_view to_string(PrintedReading reading) {
  switch (reading) {
  case PrintedReading::Verbatim:
    return "verbatim";
  case PrintedReading::Amended:
    return "amended";
  case PrintedReading::AmendedConjugateChi:
    return "amended_conjugate_chi";
  }
  return "?";
}

PrintedCoefficients printed_coefficients(int n, const AtomicInit &atomic,
                                         std::span<const cplx> field,
                                         const SystemParams &params,
                                         PrintedReading reading) {
  if (n < 0 || field.size() < static_cast<std::size_t>(n) + 3)
    throw DomainError("printed form needs field amplitudes up to q_{n+2}");
  constexpr cplx I{0.0, 1.0};
  const bool verbatim = reading == PrintedReading::Verbatim;

  PrintedCoefficients c;
  c.nu1 = coupling_nu(n, 1, params);
  c.nu2 = coupling_nu(n, 2, params);
  const double nu1 = c.nu1, nu2 = c.nu2;
  const double d = params.delta, k = params.kappa_d;
  const cplx qa1 = field[n] * atomic.a[0];
  const cplx qa2 = field[n + 1] * atomic.a[1];
  const cplx qa3 = field[n + 1] * atomic.a[2];
  const cplx qa4 = field[n + 2] * atomic.a[3];
  const cplx dk = d - I * k;

  // The printed forms repeat nu1^2 where nu2^2 belongs.
  const double nu_sq = verbatim ? nu1 * nu1 + nu1 * nu1 : nu1 * nu1 + nu2 * nu2;
  c.mu = std::sqrt(d * d + 2.0 * nu_sq + k * k);

  const cplx k_tail = verbatim ? qa1 * nu1 + qa2 * nu2 : qa1 * nu1 + qa4 * nu2;
  c.k1 = nu1 * (qa2 - qa3) * dk + 2.0 * nu1 * k_tail;
  c.k2 = nu2 * (qa2 - qa3) * dk + 2.0 * nu2 * k_tail;

  const cplx chi_dk =
      reading == PrintedReading::AmendedConjugateChi ? std::conj(dk) : dk;
  c.chi = (qa1 * nu1 + qa4 * nu2) * chi_dk - (qa2 - qa3) * nu_sq;

  const cplx a4_term = verbatim ? qa4 : qa4 * nu2;
  c.g1 = qa1 * nu1 + qa2 * d + I * qa3 * k + a4_term;
  c.g2 = qa1 * nu1 - I * qa2 * k - qa3 * d + a4_term;
  return c;
}

BlockAmplitudes printed_closed_form(int n, const AtomicInit &atomic,
                                    std::span<const cplx> field,
                                    const SystemParams &params, double t,
                                    PrintedReading reading) {
  constexpr cplx I{0.0, 1.0};
  const PrintedCoefficients c =
      printed_coefficients(n, atomic, field, params, reading);
  const cplx qa1 = field[n] * atomic.a[0];
  const cplx qa2 = field[n + 1] * atomic.a[1];
  const cplx qa3 = field[n + 1] * atomic.a[2];
  const cplx qa4 = field[n + 2] * atomic.a[3];

  BlockAmplitudes out;
  if (c.mu == 0.0) {
    out << qa1, qa2, qa3, qa4;
    return out;
  }
  const double mu2 = c.mu * c.mu;
  const double cosm = std::cos(c.mu * t);
  const double one_minus_cos = 1.0 - cosm;
  const double sin_over_mu = std::sin(c.mu * t) / c.mu;

  out << qa1 - c.k1 / mu2 * one_minus_cos -
             I * c.nu1 * (qa2 + qa3) * sin_over_mu,
      qa2 * cosm - c.chi / mu2 * one_minus_cos - I * c.g1 * sin_over_mu,
      qa3 * cosm + c.chi / mu2 * one_minus_cos - I * c.g2 * sin_over_mu,
      qa4 - c.k2 / mu2 * one_minus_cos - I * c.nu2 * (qa2 + qa3) * sin_over_mu;
  return out;
}

} // namespace qdw
