#pragma once

#include "qdwigner/algebra.hpp"
#include "qdwigner/state.hpp"

#include <span>
#include <string_view>

namespace qdw {

/// How to read the literature closed-form coefficients.
///
/// Verbatim transcribes them as printed. Amended applies the structural
/// fixes: K_j uses q_{n+2} a4 nu2, G_1/G_2 carry nu2 on the a4 term, chi and
/// mu use nu1^2 + nu2^2. AmendedConjugateChi additionally replaces
/// (delta - i kappa_d) by (delta + i kappa_d) in chi.
enum class PrintedReading { Verbatim, Amended, AmendedConjugateChi };

std::string_view to_string(PrintedReading reading);

/// Intermediate values of the literature solution for block n.
struct PrintedCoefficients {
  double nu1 = 0.0;
  double nu2 = 0.0;
  double mu = 0.0;
  cplx k1, k2, chi, g1, g2;
};

/// `field` holds coherent amplitudes q_0.. and must reach index n + 2.
PrintedCoefficients printed_coefficients(int n, const AtomicInit &atomic,
                                         std::span<const cplx> field,
                                         const SystemParams &params,
                                         PrintedReading reading);

/// Block amplitudes predicted by the literature solution at physical time t.
BlockAmplitudes printed_closed_form(int n, const AtomicInit &atomic,
                                    std::span<const cplx> field,
                                    const SystemParams &params, double t,
                                    PrintedReading reading =
                                        PrintedReading::Verbatim);

} // namespace qdw
