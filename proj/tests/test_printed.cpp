#include "qdwigner/dynamics.hpp"
#include "qdwigner/errors.hpp"
#include "qdwigner/printed.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace qdw;

namespace {

const PrintedReading readings[] = {PrintedReading::Verbatim,
                                   PrintedReading::Amended,
                                   PrintedReading::AmendedConjugateChi};

} // namespace

TEST_CASE("printed form reproduces the initial amplitudes at t = 0") {
  const auto atomic = atomic_preset(AtomicPreset::Product);
  const auto field = coherent_amplitudes({2.0, 0.0}, 40);
  SystemParams p;
  p.delta = 1.0;
  p.kappa_d = 5.0;
  p.deformation = DeformationSpec::q_deformed(0.1);
  for (auto r : readings) {
    for (int n = 0; n < 10; ++n) {
      const auto c = printed_closed_form(n, atomic, field, p, 0.0, r);
      CHECK(c[0] == field[n] * atomic.a[0]);
      CHECK(c[1] == field[n + 1] * atomic.a[1]);
      CHECK(c[2] == field[n + 1] * atomic.a[2]);
      CHECK(c[3] == field[n + 2] * atomic.a[3]);
    }
  }
}

TEST_CASE("printed form: readings") {
  CHECK(to_string(PrintedReading::Verbatim) == "verbatim");
  CHECK(to_string(PrintedReading::Amended) == "amended");
  CHECK(to_string(PrintedReading::AmendedConjugateChi) ==
        "amended_conjugate_chi");

  const auto atomic = atomic_preset(AtomicPreset::Product);
  const auto field = coherent_amplitudes({2.0, 0.0}, 40);
  SystemParams p;
  p.delta = 1.0;
  p.kappa_d = 5.0;

  // the amended mu is the corrected Rabi frequency; the verbatim one is not
  const auto amended =
      printed_coefficients(3, atomic, field, p, PrintedReading::Amended);
  CHECK(amended.mu == doctest::Approx(rabi_mu(3, p)).epsilon(1e-14));
  const auto verbatim =
      printed_coefficients(3, atomic, field, p, PrintedReading::Verbatim);
  CHECK(verbatim.mu < amended.mu);

  double worst[3] = {0.0, 0.0, 0.0};
  for (int ri = 0; ri < 3; ++ri)
    for (int n = 0; n < 20; ++n) {
      BlockAmplitudes c0;
      c0 << field[n] * atomic.a[0], field[n + 1] * atomic.a[1],
          field[n + 1] * atomic.a[2], field[n + 2] * atomic.a[3];
      for (double t : {0.2, 1.0, 3.7}) {
        const auto ref = evolve_block_closed(n, c0, p, t);
        const auto got = printed_closed_form(n, atomic, field, p, t, readings[ri]);
        worst[ri] = std::max(worst[ri], (ref - got).cwiseAbs().maxCoeff());
      }
    }
  // as printed the formula does not solve the block equation
  CHECK(worst[0] > 1e-3);
  CHECK(worst[1] > 1e-3);
  CHECK(worst[2] < 1e-12);
}

TEST_CASE("printed form needs two extra field amplitudes") {
  const auto field = coherent_amplitudes({0.5, 0.0}, 5, 1e-3);
  CHECK_THROWS_AS(printed_coefficients(4, atomic_preset(AtomicPreset::Bell),
                                       field, SystemParams{},
                                       PrintedReading::Amended),
                  DomainError);
}
