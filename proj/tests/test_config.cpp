#include "qdwigner/config.hpp"
#include "qdwigner/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qdw;
using std::numbers::pi;

namespace {

std::vector<CurveSpec> resolve(const RunConfig &c,
                               const std::optional<SweepSpec> &sweep = {}) {
  std::vector<std::string> warnings;
  return resolve_curves(c, sweep, warnings);
}

RunConfig with_preset(Preset p) {
  RunConfig c;
  c.preset = p;
  return c;
}

} // namespace

TEST_CASE("parse complex") {
  CHECK(parse_complex("5") == cplx{5.0, 0.0});
  CHECK(parse_complex("5+0i") == cplx{5.0, 0.0});
  CHECK(parse_complex("-1.5-2i") == cplx{-1.5, -2.0});
  CHECK(parse_complex("2i") == cplx{0.0, 2.0});
  CHECK(parse_complex("i") == cplx{0.0, 1.0});
  CHECK(parse_complex("-i") == cplx{0.0, -1.0});
  CHECK(parse_complex(" 3 + 4i ") == cplx{3.0, 4.0});
  CHECK(parse_complex("1e-3+2e+1i") == cplx{1e-3, 20.0});
  CHECK_THROWS_AS(parse_complex(""), UsageError);
  CHECK_THROWS_AS(parse_complex("abc"), UsageError);
  const cplx z{0.1, -1.0 / 3.0};
  CHECK(parse_complex(format_complex(z)) == z);
}

TEST_CASE("parse angle") {
  CHECK(parse_angle("0.5") == 0.5);
  CHECK(parse_angle("pi") == pi);
  CHECK(parse_angle("-pi/4") == -pi / 4);
  CHECK(parse_angle("3*pi/2") == 3 * pi / 2);
  CHECK(parse_angle("2pi") == 2 * pi);
  CHECK(parse_angle("PI/2") == pi / 2);
  CHECK_THROWS_AS(parse_angle("pi*2"), UsageError);
  CHECK_THROWS_AS(parse_angle("half"), UsageError);
}

TEST_CASE("format double round-trips") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 200; ++i) {
    const double x = u(rng);
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("config text format") {
  const auto c = parse_config_text(R"(# comment
preset = fig2a
kappa-d = 3   # trailing comment
theta = pi/3
alpha = 4+1i
atomic = product
method = ode
renormalize = true
)");
  CHECK(c.preset == Preset::Fig2a);
  CHECK(c.kappa_d == 3.0);
  CHECK(c.theta == doctest::Approx(pi / 3));
  CHECK(c.alpha == cplx{4.0, 1.0});
  CHECK(std::get<AtomicPreset>(*c.atomic) == AtomicPreset::Product);
  CHECK(c.method == Method::Ode);
  CHECK(c.renormalize);

  CHECK(parse_config_text("g = 2.5").kappa_d == 2.5);

  const auto explicit_atoms =
      parse_config_text("atomic = 0.6, 0, 0, 0.8i");
  const auto &a = std::get<AtomicInit>(*explicit_atoms.atomic);
  CHECK(a.a[3] == cplx{0.0, 0.8});

  CHECK_THROWS_WITH_AS(parse_config_text("q = 0.1\nbogus = 1"),
                       doctest::Contains("line 2"), UsageError);
  CHECK_THROWS_AS(parse_config_text("q 0.1"), UsageError);
  CHECK_THROWS_AS(parse_config_text("atomic = 1, 1, 0, 0"), UsageError);
  CHECK_THROWS_AS(parse_config_text("method = euler"), UsageError);
  CHECK_THROWS_AS(parse_config_text("samples = ten"), UsageError);
}

TEST_CASE("config round-trip over random configs") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::bernoulli_distribution coin;
  for (int i = 0; i < 200; ++i) {
    RunConfig c;
    if (coin(rng))
      c.preset = all_presets[rng() % all_presets.size()];
    if (coin(rng))
      c.deformation = coin(rng) ? DeformationKind::Identity
                                : DeformationKind::QDeformed;
    if (coin(rng))
      c.q = u(rng) / 10.0;
    c.allow_q_above_one = coin(rng);
    if (coin(rng))
      c.kappa_d = u(rng);
    if (coin(rng))
      c.delta = u(rng);
    c.lambda = 0.1 + u(rng);
    c.alpha = {u(rng), u(rng) - 5.0};
    if (coin(rng))
      c.n_max = 2 + static_cast<int>(rng() % 200);
    if (coin(rng))
      c.theta = u(rng) / 3.0;
    if (coin(rng))
      c.phi = u(rng) / 1.5;
    if (coin(rng)) {
      if (coin(rng)) {
        c.atomic = static_cast<AtomicPreset>(rng() % 3);
      } else {
        const double th = u(rng);
        c.atomic = AtomicInit{
            {cplx{std::cos(th), 0.0}, {}, {}, std::polar(std::sin(th), u(rng))}};
      }
    }
    c.t_max = u(rng) * 10.0;
    c.samples = 1 + static_cast<int>(rng() % 5000);
    c.method = coin(rng) ? Method::Closed : Method::Ode;
    c.renormalize = coin(rng);
    c.include_remainder = coin(rng);
    CHECK(parse_config_text(serialize_config(c)) == c);
  }
}

TEST_CASE("sweep parameter names") {
  CHECK(parse_sweep_param("q") == SweepParam::Q);
  CHECK(parse_sweep_param("kappa_d") == SweepParam::KappaD);
  CHECK(parse_sweep_param("g") == SweepParam::KappaD);
  CHECK(parse_sweep_param("phi") == SweepParam::Phi);
  CHECK_THROWS_AS(parse_sweep_param("lambda"), UsageError);
  CHECK(parse_preset("fig4b") == Preset::Fig4b);
  CHECK_THROWS_AS(parse_preset("fig6a"), UsageError);
}

TEST_CASE("figure presets") {
  const auto f1 = resolve(with_preset(Preset::Fig1a));
  REQUIRE(f1.size() == 2);
  CHECK(f1[0].params.kappa_d == 1.0);
  CHECK(f1[1].params.kappa_d == 5.0);
  for (const auto &c : f1) {
    CHECK(c.theta == pi / 2);
    CHECK(c.phi == pi);
    CHECK(c.params.delta == 1.0);
    CHECK(c.params.deformation.kind == DeformationKind::Identity);
    CHECK(c.atomic == atomic_preset(AtomicPreset::Bell));
    CHECK(c.field.alpha == cplx{5.0, 0.0});
    CHECK(c.field.n_max == 68);
  }
  CHECK(f1[0].label == "fig1a_kappa_d=1");

  const auto f3 = resolve(with_preset(Preset::Fig3a));
  REQUIRE(f3.size() == 3);
  CHECK(f3[2].params.kappa_d == 10.0);
  for (const auto &c : f3) {
    CHECK(c.params.deformation.q == 0.1);
    CHECK(c.params.delta == 1.0);
  }

  const auto f5 = resolve(with_preset(Preset::Fig5b));
  REQUIRE(f5.size() == 3);
  CHECK(f5[0].params.delta == 1.0);
  CHECK(f5[2].params.delta == 10.0);
  for (const auto &c : f5) {
    CHECK(c.params.deformation.q == 0.1);
    CHECK(c.params.kappa_d == 5.0);
    CHECK(c.atomic == atomic_preset(AtomicPreset::Product));
  }

  const auto f4 = resolve(with_preset(Preset::Fig4a));
  REQUIRE(f4.size() == 3);
  CHECK(f4[0].phi == doctest::Approx(pi / 4));
  CHECK(f4[1].phi == doctest::Approx(pi / 2));
  CHECK(f4[2].phi == doctest::Approx(pi));
  CHECK(f4[0].theta == doctest::Approx(pi / 4));
  CHECK(f4[0].params.deformation.q == 0.1);
  CHECK(resolve(with_preset(Preset::Fig4b))[0].params.deformation.q == 0.8);

  const auto f2 = resolve(with_preset(Preset::Fig2a));
  REQUIRE(f2.size() == 3);
  CHECK(f2[0].params.deformation.q == 0.1);
  CHECK(f2[2].params.deformation.q == 0.8);
  CHECK(f2[0].params.kappa_d == 5.0);
}

TEST_CASE("explicit values override presets with warnings") {
  RunConfig c = with_preset(Preset::Fig3a);
  c.kappa_d = 2.0;
  c.delta = 4.0;
  std::vector<std::string> warnings;
  const auto curves = resolve_curves(c, std::nullopt, warnings);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].params.kappa_d == 2.0);
  CHECK(curves[0].params.delta == 4.0);
  CHECK(warnings.size() == 2);

  RunConfig same = with_preset(Preset::Fig3a);
  same.delta = 1.0;
  warnings.clear();
  resolve_curves(same, std::nullopt, warnings);
  CHECK(warnings.empty());

  RunConfig ident = with_preset(Preset::Fig2a);
  ident.deformation = DeformationKind::Identity;
  warnings.clear();
  const auto id_curves = resolve_curves(ident, std::nullopt, warnings);
  REQUIRE(id_curves.size() == 1);
  CHECK(id_curves[0].params.deformation.kind == DeformationKind::Identity);
}

TEST_CASE("sweeps") {
  RunConfig c;
  c.theta = pi / 4;
  c.q = 0.1;
  c.kappa_d = 5.0;
  const auto phi = resolve(c, SweepSpec{SweepParam::Phi, {"pi/4", "pi/2", "pi"}});
  REQUIRE(phi.size() == 3);
  CHECK(phi[1].phi == doctest::Approx(pi / 2));
  CHECK(phi[1].label == "sweep_phi=pi/2");

  const auto q = resolve(with_preset(Preset::Fig4a),
                         SweepSpec{SweepParam::Q, {"0.1", "0.8"}});
  REQUIRE(q.size() == 2);
  CHECK(q[1].params.deformation.q == 0.8);
  CHECK(q[1].phi == pi); // sweep replaces the preset phi list

  const auto alpha = resolve(c, SweepSpec{SweepParam::Alpha, {"1", "2+1i"}});
  CHECK(alpha[1].field.alpha == cplx{2.0, 1.0});
  CHECK(alpha[1].field.n_max == minimal_n_max({2.0, 1.0}));

  CHECK_THROWS_AS(resolve(c, SweepSpec{SweepParam::Q, {}}), UsageError);
  CHECK_THROWS_AS(resolve(c, SweepSpec{SweepParam::Q, {"1.5"}}), UsageError);
}

TEST_CASE("resolve rejects bad values") {
  RunConfig c;
  c.q = 1.2;
  CHECK_THROWS_AS(resolve(c), UsageError);
  c.allow_q_above_one = true;
  CHECK_NOTHROW(resolve(c));

  RunConfig neg;
  neg.kappa_d = -1.0;
  CHECK_THROWS_AS(resolve(neg), UsageError);

  RunConfig lam;
  lam.lambda = 0.0;
  CHECK_THROWS_AS(resolve(lam), UsageError);

  RunConfig nm;
  nm.n_max = 10;
  CHECK_THROWS_WITH_AS(resolve(nm), doctest::Contains("n_max"), UsageError);

  RunConfig dq;
  dq.deformation = DeformationKind::QDeformed;
  CHECK_THROWS_AS(resolve(dq), UsageError);
}
