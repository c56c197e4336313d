#include "qdwigner/dynamics.hpp"
#include "qdwigner/errors.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace qdw;
using std::numbers::pi;

namespace {

double sup_diff(const BlockAmplitudes &a, const BlockAmplitudes &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

SystemParams random_params(std::mt19937_64 &rng, double lambda_lo = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::uniform_real_distribution<double> ul(lambda_lo, 10.0);
  std::uniform_int_distribution<int> pick(0, 3);
  SystemParams p;
  p.lambda = ul(rng);
  p.delta = u(rng);
  p.kappa_d = u(rng);
  const double qs[] = {0.1, 0.4, 0.8};
  const int k = pick(rng);
  p.deformation =
      k == 0 ? DeformationSpec::identity() : DeformationSpec::q_deformed(qs[k - 1]);
  return p;
}

} // namespace

TEST_CASE("block hamiltonian: detuning and dipole only") {
  SystemParams p;
  p.lambda = 0.0;
  p.delta = 1.0;
  const auto b = block_hamiltonian(3, p);
  Eigen::Matrix4cd d = Eigen::Matrix4cd::Zero();
  d(1, 1) = 1.0;
  d(2, 2) = -1.0;
  CHECK((b.h - d).norm() == 0.0);

  p.delta = 0.0;
  p.kappa_d = 1.0;
  const auto k = block_hamiltonian(0, p);
  Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
  e(1, 2) = cplx{0.0, 1.0};
  e(2, 1) = cplx{0.0, -1.0};
  CHECK((k.h - e).norm() == 0.0);
  CHECK(hermiticity_residual(k.h) == 0.0);
}

TEST_CASE("block hamiltonian: spectrum {0, 0, +-mu}") {
  SystemParams p;
  p.delta = 1.0;
  p.kappa_d = 1.0;
  const auto b = block_hamiltonian(0, p);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(b.h);
  const auto ev = es.eigenvalues();
  CHECK(ev[0] == doctest::Approx(-std::sqrt(8.0)).epsilon(1e-13));
  CHECK(std::abs(ev[1]) < 1e-13);
  CHECK(std::abs(ev[2]) < 1e-13);
  CHECK(ev[3] == doctest::Approx(std::sqrt(8.0)).epsilon(1e-13));
  CHECK(b.mu == doctest::Approx(std::sqrt(8.0)));
}

TEST_CASE("block hamiltonian: spectral identity over random draws") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> un(0, 30);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_params(rng);
    const auto b = block_hamiltonian(un(rng), p);
    CHECK(hermiticity_residual(b.h) == 0.0);
    CHECK(spectral_residual(b) < 1e-9 * std::max(b.mu * b.mu * b.mu, 1.0));
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(b.h);
    CHECK(es.eigenvalues()[3] ==
          doctest::Approx(b.mu).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("closed form: identity at t = 0 and pure phase") {
  std::mt19937_64 rng(3);
  SystemParams p;
  p.delta = 2.0;
  p.kappa_d = 3.0;
  const BlockAmplitudes c = oracle::random_unit4(rng);
  CHECK(sup_diff(evolve_block_closed(4, c, p, 0.0), c) == 0.0);

  SystemParams d;
  d.lambda = 0.0;
  d.delta = 1.0;
  BlockAmplitudes e1(0.0, 1.0, 0.0, 0.0);
  const auto out = evolve_block_closed(0, e1, d, pi);
  CHECK(sup_diff(out, BlockAmplitudes(0.0, -1.0, 0.0, 0.0)) < 1e-15);
}

TEST_CASE("closed form: zero generator leaves the state alone") {
  SystemParams z;
  z.lambda = 0.0;
  std::mt19937_64 rng(5);
  const BlockAmplitudes c = oracle::random_unit4(rng);
  CHECK(sup_diff(evolve_block_closed(2, c, z, 17.0), c) == 0.0);
}

TEST_CASE("closed form agrees with the matrix exponential") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ut(0.0, 25.0);
  std::uniform_int_distribution<int> un(0, 30);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_params(rng);
    const int n = un(rng);
    const double t = ut(rng);
    const BlockAmplitudes c = oracle::random_unit4(rng);
    const auto b = block_hamiltonian(n, p);
    const auto ref = oracle::expm_apply(b.h, t, c);
    const auto got = evolve_block_closed(b, c, t);
    CHECK(sup_diff(got, ref) < 1e-9);
    CHECK(got.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("closed form matches ODE on the Bell block") {
  SystemParams p;
  p.delta = 1.0;
  p.kappa_d = 5.0;
  BlockAmplitudes c(1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0));
  const double grid[] = {0.0, 1.0};
  const auto ode = evolve_block_ode(0, c, p, grid);
  CHECK(sup_diff(ode.back(), evolve_block_closed(0, c, p, 1.0)) < 1e-7);
}

TEST_CASE("ODE: zero generator is constant") {
  SystemParams z;
  z.lambda = 0.0;
  std::mt19937_64 rng(17);
  const BlockAmplitudes c = oracle::random_unit4(rng);
  const auto grid = uniform_grid(10.0, 11);
  for (const auto &s : evolve_block_ode(1, c, z, grid))
    CHECK(sup_diff(s, c) < 1e-15);
}

TEST_CASE("ODE: closed form vs adaptive integration over random draws") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<int> un(0, 30);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_params(rng, 1.0);
    const int n = un(rng);
    const BlockAmplitudes c = oracle::random_unit4(rng);
    std::vector<double> grid = uniform_grid(25.0, 51);
    for (double &t : grid)
      t /= p.lambda;
    const auto ode = evolve_block_ode(n, c, p, grid);
    double worst = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k)
      worst = std::max(worst,
                       sup_diff(ode[k], evolve_block_closed(n, c, p, grid[k])));
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("ODE: fixed-step fallback") {
  SystemParams p;
  p.delta = 1.0;
  p.kappa_d = 2.0;
  BlockAmplitudes c(1.0, 0.0, 0.0, 0.0);
  OdeOptions opt;
  opt.fixed_step = true;
  opt.fixed_step_size = 1e-3;
  const double grid[] = {0.0, 0.5, 2.0};
  const auto ode = evolve_block_ode(2, c, p, grid, opt);
  CHECK(sup_diff(ode.back(), evolve_block_closed(2, c, p, 2.0)) < 1e-9);
}

TEST_CASE("ODE: bad grids and budgets") {
  SystemParams p;
  BlockAmplitudes c(1.0, 0.0, 0.0, 0.0);
  const double back[] = {0.0, 1.0, 0.5};
  CHECK_THROWS_AS(evolve_block_ode(0, c, p, back), IntegrationError);
  OdeOptions tiny;
  tiny.max_steps = 3;
  const double far[] = {0.0, 100.0};
  CHECK_THROWS_AS(evolve_block_ode(5, c, p, far, tiny), IntegrationError);
}

TEST_CASE("closed form rejects a broken generator") {
  BlockHamiltonian b;
  b.h = Eigen::Matrix4cd::Zero();
  b.h(0, 1) = b.h(1, 0) = 1.0;
  b.h(1, 2) = b.h(2, 1) = 1.0;
  b.mu = 0.5; // the true spectral radius is sqrt(2)
  CHECK_THROWS_AS(evolve_block_closed(b, BlockAmplitudes(1.0, 0.0, 0.0, 0.0), 1.0),
                  ConsistencyError);
}

TEST_CASE("evolve joint") {
  const auto s = make_joint_state(atomic_preset(AtomicPreset::Bell),
                                  FieldInit::with_default_truncation({5.0, 0.0}));
  SystemParams p;
  p.delta = 1.0;
  p.kappa_d = 1.0;

  const double zero[] = {0.0};
  const auto t0 = evolve_joint(s, p, zero, Method::Closed);
  REQUIRE(t0.states.size() == 1);
  for (std::size_t n = 0; n < s.blocks.size(); ++n)
    CHECK(sup_diff(t0.states[0].blocks[n], s.blocks[n]) == 0.0);

  const auto grid = uniform_grid(50.0, 201);
  const auto closed = evolve_joint(s, p, grid, Method::Closed);
  const auto ode = evolve_joint(s, p, grid, Method::Ode);
  double drift = 0.0, diff = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    drift = std::max(drift, std::abs(closed.states[k].block_norm2() -
                                     s.block_norm2()));
    for (std::size_t n = 0; n < s.blocks.size(); ++n)
      diff = std::max(diff, sup_diff(closed.states[k].blocks[n],
                                     ode.states[k].blocks[n]));
  }
  CHECK(drift < 1e-12);
  CHECK(diff < 1e-6);
  CHECK(closed.remainder_frozen);
  CHECK(closed.states.back().remainder == s.remainder);

  // repeated runs are bitwise identical
  const auto again = evolve_joint(s, p, grid, Method::Closed);
  for (std::size_t k = 0; k < grid.size(); ++k)
    for (std::size_t n = 0; n < s.blocks.size(); ++n)
      CHECK(again.states[k].blocks[n] == closed.states[k].blocks[n]);
}

TEST_CASE("evolve joint: scaled time and lambda") {
  const auto s = make_joint_state(atomic_preset(AtomicPreset::Product),
                                  FieldInit::with_default_truncation({2.0, 0.0}));
  SystemParams p1, p2;
  p1.delta = p2.delta = 1.0;
  p1.kappa_d = p2.kappa_d = 3.0;
  p2.lambda = 2.0;
  p2.delta = 2.0;
  p2.kappa_d = 6.0;
  // doubling every coupling and halving physical time leaves lambda*t curves equal
  const double grid[] = {0.0, 1.5, 4.0};
  const auto a = evolve_joint(s, p1, grid, Method::Closed);
  const auto b = evolve_joint(s, p2, grid, Method::Closed);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t n = 0; n < s.blocks.size(); ++n)
      CHECK(sup_diff(a.states[k].blocks[n], b.states[k].blocks[n]) < 1e-12);

  SystemParams zero;
  zero.lambda = 0.0;
  CHECK_THROWS(evolve_joint(s, zero, grid, Method::Closed));
}

TEST_CASE("uniform grid") {
  const auto g = uniform_grid(50.0, 2000);
  REQUIRE(g.size() == 2000);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 50.0);
  CHECK(g[1] == doctest::Approx(50.0 / 1999.0));
}
