#include "qdwigner/validate.hpp"

#include "qdwigner/density.hpp"
#include "qdwigner/dynamics.hpp"
#include "qdwigner/oracle.hpp"
#include "qdwigner/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace qdw {

namespace {

using std::numbers::pi;
using Rng = std::mt19937_64;

double uniform(Rng &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

DeformationSpec draw_deformation(Rng &rng) {
  static constexpr double qs[] = {0.1, 0.4, 0.8};
  const int pick = std::uniform_int_distribution<int>(0, 3)(rng);
  return pick == 3 ? DeformationSpec::identity()
                   : DeformationSpec::q_deformed(qs[pick]);
}

// lambda, delta, kappa_d in [0, 10]. Time-evolution draws keep lambda >= 1
// so a lambda*t window stays a bounded physical window.
SystemParams draw_params(Rng &rng, double lambda_min = 0.0) {
  SystemParams p;
  p.lambda = uniform(rng, lambda_min, 10.0);
  p.delta = uniform(rng, 0.0, 10.0);
  p.kappa_d = uniform(rng, 0.0, 10.0);
  p.deformation = draw_deformation(rng);
  return p;
}

BlockAmplitudes random_unit_block(Rng &rng) {
  std::normal_distribution<double> g;
  BlockAmplitudes c;
  for (int i = 0; i < 4; ++i)
    c[i] = cplx{g(rng), g(rng)};
  return c.normalized();
}

DensityMatrix4 random_density(Rng &rng) {
  std::normal_distribution<double> g;
  const int rank = std::uniform_int_distribution<int>(1, 4)(rng);
  Eigen::MatrixXcd m(4, rank);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < rank; ++j)
      m(i, j) = cplx{g(rng), g(rng)};
  DensityMatrix4 rho;
  rho.m = m * m.adjoint();
  rho.m /= rho.m.trace().real();
  return rho;
}

Eigen::Matrix4cd equal_angle_kernel(double theta, double phi) {
  const Eigen::Matrix2cd a = kernel(theta, phi).a;
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * a;
  return out;
}

CheckResult check(std::string name, double residual, double tolerance,
                  std::string detail = {}) {
  return {std::move(name), residual, tolerance,
          std::isfinite(residual) && residual <= tolerance, std::move(detail)};
}

double sup_diff(const BlockAmplitudes &a, const BlockAmplitudes &b) {
  return (a - b).cwiseAbs().maxCoeff();
}

void hamiltonian_checks(ValidationReport &r, Rng &rng,
                        const ValidationOptions &opt) {
  double herm = 0.0, spectral = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    BlockHamiltonian b = block_hamiltonian(n, draw_params(rng));
    if (opt.corrupt_hamiltonian && k == 0)
      b.h(0, 1) += 1e-3;
    herm = std::max(herm, hermiticity_residual(b.h));
    spectral = std::max(spectral, spectral_residual(b) /
                                      std::max(b.mu * b.mu * b.mu, 1.0));
  }
  r.checks.push_back(check("hamiltonian_hermiticity", herm, 0.0,
                           "max |h - h^dagger| over 1000 draws"));
  r.checks.push_back(check("spectral_identity", spectral, 1e-9,
                           "max |h^3 - mu^2 h| / max(mu^3, 1), 1000 draws"));

  double mu_rel = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    const SystemParams p = draw_params(rng);
    const BlockHamiltonian b = block_hamiltonian(n, p);
    const double top =
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(b.h,
                                                        Eigen::EigenvaluesOnly)
            .eigenvalues()
            .cwiseAbs()
            .maxCoeff();
    mu_rel = std::max(mu_rel, std::abs(rabi_mu(n, p) - top) / top);
  }
  r.checks.push_back(check("mu_matches_eigenvalues", mu_rel, 1e-10,
                           "relative, 100 draws"));
}

void propagator_checks(ValidationReport &r, Rng &rng) {
  double unit = 0.0;
  for (int k = 0; k < 200; ++k) {
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    const BlockHamiltonian b = block_hamiltonian(n, draw_params(rng));
    const BlockAmplitudes c = random_unit_block(rng);
    const double t = uniform(rng, 0.0, 50.0);
    unit = std::max(unit, std::abs(evolve_block_closed(b, c, t).norm() - 1.0));
  }
  r.checks.push_back(check("closed_form_unitarity", unit, 1e-12,
                           "| |exp(-iht)c| - |c| |, 200 draws"));

  std::vector<double> grid = uniform_grid(25.0, 101);
  double cross = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    const SystemParams p = draw_params(rng, 1.0);
    const BlockAmplitudes c = random_unit_block(rng);
    std::vector<double> t(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      t[i] = grid[i] / p.lambda;
    const auto ode = evolve_block_ode(n, c, p, t);
    const BlockHamiltonian b = block_hamiltonian(n, p);
    for (std::size_t i = 0; i < t.size(); ++i)
      cross = std::max(cross, sup_diff(ode[i], evolve_block_closed(b, c, t[i])));
  }
  r.checks.push_back(check("closed_vs_ode", cross, 1e-7,
                           "sup norm over lambda*t in [0,25], 50 draws"));

  grid = uniform_grid(50.0, 101);
  double drift = 0.0;
  for (int k = 0; k < 10; ++k) {
    const int n = std::uniform_int_distribution<int>(0, 30)(rng);
    const SystemParams p = draw_params(rng, 1.0);
    const BlockAmplitudes c = random_unit_block(rng);
    std::vector<double> t(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      t[i] = grid[i] / p.lambda;
    for (const auto &y : evolve_block_ode(n, c, p, t))
      drift = std::max(drift, std::abs(y.norm() - 1.0));
  }
  r.checks.push_back(check("ode_norm_drift", drift, 1e-9,
                           "lambda*t in [0,50], 10 draws"));
}

void oracle_checks(ValidationReport &r) {
  const cplx alpha{3.0, 0.0};
  const FieldInit field = FieldInit::with_default_truncation(alpha);
  const std::vector<double> grid = uniform_grid(10.0, 21);

  double equivalence = 0.0, excitation = 0.0, density = 0.0;
  std::vector<SystemParams> regimes(2);
  regimes[0].delta = 1.0;
  regimes[0].kappa_d = 1.0;
  regimes[1].delta = 1.0;
  regimes[1].kappa_d = 5.0;
  regimes[1].deformation = DeformationSpec::q_deformed(0.4);

  for (const SystemParams &p : regimes) {
    const FullSpaceOracle oracle(p, field.n_max);
    for (AtomicPreset preset : {AtomicPreset::Bell, AtomicPreset::Product}) {
      const JointState s0 = make_joint_state(atomic_preset(preset), field);
      const Trajectory traj = evolve_joint(s0, p, grid, Method::Closed);
      const Eigen::VectorXcd psi0 = oracle.embed(s0);
      const double n0 = oracle.excitation_expectation(psi0);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const Eigen::VectorXcd psi = oracle.propagate(psi0, grid[k] / p.lambda);
        const JointState projected = oracle.project(psi);
        for (std::size_t n = 0; n < projected.blocks.size(); ++n)
          equivalence = std::max(
              equivalence,
              sup_diff(projected.blocks[n], traj.states[k].blocks[n]));
        excitation = std::max(
            excitation, std::abs(oracle.excitation_expectation(psi) - n0));

        const Eigen::Matrix4cd direct = oracle.atomic_density(psi);
        Eigen::Matrix2cd alice;
        alice << direct(0, 0) + direct(1, 1), direct(0, 2) + direct(1, 3),
            direct(2, 0) + direct(3, 1), direct(2, 2) + direct(3, 3);
        const DensityMatrix2 reduced =
            reduce_to_alice(reduce_to_atoms(projected, true));
        density = std::max(density, (reduced.m - alice).cwiseAbs().maxCoeff());
      }
    }
  }
  r.checks.push_back(check("oracle_equivalence", equivalence, 1e-6,
                           "Bell and Product, alpha = 3, lambda*t in [0,10]"));
  r.checks.push_back(check("oracle_excitation_conservation", excitation, 1e-10));
  r.checks.push_back(check("density_oracle_consistency", density, 1e-8,
                           "rho_A by partial trace vs full-space trace"));
}

void trajectory_health(ValidationReport &r, const RunConfig &config,
                       bool every_preset) {
  std::vector<CurveSpec> curves;
  std::vector<std::string> warnings;
  if (every_preset) {
    for (Preset p : all_presets) {
      RunConfig c = config;
      c.preset = p;
      for (auto &curve : resolve_curves(c, std::nullopt, warnings))
        curves.push_back(std::move(curve));
    }
  } else {
    curves = resolve_curves(config, std::nullopt, warnings);
  }

  const std::vector<double> grid = uniform_grid(config.t_max, config.samples);
  double norm_drift = 0.0, herm = 0.0, trace_drift = 0.0, psd = 0.0;
  double realness = 0.0, range_excess = 0.0;
  for (const CurveSpec &curve : curves) {
    const JointState s0 =
        make_joint_state(curve.atomic, curve.field, config.renormalize);
    const Trajectory traj =
        evolve_joint(s0, curve.params, grid, config.method);
    const double norm0 = s0.block_norm2();
    const double trace0 = reduce_to_atoms(s0, config.include_remainder).trace();
    const Eigen::Matrix4cd aa = equal_angle_kernel(curve.theta, curve.phi);
    for (const JointState &s : traj.states) {
      norm_drift = std::max(norm_drift, std::abs(s.block_norm2() - norm0));
      const DensityMatrix4 rho = reduce_to_atoms(s, config.include_remainder);
      herm = std::max(herm, rho.hermiticity_residual());
      trace_drift = std::max(trace_drift, std::abs(rho.trace() - trace0));
      psd = std::max(psd, -rho.min_eigenvalue());
      const cplx w = (rho.m * aa).trace();
      realness = std::max(realness, std::abs(w.imag()));
      const double tr = rho.trace();
      range_excess = std::max(
          range_excess, std::max(wigner_lower_bound * tr - w.real(),
                                 w.real() - wigner_upper_bound * tr));
    }
  }
  const std::string scope = std::to_string(curves.size()) + " curves x " +
                            std::to_string(grid.size()) + " samples";
  r.checks.push_back(check("block_norm_drift", norm_drift, 1e-9, scope));
  r.checks.push_back(check("density_hermiticity", herm, 1e-12, scope));
  r.checks.push_back(check("density_trace_stability", trace_drift, 1e-9, scope));
  r.checks.push_back(check("density_psd", psd, 1e-10,
                           "negated smallest eigenvalue; " + scope));
  r.checks.push_back(check("trajectory_wigner_realness", realness, 1e-10, scope));
  r.checks.push_back(check("trajectory_wigner_range", std::max(range_excess, 0.0),
                           1e-9, "bounds scaled by trace; " + scope));
}

void wigner_checks(ValidationReport &r, Rng &rng) {
  double tr = 0.0, eig = 0.0, herm = 0.0, mixed = 0.0;
  const double lo = 0.5 * (1.0 - std::sqrt(3.0));
  const double hi = 0.5 * (1.0 + std::sqrt(3.0));
  DensityMatrix4 maximally_mixed;
  maximally_mixed.m = Eigen::Matrix4cd::Identity() / 4.0;
  for (int k = 0; k < 100; ++k) {
    const double theta = uniform(rng, 0.0, pi);
    const double phi = uniform(rng, 0.0, 2 * pi);
    const KernelMatrix a = kernel(theta, phi);
    tr = std::max(tr, std::abs(a.a.trace() - 1.0));
    herm = std::max(herm, (a.a - a.a.adjoint()).cwiseAbs().maxCoeff());
    const Eigen::Vector2d ev =
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(a.a).eigenvalues();
    eig = std::max({eig, std::abs(ev[0] - lo), std::abs(ev[1] - hi)});
    mixed = std::max(mixed,
                     std::abs(wigner_at(maximally_mixed, theta, phi) - 0.25));
  }
  r.checks.push_back(check("kernel_trace", tr, 1e-12, "100 angles"));
  r.checks.push_back(check("kernel_hermiticity", herm, 1e-14, "100 angles"));
  r.checks.push_back(check("kernel_eigenvalues", eig, 1e-12, "100 angles"));
  r.checks.push_back(check("wigner_maximally_mixed", mixed, 1e-12, "100 angles"));

  double imag = 0.0, excess = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const DensityMatrix4 rho = random_density(rng);
    const cplx w =
        (rho.m * equal_angle_kernel(uniform(rng, 0.0, pi),
                                    uniform(rng, 0.0, 2 * pi)))
            .trace();
    imag = std::max(imag, std::abs(w.imag()));
    excess = std::max({excess, wigner_lower_bound - w.real(),
                       w.real() - wigner_upper_bound});
  }
  r.checks.push_back(check("wigner_realness", imag, 1e-10,
                           "1000 random density matrices"));
  r.checks.push_back(check("wigner_range", std::max(excess, 0.0), 1e-9,
                           "distance outside [-0.5, 1.8660254]"));

  double cross = 0.0;
  for (int k = 0; k < 1000; ++k) {
    JointState s;
    const int blocks = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int n = 0; n < blocks; ++n)
      s.blocks.push_back(random_unit_block(rng));
    const double scale = 1.0 / std::sqrt(s.block_norm2());
    for (auto &b : s.blocks)
      b *= scale;
    const DensityMatrix4 rho = reduce_to_atoms(s);
    const double theta = uniform(rng, 0.0, pi);
    const double phi = uniform(rng, 0.0, 2 * pi);
    cross = std::max(cross, std::abs(wigner_at(rho, theta, phi) -
                                     wigner_lambda_form(rho, theta, phi)));
  }
  r.checks.push_back(check("wigner_cross_method", cross, 1e-9,
                           "kernel trace vs lambda expansion, 1000 pairs"));
}

} // namespace

PrintedDeviation printed_deviation(const CurveSpec &curve, double t_max,
                                   int samples) {
  const auto q = coherent_amplitudes(curve.field.alpha, curve.field.n_max + 2);
  const JointState s0 = make_joint_state(curve.atomic, curve.field);
  const std::vector<double> grid = uniform_grid(t_max, samples);

  PrintedDeviation out;
  out.curve = curve.label;
  for (PrintedReading reading :
       {PrintedReading::Verbatim, PrintedReading::Amended,
        PrintedReading::AmendedConjugateChi}) {
    double worst = 0.0;
    for (int n = 0; n <= curve.field.n_max; ++n) {
      const BlockHamiltonian b = block_hamiltonian(n, curve.params);
      for (const double lt : grid) {
        const double t = lt / curve.params.lambda;
        const BlockAmplitudes exact = evolve_block_closed(b, s0.blocks[n], t);
        const BlockAmplitudes printed =
            printed_closed_form(n, curve.atomic, q, curve.params, t, reading);
        worst = std::max(worst, sup_diff(exact, printed));
      }
    }
    out.max_deviation.emplace_back(reading, worst);
  }
  out.best_reading =
      std::min_element(out.max_deviation.begin(), out.max_deviation.end(),
                       [](const auto &a, const auto &b) {
                         return a.second < b.second;
                       })
          ->first;
  return out;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult &c) { return c.passed; });
}

nlohmann::json ValidationReport::to_json() const {
  using nlohmann::json;
  json checks_json = json::array();
  for (const CheckResult &c : checks)
    checks_json.push_back({{"name", c.name},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"passed", c.passed},
                           {"detail", c.detail}});
  json ledger = json::array();
  for (const PrintedDeviation &d : printed_ledger) {
    json dev = json::object();
    for (const auto &[reading, value] : d.max_deviation)
      dev[std::string(to_string(reading))] = value;
    ledger.push_back({{"curve", d.curve},
                      {"lambda_t_window", {0.0, 10.0}},
                      {"max_deviation", dev},
                      {"best_reading", std::string(to_string(d.best_reading))}});
  }
  return {{"passed", passed()},
          {"checks", checks_json},
          {"printed_formula_ledger", ledger}};
}

ValidationReport run_validation(const RunConfig &config,
                                const ValidationOptions &options) {
  ValidationReport report;
  Rng rng(options.seed);
  hamiltonian_checks(report, rng, options);
  propagator_checks(report, rng);
  oracle_checks(report);
  trajectory_health(report, config, options.all_presets);
  wigner_checks(report, rng);

  std::vector<std::string> warnings;
  for (Preset p : all_presets) {
    RunConfig c = config;
    c.preset = p;
    for (const CurveSpec &curve : resolve_curves(c, std::nullopt, warnings))
      report.printed_ledger.push_back(printed_deviation(curve, 10.0, 201));
  }
  return report;
}

} // namespace qdw
