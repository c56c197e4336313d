#include "qdwigner/dynamics.hpp"

#include "qdwigner/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qdw {

namespace {

constexpr cplx I{0.0, 1.0};

// Coefficients of exp(-i h t) = 1 + a h + b h^2 for a block with h^3 = mu^2 h.
struct SpectralCoefficients {
  cplx a;
  double b;
};

SpectralCoefficients spectral_coefficients(double mu, double t) {
  const double s = std::sin(mu * t) / mu;
  const double half = std::sin(0.5 * mu * t) / mu;
  // cos(x) - 1 = -2 sin^2(x/2), no cancellation for small mu t.
  return {-I * s, -2.0 * half * half};
}

void check_spectral_identity(const BlockHamiltonian &block) {
  const double residual = spectral_residual(block);
  const double scale = std::max(block.mu * block.mu * block.mu, 1.0);
  if (!(residual < 1e-9 * scale)) {
    std::ostringstream msg;
    msg << "block " << block.n << ": h^3 - mu^2 h residual " << residual
        << " exceeds tolerance; single-frequency propagator does not apply";
    throw ConsistencyError(msg.str());
  }
}

} // namespace

BlockHamiltonian block_hamiltonian(int n, const SystemParams &params) {
  params.validate();
  const double nu1 = coupling_nu(n, 1, params);
  const double nu2 = coupling_nu(n, 2, params);
  const double d = params.delta;
  const double k = params.kappa_d;

  BlockHamiltonian b;
  b.n = n;
  // clang-format off
  b.h << 0.0, nu1,     nu1,    0.0,
         nu1, d,       I * k,  nu2,
         nu1, -I * k,  -d,     nu2,
         0.0, nu2,     nu2,    0.0;
  // clang-format on
  b.mu = std::sqrt(d * d + 2.0 * (nu1 * nu1 + nu2 * nu2) + k * k);
  return b;
}

double spectral_residual(const BlockHamiltonian &block) {
  const Eigen::Matrix4cd h2 = block.h * block.h;
  const Eigen::Matrix4cd r = h2 * block.h - (block.mu * block.mu) * block.h;
  return r.cwiseAbs().rowwise().sum().maxCoeff();
}

double hermiticity_residual(const Eigen::Matrix4cd &h) {
  return (h - h.adjoint()).cwiseAbs().maxCoeff();
}

BlockAmplitudes evolve_block_closed(const BlockHamiltonian &block,
                                    const BlockAmplitudes &c0, double t) {
  if (block.mu == 0.0)
    return c0;
  check_spectral_identity(block);
  const auto [a, b] = spectral_coefficients(block.mu, t);
  const BlockAmplitudes hc = block.h * c0;
  const BlockAmplitudes h2c = block.h * hc;
  return c0 + a * hc + b * h2c;
}

BlockAmplitudes evolve_block_closed(int n, const BlockAmplitudes &c0,
                                    const SystemParams &params, double t) {
  return evolve_block_closed(block_hamiltonian(n, params), c0, t);
}

std::vector<BlockAmplitudes>
evolve_block_ode(int n, const BlockAmplitudes &c0, const SystemParams &params,
                 std::span<const double> t_grid, const OdeOptions &opt) {
  const BlockHamiltonian block = block_hamiltonian(n, params);
  const Eigen::Matrix4cd gen = -I * block.h;
  if (block.mu == 0.0 || c0.isZero(0.0))
    return std::vector<BlockAmplitudes>(t_grid.size(), c0);
  return integrate_dopri5(
      [&gen](double, const BlockAmplitudes &c) -> BlockAmplitudes {
        return gen * c;
      },
      c0, t_grid, opt);
}

Trajectory evolve_joint(const JointState &state, const SystemParams &params,
                        std::span<const double> lambda_t_grid, Method method,
                        const OdeOptions &opt) {
  params.validate();
  if (!(params.lambda > 0.0))
    throw ParameterError("time evolution requires lambda > 0");
  for (std::size_t i = 1; i < lambda_t_grid.size(); ++i)
    if (!(lambda_t_grid[i] > lambda_t_grid[i - 1]))
      throw ParameterError("time grid must be strictly increasing");

  const std::size_t nt = lambda_t_grid.size();
  const std::size_t nb = state.blocks.size();
  std::vector<double> t_phys(nt);
  std::transform(lambda_t_grid.begin(), lambda_t_grid.end(), t_phys.begin(),
                 [&](double lt) { return lt / params.lambda; });

  Trajectory traj;
  traj.times.assign(lambda_t_grid.begin(), lambda_t_grid.end());
  traj.states.assign(nt, state);

  for (std::size_t n = 0; n < nb; ++n) {
    const BlockAmplitudes &c0 = state.blocks[n];
    const int ni = static_cast<int>(n);
    if (method == Method::Closed) {
      const BlockHamiltonian block = block_hamiltonian(ni, params);
      if (block.mu == 0.0)
        continue;
      check_spectral_identity(block);
      const BlockAmplitudes hc = block.h * c0;
      const BlockAmplitudes h2c = block.h * hc;
      for (std::size_t k = 0; k < nt; ++k) {
        const auto [a, b] = spectral_coefficients(block.mu, t_phys[k]);
        traj.states[k].blocks[n] = c0 + a * hc + b * h2c;
      }
    } else {
      if (nt == 0)
        continue;
      // The integrator starts at the first grid time; shift to it.
      std::vector<double> grid = t_phys;
      std::vector<BlockAmplitudes> path;
      if (grid.front() != 0.0) {
        grid.insert(grid.begin(), 0.0);
        path = evolve_block_ode(ni, c0, params, grid, opt);
        path.erase(path.begin());
      } else {
        path = evolve_block_ode(ni, c0, params, grid, opt);
      }
      for (std::size_t k = 0; k < nt; ++k)
        traj.states[k].blocks[n] = path[k];
    }
  }
  return traj;
}

std::vector<double> uniform_grid(double t_max, int samples) {
  if (samples < 1)
    throw ParameterError("samples must be >= 1");
  if (!(t_max >= 0.0))
    throw ParameterError("t_max must be >= 0");
  if (samples > 1 && t_max == 0.0)
    throw ParameterError("t_max must be > 0 when sampling more than one time");
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i)
    grid[i] = samples == 1 ? 0.0 : t_max * i / (samples - 1);
  return grid;
}

} // namespace qdw
