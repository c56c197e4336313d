#pragma once

#include "qdwigner/algebra.hpp"
#include "qdwigner/ode.hpp"
#include "qdwigner/state.hpp"

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace qdw {

/// Interaction Hamiltonian restricted to excitation block n, on the basis
/// |1,1,n>, |1,0,n+1>, |0,1,n+1>, |0,0,n+2>:
///
///   [ 0    nu1     nu1     0   ]
///   [ nu1  delta   i k     nu2 ]
///   [ nu1  -i k    -delta  nu2 ]
///   [ 0    nu2     nu2     0   ]
///
/// Its spectrum is {0, 0, +mu, -mu}, so h^3 = mu^2 h.
struct BlockHamiltonian {
  int n = 0;
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  /// 0 for a vanishing generator.
  double mu = 0.0;
};

BlockHamiltonian block_hamiltonian(int n, const SystemParams &params);

/// max-row-sum norm of h^3 - mu^2 h.
double spectral_residual(const BlockHamiltonian &block);

/// max |h - h^dagger| entry.
double hermiticity_residual(const Eigen::Matrix4cd &h);

/// exp(-i h t) c0 via exp(-iht) = I - i sin(mu t)/mu h + (cos(mu t)-1)/mu^2 h^2.
/// Throws ConsistencyError if h^3 = mu^2 h fails beyond 1e-9 max(mu^3, 1).
BlockAmplitudes evolve_block_closed(const BlockHamiltonian &block,
                                    const BlockAmplitudes &c0, double t);
BlockAmplitudes evolve_block_closed(int n, const BlockAmplitudes &c0,
                                    const SystemParams &params, double t);

/// Integrates dC/dt = -i h C over `t_grid` (physical time, increasing from
/// its first entry) with the adaptive integrator.
std::vector<BlockAmplitudes>
evolve_block_ode(int n, const BlockAmplitudes &c0, const SystemParams &params,
                 std::span<const double> t_grid, const OdeOptions &opt = {});

enum class Method { Closed, Ode };

/// Snapshots of the joint state on a grid of scaled times lambda*t.
struct Trajectory {
  std::vector<double> times;
  std::vector<JointState> states;
  /// The low-excitation remainder is carried unchanged by the block ansatz.
  bool remainder_frozen = true;
};

/// Evolves every block independently. `lambda_t_grid` holds scaled times
/// lambda*t and must be strictly increasing; lambda must be positive.
Trajectory evolve_joint(const JointState &state, const SystemParams &params,
                        std::span<const double> lambda_t_grid, Method method,
                        const OdeOptions &opt = {});

/// `samples` equally spaced scaled times over [0, t_max], both ends included.
std::vector<double> uniform_grid(double t_max, int samples);

} // namespace qdw
