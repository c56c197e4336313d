#pragma once

#include "qdwigner/state.hpp"

#include <Eigen/Dense>

namespace qdw {

/// Two-atom reduced density matrix on |11>, |10>, |01>, |00>.
struct DensityMatrix4 {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();

  double trace() const { return m.trace().real(); }
  double hermiticity_residual() const;
  double min_eigenvalue() const;
  /// Tr(rho^2).
  double purity() const;
};

/// Single-atom reduced density matrix on |1>, |0>.
struct DensityMatrix2 {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();

  double trace() const { return m.trace().real(); }
  double hermiticity_residual() const;
  double min_eigenvalue() const;
};

/// Partial trace of |psi><psi| over the photon number.
///
/// Block amplitudes sit at photon offsets 0, 1, 1, 2 for the atom states
/// |11>, |10>, |01>, |00>, so e.g. <11|rho|10> = sum_n C_1^{n+1} conj(C_2^n).
/// The frozen low-excitation remainder is left out unless
/// `include_remainder` is set.
DensityMatrix4 reduce_to_atoms(const JointState &state,
                               bool include_remainder = false);

/// Trace over the second atom.
DensityMatrix2 reduce_to_alice(const DensityMatrix4 &rho);

} // namespace qdw
