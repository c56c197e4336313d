#pragma once

#include "qdwigner/algebra.hpp"
#include "qdwigner/state.hpp"

#include <Eigen/Dense>

#include <cstddef>

namespace qdw {

struct OracleOptions {
  std::size_t max_dimension = 4096;
};

/// Exact propagation on the truncated product space
/// {|1,1>,|1,0>,|0,1>,|0,0>} (x) {|0>..|n_fock-1>}.
///
/// Basis index of |atoms = i, photons = m> is i * n_fock + m. The full
/// interaction Hamiltonian is assembled operator by operator (detuning,
/// deformed Jaynes-Cummings exchange for each atom, dipole exchange) with no
/// reference to the block decomposition, diagonalized once, and reused for
/// every propagation time.
class FullSpaceOracle {
public:
  /// n_fock = n_max + 3 so that block n_max is fully contained.
  FullSpaceOracle(const SystemParams &params, int n_max,
                  const OracleOptions &options = {});

  int n_max() const { return m_n_max; }
  int n_fock() const { return m_n_fock; }
  Eigen::Index dimension() const { return m_h.rows(); }
  const Eigen::MatrixXcd &hamiltonian() const { return m_h; }

  /// Places blocks and remainder into the full vector.
  Eigen::VectorXcd embed(const JointState &state) const;
  /// Reads blocks 0..n_max and the remainder back from a full vector.
  JointState project(const Eigen::VectorXcd &psi) const;

  /// exp(-i H t) psi, t in physical units.
  Eigen::VectorXcd propagate(const Eigen::VectorXcd &psi, double t) const;
  JointState evolve(const JointState &state, double t) const;

  /// <psi| (a^dagger a + number of excited atoms) |psi>.
  double excitation_expectation(const Eigen::VectorXcd &psi) const;

  /// Tr_field |psi><psi| on the atom basis |11>,|10>,|01>,|00>.
  Eigen::Matrix4cd atomic_density(const Eigen::VectorXcd &psi) const;

private:
  Eigen::Index index(int atoms, int photons) const {
    return static_cast<Eigen::Index>(atoms) * m_n_fock + photons;
  }

  int m_n_max;
  int m_n_fock;
  Eigen::MatrixXcd m_h;
  Eigen::MatrixXcd m_vectors;
  Eigen::VectorXd m_values;
};

/// One-shot convenience wrapper: builds the oracle for state.n_max().
/// Throws OracleTooLargeError above options.max_dimension.
JointState full_propagator_oracle(const JointState &state,
                                  const SystemParams &params, double t,
                                  const OracleOptions &options = {});

} // namespace qdw
