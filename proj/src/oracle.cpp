#include "qdwigner/oracle.hpp"

#include "qdwigner/errors.hpp"

#include <cmath>
#include <string>

namespace qdw {

namespace {

using Eigen::MatrixXcd;

MatrixXcd kron(const MatrixXcd &a, const MatrixXcd &b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Single atom on (|1>, |0>).
MatrixXcd sigma_plus() {
  MatrixXcd s = MatrixXcd::Zero(2, 2);
  s(0, 1) = 1.0;
  return s;
}

MatrixXcd sigma_z() {
  MatrixXcd s = MatrixXcd::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = -1.0;
  return s;
}

// Deformed annihilator R = a f(n) on n_fock levels: R|m> = f(m) sqrt(m) |m-1>.
MatrixXcd deformed_annihilator(int n_fock, const DeformationSpec &spec) {
  MatrixXcd r = MatrixXcd::Zero(n_fock, n_fock);
  for (int m = 1; m < n_fock; ++m)
    r(m - 1, m) = deformation_factor(m, spec) * std::sqrt(double(m));
  return r;
}

} // namespace

FullSpaceOracle::FullSpaceOracle(const SystemParams &params, int n_max,
                                 const OracleOptions &options)
    : m_n_max(n_max), m_n_fock(n_max + 3) {
  params.validate();
  if (n_max < 0)
    throw DomainError("oracle requires n_max >= 0");
  const std::size_t dim = 4 * static_cast<std::size_t>(m_n_fock);
  if (dim > options.max_dimension)
    throw OracleTooLargeError("full-space dimension " + std::to_string(dim) +
                              " exceeds cap " +
                              std::to_string(options.max_dimension));

  const MatrixXcd id2 = MatrixXcd::Identity(2, 2);
  const MatrixXcd idf = MatrixXcd::Identity(m_n_fock, m_n_fock);
  const MatrixXcd sp = sigma_plus();
  const MatrixXcd sm = sp.adjoint();
  const MatrixXcd sz = sigma_z();

  const MatrixXcd sp1 = kron(sp, id2), sm1 = kron(sm, id2);
  const MatrixXcd sp2 = kron(id2, sp), sm2 = kron(id2, sm);
  const MatrixXcd sz1 = kron(sz, id2), sz2 = kron(id2, sz);

  const MatrixXcd r = deformed_annihilator(m_n_fock, params.deformation);
  const MatrixXcd rd = r.adjoint();

  const double delta1 = params.delta;
  const double delta2 = -params.delta;
  const cplx ik{0.0, params.kappa_d};

  m_h = kron(0.5 * delta1 * sz1 + 0.5 * delta2 * sz2, idf);
  m_h += params.lambda * (kron(sp1 + sp2, r) + kron(sm1 + sm2, rd));
  m_h += kron(ik * (sp1 * sm2 - sm1 * sp2), idf);

  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(m_h);
  if (solver.info() != Eigen::Success)
    throw ConsistencyError("full-space eigendecomposition failed");
  m_vectors = solver.eigenvectors();
  m_values = solver.eigenvalues();
}

Eigen::VectorXcd FullSpaceOracle::embed(const JointState &state) const {
  if (state.n_max() != m_n_max)
    throw DomainError("state truncation does not match the oracle");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dimension());
  for (int n = 0; n <= m_n_max; ++n) {
    const auto &c = state.blocks[n];
    psi[index(0, n)] = c[0];
    psi[index(1, n + 1)] = c[1];
    psi[index(2, n + 1)] = c[2];
    psi[index(3, n + 2)] = c[3];
  }
  psi[index(1, 0)] = state.remainder[0];
  psi[index(2, 0)] = state.remainder[1];
  psi[index(3, 0)] = state.remainder[2];
  psi[index(3, 1)] = state.remainder[3];
  return psi;
}

JointState FullSpaceOracle::project(const Eigen::VectorXcd &psi) const {
  JointState s;
  s.blocks.resize(static_cast<std::size_t>(m_n_max) + 1);
  for (int n = 0; n <= m_n_max; ++n)
    s.blocks[n] << psi[index(0, n)], psi[index(1, n + 1)],
        psi[index(2, n + 1)], psi[index(3, n + 2)];
  s.remainder = {psi[index(1, 0)], psi[index(2, 0)], psi[index(3, 0)],
                 psi[index(3, 1)]};
  return s;
}

Eigen::VectorXcd FullSpaceOracle::propagate(const Eigen::VectorXcd &psi,
                                            double t) const {
  Eigen::VectorXcd coeffs = m_vectors.adjoint() * psi;
  for (Eigen::Index k = 0; k < coeffs.size(); ++k)
    coeffs[k] *= std::polar(1.0, -m_values[k] * t);
  return m_vectors * coeffs;
}

JointState FullSpaceOracle::evolve(const JointState &state, double t) const {
  JointState out = project(propagate(embed(state), t));
  out.norm_deficit = state.norm_deficit;
  out.renormalized = state.renormalized;
  return out;
}

double FullSpaceOracle::excitation_expectation(
    const Eigen::VectorXcd &psi) const {
  static constexpr int excited_atoms[4] = {2, 1, 1, 0};
  double total = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int m = 0; m < m_n_fock; ++m)
      total += std::norm(psi[index(a, m)]) * (m + excited_atoms[a]);
  return total;
}

Eigen::Matrix4cd
FullSpaceOracle::atomic_density(const Eigen::VectorXcd &psi) const {
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int m = 0; m < m_n_fock; ++m)
        rho(i, j) += psi[index(i, m)] * std::conj(psi[index(j, m)]);
  return rho;
}

JointState full_propagator_oracle(const JointState &state,
                                  const SystemParams &params, double t,
                                  const OracleOptions &options) {
  const FullSpaceOracle oracle(params, state.n_max(), options);
  return oracle.evolve(state, t);
}

} // namespace qdw
