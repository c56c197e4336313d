#include "qdwigner/density.hpp"

#include <array>

namespace qdw {

namespace {

// Photon number carried by component j of block n is n + offset[j].
constexpr std::array<int, 4> photon_offset = {0, 1, 1, 2};

} // namespace

double DensityMatrix4::hermiticity_residual() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix4::min_eigenvalue() const {
  const Eigen::Matrix4cd herm = 0.5 * (m + m.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd>(herm,
                                                         Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

double DensityMatrix4::purity() const { return (m * m).trace().real(); }

double DensityMatrix2::hermiticity_residual() const {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix2::min_eigenvalue() const {
  const Eigen::Matrix2cd herm = 0.5 * (m + m.adjoint());
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(herm,
                                                         Eigen::EigenvaluesOnly)
      .eigenvalues()
      .minCoeff();
}

DensityMatrix4 reduce_to_atoms(const JointState &state,
                               bool include_remainder) {
  const int nb = static_cast<int>(state.blocks.size());
  // Amplitude of |atom, photons>; remainder sits at photon numbers 0 and 1.
  const auto amplitude = [&](int atom, int photons) -> cplx {
    if (include_remainder) {
      if (photons == 0 && atom > 0)
        return state.remainder[atom - 1];
      if (photons == 1 && atom == 3)
        return state.remainder[3];
    }
    const int n = photons - photon_offset[atom];
    if (n < 0 || n >= nb)
      return 0.0;
    return state.blocks[n][atom];
  };

  DensityMatrix4 rho;
  const int n_photons = nb + 2;
  for (int i = 0; i < 4; ++i) {
    for (int j = i; j < 4; ++j) {
      cplx sum = 0.0;
      for (int m = 0; m < n_photons; ++m)
        sum += amplitude(i, m) * std::conj(amplitude(j, m));
      rho.m(i, j) = sum;
    }
  }
  for (int i = 0; i < 4; ++i) {
    rho.m(i, i) = rho.m(i, i).real();
    for (int j = 0; j < i; ++j)
      rho.m(i, j) = std::conj(rho.m(j, i));
  }
  return rho;
}

DensityMatrix2 reduce_to_alice(const DensityMatrix4 &rho) {
  const auto &r = rho.m;
  DensityMatrix2 out;
  out.m(0, 0) = r(0, 0) + r(1, 1);
  out.m(1, 1) = r(2, 2) + r(3, 3);
  out.m(0, 1) = r(0, 2) + r(1, 3);
  out.m(1, 0) = std::conj(out.m(0, 1));
  return out;
}

} // namespace qdw
