#pragma once

#include "qdwigner/density.hpp"
#include "qdwigner/dynamics.hpp"

#include <Eigen/Dense>

#include <vector>

namespace qdw {

/// Y_{L,M}(theta, phi) for L in {0,1}, Condon-Shortley phase:
/// Y_00 = 1/(2 sqrt(pi)), Y_10 = sqrt(3/4pi) cos(theta),
/// Y_1,+-1 = -+ sqrt(3/8pi) sin(theta) exp(+-i phi).
cplx spherical_harmonic(int L, int M, double theta, double phi);

/// Spin-1/2 SU(2) Wigner kernel on (|1>, |0>):
/// A = sqrt(2 pi) sum_{L<=1, |M|<=L} T^dagger_{L,M} Y_{L,M}(theta, phi)
/// with T^dagger_00 = 1/sqrt2, T^dagger_10 = (|1><1| - |0><0|)/sqrt2,
/// T^dagger_1,-1 = |1><0|, T^dagger_1,1 = -|0><1|.
/// Trace 1, eigenvalues (1 +- sqrt3)/2 at every angle.
struct KernelMatrix {
  Eigen::Matrix2cd a = Eigen::Matrix2cd::Zero();
  double theta = 0.0;
  double phi = 0.0;
};

KernelMatrix kernel(double theta, double phi);

/// The four angular functions of the expanded Wigner function:
/// lambda_11 = (Y00 - Y10)/sqrt2, lambda_00 = (Y00 + Y10)/sqrt2,
/// lambda_01 = -Y_11, lambda_10 = Y_1,-1.
struct LambdaFunctions {
  cplx lambda_11, lambda_00, lambda_01, lambda_10;
};

LambdaFunctions lambda_functions(double theta, double phi);

/// W = Tr[rho (A_a (x) A_b)] with independent angles per atom.
/// Throws ConsistencyError if |Im W| >= 1e-8.
double wigner_at(const DensityMatrix4 &rho, double theta_a, double phi_a,
                 double theta_b, double phi_b);

/// Equal-angle slice W(theta, phi) = Tr[rho (A (x) A)].
double wigner_at(const DensityMatrix4 &rho, double theta, double phi);

/// The same quantity from the explicit expansion in the lambda functions,
/// with coefficients read off the density-matrix elements.
double wigner_lambda_form(const DensityMatrix4 &rho, double theta,
                          double phi);

/// W against scaled time for one angle pair.
struct WignerSeries {
  std::vector<double> lambda_t;
  std::vector<double> w;
  double theta = 0.0;
  double phi = 0.0;
};

WignerSeries wigner_series(const Trajectory &traj, double theta, double phi,
                           bool include_remainder = false);

/// Extreme values of W over unit-trace positive density matrices.
inline constexpr double wigner_lower_bound = -0.5;
/// ((1 + sqrt3)/2)^2
inline constexpr double wigner_upper_bound = 1.8660254037844386;

} // namespace qdw
