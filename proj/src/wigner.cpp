#include "qdwigner/wigner.hpp"

#include "qdwigner/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

namespace qdw {

namespace {

using std::numbers::pi;
constexpr double inv_sqrt2 = 0.70710678118654752440;

Eigen::Matrix4cd kron(const Eigen::Matrix2cd &x, const Eigen::Matrix2cd &y) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  return out;
}

double checked_real(cplx w) {
  if (!(std::abs(w.imag()) < 1e-8)) {
    std::ostringstream msg;
    msg << "Wigner value has imaginary part " << w.imag()
        << "; density matrix or kernel is not Hermitian";
    throw ConsistencyError(msg.str());
  }
  return w.real();
}

} // namespace

cplx spherical_harmonic(int L, int M, double theta, double phi) {
  if (L == 0 && M == 0)
    return 0.5 / std::sqrt(pi);
  if (L == 1) {
    switch (M) {
    case 0:
      return std::sqrt(3.0 / (4.0 * pi)) * std::cos(theta);
    case 1:
      return -std::sqrt(3.0 / (8.0 * pi)) * std::sin(theta) *
             std::polar(1.0, phi);
    case -1:
      return std::sqrt(3.0 / (8.0 * pi)) * std::sin(theta) *
             std::polar(1.0, -phi);
    default:
      break;
    }
  }
  throw DomainError("spherical_harmonic supports L <= 1, |M| <= L; got L=" +
                    std::to_string(L) + " M=" + std::to_string(M));
}

KernelMatrix kernel(double theta, double phi) {
  // Multipole operators T^dagger_{L,M} on (|1>, |0>).
  Eigen::Matrix2cd t00, t10, t1m1, t1p1;
  t00 << inv_sqrt2, 0.0, 0.0, inv_sqrt2;
  t10 << inv_sqrt2, 0.0, 0.0, -inv_sqrt2;
  t1m1 << 0.0, 1.0, 0.0, 0.0;
  t1p1 << 0.0, 0.0, -1.0, 0.0;

  KernelMatrix k;
  k.theta = theta;
  k.phi = phi;
  k.a = std::sqrt(2.0 * pi) *
        (t00 * spherical_harmonic(0, 0, theta, phi) +
         t10 * spherical_harmonic(1, 0, theta, phi) +
         t1m1 * spherical_harmonic(1, -1, theta, phi) +
         t1p1 * spherical_harmonic(1, 1, theta, phi));
  return k;
}

LambdaFunctions lambda_functions(double theta, double phi) {
  const cplx y00 = spherical_harmonic(0, 0, theta, phi);
  const cplx y10 = spherical_harmonic(1, 0, theta, phi);
  return {inv_sqrt2 * (y00 - y10), inv_sqrt2 * (y00 + y10),
          -spherical_harmonic(1, 1, theta, phi),
          spherical_harmonic(1, -1, theta, phi)};
}

double wigner_at(const DensityMatrix4 &rho, double theta_a, double phi_a,
                 double theta_b, double phi_b) {
  const Eigen::Matrix4cd ab =
      kron(kernel(theta_a, phi_a).a, kernel(theta_b, phi_b).a);
  return checked_real((rho.m * ab).trace());
}

double wigner_at(const DensityMatrix4 &rho, double theta, double phi) {
  return wigner_at(rho, theta, phi, theta, phi);
}

double wigner_lambda_form(const DensityMatrix4 &rho, double theta,
                          double phi) {
  const LambdaFunctions l = lambda_functions(theta, phi);
  // Kernel entries: <1|A|1> ~ lambda_00, <0|A|0> ~ lambda_11,
  // <1|A|0> ~ lambda_10, <0|A|1> ~ lambda_01.
  const cplx up = l.lambda_00;
  const cplx down = l.lambda_11;
  const cplx lower = l.lambda_01;
  const cplx raise = l.lambda_10;
  const auto &r = rho.m;

  const cplx diagonal = r(0, 0) * up * up + (r(1, 1) + r(2, 2)) * up * down +
                        r(3, 3) * down * down;
  const cplx coherences = (r(0, 1) + r(0, 2)) * up * lower +
                          r(1, 2) * lower * raise +
                          (r(1, 3) + r(2, 3)) * down * lower +
                          r(0, 3) * lower * lower;
  return checked_real(2.0 * pi * (diagonal + 2.0 * coherences.real()));
}

WignerSeries wigner_series(const Trajectory &traj, double theta, double phi,
                           bool include_remainder) {
  WignerSeries s;
  s.theta = theta;
  s.phi = phi;
  s.lambda_t = traj.times;
  s.w.reserve(traj.states.size());
  const KernelMatrix k = kernel(theta, phi);
  const Eigen::Matrix4cd aa = kron(k.a, k.a);
  for (const JointState &state : traj.states) {
    const DensityMatrix4 rho = reduce_to_atoms(state, include_remainder);
    s.w.push_back(checked_real((rho.m * aa).trace()));
  }
  return s;
}

} // namespace qdw
