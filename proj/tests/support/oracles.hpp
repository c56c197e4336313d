#pragma once

// Reference computations used only by the tests. Each one takes a route
// that does not share code with the library function it checks.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using std::numbers::pi;

/// f(n) straight from the quotient form (1 - q^n) / (n (1 - q)).
inline double deformation_quotient(int n, double q) {
  return std::sqrt((1.0 - std::pow(q, n)) / (n * (1.0 - q)));
}

/// Poisson(mean) weights p_0..p_n by the recurrence p_{k+1} = p_k mean/(k+1).
inline std::vector<double> poisson_weights(double mean, int n) {
  std::vector<double> p(static_cast<std::size_t>(n) + 1);
  p[0] = std::exp(-mean);
  for (int k = 0; k < n; ++k)
    p[k + 1] = p[k] * mean / (k + 1);
  return p;
}

/// 1 - sum_{k<=n} p_k, by direct summation of the weights above n.
inline double poisson_tail_direct(double mean, int n, int far = 2000) {
  const auto p = poisson_weights(mean, far);
  double tail = 0.0;
  for (int k = far; k > n; --k)
    tail += p[k];
  return tail;
}

/// exp(-i h t) c by Eigen's general matrix exponential (Pade + squaring).
inline Eigen::Vector4cd expm_apply(const Eigen::Matrix4cd &h, double t,
                                   const Eigen::Vector4cd &c) {
  const Eigen::Matrix4cd gen = (cplx{0.0, -t} * h).eval();
  return gen.exp() * c;
}

/// Single-atom kernel written out entry by entry on (|1>, |0>).
inline Eigen::Matrix2cd kernel_entries(double theta, double phi) {
  const double s3 = std::sqrt(3.0);
  Eigen::Matrix2cd a;
  a(0, 0) = 0.5 + 0.5 * s3 * std::cos(theta);
  a(1, 1) = 0.5 - 0.5 * s3 * std::cos(theta);
  a(0, 1) = 0.5 * s3 * std::sin(theta) * std::polar(1.0, -phi);
  a(1, 0) = 0.5 * s3 * std::sin(theta) * std::polar(1.0, phi);
  return a;
}

/// Tr[rho (A (x) A)] by explicit index contraction over a tabulated 4x4
/// kernel: K[(a,b),(c,d)] = A[a][c] A[b][d].
inline cplx wigner_brute_force(const Eigen::Matrix4cd &rho, double theta,
                               double phi) {
  const Eigen::Matrix2cd a = kernel_entries(theta, phi);
  cplx table[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      table[i][j] = a(i / 2, j / 2) * a(i % 2, j % 2);
  cplx w = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      w += rho(i, j) * table[j][i];
  return w;
}

/// Random density matrix of random rank 1..4.
inline Eigen::Matrix4cd random_density(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  const int rank = std::uniform_int_distribution<int>(1, 4)(rng);
  Eigen::MatrixXcd m(4, rank);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < rank; ++j)
      m(i, j) = cplx{g(rng), g(rng)};
  Eigen::Matrix4cd rho = m * m.adjoint();
  return rho / rho.trace().real();
}

inline Eigen::Vector4cd random_unit4(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  Eigen::Vector4cd c;
  for (int i = 0; i < 4; ++i)
    c[i] = cplx{g(rng), g(rng)};
  return c.normalized();
}

} // namespace oracle
