#pragma once

#include "qdwigner/errors.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <vector>

namespace qdw {

struct OdeOptions {
  // Global error grows to ~200x the local tolerance over a few hundred
  // Rabi periods; 1e-12 keeps the accumulated norm drift below 1e-9.
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  /// 0 selects a step from the initial derivative.
  double initial_step = 0.0;
  double min_step = 1e-14;
  long max_steps = 50'000'000;
  /// Classic RK4 with a constant step instead of the adaptive pair.
  bool fixed_step = false;
  double fixed_step_size = 1e-3;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
  long evaluations = 0;
};

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                        a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                        a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b*, the embedded 4th-order error weights.
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                        e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                        e6 = 22.0 / 525, e7 = -1.0 / 40;

template <class Vec> double scaled_error(const Vec &err, const Vec &y0,
                                        const Vec &y1, const OdeOptions &opt) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < err.size(); ++i) {
    const double scale =
        opt.abs_tol +
        opt.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    worst = std::max(worst, std::abs(err[i]) / scale);
  }
  return worst;
}

} // namespace detail

/// Integrates dy/dt = rhs(t, y) from t_grid[0] and returns y at every grid
/// time. Uses the adaptive Dormand-Prince 5(4) pair with local
/// extrapolation and FSAL, or fixed-step RK4 when `opt.fixed_step` is set.
///
/// `Vec` is an Eigen vector type; `rhs(t, y)` returns a Vec. Throws
/// IntegrationError if the step size underflows or the step budget runs out.
template <class Vec, class Rhs>
std::vector<Vec> integrate_dopri5(Rhs &&rhs, const Vec &y0,
                                  std::span<const double> t_grid,
                                  const OdeOptions &opt = {},
                                  OdeStats *stats = nullptr) {
  using namespace detail;
  std::vector<Vec> out;
  if (t_grid.empty())
    return out;
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1]))
      throw IntegrationError("time grid must be strictly increasing");
  out.reserve(t_grid.size());
  out.push_back(y0);

  OdeStats local;
  OdeStats &st = stats ? *stats : local;

  Vec y = y0;
  double t = t_grid[0];

  if (opt.fixed_step) {
    for (std::size_t g = 1; g < t_grid.size(); ++g) {
      const double target = t_grid[g];
      const long steps = std::max(
          1L, static_cast<long>(std::ceil((target - t) / opt.fixed_step_size)));
      const double h = (target - t) / steps;
      for (long s = 0; s < steps; ++s) {
        const double ts = t + s * h;
        const Vec k1 = rhs(ts, y);
        const Vec k2 = rhs(ts + 0.5 * h, Vec(y + 0.5 * h * k1));
        const Vec k3 = rhs(ts + 0.5 * h, Vec(y + 0.5 * h * k2));
        const Vec k4 = rhs(ts + h, Vec(y + h * k3));
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        st.evaluations += 4;
        ++st.accepted;
      }
      t = target;
      out.push_back(y);
    }
    return out;
  }

  Vec k1 = rhs(t, y);
  ++st.evaluations;
  double h = opt.initial_step;
  if (h <= 0.0) {
    double ynorm = 0.0, fnorm = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double sc = opt.abs_tol + opt.rel_tol * std::abs(y[i]);
      ynorm = std::max(ynorm, std::abs(y[i]) / sc);
      fnorm = std::max(fnorm, std::abs(k1[i]) / sc);
    }
    h = (ynorm < 1e-5 || fnorm < 1e-5) ? 1e-6 : 0.01 * ynorm / fnorm;
  }

  for (std::size_t g = 1; g < t_grid.size(); ++g) {
    const double target = t_grid[g];
    while (t < target) {
      if (st.accepted + st.rejected >= opt.max_steps) {
        std::ostringstream msg;
        msg << "step budget of " << opt.max_steps << " exhausted at t = " << t;
        throw IntegrationError(msg.str());
      }
      bool last = false;
      double step = h;
      if (t + step >= target) {
        step = target - t;
        last = true;
      }
      if (step < opt.min_step && !last) {
        std::ostringstream msg;
        msg << "step size underflow: h = " << step << " at t = " << t
            << " (accepted " << st.accepted << ", rejected " << st.rejected
            << ")";
        throw IntegrationError(msg.str());
      }

      const Vec k2 = rhs(t + c2 * step, Vec(y + step * (a21 * k1)));
      const Vec k3 = rhs(t + c3 * step, Vec(y + step * (a31 * k1 + a32 * k2)));
      const Vec k4 = rhs(t + c4 * step,
                         Vec(y + step * (a41 * k1 + a42 * k2 + a43 * k3)));
      const Vec k5 =
          rhs(t + c5 * step,
              Vec(y + step * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
      const Vec k6 = rhs(t + step, Vec(y + step * (a61 * k1 + a62 * k2 +
                                                   a63 * k3 + a64 * k4 +
                                                   a65 * k5)));
      const Vec y_new =
          y + step * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const Vec k7 = rhs(t + step, y_new);
      st.evaluations += 6;

      const Vec err = step * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 +
                              e6 * k6 + e7 * k7);
      const double en = scaled_error(err, y, y_new, opt);

      if (en <= 1.0) {
        t = last ? target : t + step;
        y = y_new;
        k1 = k7;
        ++st.accepted;
        const double grow =
            en == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(en, -0.2), 0.2, 5.0);
        // A step clipped to land on the grid says nothing about the
        // natural step, so keep h unless the error asks for less.
        h = last ? std::max(h, step * grow) : step * grow;
      } else {
        ++st.rejected;
        h = step * std::max(0.2, 0.9 * std::pow(en, -0.2));
      }
    }
    out.push_back(y);
  }
  return out;
}

} // namespace qdw
