#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

// Dormand-Prince 5(4) embedded pair with the standard quartic dense-output
// interpolant. The continuous extension is what samples the uniform output
// grid, so accepted steps never have to land on grid points.
//
// Rhs: (double t, const std::array<double,N>&) -> std::array<double,N>
// Sink: (double t, const std::array<double,N>&) called at t = 0, dt_out, ...

template <std::size_t N, typename Rhs, typename Sink>
void integrate_dopri5(Rhs&& rhs, std::array<double, N> y, double t_end,
                      double dt_out, double tol, Sink&& sink) {
  using Vec = std::array<double, N>;

  constexpr double a21 = 1.0 / 5.0;
  constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
  constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
  constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                   a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
  constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                   a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                   a65 = -5103.0 / 18656.0;
  constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0,
                   a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                   a76 = 11.0 / 84.0;
  constexpr double c2 = 0.2, c3 = 0.3, c4 = 0.8, c5 = 8.0 / 9.0;
  // b - b_hat, the embedded error weights
  constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                   e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                   e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
  // dense-output weights for the fifth interpolation coefficient
  constexpr double d1 = -12715105075.0 / 11282082432.0,
                   d3 = 87487479700.0 / 32700410799.0,
                   d4 = -10690763975.0 / 1880347072.0,
                   d5 = 701980252875.0 / 199316789632.0,
                   d6 = -1453857185.0 / 822651844.0,
                   d7 = 69997945.0 / 29380423.0;

  const double rtol = tol;
  const double atol = tol;

  const auto finite = [](const Vec& v) {
    for (double x : v) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  };

  if (!finite(y)) {
    throw DivergenceError("initial state is not finite");
  }

  double t = 0.0;
  Vec k1 = rhs(t, y);
  if (!finite(k1)) {
    throw DivergenceError("derivative not finite at t = 0");
  }

  // crude first step from the magnitude of y and y'
  double h;
  {
    double d0 = 0.0, d1n = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      const double sc = atol + rtol * std::abs(y[i]);
      d0 += (y[i] / sc) * (y[i] / sc);
      d1n += (k1[i] / sc) * (k1[i] / sc);
    }
    h = (d1n > 1e-300) ? 0.01 * std::sqrt(d0 / d1n) : 1e-6 * t_end;
    h = std::min({h, t_end, dt_out});
    if (!(h > 0.0)) h = 1e-6 * t_end;
  }

  const double grid_slack = 1e-9 * dt_out;
  std::size_t next_out = 0;
  const auto emit_due = [&](double t_reached, const Vec& y_left, double h_step,
                            const Vec* rcont) {
    while (true) {
      const double t_out = static_cast<double>(next_out) * dt_out;
      if (t_out > t_end + grid_slack || t_out > t_reached + grid_slack) break;
      if (rcont == nullptr) {
        sink(t_out, y_left);
      } else {
        const double th =
            std::clamp((t_out - (t_reached - h_step)) / h_step, 0.0, 1.0);
        Vec u;
        for (std::size_t i = 0; i < N; ++i) {
          u[i] = rcont[0][i] +
                 th * (rcont[1][i] +
                       (1.0 - th) *
                           (rcont[2][i] +
                            th * (rcont[3][i] + (1.0 - th) * rcont[4][i])));
        }
        sink(t_out, u);
      }
      ++next_out;
    }
  };

  emit_due(0.0, y, 0.0, nullptr);  // t = 0 sample

  Vec k2, k3, k4, k5, k6, k7, ynew, yerr;
  Vec rcont[5];
  std::size_t attempts = 0;

  while (t < t_end - 1e-14 * std::max(1.0, t_end)) {
    h = std::min(h, t_end - t);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      throw StiffnessError("step size underflow at t = " + std::to_string(t));
    }
    if (++attempts > 20'000'000) {
      throw StiffnessError("step budget exhausted at t = " + std::to_string(t));
    }

    Vec tmp;
    for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
    k2 = rhs(t + c2 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    k3 = rhs(t + c3 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    k4 = rhs(t + c4 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] =
          y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    k5 = rhs(t + c5 * h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                           a64 * k4[i] + a65 * k5[i]);
    k6 = rhs(t + h, tmp);
    for (std::size_t i = 0; i < N; ++i)
      ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] +
                            a75 * k5[i] + a76 * k6[i]);
    k7 = rhs(t + h, ynew);

    if (!finite(ynew) || !finite(k7)) {
      throw DivergenceError("state not finite near t = " + std::to_string(t));
    }

    double err = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
      yerr[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                     e6 * k6[i] + e7 * k7[i]);
      const double sc =
          atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (yerr[i] / sc) * (yerr[i] / sc);
    }
    err = std::sqrt(err / static_cast<double>(N));

    if (err <= 1.0) {
      for (std::size_t i = 0; i < N; ++i) {
        const double dy = ynew[i] - y[i];
        rcont[0][i] = y[i];
        rcont[1][i] = dy;
        rcont[2][i] = h * k1[i] - dy;
        rcont[3][i] = dy - h * k7[i] - rcont[2][i];
        rcont[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                           d6 * k6[i] + d7 * k7[i]);
      }
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      emit_due(t, y, h, rcont);
    }

    const double factor =
        (err > 1e-300) ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::clamp(factor, 0.2, 5.0);
  }
}

}  // namespace dicke
