#ifndef VDW_ODE_HPP
#define VDW_ODE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "vdw/errors.hpp"

namespace vdw {

// Adaptive Cash-Karp Runge-Kutta 4(5) for small dense systems. The
// right-hand side may throw; exceptions propagate to the caller.
template <int N>
struct OdeState {
  double x;
  std::array<double, N> y;
};

template <int N>
std::vector<OdeState<N>> integrate_ode(
    const std::function<std::array<double, N>(double, const std::array<double, N>&)>& f,
    double x0, double x1, std::array<double, N> y0, double rel_tol = 1e-10,
    double abs_tol = 1e-12, int max_steps = 2000000) {
  static const double a2 = 1.0 / 5, a3 = 3.0 / 10, a4 = 3.0 / 5, a5 = 1.0,
                      a6 = 7.0 / 8;
  static const double b21 = 1.0 / 5;
  static const double b31 = 3.0 / 40, b32 = 9.0 / 40;
  static const double b41 = 3.0 / 10, b42 = -9.0 / 10, b43 = 6.0 / 5;
  static const double b51 = -11.0 / 54, b52 = 5.0 / 2, b53 = -70.0 / 27,
                      b54 = 35.0 / 27;
  static const double b61 = 1631.0 / 55296, b62 = 175.0 / 512,
                      b63 = 575.0 / 13824, b64 = 44275.0 / 110592,
                      b65 = 253.0 / 4096;
  static const double c1 = 37.0 / 378, c3 = 250.0 / 621, c4 = 125.0 / 594,
                      c6 = 512.0 / 1771;
  static const double d1 = c1 - 2825.0 / 27648, d3 = c3 - 18575.0 / 48384,
                      d4 = c4 - 13525.0 / 55296, d5 = -277.0 / 14336,
                      d6 = c6 - 1.0 / 4;

  const double dir = (x1 >= x0) ? 1.0 : -1.0;
  double x = x0;
  std::array<double, N> y = y0;
  double h = dir * std::max(1e-8, std::abs(x1 - x0) / 100.0);

  std::vector<OdeState<N>> out;
  out.push_back({x, y});
  for (int it = 0; it < max_steps; ++it) {
    if (dir * (x - x1) >= 0.0) return out;
    if (dir * (x + h - x1) > 0.0) h = x1 - x;

    auto axpy = [&](const std::array<double, N>& base,
                    std::initializer_list<std::pair<double, const std::array<double, N>*>> terms) {
      std::array<double, N> r = base;
      for (auto& t : terms)
        for (int i = 0; i < N; ++i) r[i] += h * t.first * (*t.second)[i];
      return r;
    };

    const auto k1 = f(x, y);
    const auto k2 = f(x + a2 * h, axpy(y, {{b21, &k1}}));
    const auto k3 = f(x + a3 * h, axpy(y, {{b31, &k1}, {b32, &k2}}));
    const auto k4 = f(x + a4 * h, axpy(y, {{b41, &k1}, {b42, &k2}, {b43, &k3}}));
    const auto k5 = f(x + a5 * h,
                      axpy(y, {{b51, &k1}, {b52, &k2}, {b53, &k3}, {b54, &k4}}));
    const auto k6 =
        f(x + a6 * h,
          axpy(y, {{b61, &k1}, {b62, &k2}, {b63, &k3}, {b64, &k4}, {b65, &k5}}));

    std::array<double, N> ynew;
    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      ynew[i] = y[i] + h * (c1 * k1[i] + c3 * k3[i] + c4 * k4[i] + c6 * k6[i]);
      const double e = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                            d5 * k5[i] + d6 * k6[i]);
      const double sc = abs_tol + rel_tol * std::max(std::abs(y[i]),
                                                     std::abs(ynew[i]));
      err = std::max(err, std::abs(e) / sc);
    }
    if (err <= 1.0) {
      x += h;
      y = ynew;
      for (double v : y)
        if (!std::isfinite(v))
          throw StabilityError("ODE state became non-finite", x);
      out.push_back({x, y});
    }
    const double fac =
        std::clamp(0.9 * std::pow(std::max(err, 1e-16), -0.2), 0.2, 5.0);
    h *= fac;
    if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(x)))
      throw StabilityError("ODE step size underflow", x);
  }
  throw StabilityError("ODE step budget exhausted", x);
}

}  // namespace vdw

#endif
