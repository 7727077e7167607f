/*
  fig8jones: colored Jones polynomial asymptotics for the figure-eight knot

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

  Test-only oracles, deliberately independent of the library's series
  implementations: the defining integrals evaluated by double-exponential
  quadrature, plus the raw Fourier partial sum with a summation-by-parts
  tail bound.
*/

#ifndef FIG8_TEST_ORACLES_HPP
#define FIG8_TEST_ORACLES_HPP

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <numbers>

namespace fig8::oracle {

inline constexpr double kPi = std::numbers::pi;

// -int_0^x log|2 sin t| dt by tanh-sinh quadrature after exact reduction
// to [0, pi/2] (odd, pi-periodic).
inline double lobachevsky_quad(double x) {
  const double n = std::floor(x / kPi + 0.5);
  double y = x - n * kPi;
  double sign = 1.0;
  if (y < 0) {
    sign = -1.0;
    y = -y;
  }
  if (y == 0.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double integral = integrator.integrate(
      [](double t) { return std::log(std::abs(2.0 * std::sin(t))); }, 0.0, y);
  return -sign * integral;
}

// int_0^z log(2 sinh t) dt by tanh-sinh quadrature.
inline double hyperbolic_gamma_quad(double z) {
  if (z == 0.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(
      [](double t) { return std::log(2.0 * std::sinh(t)); }, 0.0, z);
}

// Partial Fourier sum (1/2) sum_{n<=M} sin(2nx)/n^2 with the remainder
// bounded by summation by parts: |tail| <= 1 / (|sin x| (M+1)^2).
struct FourierLambda {
  double value;
  double tail_bound;
};

inline FourierLambda lobachevsky_fourier(double x, int terms) {
  double sum = 0.0;
  for (int n = terms; n >= 1; --n)
    sum += std::sin(2.0 * n * x) / (static_cast<double>(n) * n);
  const double denom = std::abs(std::sin(x));
  const double bound =
      denom > 0 ? 1.0 / (denom * (terms + 1.0) * (terms + 1.0)) : HUGE_VAL;
  return {sum / 2.0, bound};
}

// J_2(E; t) = t^2 - t + 1 - 1/t + 1/t^2 evaluated at t = exp(pi r i);
// real by symmetry: 2 cos(2 pi r) - 2 cos(pi r) + 1.
inline double jones_n2_closed_form(double r) {
  return 2.0 * std::cos(2.0 * kPi * r) - 2.0 * std::cos(kPi * r) + 1.0;
}

// 4 sin(pi r j/N + pi r) sin(pi r j/N - pi r), the product form of the
// circular g.
inline double g_product_form(double r, std::int64_t j, std::int64_t N) {
  const double a = kPi * r * static_cast<double>(j) / static_cast<double>(N);
  return 4.0 * std::sin(a + kPi * r) * std::sin(a - kPi * r);
}

// 4 sinh(pi s + pi s j/N) sinh(pi s - pi s j/N), the hyperbolic product
// form (positive for 0 < j < N).
inline double g_product_form_hyperbolic(double s, std::int64_t j,
                                        std::int64_t N) {
  const double a = kPi * s * static_cast<double>(j) / static_cast<double>(N);
  return 4.0 * std::sinh(kPi * s + a) * std::sinh(kPi * s - a);
}

}  // namespace fig8::oracle

#endif  // FIG8_TEST_ORACLES_HPP
