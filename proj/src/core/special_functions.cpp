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
*/

#include "special_functions.hpp"

#include <array>
#include <cstdlib>
#include <numbers>
#include <vector>

namespace fig8::special {

namespace {

#include "clausen_coefficients.inc"

constexpr double kPi = std::numbers::pi;

// The coefficient table carries 60 significant digits; beyond ~192
// significand bits the table itself becomes the accuracy bottleneck.
constexpr unsigned kMaxSeriesBits = 192;

// Endpoint clamp for arccos/arccosh arguments; the boundary regimes sit
// exactly on the domain edge.
constexpr double kEndpointSlack = 1e-12;

const std::array<double, kClausenCoeffCount>& coeff_table_double() {
  static const std::array<double, kClausenCoeffCount> table = [] {
    std::array<double, kClausenCoeffCount> t{};
    for (int i = 0; i < kClausenCoeffCount; ++i)
      t[static_cast<std::size_t>(i)] = std::strtod(kClausenCoeffDecimal[i], nullptr);
    return t;
  }();
  return table;
}

// BigReal coefficients are cached per thread at the widest precision
// requested so far.
const std::vector<BigReal>& coeff_table_big(unsigned bits) {
  thread_local unsigned cached_bits = 0;
  thread_local std::vector<BigReal> table;
  if (bits > cached_bits) {
    table.clear();
    table.reserve(kClausenCoeffCount);
    for (int i = 0; i < kClausenCoeffCount; ++i)
      table.emplace_back(std::string(kClausenCoeffDecimal[i]), bits);
    cached_bits = bits;
  }
  return table;
}

void check_series_bits(unsigned bits) {
  if (bits > kMaxSeriesBits)
    throw PrecisionError(
        "working_bits beyond the stored series coefficients (max " +
        std::to_string(kMaxSeriesBits) + ")");
}

// Cl2(t)/t - (1 - log t) as a power series in (t/2pi)^2, shared shape of
// the double and extended paths.
double clausen_tail(double q2, double abs_tol) {
  double sum = 0.0;
  double power = 1.0;
  const double stop = abs_tol * 0.25;
  for (const double c : coeff_table_double()) {
    power *= q2;
    const double term = c * power;
    sum += term;
    if (term < stop) return sum;
  }
  // q2 <= 1/4, so falling off the table end means the tail is below the
  // smallest representable contribution anyway.
  return sum;
}

BigReal clausen_tail_big(const BigReal& q2, double abs_tol, unsigned bits) {
  BigReal sum(std::int64_t{0}, bits);
  BigReal power(std::int64_t{1}, bits);
  const double stop = abs_tol * 0.25;
  for (const auto& c : coeff_table_big(bits)) {
    power *= q2;
    const BigReal term = c * power;
    sum += term;
    if (term.to_double() < stop) return sum;
  }
  return sum;
}

double lobachevsky_double(double x, double abs_tol) {
  // reduce to y in [-pi/2, pi/2]: Lambda(x) = Lambda(x mod pi), odd
  const double n = std::floor(x / kPi + 0.5);
  double y = x - n * kPi;
  double sign = 1.0;
  if (y < 0) {
    sign = -1.0;
    y = -y;
  }
  if (y > kPi / 2) y = kPi / 2;
  const double t = 2.0 * y;
  if (t == 0.0) return 0.0;
  const double q = t / (2.0 * kPi);
  const double cl2 = t * (1.0 - std::log(t)) + t * clausen_tail(q * q, abs_tol);
  return sign * cl2 / 2.0;
}

BigReal lobachevsky_impl(const BigReal& x, const PrecisionConfig& cfg) {
  check_series_bits(cfg.working_bits);
  const unsigned bits = cfg.working_bits + 16;
  const BigReal pi = BigReal::pi(bits);
  const BigReal xx(x, bits);
  const BigReal n = floor(xx / pi + 0.5);
  BigReal y = xx - n * pi;
  std::int64_t sign = 1;
  if (y.sign() < 0) {
    sign = -1;
    y = -y;
  }
  if (y > pi / std::int64_t{2}) y = pi / std::int64_t{2};
  const BigReal t = std::int64_t{2} * y;
  if (t.is_zero()) return BigReal(std::int64_t{0}, bits);
  const BigReal q = t / (std::int64_t{2} * pi);
  const BigReal cl2 =
      t * (std::int64_t{1} - log(t)) + t * clausen_tail_big(q * q, cfg.abs_tol, bits);
  return sign * cl2 / std::int64_t{2};
}

// Li2 on [0, 1]: direct series up to 1/2, Euler reflection above.
double dilog01_series(double y, double abs_tol) {
  double sum = 0.0;
  double power = 1.0;
  const double stop = abs_tol * 0.25;
  for (std::int64_t n = 1; n < 100000; ++n) {
    power *= y;
    const double term = power / static_cast<double>(n * n);
    sum += term;
    if (term < stop) break;
  }
  return sum;
}

BigReal dilog01_series_big(const BigReal& y, double abs_tol, unsigned bits) {
  BigReal sum(std::int64_t{0}, bits);
  BigReal power(std::int64_t{1}, bits);
  const double stop = abs_tol * 0.25;
  for (std::int64_t n = 1; n < 100000; ++n) {
    power *= y;
    const BigReal term = power / (n * n);
    sum += term;
    if (term.to_double() < stop) break;
  }
  return sum;
}

BigReal hyperbolic_gamma_impl(const BigReal& z, const PrecisionConfig& cfg) {
  // the 1 - e^(-2z) subtraction loses about log2(1/z) bits; 80 guard
  // bits cover every z this library meets
  const unsigned bits = cfg.working_bits + 80;
  const BigReal zz(z, bits);
  if (zz.is_zero()) return BigReal(std::int64_t{0}, bits);
  const BigReal pi = BigReal::pi(bits);
  const BigReal pi2_12 = pi * pi / std::int64_t{12};
  const BigReal y = exp(std::int64_t{-2} * zz);
  BigReal li2;
  if (!(y > 0.5)) {
    li2 = dilog01_series_big(y, cfg.abs_tol, bits);
  } else if (y >= BigReal(std::int64_t{1}, bits)) {
    li2 = pi * pi / std::int64_t{6};
  } else {
    const BigReal u = std::int64_t{1} - y;
    li2 = pi * pi / std::int64_t{6} - log(y) * log(u) -
          dilog01_series_big(u, cfg.abs_tol, bits);
  }
  return zz * zz / std::int64_t{2} - pi2_12 + li2 / std::int64_t{2};
}

double arccos_checked(double a, const char* what) {
  if (a > 1.0) {
    if (a > 1.0 + kEndpointSlack)
      throw DomainError(std::string(what) + ": argument above arccos domain");
    a = 1.0;
  } else if (a < -1.0) {
    if (a < -1.0 - kEndpointSlack)
      throw DomainError(std::string(what) + ": argument below arccos domain");
    a = -1.0;
  }
  return std::acos(a);
}

}  // namespace

double lobachevsky(Radians x, const PrecisionConfig& cfg) {
  cfg.validate();
  if (cfg.working_bits <= 53) return lobachevsky_double(x.value, cfg.abs_tol);
  return lobachevsky_impl(BigReal(x.value, 64), cfg).to_double();
}

BigReal lobachevsky_big(const BigReal& x, const PrecisionConfig& cfg) {
  cfg.validate();
  return lobachevsky_impl(x, cfg);
}

double hyperbolic_gamma(double z, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(z)) throw DomainError("hyperbolic_gamma: z must be finite");
  if (z < 0) throw DomainError("hyperbolic_gamma: z must be nonnegative");
  if (cfg.working_bits <= 53) {
    if (z == 0.0) return 0.0;
    const double pi2_6 = kPi * kPi / 6.0;
    const double y = std::exp(-2.0 * z);
    double li2;
    if (y <= 0.5) {
      li2 = dilog01_series(y, cfg.abs_tol);
    } else {
      const double u = -std::expm1(-2.0 * z);
      li2 = pi2_6 - (-2.0 * z) * std::log(u) - dilog01_series(u, cfg.abs_tol);
    }
    return z * z / 2.0 - pi2_6 / 2.0 + li2 / 2.0;
  }
  return hyperbolic_gamma_impl(BigReal(z, 64), cfg).to_double();
}

BigReal hyperbolic_gamma_big(const BigReal& z, const PrecisionConfig& cfg) {
  cfg.validate();
  if (z.sign() < 0) throw DomainError("hyperbolic_gamma: z must be nonnegative");
  return hyperbolic_gamma_impl(z, cfg);
}

bool theta_defined(double r) {
  if (!std::isfinite(r)) return false;
  return std::cos(2.0 * kPi * r) - 0.5 >= -1.0 - kEndpointSlack;
}

Radians theta(double r) {
  if (!std::isfinite(r)) throw DomainError("theta: r must be finite");
  return Radians(arccos_checked(std::cos(2.0 * kPi * r) - 0.5, "theta"));
}

bool phi_defined(double r) {
  if (!std::isfinite(r)) return false;
  return std::cos(2.0 * kPi * r) + 0.5 <= 1.0 + kEndpointSlack;
}

Radians phi(double r) {
  if (!std::isfinite(r)) throw DomainError("phi: r must be finite");
  return Radians(arccos_checked(std::cos(2.0 * kPi * r) + 0.5, "phi"));
}

double arccosh_three_halves() { return std::acosh(1.5); }

bool phi_hyperbolic_defined(double s) {
  if (!std::isfinite(s) || s <= 0) return false;
  return std::cosh(2.0 * kPi * s) - 0.5 >= 1.0 - kEndpointSlack;
}

double phi_hyperbolic(double s) {
  if (!std::isfinite(s) || s <= 0)
    throw DomainError("phi_hyperbolic: s must be positive and finite");
  double a = std::cosh(2.0 * kPi * s) - 0.5;
  if (a < 1.0) {
    if (a < 1.0 - kEndpointSlack)
      throw DomainError(
          "phi_hyperbolic: 2 pi s below arccosh(3/2), zero-limit regime");
    a = 1.0;
  }
  return std::acosh(a);
}

}  // namespace fig8::special
