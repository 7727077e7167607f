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

#ifndef FIG8_SPECIAL_FUNCTIONS_HPP
#define FIG8_SPECIAL_FUNCTIONS_HPP

#include <cmath>

#include "bigreal.hpp"
#include "errors.hpp"
#include "precision.hpp"

namespace fig8::special {

// An angle in radians, unbounded; reduction is applied by the functions
// that need it.  Construction rejects NaN/inf.
struct Radians {
  double value = 0.0;
  Radians() = default;
  explicit Radians(double v) : value(v) {
    if (!std::isfinite(v)) throw DomainError("angle must be finite");
  }
};

// Lobachevsky function -int_0^x log|2 sin u| du.
//
// The argument is reduced to [0, pi/2] using oddness and pi-periodicity,
// then the function is evaluated as Cl2(2x)/2 through the power series
//
//   Cl2(t) = t(1 - log t) + t * sum_m c_m (t/2pi)^(2m),
//   c_m    = zeta(2m)/(m(2m+1)),
//
// truncated once the geometric tail drops below cfg.abs_tol.  The series
// runs at cfg.working_bits significand bits when that exceeds double
// precision.  The defining integral stays available as an independent
// cross-check in the test suite.
double lobachevsky(Radians x, const PrecisionConfig& cfg = {});

// Same evaluation at full working precision, for callers that keep
// intermediate results in extended precision.
BigReal lobachevsky_big(const BigReal& x, const PrecisionConfig& cfg = {});

// int_0^z log(2 sinh u) du for z >= 0.  The integrable log singularity
// at 0 is removed analytically: log(2 sinh u) = u + log(1 - e^(-2u))
// integrates to z^2/2 - pi^2/12 + Li2(e^(-2z))/2.
double hyperbolic_gamma(double z, const PrecisionConfig& cfg = {});
BigReal hyperbolic_gamma_big(const BigReal& z, const PrecisionConfig& cfg = {});

// theta(r) = arccos(cos(2 pi r) - 1/2), in [0, pi].  Defined for
// r mod 1 in [0, 1/3] u [2/3, 1]; arguments within 1e-12 of the arccos
// boundary are clamped.
Radians theta(double r);
bool theta_defined(double r);

// phi(r) = arccos(cos(2 pi r) + 1/2), in [0, pi].  Defined for
// r mod 1 in [1/6, 5/6], boundary-clamped as for theta.
Radians phi(double r);
bool phi_defined(double r);

// arccosh(cosh(2 pi s) - 1/2) for 2 pi s >= arccosh(3/2); below the
// threshold the argument leaves the arccosh domain and the zero-limit
// regime applies, reported as a domain error.
double phi_hyperbolic(double s);
bool phi_hyperbolic_defined(double s);

// arccosh(3/2), the threshold separating the hyperbolic growth regimes.
double arccosh_three_halves();

}  // namespace fig8::special

#endif  // FIG8_SPECIAL_FUNCTIONS_HPP
