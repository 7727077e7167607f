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

#include "asymptotics.hpp"

#include <cmath>
#include <numbers>

namespace fig8::asym {

namespace {

constexpr double kPi = std::numbers::pi;

using special::lobachevsky;
using special::Radians;

}  // namespace

std::string_view regime_tag_name(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::ZeroSmallR: return "zero-small-r";
    case RegimeTag::MainIrrational: return "main-irrational";
    case RegimeTag::MainRational: return "main-rational";
    case RegimeTag::NearMainIrrational: return "near-main-irrational";
    case RegimeTag::ImaginaryAbove: return "imaginary-above";
    case RegimeTag::ImaginaryAtOrBelow: return "imaginary-at-or-below";
    case RegimeTag::Uncovered: return "uncovered";
  }
  return "unknown";
}

double appendix_v(double r, const PrecisionConfig& cfg) {
  const double th = special::theta(r).value;
  return lobachevsky(Radians(kPi * r + th / 2), cfg) -
         lobachevsky(Radians(kPi * r - th / 2), cfg);
}

double appendix_w(double r, const PrecisionConfig& cfg) {
  const double ph = special::phi(r).value;
  return appendix_v(r, cfg) + lobachevsky(Radians(kPi * r + ph / 2), cfg) -
         lobachevsky(Radians(kPi * r - ph / 2), cfg);
}

double appendix_dv(double r, const PrecisionConfig& cfg) {
  (void)cfg;
  const double th = special::theta(r).value;
  const double s = 2.0 * std::sin(kPi * r - th / 2);
  if (s == 0.0)
    throw DomainError("appendix_dv: sin(pi r - theta/2) vanishes");
  return 2.0 * kPi * std::log(std::abs(s));
}

GrowthPrediction vhat(double r, const PrecisionConfig& cfg) {
  if (!(r > 0) || !std::isfinite(r))
    throw DomainError("vhat: r must be positive and finite");
  GrowthPrediction out;
  out.theta_used = special::theta(r);
  out.vhat = 2.0 * appendix_v(r, cfg) / r;
  out.regime = classify(Parameter::real(r), cfg);
  return out;
}

double cone_manifold_volume(special::Radians cone_angle,
                            const PrecisionConfig& cfg) {
  const double a = cone_angle.value;
  if (a < 0.0 || a > 2.0 * kPi / 3.0 + 1e-12)
    throw DomainError("cone_manifold_volume: cone angle must lie in [0, 2 pi/3]");
  const double r = 1.0 - std::min(a, 2.0 * kPi / 3.0) / (2.0 * kPi);
  return 2.0 * appendix_v(r, cfg) / r;
}

double delta_gap(double r, const PrecisionConfig& cfg) {
  return appendix_w(r, cfg);
}

double imaginary_growth(double s, const PrecisionConfig& cfg) {
  if (!(s > 0) || !std::isfinite(s))
    throw DomainError("imaginary_growth: s must be positive and finite");
  if (2.0 * kPi * s <= special::arccosh_three_halves()) return 0.0;
  const double ph = special::phi_hyperbolic(s);
  const double upper = special::hyperbolic_gamma(kPi * s + ph / 2, cfg);
  const double lower = special::hyperbolic_gamma(kPi * s - ph / 2, cfg);
  return (2.0 * upper - 2.0 * lower) / (2.0 * kPi * s);
}

Regime classify(const Parameter& param, const PrecisionConfig& cfg) {
  Regime regime;

  if (!param.is_circular()) {
    const double s = param.value();
    if (2.0 * kPi * s > special::arccosh_three_halves()) {
      regime.tag = RegimeTag::ImaginaryAbove;
      const double g = imaginary_growth(s, cfg);
      regime.limsup_prediction = g;
      regime.liminf_prediction = g;
      regime.limit_exists = true;
    } else {
      regime.tag = RegimeTag::ImaginaryAtOrBelow;
      regime.limsup_prediction = 0.0;
      regime.liminf_prediction = 0.0;
      regime.limit_exists = true;
    }
    return regime;
  }

  const double r = param.value();

  // Window membership for rational parameters is decided by integer
  // cross-multiplication, so boundary fractions are classified exactly;
  // real-kind parameters compare against the rounded window edges.
  bool in_zero, in_main;
  if (param.is_rational()) {
    const std::int64_t q = param.num(), p = param.den();
    in_zero = 6 * q < p;
    in_main = 6 * q > 5 * p && 6 * q < 7 * p;
  } else {
    in_zero = r >= 0.0 && r < 1.0 / 6.0;
    in_main = r > 5.0 / 6.0 && r < 7.0 / 6.0;
  }

  if (in_zero) {
    regime.tag = RegimeTag::ZeroSmallR;
    regime.limsup_prediction = 0.0;
    regime.liminf_prediction = 0.0;
    regime.limit_exists = true;
    return regime;
  }

  if (in_main) {
    const double v = 2.0 * appendix_v(r, cfg) / r;
    if (param.is_one() || !param.is_rational()) {
      regime.tag = RegimeTag::MainIrrational;
      regime.limsup_prediction = v;
      regime.liminf_prediction = v;
      regime.limit_exists = true;
    } else {
      regime.tag = RegimeTag::MainRational;
      regime.limsup_prediction = v;
      regime.liminf_prediction = 0.0;
      regime.limit_exists = false;
    }
    return regime;
  }

  // 1/6 <= |1-r| < 1/4 with both endpoints of the outer inequality kept
  // as printed: 5/6 and 7/6 belong here, 3/4 and 5/4 do not.  Real-kind
  // only; rational parameters have no covering statement here.
  const bool near_low = r > 3.0 / 4.0 && r <= 5.0 / 6.0;
  const bool near_high = r >= 7.0 / 6.0 && r < 5.0 / 4.0;
  if ((near_low || near_high) && !param.is_rational()) {
    regime.tag = RegimeTag::NearMainIrrational;
    const double v = 2.0 * appendix_v(r, cfg) / r;
    regime.limsup_prediction = v;
    regime.liminf_prediction = v;
    regime.limit_exists = true;
    return regime;
  }

  regime.tag = RegimeTag::Uncovered;
  return regime;
}

}  // namespace fig8::asym
