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

#ifndef FIG8_ASYMPTOTICS_HPP
#define FIG8_ASYMPTOTICS_HPP

#include <string_view>

#include "parameter.hpp"
#include "precision.hpp"
#include "special_functions.hpp"

namespace fig8::asym {

// Parameter ranges with distinct limiting behavior of log|J_N|/N.
//
// For circular parameters the predictions are for 2 pi log|J_N| / N;
// for imaginary ones they are for log J_N / N (the natural
// normalizations of the respective growth statements).
enum class RegimeTag {
  ZeroSmallR,          // 0 <= r < 1/6: limit 0
  MainIrrational,      // 5/6 < r < 7/6, real-kind or r = 1: limit exists
  MainRational,        // 5/6 < r < 7/6, rational != 1: liminf 0, limsup vhat
  NearMainIrrational,  // 1/6 <= |1-r| < 1/4, real-kind
  ImaginaryAbove,      // 2 pi s > arccosh(3/2)
  ImaginaryAtOrBelow,  // 2 pi s <= arccosh(3/2): limit 0
  Uncovered,
};

std::string_view regime_tag_name(RegimeTag tag);

struct Regime {
  RegimeTag tag = RegimeTag::Uncovered;
  double limsup_prediction = std::numeric_limits<double>::quiet_NaN();
  double liminf_prediction = std::numeric_limits<double>::quiet_NaN();
  bool limit_exists = false;
};

struct GrowthPrediction {
  double vhat = 0.0;
  special::Radians theta_used;
  Regime regime;
};

// The unique regime containing the parameter, with its predictions.
Regime classify(const Parameter& param, const PrecisionConfig& cfg = {});

// (2 Lambda(pi r + theta/2) - 2 Lambda(pi r - theta/2)) / r.
GrowthPrediction vhat(double r, const PrecisionConfig& cfg = {});

// Volume of the cone manifold over the knot with the given cone angle
// 2 pi |1 - r|; accepts angles in [0, 2 pi / 3] and evaluates on the
// r <= 1 branch.
double cone_manifold_volume(special::Radians cone_angle,
                            const PrecisionConfig& cfg = {});

// delta = V(r) + Lambda(pi r + phi/2) - Lambda(pi r - phi/2), the
// exponent gap between the partial-product peaks at D and A.
double delta_gap(double r, const PrecisionConfig& cfg = {});

// Predicted lim log J_N / N for t = exp(2 pi s / N); zero at or below
// the arccosh(3/2) threshold.
double imaginary_growth(double s, const PrecisionConfig& cfg = {});

// V(r) = Lambda(pi r + theta/2) - Lambda(pi r - theta/2); vhat = 2V/r.
double appendix_v(double r, const PrecisionConfig& cfg = {});

// W(r) = V(r) + Lambda(pi r + phi/2) - Lambda(pi r - phi/2) = delta_gap.
double appendix_w(double r, const PrecisionConfig& cfg = {});

// Closed-form derivative of V: 2 pi log|2 sin(pi r - theta/2)|.
double appendix_dv(double r, const PrecisionConfig& cfg = {});

}  // namespace fig8::asym

#endif  // FIG8_ASYMPTOTICS_HPP
