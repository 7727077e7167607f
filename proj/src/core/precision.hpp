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

#ifndef FIG8_PRECISION_HPP
#define FIG8_PRECISION_HPP

#include "errors.hpp"

namespace fig8 {

// Knobs for every numerically tunable routine: significand width of the
// extended-precision path and the absolute truncation target of series
// and quadrature schemes.
struct PrecisionConfig {
  unsigned working_bits = 128;
  double abs_tol = 1e-14;

  void validate() const {
    if (working_bits < 53)
      throw DomainError("working_bits must be at least 53");
    if (!(abs_tol > 0.0))
      throw DomainError("abs_tol must be positive");
  }
};

inline PrecisionConfig default_precision() { return PrecisionConfig{}; }

}  // namespace fig8

#endif  // FIG8_PRECISION_HPP
