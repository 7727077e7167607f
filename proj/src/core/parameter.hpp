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

#ifndef FIG8_PARAMETER_HPP
#define FIG8_PARAMETER_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace fig8 {

// The deformation parameter of the evaluation point t.
//
//   circular-rational : t = exp(2 pi (q/p) i / N), q/p exact and reduced
//   circular-real     : t = exp(2 pi r i / N), r >= 0 as binary64; treated
//                       as irrational by regime logic since machine reals
//                       cannot witness irrationality
//   imaginary         : t = exp(2 pi s / N), s > 0
class Parameter {
 public:
  enum class Kind { CircularRational, CircularReal, Imaginary };

  static Parameter rational(std::int64_t num, std::int64_t den);
  static Parameter real(double r);
  static Parameter imaginary(double s);

  // Accepts "9/10" (rational, reduced on parse), "0.9" (real) and
  // "i0.5" / "0.5i" (imaginary).
  static Parameter parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_circular() const { return kind_ != Kind::Imaginary; }
  bool is_rational() const { return kind_ == Kind::CircularRational; }

  // r (circular) or s (imaginary) as binary64.
  double value() const { return value_; }

  // Exact numerator/denominator; valid only for circular-rational.
  std::int64_t num() const;
  std::int64_t den() const;

  // True when this parameter is exactly 1 (the r = 1 evaluation).
  bool is_one() const;

  std::string to_string() const;

 private:
  Parameter(Kind kind, std::int64_t num, std::int64_t den, double value)
      : kind_(kind), num_(num), den_(den), value_(value) {}

  Kind kind_;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double value_ = 0.0;
};

}  // namespace fig8

#endif  // FIG8_PARAMETER_HPP
