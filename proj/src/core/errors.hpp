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

#ifndef FIG8_ERRORS_HPP
#define FIG8_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fig8 {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed parameter text; carries the byte offset of the bad token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_ = 0;
};

// Requested computation exceeds the available precision/exponent budget.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// log-growth of an exactly vanishing value was requested.
class UndefinedGrowthError : public Error {
 public:
  using Error::Error;
};

}  // namespace fig8

#endif  // FIG8_ERRORS_HPP
