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

#include "parameter.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

namespace fig8 {

namespace {

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::int64_t out = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("expected an integer", offset);
  return out;
}

double parse_double(std::string_view text, std::size_t offset) {
  double out = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last)
    throw ParseError("expected a number", offset);
  return out;
}

}  // namespace

Parameter Parameter::rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("denominator must be nonzero", 0);
  if (den < 0) throw ParseError("denominator must be positive", 0);
  if (num < 0) throw ParseError("parameter must be nonnegative", 0);
  const std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  return Parameter(Kind::CircularRational, num, den,
                   static_cast<double>(num) / static_cast<double>(den));
}

Parameter Parameter::real(double r) {
  if (!std::isfinite(r)) throw ParseError("parameter must be finite", 0);
  if (r < 0) throw ParseError("parameter must be nonnegative", 0);
  return Parameter(Kind::CircularReal, 0, 1, r);
}

Parameter Parameter::imaginary(double s) {
  if (!std::isfinite(s)) throw ParseError("parameter must be finite", 0);
  if (s <= 0) throw ParseError("imaginary magnitude must be positive", 0);
  return Parameter(Kind::Imaginary, 0, 1, s);
}

Parameter Parameter::parse(std::string_view text) {
  std::size_t begin = 0;
  while (begin < text.size() && std::isspace(static_cast<unsigned char>(text[begin])))
    ++begin;
  std::size_t end = text.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
    --end;
  const std::string_view body = text.substr(begin, end - begin);
  if (body.empty()) throw ParseError("empty parameter", begin);

  if (body.front() == 'i' || body.front() == 'I')
    return imaginary(parse_double(body.substr(1), begin + 1));
  if (body.back() == 'i' || body.back() == 'I')
    return imaginary(parse_double(body.substr(0, body.size() - 1), begin));

  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::int64_t q = parse_int(body.substr(0, slash), begin);
    const std::int64_t p = parse_int(body.substr(slash + 1), begin + slash + 1);
    return rational(q, p);
  }
  return real(parse_double(body, begin));
}

std::int64_t Parameter::num() const {
  if (kind_ != Kind::CircularRational)
    throw DomainError("num() requires a circular-rational parameter");
  return num_;
}

std::int64_t Parameter::den() const {
  if (kind_ != Kind::CircularRational)
    throw DomainError("den() requires a circular-rational parameter");
  return den_;
}

bool Parameter::is_one() const {
  if (kind_ == Kind::CircularRational) return num_ == 1 && den_ == 1;
  return kind_ == Kind::CircularReal && value_ == 1.0;
}

namespace {

std::string shortest_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

std::string Parameter::to_string() const {
  switch (kind_) {
    case Kind::CircularRational:
      return std::to_string(num_) + "/" + std::to_string(den_);
    case Kind::CircularReal:
      return shortest_double(value_);
    case Kind::Imaginary:
      return "i" + shortest_double(value_);
  }
  return {};
}

}  // namespace fig8
