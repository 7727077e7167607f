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

#ifndef FIG8_BIGREAL_HPP
#define FIG8_BIGREAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace fig8 {

// RAII wrapper over mpfr_t with an explicit per-value precision.  Every
// binary operation rounds into max(precision of the operands), so the
// chosen working precision propagates through a computation without any
// global state; values are safe to build and use from any thread.
class BigReal {
 public:
  BigReal() { mpfr_init2(x_, 64); mpfr_set_zero(x_, 1); }
  explicit BigReal(unsigned bits) {
    mpfr_init2(x_, bits);
    mpfr_set_zero(x_, 1);
  }
  BigReal(double v, unsigned bits) {
    mpfr_init2(x_, bits);
    mpfr_set_d(x_, v, MPFR_RNDN);
  }
  BigReal(std::int64_t v, unsigned bits) {
    mpfr_init2(x_, bits);
    mpfr_set_si(x_, v, MPFR_RNDN);
  }
  BigReal(const std::string& decimal, unsigned bits) {
    mpfr_init2(x_, bits);
    mpfr_set_str(x_, decimal.c_str(), 10, MPFR_RNDN);
  }
  // rounding copy into a target precision
  BigReal(const BigReal& other, unsigned bits) {
    mpfr_init2(x_, bits);
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }

  BigReal(const BigReal& other) {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  BigReal(BigReal&& other) noexcept {
    mpfr_init2(x_, 64);
    mpfr_swap(x_, other.x_);
  }
  BigReal& operator=(const BigReal& other) {
    if (this != &other) {
      mpfr_set_prec(x_, mpfr_get_prec(other.x_));
      mpfr_set(x_, other.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& other) noexcept {
    mpfr_swap(x_, other.x_);
    return *this;
  }
  ~BigReal() { mpfr_clear(x_); }

  static BigReal pi(unsigned bits) {
    BigReal out(bits);
    mpfr_const_pi(out.x_, MPFR_RNDN);
    return out;
  }

  unsigned precision_bits() const {
    return static_cast<unsigned>(mpfr_get_prec(x_));
  }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }

  std::string str(int digits10) const {
    char* raw = nullptr;
    mpfr_asprintf(&raw, "%.*Rg", digits10, x_);
    std::string out(raw);
    mpfr_free_str(raw);
    return out;
  }

#define FIG8_BIGREAL_BINOP(op, fn, fn_si, fn_d)                          \
  friend BigReal operator op(const BigReal& a, const BigReal& b) {       \
    BigReal out(std::max(a.precision_bits(), b.precision_bits()));       \
    fn(out.x_, a.x_, b.x_, MPFR_RNDN);                                   \
    return out;                                                          \
  }                                                                      \
  friend BigReal operator op(const BigReal& a, std::int64_t b) {         \
    BigReal out(a.precision_bits());                                     \
    fn_si(out.x_, a.x_, static_cast<long>(b), MPFR_RNDN);                \
    return out;                                                          \
  }                                                                      \
  friend BigReal operator op(const BigReal& a, double b) {               \
    BigReal out(a.precision_bits());                                     \
    fn_d(out.x_, a.x_, b, MPFR_RNDN);                                    \
    return out;                                                          \
  }

  FIG8_BIGREAL_BINOP(+, mpfr_add, mpfr_add_si, mpfr_add_d)
  FIG8_BIGREAL_BINOP(-, mpfr_sub, mpfr_sub_si, mpfr_sub_d)
  FIG8_BIGREAL_BINOP(*, mpfr_mul, mpfr_mul_si, mpfr_mul_d)
  FIG8_BIGREAL_BINOP(/, mpfr_div, mpfr_div_si, mpfr_div_d)
#undef FIG8_BIGREAL_BINOP

  friend BigReal operator+(std::int64_t a, const BigReal& b) { return b + a; }
  friend BigReal operator*(std::int64_t a, const BigReal& b) { return b * a; }
  friend BigReal operator+(double a, const BigReal& b) { return b + a; }
  friend BigReal operator*(double a, const BigReal& b) { return b * a; }
  friend BigReal operator-(std::int64_t a, const BigReal& b) {
    BigReal out(b.precision_bits());
    mpfr_si_sub(out.x_, static_cast<long>(a), b.x_, MPFR_RNDN);
    return out;
  }
  friend BigReal operator-(double a, const BigReal& b) {
    BigReal out(b.precision_bits());
    mpfr_d_sub(out.x_, a, b.x_, MPFR_RNDN);
    return out;
  }
  friend BigReal operator/(std::int64_t a, const BigReal& b) {
    BigReal out(b.precision_bits());
    mpfr_si_div(out.x_, static_cast<long>(a), b.x_, MPFR_RNDN);
    return out;
  }
  friend BigReal operator-(const BigReal& a) {
    BigReal out(a.precision_bits());
    mpfr_neg(out.x_, a.x_, MPFR_RNDN);
    return out;
  }

  BigReal& operator+=(const BigReal& b) {
    mpfr_add(x_, x_, b.x_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator-=(const BigReal& b) {
    mpfr_sub(x_, x_, b.x_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator*=(const BigReal& b) {
    mpfr_mul(x_, x_, b.x_, MPFR_RNDN);
    return *this;
  }
  BigReal& operator/=(const BigReal& b) {
    mpfr_div(x_, x_, b.x_, MPFR_RNDN);
    return *this;
  }

  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.x_, b.x_) == 0;
  }
  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.x_, b.x_) < 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.x_, b.x_) > 0;
  }
  friend bool operator<=(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.x_, b.x_) <= 0;
  }
  friend bool operator>=(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.x_, b.x_) >= 0;
  }
  friend bool operator!=(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.x_, b.x_) != 0;
  }
  friend bool operator==(const BigReal& a, std::int64_t b) {
    return mpfr_cmp_si(a.x_, static_cast<long>(b)) == 0;
  }
  friend bool operator<(const BigReal& a, std::int64_t b) {
    return mpfr_cmp_si(a.x_, static_cast<long>(b)) < 0;
  }
  friend bool operator>(const BigReal& a, std::int64_t b) {
    return mpfr_cmp_si(a.x_, static_cast<long>(b)) > 0;
  }
  friend bool operator<=(const BigReal& a, std::int64_t b) {
    return mpfr_cmp_si(a.x_, static_cast<long>(b)) <= 0;
  }
  friend bool operator>=(const BigReal& a, std::int64_t b) {
    return mpfr_cmp_si(a.x_, static_cast<long>(b)) >= 0;
  }
  friend bool operator<(const BigReal& a, double b) {
    return mpfr_cmp_d(a.x_, b) < 0;
  }
  friend bool operator>(const BigReal& a, double b) {
    return mpfr_cmp_d(a.x_, b) > 0;
  }

#define FIG8_BIGREAL_FUN(name, fn)                 \
  friend BigReal name(const BigReal& a) {          \
    BigReal out(a.precision_bits());               \
    fn(out.x_, a.x_, MPFR_RNDN);                   \
    return out;                                    \
  }

  FIG8_BIGREAL_FUN(cos, mpfr_cos)
  FIG8_BIGREAL_FUN(cosh, mpfr_cosh)
  FIG8_BIGREAL_FUN(log, mpfr_log)
  FIG8_BIGREAL_FUN(exp, mpfr_exp)
  FIG8_BIGREAL_FUN(abs, mpfr_abs)
#undef FIG8_BIGREAL_FUN

  friend BigReal floor(const BigReal& a) {
    BigReal out(a.precision_bits());
    mpfr_floor(out.x_, a.x_);
    return out;
  }
  friend BigReal pow_ui(const BigReal& a, unsigned long e) {
    BigReal out(a.precision_bits());
    mpfr_pow_ui(out.x_, a.x_, e, MPFR_RNDN);
    return out;
  }

 private:
  mpfr_t x_;
};

}  // namespace fig8

#endif  // FIG8_BIGREAL_HPP
