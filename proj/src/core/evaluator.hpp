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

#ifndef FIG8_EVALUATOR_HPP
#define FIG8_EVALUATOR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bigreal.hpp"
#include "parameter.hpp"
#include "precision.hpp"
#include "report.hpp"

namespace fig8::eval {

// J_N(E; t) = sum_{k=0}^{N-1} f(k),  f(k) = prod_{j=1}^{k} g(j), where
//
//   circular:  g(j) = 2 cos(2 pi r) - 2 cos(2 pi r j / N)
//   imaginary: g(j) = 2 cosh(2 pi s) - 2 cosh(2 pi s j / N)
//
// g is computed from the cosine/cosh difference; the equivalent product
// of two sines (sinh) is kept as a test oracle.  For circular-rational
// parameters the zeros of g on 0 < j < N are decided exactly in integer
// arithmetic (g(j) = 0 iff pN | q(N-j) or pN | q(N+j)), never from a
// floating-point cancellation.

double g_factor(std::int64_t j, const Parameter& param, std::int64_t N);

// Exact-zero test for circular-rational parameters (false for the other
// kinds; real-kind parameters are treated as irrational).
bool g_is_exact_zero(std::int64_t j, const Parameter& param, std::int64_t N);

// Signs, log-magnitudes and the zero tail of f(0..N-1).
struct TermSequence {
  std::int64_t N = 0;
  std::vector<signed char> sign;  // +1, -1 or 0
  std::vector<double> log_abs;    // natural log of |f(k)|; meaningless when sign = 0
  std::optional<std::int64_t> zero_from;        // first k with f(k) = 0
  std::optional<std::int64_t> first_near_zero;  // |g| < 1e-13 without an exact zero
};

TermSequence partial_products(const Parameter& param, std::int64_t N);

// Streaming form of the same recurrence: visit(k, sign_k, log_abs_k) for
// k = 0..N-1 without materializing the arrays.  Returns the sequence
// tail metadata.  Used by the scan paths at N ~ 10^6..10^7.
struct TermStreamResult {
  std::optional<std::int64_t> zero_from;
  std::optional<std::int64_t> first_near_zero;
};
TermStreamResult for_each_term(
    const Parameter& param, std::int64_t N,
    const std::function<void(std::int64_t k, int sign, double log_abs)>& visit);

struct JonesEvaluation {
  BigReal value;          // exact working-precision sum
  int sign = 0;           // sign of the sum (0 only for an exactly zero sum)
  double log_abs = 0.0;   // log|value|; -inf when value = 0
  double value_double = 0.0;  // value rounded to binary64 (+-inf on overflow)
  std::int64_t N = 0;
  unsigned precision_bits_used = 0;
};

// Full working-precision sum of the N partial products.
JonesEvaluation jones_value(const Parameter& param, std::int64_t N,
                            const PrecisionConfig& cfg = {});

// Same sum, also carrying max_k |f(k)| at working precision (the F_N of
// the sandwich inequality) and its index.
struct JonesDetailed {
  JonesEvaluation eval;
  BigReal max_abs_f;
  std::int64_t argmax = 0;
};
JonesDetailed jones_value_detailed(const Parameter& param, std::int64_t N,
                                   const PrecisionConfig& cfg = {});

// 2 pi log|J_N| / N.
double jones_log_growth(const Parameter& param, std::int64_t N,
                        const PrecisionConfig& cfg = {});

// Throws PrecisionError when the magnitude |f| can outrun the exponent
// range of the working format.  Exposed for direct testing; jones_value
// calls it on entry.
void check_exponent_budget(const Parameter& param, std::int64_t N);

// The j-thresholds where g (as a function of a continuous j) crosses
// -1, 0 and +1.  Only thresholds whose defining angle exists and whose
// value lands in [0, N] are populated.
struct CriticalIndices {
  std::optional<double> a, b, c, d, b_prime, a_prime, a_double_prime;

  static std::optional<std::int64_t> floor_of(const std::optional<double>& v) {
    if (!v) return std::nullopt;
    return static_cast<std::int64_t>(std::floor(*v));
  }
};

CriticalIndices critical_indices(const Parameter& param, std::int64_t N);

struct FMax {
  std::int64_t argmax = 0;
  double log_f = 0.0;
  bool degenerate = false;  // every f(k), k >= 1, vanished; max is f(0) = 1
};

// Index of the maximal |f(k)| over 0 <= k <= N-1 (ties -> smallest).
FMax f_max(const Parameter& param, std::int64_t N);

// Verifies that every integer j in (0, N) satisfies the sign/magnitude
// band dictated by its position relative to the critical indices.
SuiteReport sign_table_check(const Parameter& param, std::int64_t N);

}  // namespace fig8::eval

#endif  // FIG8_EVALUATOR_HPP
