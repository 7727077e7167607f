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

#ifndef FIG8_HARNESS_HPP
#define FIG8_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "evaluator.hpp"
#include "parameter.hpp"
#include "precision.hpp"
#include "report.hpp"

namespace fig8::harness {

enum class ScanMode { FullSum, ProductOnly };

enum class SubseqClass { MultipleOfQ, NonMultiple, NotApplicable };

std::string_view scan_mode_name(ScanMode m);
std::string_view subseq_class_name(SubseqClass c);

// One growth observation.  s_n is 2 pi log/N for circular parameters and
// log/N for imaginary ones, matching the normalization of the
// corresponding growth statement.
struct ScanRow {
  std::int64_t N = 0;
  ScanMode mode = ScanMode::ProductOnly;
  double log_abs = 0.0;   // log|J_N| (full-sum) or log F_N (product-only)
  double s_n = 0.0;
  double prediction = std::numeric_limits<double>::quiet_NaN();
  double abs_error = std::numeric_limits<double>::quiet_NaN();
  SubseqClass subseq_class = SubseqClass::NotApplicable;
  bool failed = false;
  std::string note;
};

struct ScanOptions {
  ScanMode mode = ScanMode::ProductOnly;
  // full-sum scans refuse N beyond this unless raised; extended-precision
  // cost grows linearly with N
  std::int64_t full_sum_cap = 10000;
  bool allow_large_full_sum = false;
  unsigned threads = 0;  // 0 = hardware concurrency
};

// One row per N (N_list strictly increasing).  Product-only rows need
// doubles only and scale to N ~ 10^7; full-sum rows run the
// extended-precision evaluator.  Rows are computed independently
// (concurrently for full-sum scans) and assembled in N order.
std::vector<ScanRow> growth_scan(const Parameter& param,
                                 const std::vector<std::int64_t>& N_list,
                                 const ScanOptions& options = {},
                                 const PrecisionConfig& cfg = {});

// F_N - 1 <= |J_N| <= N F_N at working precision, with margins.
// Parameters outside the main irrational regime yield a skipped report.
SuiteReport sandwich_check(const Parameter& param, std::int64_t N,
                           const PrecisionConfig& cfg = {});

// Splits N <= N_max by divisibility by q: multiples must satisfy
// (2 pi r)^6/(360 N^6) < |J_N| < N |1 - 1/r|, non-multiples are tracked
// against the limsup prediction.  Requires the main-rational regime.
SuiteReport subsequence_analysis(const Parameter& param, std::int64_t N_max,
                                 const PrecisionConfig& cfg = {});

// (2 pi r)^6/(360 N^6) < |J_N| < N for 0 < r < 1/6, plus the implied
// s_N window; at r = 0 the evaluation collapses to J_N = 1 exactly.
SuiteReport small_r_check(const Parameter& param, std::int64_t N,
                          const PrecisionConfig& cfg = {});

// Enumerates the local maxima of |f(k)| and compares them with the
// regime's predicted peak set {floor(A), floor(D)} or {floor(A),
// floor(D), floor(A'')} within +-1, global peak at floor(D).
SuiteReport local_maxima_audit(const Parameter& param, std::int64_t N,
                               const PrecisionConfig& cfg = {});

// log J_N via log-sum-exp in doubles (every term is positive); below the
// arccosh(3/2) threshold each row is checked against the window
// g(0) - epsilon < J_N < N.
std::vector<ScanRow> imaginary_scan(double s,
                                    const std::vector<std::int64_t>& N_list,
                                    const PrecisionConfig& cfg = {},
                                    double epsilon = 0.01);

// The V/W positivity, symmetry, derivative and continuity checks.
SuiteReport appendix_suite(const PrecisionConfig& cfg = {});

}  // namespace fig8::harness

#endif  // FIG8_HARNESS_HPP
