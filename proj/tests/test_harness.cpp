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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "harness.hpp"
#include "serialize.hpp"
#include "support/oracles.hpp"

using namespace fig8;
using harness::ScanMode;

namespace {
constexpr double kPi = oracle::kPi;
const PrecisionConfig kCfg{};
}  // namespace

TEST_CASE("growth scan, product mode, r = 1") {
  const auto rows = harness::growth_scan(Parameter::rational(1, 1), {1000000},
                                         {ScanMode::ProductOnly}, kCfg);
  REQUIRE(rows.size() == 1);
  CHECK(!rows[0].failed);
  CHECK(rows[0].abs_error < 5e-3);  // frozen reference: vhat(1) golden value
  CHECK(std::abs(rows[0].prediction - 2.0298832128193072) < 1e-9);
}

TEST_CASE("growth scan at t = 1 is exactly flat") {
  const auto rows = harness::growth_scan(Parameter::rational(0, 1),
                                         {10, 100, 1000},
                                         {ScanMode::ProductOnly}, kCfg);
  for (const auto& row : rows) {
    CHECK(row.s_n == 0.0);
    CHECK(row.log_abs == 0.0);
  }
  const auto full = harness::growth_scan(Parameter::rational(0, 1), {10},
                                         {ScanMode::FullSum}, kCfg);
  CHECK(full[0].s_n == 0.0);
}

TEST_CASE("growth scan caps full-sum N by default") {
  CHECK_THROWS_AS(harness::growth_scan(Parameter::rational(1, 1), {20000},
                                       {ScanMode::FullSum}, kCfg),
                  DomainError);
  harness::ScanOptions lifted;
  lifted.mode = ScanMode::FullSum;
  lifted.allow_large_full_sum = true;
  CHECK_NOTHROW(
      harness::growth_scan(Parameter::rational(1, 1), {11000}, lifted, kCfg));
}

TEST_CASE("growth scan validates the N list") {
  CHECK_THROWS_AS(harness::growth_scan(Parameter::real(1.0), {100, 100},
                                       {ScanMode::ProductOnly}, kCfg),
                  DomainError);
  CHECK_THROWS_AS(harness::growth_scan(Parameter::real(1.0), {0, 10},
                                       {ScanMode::ProductOnly}, kCfg),
                  DomainError);
}

TEST_CASE("full-sum rows satisfy the sandwich-implied band in main regimes") {
  for (const double r : {0.9, 1.0, 1.1}) {
    const Parameter p =
        r == 1.0 ? Parameter::rational(1, 1) : Parameter::real(r);
    harness::ScanOptions opts;
    opts.mode = ScanMode::FullSum;
    const auto rows = harness::growth_scan(p, {50, 200, 500}, opts, kCfg);
    for (const auto& row : rows) {
      const auto fm = eval::f_max(p, row.N);
      const double lo = 2.0 * kPi * std::log(std::max(std::exp(fm.log_f) - 1.0, 1.0)) /
                        static_cast<double>(row.N);
      const double hi =
          2.0 * kPi * (fm.log_f + std::log(static_cast<double>(row.N))) /
          static_cast<double>(row.N);
      CHECK(row.s_n >= lo - 1e-12);
      CHECK(row.s_n <= hi + 1e-12);
    }
  }
}

TEST_CASE("monotone convergence proxy on a geometric ladder at r = 1") {
  std::vector<std::int64_t> ladder;
  for (std::int64_t n = 1000; n <= 64000; n *= 2) ladder.push_back(n);
  const auto rows = harness::growth_scan(Parameter::rational(1, 1), ladder,
                                         {ScanMode::ProductOnly}, kCfg);
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i].abs_error < rows[i - 1].abs_error);
}

TEST_CASE("scan reports are deterministic") {
  const Parameter p = Parameter::real(0.95);
  harness::ScanOptions opts;
  opts.mode = ScanMode::FullSum;
  opts.threads = 4;
  const auto a = harness::growth_scan(p, {50, 100, 150, 200, 250}, opts, kCfg);
  const auto b = harness::growth_scan(p, {50, 100, 150, 200, 250}, opts, kCfg);
  CHECK(io::rows_to_json(p, a) == io::rows_to_json(p, b));
  CHECK(io::rows_to_csv(p, a) == io::rows_to_csv(p, b));
}

TEST_CASE("sandwich check at the worked example") {
  const auto report = harness::sandwich_check(Parameter::rational(1, 1), 4, kCfg);
  CHECK(!report.skipped);
  CHECK(report.overall());
  // J_4 = 27, F_4 = 16: the margins are 15 <= 27 <= 64
  bool found = false;
  for (const auto& c : report.checks)
    if (c.description == "F_N - 1 <= |J_N|") {
      found = true;
      CHECK(std::abs(c.measured - std::log(27.0)) < 1e-12);
      CHECK(std::abs(c.bound - std::log(15.0)) < 1e-12);
    }
  CHECK(found);
}

TEST_CASE("sandwich check across the main window") {
  CHECK(harness::sandwich_check(Parameter::real(0.95), 500, kCfg).overall());
  CHECK(harness::sandwich_check(Parameter::real(1.1), 500, kCfg).overall());
}

TEST_CASE("sandwich check skips out-of-regime parameters") {
  const auto skipped = harness::sandwich_check(Parameter::real(0.5), 100, kCfg);
  CHECK(skipped.skipped);
  CHECK(!skipped.skip_reason.empty());
  // rational parameters other than 1 fall outside the statement
  CHECK(harness::sandwich_check(Parameter::rational(9, 10), 100, kCfg).skipped);
}

TEST_CASE("subsequence analysis at r = 9/10") {
  const auto report =
      harness::subsequence_analysis(Parameter::rational(9, 10), 180, kCfg);
  // the N = 9 bound degenerates: B = 1, J_9 = f(0) = 1 equals N|1-1/r| = 1,
  // so the strict upper bound fails there and everywhere else holds
  CHECK(!report.overall());
  int failures = 0;
  for (const auto& c : report.checks)
    if (!c.informational && !c.passed) ++failures;
  CHECK(failures == 1);
  for (const auto& c : report.checks) {
    if (c.informational || c.passed) continue;
    CHECK(c.description.find("N=9:") != std::string::npos);
    CHECK(c.measured == 1.0);
    CHECK(c.bound == 1.0);
  }
}

TEST_CASE("subsequence analysis rejects out-of-regime parameters") {
  CHECK_THROWS_AS(
      harness::subsequence_analysis(Parameter::rational(1, 1), 100, kCfg),
      DomainError);
  CHECK_THROWS_AS(
      harness::subsequence_analysis(Parameter::real(0.9), 100, kCfg),
      DomainError);
}

TEST_CASE("subsequence multiples stay inside the bounds for 18 <= N <= 900") {
  const auto report =
      harness::subsequence_analysis(Parameter::rational(9, 10), 900, kCfg);
  for (const auto& c : report.checks) {
    if (c.informational) continue;
    if (c.description.find("N=9:") != std::string::npos) continue;
    CHECK(c.passed);
  }
}

TEST_CASE("small-r checks") {
  const auto report = harness::small_r_check(Parameter::real(0.1), 1000, kCfg);
  CHECK(report.overall());
  const auto exact = harness::small_r_check(Parameter::rational(0, 1), 5, kCfg);
  CHECK(exact.overall());
  CHECK(harness::small_r_check(Parameter::real(0.15), 2000, kCfg).overall());
  CHECK_THROWS_AS(harness::small_r_check(Parameter::real(0.3), 100, kCfg),
                  DomainError);
}

TEST_CASE("local maxima audit, two-peak side") {
  const auto report =
      harness::local_maxima_audit(Parameter::real(0.8), 2000, kCfg);
  CHECK(report.overall());
}

TEST_CASE("local maxima audit, three-peak side") {
  const auto report =
      harness::local_maxima_audit(Parameter::real(1.2), 2000, kCfg);
  CHECK(report.overall());
  // the third peak grows: its measured exponent is positive, frozen from
  // direct enumeration (log|f| at floor(A'') = 1833 is ~ +37.8 at N = 2000)
  bool found = false;
  for (const auto& c : report.checks)
    if (c.informational && c.description.find("k = 1833") != std::string::npos) {
      found = true;
      CHECK(c.measured > 37.0);
      CHECK(c.measured < 39.0);
    }
  CHECK(found);
}

TEST_CASE("local maxima audit rejects other regimes") {
  CHECK_THROWS_AS(harness::local_maxima_audit(Parameter::real(1.0), 100, kCfg),
                  DomainError);
  CHECK_THROWS_AS(
      harness::local_maxima_audit(Parameter::rational(4, 5), 100, kCfg),
      DomainError);
}

TEST_CASE("imaginary scan above the threshold") {
  const auto rows = harness::imaginary_scan(1.0, {100000}, kCfg);
  REQUIRE(rows.size() == 1);
  CHECK(!rows[0].failed);
  CHECK(rows[0].abs_error < 1e-3);
}

TEST_CASE("imaginary scan below the threshold") {
  const auto rows = harness::imaginary_scan(0.1, {10000}, kCfg);
  REQUIRE(rows.size() == 1);
  CHECK(!rows[0].failed);
  CHECK(rows[0].prediction == 0.0);
  const double lo = std::log(2 * std::cosh(0.2 * kPi) - 2 - 0.01) / 10000.0;
  const double hi = std::log(10000.0) / 10000.0;
  CHECK(rows[0].s_n > lo);
  CHECK(rows[0].s_n < hi);
}

TEST_CASE("appendix suite passes") {
  const auto report = harness::appendix_suite(kCfg);
  CHECK(report.overall());
  for (const auto& c : report.checks) {
    CAPTURE(c.description);
    CHECK((c.informational || c.passed));
  }
}
