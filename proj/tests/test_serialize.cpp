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

#include <json.hpp>

#include "harness.hpp"
#include "parameter.hpp"
#include "serialize.hpp"

using namespace fig8;

TEST_CASE("parameter parsing") {
  const auto rational = Parameter::parse("9/10");
  CHECK(rational.kind() == Parameter::Kind::CircularRational);
  CHECK(rational.num() == 9);
  CHECK(rational.den() == 10);

  const auto reduced = Parameter::parse("18/20");
  CHECK(reduced.num() == 9);
  CHECK(reduced.den() == 10);

  const auto real = Parameter::parse("0.9");
  CHECK(real.kind() == Parameter::Kind::CircularReal);
  CHECK(real.value() == 0.9);

  CHECK(Parameter::parse("i1.0").kind() == Parameter::Kind::Imaginary);
  CHECK(Parameter::parse("0.5i").value() == 0.5);
  CHECK(Parameter::parse(" 1 ").value() == 1.0);

  CHECK_THROWS_AS(Parameter::parse(""), ParseError);
  CHECK_THROWS_AS(Parameter::parse("9/0"), ParseError);
  CHECK_THROWS_AS(Parameter::parse("9/-10"), ParseError);
  CHECK_THROWS_AS(Parameter::parse("-1/2"), ParseError);
  CHECK_THROWS_AS(Parameter::parse("abc"), ParseError);
  CHECK_THROWS_AS(Parameter::parse("i0"), ParseError);
  CHECK_THROWS_AS(Parameter::parse("1/2/3"), ParseError);

  try {
    Parameter::parse("9/x0");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("CSV column order is pinned") {
  const auto rows = harness::growth_scan(Parameter::parse("9/10"), {9, 10},
                                         {harness::ScanMode::FullSum}, {});
  const std::string csv = io::rows_to_csv(Parameter::parse("9/10"), rows);
  CHECK(csv.rfind("N,r_kind,r,mode,log_abs,s_N,prediction,abs_error,subseq_class\r\n",
                  0) == 0);
  CHECK(csv.find("multiple-of-q") != std::string::npos);
  CHECK(csv.find("non-multiple") != std::string::npos);
  CHECK(csv.find("full-sum") != std::string::npos);
}

TEST_CASE("JSON round-trips every numeric field exactly") {
  const Parameter p = Parameter::real(0.9);
  harness::ScanOptions opts;
  opts.mode = harness::ScanMode::FullSum;
  const auto rows = harness::growth_scan(p, {50, 100, 150}, opts, {});
  const std::string payload = io::rows_to_json(p, rows);
  const auto doc = nlohmann::json::parse(payload);
  REQUIRE(doc["rows"].size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = doc["rows"][i];
    CHECK(row["N"].get<std::int64_t>() == rows[i].N);
    CHECK(row["log_abs"].get<double>() == rows[i].log_abs);
    CHECK(row["s_N"].get<double>() == rows[i].s_n);
    CHECK(row["prediction"].get<double>() == rows[i].prediction);
    CHECK(row["abs_error"].get<double>() == rows[i].abs_error);
  }
  CHECK(doc["meta"]["regime"] == "main-irrational");
  CHECK(doc["meta"]["r_kind"] == "real");
}

TEST_CASE("format_double is shortest round-trip") {
  for (const double v : {0.1, 1.0 / 3.0, 2.0298832128193072, 1e-300, 0.0}) {
    const std::string s = io::format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(io::format_double(0.1) == "0.1");
}

TEST_CASE("suite reports serialize with quoting and verdicts") {
  SuiteReport report;
  report.suite = "demo";
  report.check("bounds hold, both of them \"tightly\"", true, 1.5, 2.0);
  report.info("observed value", 3.25);
  const std::string csv = io::report_to_csv(report);
  CHECK(csv.find("\"bounds hold, both of them \"\"tightly\"\"\"") !=
        std::string::npos);
  const auto doc = nlohmann::json::parse(io::report_to_json(nullptr, report));
  CHECK(doc["overall"] == true);
  CHECK(doc["checks"].size() == 2);
  CHECK(doc["checks"][1]["informational"] == true);
  const std::string text = io::report_to_text(report);
  CHECK(text.find("suite demo: PASS") != std::string::npos);
}
