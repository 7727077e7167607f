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

#ifndef FIG8_REPORT_HPP
#define FIG8_REPORT_HPP

#include <cmath>
#include <string>
#include <vector>

namespace fig8 {

// One verification item: what was checked, what was measured, and the
// bound it was held against.  Informational rows carry no pass/fail
// weight and never flip a suite's overall verdict.
struct CheckRow {
  std::string description;
  bool passed = true;
  double measured = std::numeric_limits<double>::quiet_NaN();
  double bound = std::numeric_limits<double>::quiet_NaN();
  bool informational = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRow> checks;
  bool skipped = false;
  std::string skip_reason;
  std::vector<std::string> notes;

  // conjunction of all non-informational checks
  bool overall() const {
    for (const auto& c : checks)
      if (!c.informational && !c.passed) return false;
    return true;
  }

  CheckRow& check(std::string description, bool passed, double measured,
                  double bound) {
    checks.push_back(
        {std::move(description), passed, measured, bound, false});
    return checks.back();
  }

  CheckRow& info(std::string description, double measured,
                 double bound = std::numeric_limits<double>::quiet_NaN()) {
    checks.push_back({std::move(description), true, measured, bound, true});
    return checks.back();
  }
};

}  // namespace fig8

#endif  // FIG8_REPORT_HPP
