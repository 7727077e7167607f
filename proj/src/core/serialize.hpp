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

#ifndef FIG8_SERIALIZE_HPP
#define FIG8_SERIALIZE_HPP

#include <string>
#include <vector>

#include "harness.hpp"
#include "parameter.hpp"
#include "report.hpp"

namespace fig8::io {

// Shortest decimal that parses back to the identical binary64.
std::string format_double(double v);

// RFC-4180-style CSV with the fixed column order
// N,r_kind,r,mode,log_abs,s_N,prediction,abs_error,subseq_class.
std::string rows_to_csv(const Parameter& param,
                        const std::vector<harness::ScanRow>& rows);

// Single top-level object with a "meta" object (parameter, regime, tool
// version) and a "rows" array.
std::string rows_to_json(const Parameter& param,
                         const std::vector<harness::ScanRow>& rows);

std::string rows_to_text(const Parameter& param,
                         const std::vector<harness::ScanRow>& rows);

std::string report_to_csv(const SuiteReport& report);
std::string report_to_json(const Parameter* param, const SuiteReport& report);
std::string report_to_text(const SuiteReport& report);

}  // namespace fig8::io

#endif  // FIG8_SERIALIZE_HPP
