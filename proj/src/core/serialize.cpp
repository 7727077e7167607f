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

#include "serialize.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "asymptotics.hpp"
#include "version.hpp"

namespace fig8::io {

namespace {

using nlohmann::json;

const char* kind_name(Parameter::Kind k) {
  switch (k) {
    case Parameter::Kind::CircularRational: return "rational";
    case Parameter::Kind::CircularReal: return "real";
    case Parameter::Kind::Imaginary: return "imaginary";
  }
  return "unknown";
}

json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

json meta_for(const Parameter& param) {
  json meta;
  meta["parameter"] = param.to_string();
  meta["r_kind"] = kind_name(param.kind());
  meta["regime"] =
      std::string(asym::regime_tag_name(asym::classify(param).tag));
  meta["version"] = kVersion;
  if (param.kind() == Parameter::Kind::CircularReal)
    meta["note"] =
        "real-kind (binary64) parameter stands in for an irrational value";
  return meta;
}

json row_to_json(const harness::ScanRow& row) {
  json r;
  r["N"] = row.N;
  r["mode"] = std::string(harness::scan_mode_name(row.mode));
  r["log_abs"] = number_or_null(row.log_abs);
  r["s_N"] = number_or_null(row.s_n);
  r["prediction"] = number_or_null(row.prediction);
  r["abs_error"] = number_or_null(row.abs_error);
  r["subseq_class"] = std::string(harness::subseq_class_name(row.subseq_class));
  if (row.failed) {
    r["failed"] = true;
    r["note"] = row.note;
  }
  return r;
}

std::string csv_number(double v) {
  if (std::isnan(v)) return "";
  return format_double(v);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string rows_to_csv(const Parameter& param,
                        const std::vector<harness::ScanRow>& rows) {
  std::string out = "N,r_kind,r,mode,log_abs,s_N,prediction,abs_error,subseq_class\r\n";
  const std::string kind = kind_name(param.kind());
  const std::string r = format_double(param.value());
  for (const auto& row : rows) {
    out += std::to_string(row.N);
    out += ',';
    out += kind;
    out += ',';
    out += r;
    out += ',';
    out += harness::scan_mode_name(row.mode);
    out += ',';
    out += csv_number(row.log_abs);
    out += ',';
    out += csv_number(row.s_n);
    out += ',';
    out += csv_number(row.prediction);
    out += ',';
    out += csv_number(row.abs_error);
    out += ',';
    out += harness::subseq_class_name(row.subseq_class);
    out += "\r\n";
  }
  return out;
}

std::string rows_to_json(const Parameter& param,
                         const std::vector<harness::ScanRow>& rows) {
  json doc;
  doc["meta"] = meta_for(param);
  doc["rows"] = json::array();
  for (const auto& row : rows) doc["rows"].push_back(row_to_json(row));
  return doc.dump(2) + "\n";
}

std::string rows_to_text(const Parameter& param,
                         const std::vector<harness::ScanRow>& rows) {
  std::ostringstream os;
  os << "parameter " << param.to_string() << " ("
     << kind_name(param.kind()) << ")\n";
  for (const auto& row : rows) {
    os << "  N=" << row.N << "  " << harness::scan_mode_name(row.mode)
       << "  log=" << format_double(row.log_abs)
       << "  s_N=" << format_double(row.s_n)
       << "  prediction=" << format_double(row.prediction)
       << "  |err|=" << format_double(row.abs_error);
    if (row.subseq_class != harness::SubseqClass::NotApplicable)
      os << "  [" << harness::subseq_class_name(row.subseq_class) << "]";
    if (row.failed) os << "  FAILED: " << row.note;
    os << "\n";
  }
  return os.str();
}

std::string report_to_csv(const SuiteReport& report) {
  std::string out = "description,passed,measured,bound,informational\r\n";
  for (const auto& c : report.checks) {
    std::string desc = c.description;
    // RFC-4180 quoting
    bool needs_quotes = desc.find_first_of(",\"\r\n") != std::string::npos;
    if (needs_quotes) {
      std::string quoted = "\"";
      for (const char ch : desc) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      quoted += '"';
      desc = quoted;
    }
    out += desc;
    out += ',';
    out += c.passed ? "true" : "false";
    out += ',';
    out += csv_number(c.measured);
    out += ',';
    out += csv_number(c.bound);
    out += ',';
    out += c.informational ? "true" : "false";
    out += "\r\n";
  }
  return out;
}

std::string report_to_json(const Parameter* param, const SuiteReport& report) {
  json doc;
  if (param) doc["meta"] = meta_for(*param);
  else doc["meta"] = json{{"version", kVersion}};
  doc["suite"] = report.suite;
  doc["overall"] = report.overall();
  if (report.skipped) {
    doc["skipped"] = true;
    doc["skip_reason"] = report.skip_reason;
  }
  doc["checks"] = json::array();
  for (const auto& c : report.checks) {
    json row;
    row["description"] = c.description;
    row["passed"] = c.passed;
    row["measured"] = number_or_null(c.measured);
    row["bound"] = number_or_null(c.bound);
    row["informational"] = c.informational;
    doc["checks"].push_back(row);
  }
  if (!report.notes.empty()) doc["notes"] = report.notes;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << ": ";
  if (report.skipped) {
    os << "SKIPPED (" << report.skip_reason << ")\n";
    return os.str();
  }
  os << (report.overall() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : report.checks) {
    os << "  [" << (c.informational ? "info" : (c.passed ? "pass" : "FAIL"))
       << "] " << c.description;
    if (!std::isnan(c.measured)) os << "  measured=" << format_double(c.measured);
    if (!std::isnan(c.bound)) os << "  bound=" << format_double(c.bound);
    os << "\n";
  }
  for (const auto& note : report.notes) os << "  note: " << note << "\n";
  return os.str();
}

}  // namespace fig8::io
