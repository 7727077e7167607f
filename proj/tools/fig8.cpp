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

  Command-line front end over the figure8 C API.
  Exit codes: 0 success/pass, 1 a verification suite failed,
  2 invalid input or domain error.
*/

#include <figure8/figure8.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailed = 1;
constexpr int kExitBadInput = 2;

using nlohmann::json;

struct ParamDeleter {
  void operator()(f8_parameter* p) const { f8_parameter_free(p); }
};
struct ReportDeleter {
  void operator()(f8_report* r) const { f8_report_free(r); }
};
using ParamPtr = std::unique_ptr<f8_parameter, ParamDeleter>;
using ReportPtr = std::unique_ptr<f8_report, ReportDeleter>;

[[noreturn]] void die(const std::string& what) {
  std::cerr << "fig8: " << what << "\n";
  std::exit(kExitBadInput);
}

void check(f8_status status) {
  if (status != F8_OK) die(f8_last_error());
}

ParamPtr parse_param(const std::string& text) {
  f8_parameter* raw = nullptr;
  check(f8_parameter_parse(text.c_str(), &raw));
  return ParamPtr(raw);
}

template <typename Fn>
std::string take_string(Fn&& serialize) {
  char* raw = nullptr;
  check(serialize(&raw));
  std::string out(raw);
  f8_string_free(raw);
  return out;
}

std::string format_shortest(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) die("cannot open output file " + out_path);
  f << payload;
}

// precision defaults, overridable by FIG8_WORKING_BITS / FIG8_ABS_TOL and
// then by the --bits / --abs-tol flags
struct PrecisionFlags {
  unsigned bits = 0;
  double abs_tol = 0.0;

  f8_precision resolve() const {
    f8_precision prec = f8_precision_default();
    if (const char* env = std::getenv("FIG8_WORKING_BITS")) {
      const unsigned long v = std::strtoul(env, nullptr, 10);
      if (v > 0) prec.working_bits = static_cast<unsigned>(v);
    }
    if (const char* env = std::getenv("FIG8_ABS_TOL")) {
      const double v = std::strtod(env, nullptr);
      if (v > 0) prec.abs_tol = v;
    }
    if (bits > 0) prec.working_bits = bits;
    if (abs_tol > 0) prec.abs_tol = abs_tol;
    return prec;
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--bits", bits, "working significand bits (default 128)");
    cmd->add_option("--abs-tol", abs_tol,
                    "series truncation target (default 1e-14)");
  }
};

struct NRange {
  std::vector<std::int64_t> explicit_ns;
  std::int64_t n_min = 0, n_max = 0, step = 0;
  double geom = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--N", explicit_ns, "explicit N values (repeatable)");
    cmd->add_option("--N-min", n_min, "range start");
    cmd->add_option("--N-max", n_max, "range end (inclusive)");
    cmd->add_option("--step", step, "arithmetic range step");
    cmd->add_option("--geom", geom, "geometric range factor (> 1)");
  }

  std::vector<std::int64_t> resolve() const {
    if (!explicit_ns.empty()) return explicit_ns;
    if (n_min <= 0 || n_max < n_min) die("need --N or a valid --N-min/--N-max");
    std::vector<std::int64_t> out;
    if (geom > 1.0) {
      for (double n = static_cast<double>(n_min); n <= static_cast<double>(n_max);
           n *= geom)
        out.push_back(static_cast<std::int64_t>(n));
    } else {
      const std::int64_t s = step > 0 ? step : 1;
      for (std::int64_t n = n_min; n <= n_max; n += s) out.push_back(n);
    }
    return out;
  }
};

json meta_json(const std::string& parameter) {
  return json{{"parameter", parameter}, {"version", f8_version()}};
}

int emit_report(const f8_report* report, const std::string& format,
                const std::string& out_path) {
  std::string payload;
  if (format == "csv")
    payload = take_string([&](char** out) { return f8_report_to_csv(report, out); });
  else if (format == "json")
    payload = take_string([&](char** out) { return f8_report_to_json(report, out); });
  else
    payload = take_string([&](char** out) { return f8_report_to_text(report, out); });
  emit(payload, out_path);
  return f8_report_passed(report) ? kExitOk : kExitSuiteFailed;
}

int run_eval(const std::string& r_text, std::int64_t n,
             const PrecisionFlags& pf, const std::string& format,
             const std::string& out_path) {
  const ParamPtr param = parse_param(r_text);
  const f8_precision prec = pf.resolve();
  f8_jones j{};
  check(f8_jones_eval(param.get(), n, &prec, &j));

  if (format == "json") {
    json doc;
    doc["meta"] = meta_json(r_text);
    doc["N"] = j.n;
    doc["sign"] = j.sign;
    doc["log_abs"] = j.log_abs;
    if (std::isfinite(j.value)) doc["value"] = j.value;
    else doc["value"] = nullptr;
    doc["precision_bits_used"] = j.precision_bits_used;
    emit(doc.dump(2), out_path);
  } else {
    std::string line;
    if (std::isfinite(j.value))
      line = format_shortest(j.value);
    else
      line = (j.sign < 0 ? std::string("-") : std::string()) + "exp(" +
             format_shortest(j.log_abs) + ")";
    emit(line, out_path);
  }
  return kExitOk;
}

int run_predict(const std::string& r_text, const PrecisionFlags& pf,
                const std::string& format, const std::string& out_path) {
  const ParamPtr param = parse_param(r_text);
  const f8_precision prec = pf.resolve();
  f8_regime regime{};
  check(f8_classify(param.get(), &prec, &regime));

  if (format == "json") {
    json doc;
    doc["meta"] = meta_json(r_text);
    doc["regime"] = regime.tag;
    doc["limsup_prediction"] = std::isnan(regime.limsup_prediction)
                                   ? json(nullptr)
                                   : json(regime.limsup_prediction);
    doc["liminf_prediction"] = std::isnan(regime.liminf_prediction)
                                   ? json(nullptr)
                                   : json(regime.liminf_prediction);
    doc["limit_exists"] = regime.limit_exists != 0;
    emit(doc.dump(2), out_path);
  } else {
    std::string text = "regime " + std::string(regime.tag) + "\n";
    text += "limsup " + format_shortest(regime.limsup_prediction) + "\n";
    text += "liminf " + format_shortest(regime.liminf_prediction) + "\n";
    text += std::string("limit_exists ") +
            (regime.limit_exists ? "true" : "false") + "\n";
    emit(text, out_path);
  }
  return kExitOk;
}

int run_verify(const std::string& suite, const std::string& r_text,
               std::int64_t n, std::int64_t n_max, const PrecisionFlags& pf,
               const std::string& format, const std::string& out_path) {
  const f8_precision prec = pf.resolve();

  auto run_one = [&](const std::string& name) -> int {
    f8_report* raw = nullptr;
    if (name == "appendix") {
      check(f8_appendix_suite(&prec, &raw));
    } else if (name == "sandwich") {
      const ParamPtr param = parse_param(r_text.empty() ? "1" : r_text);
      check(f8_sandwich_check(param.get(), n > 0 ? n : 1000, &prec, &raw));
    } else if (name == "subsequence") {
      const ParamPtr param = parse_param(r_text.empty() ? "9/10" : r_text);
      check(f8_subsequence_analysis(param.get(), n_max > 0 ? n_max : 900,
                                    &prec, &raw));
    } else if (name == "small-r") {
      const ParamPtr param = parse_param(r_text.empty() ? "0.1" : r_text);
      check(f8_small_r_check(param.get(), n > 0 ? n : 1000, &prec, &raw));
    } else if (name == "maxima") {
      const ParamPtr param = parse_param(r_text.empty() ? "0.8" : r_text);
      check(f8_local_maxima_audit(param.get(), n > 0 ? n : 2000, &prec, &raw));
    } else {
      die("unknown suite '" + name +
          "' (expected appendix|sandwich|subsequence|small-r|maxima|all)");
    }
    const ReportPtr report(raw);
    if (f8_report_skipped(report.get())) {
      std::cerr << take_string(
          [&](char** out) { return f8_report_to_text(report.get(), out); });
      return kExitBadInput;
    }
    return emit_report(report.get(), format, out_path);
  };

  if (suite == "all") {
    int worst = kExitOk;
    for (const char* name :
         {"appendix", "sandwich", "subsequence", "small-r", "maxima"})
      worst = std::max(worst, run_one(name));
    return worst;
  }
  return run_one(suite);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"figure-eight knot colored Jones growth toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", f8_version());

  std::string r_text, s_text, format, out_path, suite = "appendix";
  std::int64_t n = 0, n_max = 0;
  std::string mode = "product";
  bool allow_large = false;
  PrecisionFlags pf;
  NRange nrange;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format,
                    "output format: text|csv|json (scans default to csv)")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--out", out_path, "output path (default stdout)");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate J_N(E; t)");
  eval->add_option("--r", r_text, "parameter: rational, decimal or i-form")
      ->required();
  eval->add_option("--N", n, "color N")->required();
  pf.attach(eval);
  add_format(eval);

  CLI::App* predict = app.add_subcommand("predict", "regime and growth prediction");
  predict->add_option("--r", r_text, "parameter")->required();
  pf.attach(predict);
  add_format(predict);

  CLI::App* scan = app.add_subcommand("scan", "growth scan over a range of N");
  scan->add_option("--r", r_text, "parameter")->required();
  nrange.attach(scan);
  scan->add_option("--mode", mode, "full|product")
      ->check(CLI::IsMember({"full", "product"}));
  scan->add_flag("--allow-large", allow_large,
                 "lift the N <= 10^4 full-sum cap");
  pf.attach(scan);
  add_format(scan);

  CLI::App* imaginary =
      app.add_subcommand("imaginary", "scan for t = exp(2 pi s / N)");
  imaginary->add_option("--s", s_text, "imaginary magnitude s > 0")->required();
  nrange.attach(imaginary);
  pf.attach(imaginary);
  add_format(imaginary);

  CLI::App* table = app.add_subcommand("table", "sign-table band report");
  table->add_option("--r", r_text, "parameter")->required();
  table->add_option("--N", n, "color N")->required();
  add_format(table);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "appendix|sandwich|subsequence|small-r|maxima|all");
  verify->add_option("--r", r_text, "parameter override");
  verify->add_option("--N", n, "N override");
  verify->add_option("--N-max", n_max, "N_max override (subsequence)");
  pf.attach(verify);
  add_format(verify);

  CLI11_PARSE(app, argc, argv);

  if (format.empty())
    format = (scan->parsed() || imaginary->parsed()) ? "csv" : "text";

  try {
    if (eval->parsed()) return run_eval(r_text, n, pf, format, out_path);
    if (predict->parsed()) return run_predict(r_text, pf, format, out_path);

    if (scan->parsed()) {
      const ParamPtr param = parse_param(r_text);
      const f8_precision prec = pf.resolve();
      const auto ns = nrange.resolve();
      f8_report* raw = nullptr;
      check(f8_growth_scan(param.get(), ns.data(), ns.size(),
                           mode == "full" ? F8_SCAN_FULL_SUM
                                          : F8_SCAN_PRODUCT_ONLY,
                           allow_large ? 1 : 0, &prec, &raw));
      const ReportPtr report(raw);
      return emit_report(report.get(), format, out_path);
    }

    if (imaginary->parsed()) {
      const f8_precision prec = pf.resolve();
      const auto ns = nrange.resolve();
      const double s = std::strtod(s_text.c_str(), nullptr);
      f8_report* raw = nullptr;
      check(f8_imaginary_scan(s, ns.data(), ns.size(), &prec, &raw));
      const ReportPtr report(raw);
      return emit_report(report.get(), format, out_path);
    }

    if (table->parsed()) {
      const ParamPtr param = parse_param(r_text);
      f8_report* raw = nullptr;
      check(f8_sign_table_check(param.get(), n, &raw));
      const ReportPtr report(raw);
      return emit_report(report.get(), format, out_path);
    }

    if (verify->parsed())
      return run_verify(suite, r_text, n, n_max, pf, format, out_path);
  } catch (const std::exception& e) {
    die(e.what());
  }
  return kExitBadInput;
}
