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

#include "figure8/figure8.h"

#include <cstdio>
#include <cstring>
#include <optional>
#include <string>

#include "asymptotics.hpp"
#include "evaluator.hpp"
#include "harness.hpp"
#include "parameter.hpp"
#include "serialize.hpp"
#include "version.hpp"

struct f8_parameter {
  fig8::Parameter value;
};

struct f8_report {
  std::optional<fig8::Parameter> param;
  std::vector<fig8::harness::ScanRow> rows;
  std::optional<fig8::SuiteReport> suite;
};

namespace {

thread_local std::string t_last_error;

void set_error(const char* what) { t_last_error = what; }

template <typename Fn>
f8_status wrap(Fn&& fn) noexcept {
  try {
    fn();
    return F8_OK;
  } catch (const fig8::ParseError& e) {
    set_error(e.what());
    return F8_ERR_PARSE;
  } catch (const fig8::DomainError& e) {
    set_error(e.what());
    return F8_ERR_DOMAIN;
  } catch (const fig8::PrecisionError& e) {
    set_error(e.what());
    return F8_ERR_PRECISION;
  } catch (const fig8::UndefinedGrowthError& e) {
    set_error(e.what());
    return F8_ERR_UNDEFINED;
  } catch (const std::exception& e) {
    set_error(e.what());
    return F8_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown failure");
    return F8_ERR_INTERNAL;
  }
}

f8_status invalid(const char* what) {
  set_error(what);
  return F8_ERR_INVALID_ARGUMENT;
}

fig8::PrecisionConfig to_config(const f8_precision* prec) {
  if (!prec) return {};
  return {prec->working_bits, prec->abs_tol};
}

std::vector<std::int64_t> to_vector(const int64_t* data, size_t count) {
  return std::vector<std::int64_t>(data, data + count);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* f8_last_error(void) { return t_last_error.c_str(); }

const char* f8_version(void) { return fig8::kVersion; }

f8_status f8_parameter_parse(const char* text, f8_parameter** out) {
  if (!text || !out) return invalid("null text or output pointer");
  return wrap([&] { *out = new f8_parameter{fig8::Parameter::parse(text)}; });
}

f8_status f8_parameter_rational(int64_t num, int64_t den, f8_parameter** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = new f8_parameter{fig8::Parameter::rational(num, den)}; });
}

f8_status f8_parameter_real(double r, f8_parameter** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = new f8_parameter{fig8::Parameter::real(r)}; });
}

f8_status f8_parameter_imaginary(double s, f8_parameter** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = new f8_parameter{fig8::Parameter::imaginary(s)}; });
}

void f8_parameter_free(f8_parameter* param) { delete param; }

f8_status f8_parameter_kind_of(const f8_parameter* param,
                               f8_parameter_kind* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  switch (param->value.kind()) {
    case fig8::Parameter::Kind::CircularRational: *out = F8_PARAM_RATIONAL; break;
    case fig8::Parameter::Kind::CircularReal: *out = F8_PARAM_REAL; break;
    case fig8::Parameter::Kind::Imaginary: *out = F8_PARAM_IMAGINARY; break;
  }
  return F8_OK;
}

f8_status f8_parameter_value(const f8_parameter* param, double* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  *out = param->value.value();
  return F8_OK;
}

f8_status f8_parameter_fraction(const f8_parameter* param, int64_t* num,
                                int64_t* den) {
  if (!param || !num || !den) return invalid("null parameter or output pointer");
  return wrap([&] {
    *num = param->value.num();
    *den = param->value.den();
  });
}

f8_precision f8_precision_default(void) {
  const fig8::PrecisionConfig cfg;
  return {cfg.working_bits, cfg.abs_tol};
}

f8_status f8_lobachevsky(double x, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] {
    *out = fig8::special::lobachevsky(fig8::special::Radians(x), to_config(prec));
  });
}

f8_status f8_hyperbolic_gamma(double z, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::special::hyperbolic_gamma(z, to_config(prec)); });
}

f8_status f8_theta(double r, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::special::theta(r).value; });
}

f8_status f8_phi(double r, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::special::phi(r).value; });
}

f8_status f8_phi_hyperbolic(double s, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::special::phi_hyperbolic(s); });
}

f8_status f8_jones_eval(const f8_parameter* param, int64_t n,
                        const f8_precision* prec, f8_jones* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    const auto j = fig8::eval::jones_value(param->value, n, to_config(prec));
    out->sign = j.sign;
    out->log_abs = j.log_abs;
    out->value = j.value_double;
    out->n = j.N;
    out->precision_bits_used = j.precision_bits_used;
  });
}

f8_status f8_jones_log_growth(const f8_parameter* param, int64_t n,
                              const f8_precision* prec, double* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    *out = fig8::eval::jones_log_growth(param->value, n, to_config(prec));
  });
}

f8_status f8_g_factor(const f8_parameter* param, int64_t j, int64_t n,
                      double* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] { *out = fig8::eval::g_factor(j, param->value, n); });
}

f8_status f8_term_sequence(const f8_parameter* param, int64_t n, int8_t* signs,
                           double* log_abs, int64_t* zero_from_out) {
  if (!param) return invalid("null parameter");
  return wrap([&] {
    const auto tail = fig8::eval::for_each_term(
        param->value, n, [&](std::int64_t k, int s, double la) {
          if (signs) signs[k] = static_cast<int8_t>(s);
          if (log_abs) log_abs[k] = la;
        });
    if (zero_from_out) *zero_from_out = tail.zero_from.value_or(-1);
  });
}

f8_status f8_critical_indices_of(const f8_parameter* param, int64_t n,
                                 f8_critical_indices* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    const auto ci = fig8::eval::critical_indices(param->value, n);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out->a = ci.a.value_or(nan);
    out->b = ci.b.value_or(nan);
    out->c = ci.c.value_or(nan);
    out->d = ci.d.value_or(nan);
    out->b_prime = ci.b_prime.value_or(nan);
    out->a_prime = ci.a_prime.value_or(nan);
    out->a_double_prime = ci.a_double_prime.value_or(nan);
  });
}

f8_status f8_f_max_of(const f8_parameter* param, int64_t n, f8_f_max* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    const auto fm = fig8::eval::f_max(param->value, n);
    out->argmax = fm.argmax;
    out->log_f = fm.log_f;
    out->degenerate = fm.degenerate ? 1 : 0;
  });
}

f8_status f8_classify(const f8_parameter* param, const f8_precision* prec,
                      f8_regime* out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    const auto regime = fig8::asym::classify(param->value, to_config(prec));
    const auto name = fig8::asym::regime_tag_name(regime.tag);
    std::snprintf(out->tag, sizeof out->tag, "%.*s",
                  static_cast<int>(name.size()), name.data());
    out->limsup_prediction = regime.limsup_prediction;
    out->liminf_prediction = regime.liminf_prediction;
    out->limit_exists = regime.limit_exists ? 1 : 0;
  });
}

f8_status f8_vhat(double r, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::asym::vhat(r, to_config(prec)).vhat; });
}

f8_status f8_cone_manifold_volume(double cone_angle, const f8_precision* prec,
                                  double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] {
    *out = fig8::asym::cone_manifold_volume(fig8::special::Radians(cone_angle),
                                            to_config(prec));
  });
}

f8_status f8_delta_gap(double r, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::asym::delta_gap(r, to_config(prec)); });
}

f8_status f8_imaginary_growth(double s, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::asym::imaginary_growth(s, to_config(prec)); });
}

f8_status f8_appendix_v(double r, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::asym::appendix_v(r, to_config(prec)); });
}

f8_status f8_appendix_w(double r, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::asym::appendix_w(r, to_config(prec)); });
}

f8_status f8_appendix_dv(double r, const f8_precision* prec, double* out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] { *out = fig8::asym::appendix_dv(r, to_config(prec)); });
}

f8_status f8_growth_scan(const f8_parameter* param, const int64_t* n_list,
                         size_t n_count, f8_scan_mode mode,
                         int allow_large_full_sum, const f8_precision* prec,
                         f8_report** out) {
  if (!param || !n_list || !out) return invalid("null parameter, list or output");
  return wrap([&] {
    fig8::harness::ScanOptions options;
    options.mode = mode == F8_SCAN_FULL_SUM
                       ? fig8::harness::ScanMode::FullSum
                       : fig8::harness::ScanMode::ProductOnly;
    options.allow_large_full_sum = allow_large_full_sum != 0;
    auto rows = fig8::harness::growth_scan(param->value,
                                           to_vector(n_list, n_count), options,
                                           to_config(prec));
    *out = new f8_report{param->value, std::move(rows), std::nullopt};
  });
}

f8_status f8_imaginary_scan(double s, const int64_t* n_list, size_t n_count,
                            const f8_precision* prec, f8_report** out) {
  if (!n_list || !out) return invalid("null list or output pointer");
  return wrap([&] {
    auto rows = fig8::harness::imaginary_scan(s, to_vector(n_list, n_count),
                                              to_config(prec));
    *out = new f8_report{fig8::Parameter::imaginary(s), std::move(rows),
                         std::nullopt};
  });
}

f8_status f8_sandwich_check(const f8_parameter* param, int64_t n,
                            const f8_precision* prec, f8_report** out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    auto suite = fig8::harness::sandwich_check(param->value, n, to_config(prec));
    *out = new f8_report{param->value, {}, std::move(suite)};
  });
}

f8_status f8_subsequence_analysis(const f8_parameter* param, int64_t n_max,
                                  const f8_precision* prec, f8_report** out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    auto suite =
        fig8::harness::subsequence_analysis(param->value, n_max, to_config(prec));
    *out = new f8_report{param->value, {}, std::move(suite)};
  });
}

f8_status f8_small_r_check(const f8_parameter* param, int64_t n,
                           const f8_precision* prec, f8_report** out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    auto suite = fig8::harness::small_r_check(param->value, n, to_config(prec));
    *out = new f8_report{param->value, {}, std::move(suite)};
  });
}

f8_status f8_local_maxima_audit(const f8_parameter* param, int64_t n,
                                const f8_precision* prec, f8_report** out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    auto suite =
        fig8::harness::local_maxima_audit(param->value, n, to_config(prec));
    *out = new f8_report{param->value, {}, std::move(suite)};
  });
}

f8_status f8_sign_table_check(const f8_parameter* param, int64_t n,
                              f8_report** out) {
  if (!param || !out) return invalid("null parameter or output pointer");
  return wrap([&] {
    auto suite = fig8::eval::sign_table_check(param->value, n);
    *out = new f8_report{param->value, {}, std::move(suite)};
  });
}

f8_status f8_appendix_suite(const f8_precision* prec, f8_report** out) {
  if (!out) return invalid("null output pointer");
  return wrap([&] {
    auto suite = fig8::harness::appendix_suite(to_config(prec));
    *out = new f8_report{std::nullopt, {}, std::move(suite)};
  });
}

int f8_report_passed(const f8_report* report) {
  if (!report) return 0;
  if (report->suite) return report->suite->overall() ? 1 : 0;
  for (const auto& row : report->rows)
    if (row.failed) return 0;
  return 1;
}

int f8_report_skipped(const f8_report* report) {
  return report && report->suite && report->suite->skipped ? 1 : 0;
}

f8_status f8_report_to_json(const f8_report* report, char** out) {
  if (!report || !out) return invalid("null report or output pointer");
  return wrap([&] {
    if (report->suite) {
      const fig8::Parameter* p = report->param ? &*report->param : nullptr;
      *out = dup_string(fig8::io::report_to_json(p, *report->suite));
    } else {
      *out = dup_string(fig8::io::rows_to_json(*report->param, report->rows));
    }
  });
}

f8_status f8_report_to_csv(const f8_report* report, char** out) {
  if (!report || !out) return invalid("null report or output pointer");
  return wrap([&] {
    if (report->suite) {
      *out = dup_string(fig8::io::report_to_csv(*report->suite));
    } else {
      *out = dup_string(fig8::io::rows_to_csv(*report->param, report->rows));
    }
  });
}

f8_status f8_report_to_text(const f8_report* report, char** out) {
  if (!report || !out) return invalid("null report or output pointer");
  return wrap([&] {
    if (report->suite) {
      *out = dup_string(fig8::io::report_to_text(*report->suite));
    } else {
      *out = dup_string(fig8::io::rows_to_text(*report->param, report->rows));
    }
  });
}

void f8_report_free(f8_report* report) { delete report; }

void f8_string_free(char* s) { delete[] s; }

}  // extern "C"
