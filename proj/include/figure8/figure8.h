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

  C interface of the figure8 shared library.  Handles are opaque; every
  function returns an f8_status, with results written through out
  parameters.  On any failure f8_last_error() carries a message for the
  calling thread.
*/

#ifndef FIGURE8_H
#define FIGURE8_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum f8_status {
  F8_OK = 0,
  F8_ERR_INVALID_ARGUMENT = 1, /* malformed input, bad handle, null pointer */
  F8_ERR_DOMAIN = 2,           /* argument outside a mathematical domain */
  F8_ERR_PARSE = 3,            /* unparseable parameter text */
  F8_ERR_PRECISION = 4,        /* precision/exponent budget exhausted */
  F8_ERR_UNDEFINED = 5,        /* quantity undefined (e.g. growth of 0) */
  F8_ERR_INTERNAL = 6
} f8_status;

/* Message describing the calling thread's most recent failure. */
const char* f8_last_error(void);

const char* f8_version(void);

/* ------------------------------------------------------------------ */
/* parameters                                                          */

typedef struct f8_parameter f8_parameter;

typedef enum f8_parameter_kind {
  F8_PARAM_RATIONAL = 0,
  F8_PARAM_REAL = 1,
  F8_PARAM_IMAGINARY = 2
} f8_parameter_kind;

/* Accepts "9/10" (reduced on parse), "0.9", "i0.5" or "0.5i". */
f8_status f8_parameter_parse(const char* text, f8_parameter** out);
f8_status f8_parameter_rational(int64_t num, int64_t den, f8_parameter** out);
f8_status f8_parameter_real(double r, f8_parameter** out);
f8_status f8_parameter_imaginary(double s, f8_parameter** out);
void f8_parameter_free(f8_parameter* param);

f8_status f8_parameter_kind_of(const f8_parameter* param,
                               f8_parameter_kind* out);
f8_status f8_parameter_value(const f8_parameter* param, double* out);
f8_status f8_parameter_fraction(const f8_parameter* param, int64_t* num,
                                int64_t* den);

/* ------------------------------------------------------------------ */
/* precision                                                           */

typedef struct f8_precision {
  unsigned working_bits; /* significand bits of the extended path, >= 53 */
  double abs_tol;        /* absolute series/quadrature truncation target */
} f8_precision;

f8_precision f8_precision_default(void);

/* ------------------------------------------------------------------ */
/* special functions                                                   */

f8_status f8_lobachevsky(double x, const f8_precision* prec, double* out);
f8_status f8_hyperbolic_gamma(double z, const f8_precision* prec, double* out);
f8_status f8_theta(double r, double* out);
f8_status f8_phi(double r, double* out);
f8_status f8_phi_hyperbolic(double s, double* out);

/* ------------------------------------------------------------------ */
/* evaluator                                                           */

typedef struct f8_jones {
  int sign;           /* sign of J_N; 0 only for an exactly zero sum */
  double log_abs;     /* log|J_N|; -inf when J_N = 0 */
  double value;       /* J_N rounded to binary64; +-inf on overflow */
  int64_t n;
  unsigned precision_bits_used;
} f8_jones;

f8_status f8_jones_eval(const f8_parameter* param, int64_t n,
                        const f8_precision* prec, f8_jones* out);
f8_status f8_jones_log_growth(const f8_parameter* param, int64_t n,
                              const f8_precision* prec, double* out);
f8_status f8_g_factor(const f8_parameter* param, int64_t j, int64_t n,
                      double* out);

/* signs[k] in {-1, 0, +1} and log|f(k)| for k = 0..n-1; either buffer
   may be NULL.  zero_from_out receives the first k with f(k) = 0, or -1
   when no term vanishes. */
f8_status f8_term_sequence(const f8_parameter* param, int64_t n,
                           int8_t* signs, double* log_abs,
                           int64_t* zero_from_out);

typedef struct f8_critical_indices {
  /* a..a_double_prime are NaN when not defined for the parameter */
  double a, b, c, d, b_prime, a_prime, a_double_prime;
} f8_critical_indices;

f8_status f8_critical_indices_of(const f8_parameter* param, int64_t n,
                                 f8_critical_indices* out);

typedef struct f8_f_max {
  int64_t argmax;
  double log_f;
  int degenerate; /* 1 when every f(k), k >= 1, vanished */
} f8_f_max;

f8_status f8_f_max_of(const f8_parameter* param, int64_t n, f8_f_max* out);

/* ------------------------------------------------------------------ */
/* asymptotics                                                         */

typedef struct f8_regime {
  char tag[32]; /* "main-irrational", "uncovered", ... */
  double limsup_prediction; /* NaN when uncovered */
  double liminf_prediction;
  int limit_exists;
} f8_regime;

f8_status f8_classify(const f8_parameter* param, const f8_precision* prec,
                      f8_regime* out);
f8_status f8_vhat(double r, const f8_precision* prec, double* out);
f8_status f8_cone_manifold_volume(double cone_angle, const f8_precision* prec,
                                  double* out);
f8_status f8_delta_gap(double r, const f8_precision* prec, double* out);
f8_status f8_imaginary_growth(double s, const f8_precision* prec, double* out);
f8_status f8_appendix_v(double r, const f8_precision* prec, double* out);
f8_status f8_appendix_w(double r, const f8_precision* prec, double* out);
f8_status f8_appendix_dv(double r, const f8_precision* prec, double* out);

/* ------------------------------------------------------------------ */
/* reports (scans and verification suites)                             */

typedef struct f8_report f8_report;

typedef enum f8_scan_mode {
  F8_SCAN_FULL_SUM = 0,
  F8_SCAN_PRODUCT_ONLY = 1
} f8_scan_mode;

/* One growth observation per N.  n_list must be strictly increasing.
   allow_large_full_sum lifts the default N <= 10^4 full-sum cap. */
f8_status f8_growth_scan(const f8_parameter* param, const int64_t* n_list,
                         size_t n_count, f8_scan_mode mode,
                         int allow_large_full_sum, const f8_precision* prec,
                         f8_report** out);

f8_status f8_imaginary_scan(double s, const int64_t* n_list, size_t n_count,
                            const f8_precision* prec, f8_report** out);

f8_status f8_sandwich_check(const f8_parameter* param, int64_t n,
                            const f8_precision* prec, f8_report** out);
f8_status f8_subsequence_analysis(const f8_parameter* param, int64_t n_max,
                                  const f8_precision* prec, f8_report** out);
f8_status f8_small_r_check(const f8_parameter* param, int64_t n,
                           const f8_precision* prec, f8_report** out);
f8_status f8_local_maxima_audit(const f8_parameter* param, int64_t n,
                                const f8_precision* prec, f8_report** out);
f8_status f8_sign_table_check(const f8_parameter* param, int64_t n,
                              f8_report** out);
f8_status f8_appendix_suite(const f8_precision* prec, f8_report** out);

/* 1 = every non-informational check passed, 0 = at least one failed. */
int f8_report_passed(const f8_report* report);
/* 1 when the suite was skipped as not applicable to the input. */
int f8_report_skipped(const f8_report* report);

/* Serialized forms; free the returned string with f8_string_free.
   Scans render rows with the fixed CSV column order
   N,r_kind,r,mode,log_abs,s_N,prediction,abs_error,subseq_class;
   suite reports render their checks. */
f8_status f8_report_to_json(const f8_report* report, char** out);
f8_status f8_report_to_csv(const f8_report* report, char** out);
f8_status f8_report_to_text(const f8_report* report, char** out);

void f8_report_free(f8_report* report);
void f8_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FIGURE8_H */
