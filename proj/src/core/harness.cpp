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

#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

namespace fig8::harness {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_increasing(const std::vector<std::int64_t>& ns) {
  for (std::size_t i = 0; i + 1 < ns.size(); ++i)
    if (ns[i] >= ns[i + 1])
      throw DomainError("N list must be strictly increasing");
  if (!ns.empty() && ns.front() < 1)
    throw DomainError("N must be positive");
}

void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
        fn(i);
    }));
  for (auto& w : workers) w.get();
}

// log of sum of f(k) for all-positive term sequences (imaginary case),
// double precision all the way.
double log_sum_exp_terms(const Parameter& param, std::int64_t N) {
  double max_la = 0.0;
  eval::for_each_term(param, N, [&](std::int64_t, int s, double la) {
    if (s != 0 && la > max_la) max_la = la;
  });
  double acc = 0.0;
  eval::for_each_term(param, N, [&](std::int64_t, int s, double la) {
    if (s != 0) acc += s * std::exp(la - max_la);
  });
  return max_la + std::log(acc);
}

SubseqClass subseq_class_of(const Parameter& param, std::int64_t N) {
  if (!param.is_rational() || param.is_one() || param.num() == 0)
    return SubseqClass::NotApplicable;
  return N % param.num() == 0 ? SubseqClass::MultipleOfQ
                              : SubseqClass::NonMultiple;
}

std::string format_g(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void note_real_kind_caveat(SuiteReport& report, const Parameter& param) {
  if (param.kind() == Parameter::Kind::CircularReal)
    report.notes.push_back(
        "real-kind (binary64) parameter stands in for an irrational value");
}

}  // namespace

std::string_view scan_mode_name(ScanMode m) {
  return m == ScanMode::FullSum ? "full-sum" : "product-only";
}

std::string_view subseq_class_name(SubseqClass c) {
  switch (c) {
    case SubseqClass::MultipleOfQ: return "multiple-of-q";
    case SubseqClass::NonMultiple: return "non-multiple";
    case SubseqClass::NotApplicable: return "n/a";
  }
  return "n/a";
}

std::vector<ScanRow> growth_scan(const Parameter& param,
                                 const std::vector<std::int64_t>& N_list,
                                 const ScanOptions& options,
                                 const PrecisionConfig& cfg) {
  cfg.validate();
  require_increasing(N_list);
  if (options.mode == ScanMode::FullSum && !options.allow_large_full_sum &&
      !N_list.empty() && N_list.back() > options.full_sum_cap)
    throw DomainError(
        "full-sum scans are capped at N = " +
        std::to_string(options.full_sum_cap) +
        " by default; raise the cap explicitly for larger N");

  const asym::Regime regime = asym::classify(param, cfg);
  const double prediction = regime.limsup_prediction;
  const bool circular = param.is_circular();

  std::vector<ScanRow> rows(N_list.size());
  auto compute_row = [&](std::size_t i) {
    ScanRow& row = rows[i];
    row.N = N_list[i];
    row.mode = options.mode;
    row.prediction = prediction;
    row.subseq_class = subseq_class_of(param, row.N);
    try {
      if (options.mode == ScanMode::ProductOnly) {
        const eval::FMax fm = eval::f_max(param, row.N);
        row.log_abs = fm.log_f;
      } else if (circular) {
        const eval::JonesEvaluation j = eval::jones_value(param, row.N, cfg);
        if (j.sign == 0) {
          row.failed = true;
          row.note = "J_N vanished exactly";
          row.s_n = row.abs_error = kNaN;
          return;
        }
        row.log_abs = j.log_abs;
      } else {
        row.log_abs = log_sum_exp_terms(param, row.N);
      }
      row.s_n = circular
                    ? 2.0 * kPi * row.log_abs / static_cast<double>(row.N)
                    : row.log_abs / static_cast<double>(row.N);
      row.abs_error = std::abs(row.s_n - row.prediction);
    } catch (const Error& e) {
      row.failed = true;
      row.note = e.what();
      row.log_abs = row.s_n = row.abs_error = kNaN;
    }
  };

  parallel_for(rows.size(), options.threads, compute_row);
  return rows;
}

SuiteReport sandwich_check(const Parameter& param, std::int64_t N,
                           const PrecisionConfig& cfg) {
  SuiteReport report;
  report.suite = "sandwich";
  const asym::Regime regime = asym::classify(param, cfg);
  if (regime.tag != asym::RegimeTag::MainIrrational) {
    report.skipped = true;
    report.skip_reason =
        "sandwich bounds need the main irrational regime (5/6 < r < 7/6, "
        "real-kind or r = 1); got " +
        std::string(asym::regime_tag_name(regime.tag));
    return report;
  }

  const eval::JonesDetailed detail = eval::jones_value_detailed(param, N, cfg);
  const BigReal abs_j = abs(detail.eval.value);
  const BigReal f_n = detail.max_abs_f;
  const double log_f = log(f_n).to_double();

  report.check("F_N - 1 <= |J_N|", f_n - std::int64_t{1} <= abs_j,
               detail.eval.log_abs,
               log(abs(f_n - std::int64_t{1})).to_double());
  report.check("|J_N| <= N F_N", abs_j <= N * f_n, detail.eval.log_abs,
               std::log(static_cast<double>(N)) + log_f);
  report.info("log F_N", log_f);
  report.info("argmax_k |f(k)|", static_cast<double>(detail.argmax));
  const double s_n =
      2.0 * kPi * detail.eval.log_abs / static_cast<double>(N);
  report.info("s_N = 2 pi log|J_N| / N", s_n, regime.limsup_prediction);
  note_real_kind_caveat(report, param);
  return report;
}

SuiteReport subsequence_analysis(const Parameter& param, std::int64_t N_max,
                                 const PrecisionConfig& cfg) {
  const asym::Regime regime = asym::classify(param, cfg);
  if (regime.tag != asym::RegimeTag::MainRational)
    throw DomainError(
        "subsequence_analysis requires the main-rational regime "
        "(5/6 < r < 7/6, rational, r != 1); got " +
        std::string(asym::regime_tag_name(regime.tag)));

  SuiteReport report;
  report.suite = "subsequence";
  const std::int64_t q = param.num();
  const std::int64_t p = param.den();
  const double vh = regime.limsup_prediction;

  const unsigned bits = cfg.working_bits;
  const BigReal two_pi_r =
      std::int64_t{2} * BigReal::pi(bits) * q / p;
  const BigReal lower_base = pow_ui(two_pi_r, 6) / std::int64_t{360};
  // |1 - 1/r| = |q - p| / q exactly
  const BigReal slope = BigReal(std::abs(q - p), bits) / q;

  std::vector<std::int64_t> failed_multiples;
  for (std::int64_t N = q; N <= N_max; N += q) {
    const eval::JonesEvaluation j = eval::jones_value(param, N, cfg);
    const BigReal abs_j = abs(j.value);
    const BigReal lower = lower_base / pow_ui(BigReal(N, bits), 6);
    // |J| < N|1-1/r| compared division-free as q|J| < N|q-p|, so an
    // exact tie is decided by the integers and not by rounding of 1/q
    const std::int64_t upper_scaled = N * std::abs(q - p);
    const bool ok = lower < abs_j && q * abs_j < upper_scaled;
    if (!ok) failed_multiples.push_back(N);
    report.check("multiple N=" + std::to_string(N) +
                     ": (2 pi r)^6/360N^6 < |J_N| < N|1-1/r|",
                 ok, abs_j.to_double(), (slope * N).to_double());
  }
  if (!failed_multiples.empty()) {
    std::string ns;
    for (const auto n : failed_multiples)
      ns += (ns.empty() ? "" : ", ") + std::to_string(n);
    report.notes.push_back("bound violated at N = " + ns);
  }

  // non-multiples, one per period, tracked against the limsup prediction
  double last_gap = kNaN;
  double last_sn = kNaN;
  for (std::int64_t N = q + 1; N <= N_max; N += q) {
    const eval::JonesEvaluation j = eval::jones_value(param, N, cfg);
    if (j.sign == 0) continue;
    last_sn = 2.0 * kPi * j.log_abs / static_cast<double>(N);
    last_gap = std::abs(last_sn - vh);
    report.info("non-multiple N=" + std::to_string(N) + ": s_N", last_sn, vh);
  }
  report.info("trend: |s_N - vhat| at largest tracked non-multiple", last_gap);
  report.notes.push_back(
      "real-kind parameters stand in for irrational values; rational "
      "subsequence classes are exact");
  return report;
}

SuiteReport small_r_check(const Parameter& param, std::int64_t N,
                          const PrecisionConfig& cfg) {
  if (!param.is_circular() || !(param.value() < 1.0 / 6.0))
    throw DomainError("small_r_check requires a circular parameter with 0 <= r < 1/6");

  SuiteReport report;
  report.suite = "small-r";
  const double r = param.value();

  const eval::JonesEvaluation j = eval::jones_value(param, N, cfg);
  if (r == 0.0) {
    report.check("J_N(E; 1) = 1 exactly", j.value == std::int64_t{1},
                 j.value_double, 1.0);
    return report;
  }

  const unsigned bits = cfg.working_bits;
  const BigReal abs_j = abs(j.value);
  const BigReal lower = pow_ui(std::int64_t{2} * BigReal::pi(bits) * r, 6) /
                        (std::int64_t{360} * pow_ui(BigReal(N, bits), 6));
  report.check("(2 pi r)^6/360N^6 < |J_N|", lower < abs_j, abs_j.to_double(),
               lower.to_double());
  report.check("|J_N| < N", abs_j < N, abs_j.to_double(),
               static_cast<double>(N));

  const double s_n = 2.0 * kPi * j.log_abs / static_cast<double>(N);
  const double band_lo =
      2.0 * kPi * log(lower).to_double() / static_cast<double>(N);
  const double band_hi =
      2.0 * kPi * std::log(static_cast<double>(N)) / static_cast<double>(N);
  report.check("s_N inside the implied window", band_lo <= s_n && s_n <= band_hi,
               s_n, band_hi);
  report.info("window lower edge", band_lo);
  note_real_kind_caveat(report, param);
  return report;
}

SuiteReport local_maxima_audit(const Parameter& param, std::int64_t N,
                               const PrecisionConfig& cfg) {
  const asym::Regime regime = asym::classify(param, cfg);
  if (regime.tag != asym::RegimeTag::NearMainIrrational)
    throw DomainError(
        "local_maxima_audit requires the near-main regime "
        "(1/6 <= |1-r| < 1/4, real-kind); got " +
        std::string(asym::regime_tag_name(regime.tag)));

  SuiteReport report;
  report.suite = "local-maxima";
  const double r = param.value();

  const eval::TermSequence seq = eval::partial_products(param, N);
  std::vector<std::int64_t> maxima;
  for (std::int64_t k = 0; k < N; ++k) {
    const double here = seq.log_abs[static_cast<std::size_t>(k)];
    const double left =
        k > 0 ? seq.log_abs[static_cast<std::size_t>(k - 1)]
              : -std::numeric_limits<double>::infinity();
    const double right =
        k + 1 < N ? seq.log_abs[static_cast<std::size_t>(k + 1)]
                  : -std::numeric_limits<double>::infinity();
    if (here > left && here >= right) maxima.push_back(k);
  }

  const eval::CriticalIndices ci = eval::critical_indices(param, N);
  std::vector<std::int64_t> expected;
  expected.push_back(*eval::CriticalIndices::floor_of(ci.a));
  expected.push_back(*eval::CriticalIndices::floor_of(ci.d));
  const bool high_side = r > 1.0;
  if (high_side)
    expected.push_back(*eval::CriticalIndices::floor_of(ci.a_double_prime));
  std::sort(expected.begin(), expected.end());

  bool sets_match = maxima.size() == expected.size();
  if (sets_match)
    for (std::size_t i = 0; i < maxima.size(); ++i)
      sets_match = sets_match && std::abs(maxima[i] - expected[i]) <= 1;

  std::string found;
  for (const auto k : maxima)
    found += (found.empty() ? "" : ", ") + std::to_string(k);
  report.check("local maxima of |f| sit at the predicted indices (+-1)",
               sets_match, static_cast<double>(maxima.size()),
               static_cast<double>(expected.size()));
  report.notes.push_back("found maxima at k = {" + found + "}");

  const eval::FMax fm = eval::f_max(param, N);
  const std::int64_t floor_d = *eval::CriticalIndices::floor_of(ci.d);
  report.check("global maximum of |f| at floor(D) (+-1)",
               std::abs(fm.argmax - floor_d) <= 1,
               static_cast<double>(fm.argmax), static_cast<double>(floor_d));

  const double delta = asym::delta_gap(r, cfg);
  report.check("delta gap positive", delta > 0.0, delta, 0.0);

  for (const auto k : expected)
    report.info("log|f| at k = " + std::to_string(k),
                seq.log_abs[static_cast<std::size_t>(k)]);
  note_real_kind_caveat(report, param);
  return report;
}

std::vector<ScanRow> imaginary_scan(double s,
                                    const std::vector<std::int64_t>& N_list,
                                    const PrecisionConfig& cfg,
                                    double epsilon) {
  const Parameter param = Parameter::imaginary(s);
  require_increasing(N_list);
  const double prediction = asym::imaginary_growth(s, cfg);
  const bool below =
      2.0 * kPi * s <= special::arccosh_three_halves();
  const double g0 = 2.0 * std::cosh(2.0 * kPi * s) - 2.0;

  std::vector<ScanRow> rows(N_list.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ScanRow& row = rows[i];
    row.N = N_list[i];
    row.mode = ScanMode::FullSum;
    row.prediction = prediction;
    row.log_abs = log_sum_exp_terms(param, row.N);
    row.s_n = row.log_abs / static_cast<double>(row.N);
    row.abs_error = std::abs(row.s_n - prediction);
    if (below) {
      const double j_n = std::exp(row.log_abs);
      const double nd = static_cast<double>(row.N);
      if (!(j_n > g0 - epsilon && j_n < nd)) {
        row.failed = true;
        row.note = "J_N = " + format_g(j_n) + " outside (g(0)-eps, N) = (" +
                   format_g(g0 - epsilon) + ", " + format_g(nd) + ")";
      }
    }
  }
  return rows;
}

SuiteReport appendix_suite(const PrecisionConfig& cfg) {
  SuiteReport report;
  report.suite = "appendix";
  std::mt19937_64 rng(0x41f8c0deull);

  auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };

  // boundary zero
  const double v23 = asym::appendix_v(2.0 / 3.0, cfg);
  report.check("V(2/3) = 0 within 1e-9", std::abs(v23) <= 1e-9, v23, 1e-9);

  // symmetry V(2-r) = V(r), W(2-r) = W(r)
  double worst_v_sym = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = uniform(2.0 / 3.0 + 1e-6, 1.0 - 1e-6);
    worst_v_sym = std::max(
        worst_v_sym,
        std::abs(asym::appendix_v(2.0 - r, cfg) - asym::appendix_v(r, cfg)));
  }
  report.check("V(2-r) = V(r) within 1e-12 (100 random points)",
               worst_v_sym <= 1e-12, worst_v_sym, 1e-12);
  double worst_w_sym = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double r = uniform(3.0 / 4.0 + 1e-6, 5.0 / 6.0 - 1e-6);
    worst_w_sym = std::max(
        worst_w_sym,
        std::abs(asym::appendix_w(2.0 - r, cfg) - asym::appendix_w(r, cfg)));
  }
  report.check("W(2-r) = W(r) within 1e-12 (100 random points)",
               worst_w_sym <= 1e-12, worst_w_sym, 1e-12);

  // closed-form dV against central differences
  double worst_dv = 0.0;
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double r = 0.7 + (0.99 - 0.7) * (i + 0.5) / 100.0;
    const double fd =
        (asym::appendix_v(r + h, cfg) - asym::appendix_v(r - h, cfg)) / (2 * h);
    worst_dv = std::max(worst_dv, std::abs(fd - asym::appendix_dv(r, cfg)));
  }
  report.check("dV/dr closed form matches central differences within 1e-6",
               worst_dv <= 1e-6, worst_dv, 1e-6);

  // dV > 0 left of 1
  bool dv_positive = true;
  double min_dv = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const double r = (2.0 / 3.0 + 0.01) + (0.99 - 2.0 / 3.0 - 0.01) * i / 99.0;
    const double dv = asym::appendix_dv(r, cfg);
    min_dv = std::min(min_dv, dv);
    dv_positive = dv_positive && dv > 0.0;
  }
  report.check("dV/dr > 0 on (2/3 + 0.01, 0.99)", dv_positive, min_dv, 0.0);

  // V > 0 inside (2/3, 1) and (1, 4/3)
  bool v_positive = true;
  double min_v = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const double t = (i + 0.5) / 100.0;
    const double r1 = 2.0 / 3.0 + 0.005 + (1.0 - 2.0 / 3.0 - 0.01) * t;
    const double r2 = 1.0 + 0.005 + (4.0 / 3.0 - 1.0 - 0.01) * t;
    const double v1 = asym::appendix_v(r1, cfg);
    const double v2 = asym::appendix_v(r2, cfg);
    min_v = std::min({min_v, v1, v2});
    v_positive = v_positive && v1 > 0.0 && v2 > 0.0;
  }
  report.check("V > 0 on the interiors of (2/3, 1) and (1, 4/3)", v_positive,
               min_v, 0.0);

  // W > 0 inside (3/4, 5/6) and (7/6, 5/4)
  bool w_positive = true;
  double min_w = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 100; ++i) {
    const double t = (i + 0.5) / 100.0;
    const double r1 = 3.0 / 4.0 + 0.005 + (5.0 / 6.0 - 3.0 / 4.0 - 0.01) * t;
    const double r2 = 7.0 / 6.0 + 0.005 + (5.0 / 4.0 - 7.0 / 6.0 - 0.01) * t;
    const double w1 = asym::appendix_w(r1, cfg);
    const double w2 = asym::appendix_w(r2, cfg);
    min_w = std::min({min_w, w1, w2});
    w_positive = w_positive && w1 > 0.0 && w2 > 0.0;
  }
  report.check("W > 0 on the interiors of (3/4, 5/6) and (7/6, 5/4)",
               w_positive, min_w, 0.0);

  // dW > 0 by finite differences (its printed closed form is checked
  // nowhere; the derivative is audited numerically only)
  bool dw_positive = true;
  double min_dw = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 50; ++i) {
    const double r = (3.0 / 4.0 + 0.01) + (5.0 / 6.0 - 3.0 / 4.0 - 0.02) * i / 49.0;
    const double fd =
        (asym::appendix_w(r + h, cfg) - asym::appendix_w(r - h, cfg)) / (2 * h);
    min_dw = std::min(min_dw, fd);
    dw_positive = dw_positive && fd > 0.0;
  }
  report.check("dW/dr > 0 on (3/4 + 0.01, 5/6 - 0.01) by finite differences",
               dw_positive, min_dw, 0.0);

  // continuity of vhat at r = 1: strictly shrinking gaps
  const double v1 = asym::vhat(1.0, cfg).vhat;
  bool shrinking = true;
  double prev_plus = std::numeric_limits<double>::infinity();
  double prev_minus = std::numeric_limits<double>::infinity();
  double last_gap = kNaN;
  for (int k = 2; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    const double gp = std::abs(asym::vhat(1.0 + eps, cfg).vhat - v1);
    const double gm = std::abs(asym::vhat(1.0 - eps, cfg).vhat - v1);
    shrinking = shrinking && gp < prev_plus && gm < prev_minus;
    prev_plus = gp;
    prev_minus = gm;
    last_gap = std::max(gp, gm);
  }
  report.check("vhat(1 +- 10^-k) -> vhat(1) with strictly decreasing gaps",
               shrinking, last_gap, 0.0);

  // classification is total over every parameter kind
  bool total = true;
  for (int i = 0; i < 200; ++i) {
    Parameter p = i % 3 == 0 ? Parameter::real(uniform(0.0, 2.0))
                  : i % 3 == 1
                      ? Parameter::rational(1 + static_cast<std::int64_t>(
                                                    uniform(0.0, 40.0)),
                                            1 + static_cast<std::int64_t>(
                                                    uniform(0.0, 40.0)))
                      : Parameter::imaginary(uniform(0.01, 3.0));
    const auto tag = asym::classify(p, cfg).tag;
    total = total && asym::regime_tag_name(tag) != std::string_view("unknown");
  }
  report.check("classification is total over random parameters", total,
               kNaN, kNaN);

  return report;
}

}  // namespace fig8::harness
