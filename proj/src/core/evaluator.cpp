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

#include "evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "special_functions.hpp"

namespace fig8::eval {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNearZero = 1e-13;
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_n(std::int64_t N) {
  if (N < 1) throw DomainError("N must be a positive integer");
}

bool divides_exactly(std::int64_t q, std::int64_t a, std::int64_t p,
                     std::int64_t N) {
  const __int128 modulus = static_cast<__int128>(p) * N;
  return (static_cast<__int128>(q) * a) % modulus == 0;
}

// Angle 2 pi q j / (p N) with the rational part reduced mod 1 in exact
// integer arithmetic, so the cosine never sees a large argument.
double rational_angle(std::int64_t q, std::int64_t p, std::int64_t j,
                      std::int64_t N) {
  const __int128 modulus = static_cast<__int128>(p) * N;
  const __int128 m = (static_cast<__int128>(q) * j) % modulus;
  return 2.0 * kPi * static_cast<double>(static_cast<std::int64_t>(m)) /
         static_cast<double>(static_cast<std::int64_t>(modulus));
}

}  // namespace

bool g_is_exact_zero(std::int64_t j, const Parameter& param, std::int64_t N) {
  if (!param.is_rational()) return false;
  const std::int64_t q = param.num();
  const std::int64_t p = param.den();
  return divides_exactly(q, N - j, p, N) || divides_exactly(q, N + j, p, N);
}

double g_factor(std::int64_t j, const Parameter& param, std::int64_t N) {
  validate_n(N);
  if (j < 0 || j > N) throw DomainError("g_factor: j must satisfy 0 <= j <= N");
  switch (param.kind()) {
    case Parameter::Kind::CircularRational: {
      if (g_is_exact_zero(j, param, N)) return 0.0;
      const std::int64_t q = param.num();
      const std::int64_t p = param.den();
      return 2.0 * std::cos(rational_angle(q, p, 1, 1)) -
             2.0 * std::cos(rational_angle(q, p, j, N));
    }
    case Parameter::Kind::CircularReal: {
      const double r = param.value();
      return 2.0 * std::cos(2.0 * kPi * r) - 2.0 * std::cos(2.0 * kPi * r * j / N);
    }
    case Parameter::Kind::Imaginary: {
      const double s = param.value();
      return 2.0 * std::cosh(2.0 * kPi * s) -
             2.0 * std::cosh(2.0 * kPi * s * j / N);
    }
  }
  throw Error("unreachable parameter kind");
}

TermStreamResult for_each_term(
    const Parameter& param, std::int64_t N,
    const std::function<void(std::int64_t, int, double)>& visit) {
  validate_n(N);
  TermStreamResult result;
  visit(0, +1, 0.0);  // f(0) is the empty product

  int sign = +1;
  double log_abs = 0.0;
  for (std::int64_t j = 1; j < N; ++j) {
    if (!result.zero_from) {
      const double g = g_factor(j, param, N);
      if (g == 0.0) {
        result.zero_from = j;
      } else {
        if (!param.is_rational() && std::abs(g) < kNearZero &&
            !result.first_near_zero)
          result.first_near_zero = j;
        sign = g < 0 ? -sign : sign;
        log_abs += std::log(std::abs(g));
      }
    }
    if (result.zero_from)
      visit(j, 0, -kInf);
    else
      visit(j, sign, log_abs);
  }
  return result;
}

TermSequence partial_products(const Parameter& param, std::int64_t N) {
  TermSequence seq;
  seq.N = N;
  seq.sign.resize(static_cast<std::size_t>(N));
  seq.log_abs.resize(static_cast<std::size_t>(N));
  auto tail = for_each_term(param, N, [&](std::int64_t k, int s, double la) {
    seq.sign[static_cast<std::size_t>(k)] = static_cast<signed char>(s);
    seq.log_abs[static_cast<std::size_t>(k)] = la;
  });
  seq.zero_from = tail.zero_from;
  seq.first_near_zero = tail.first_near_zero;
  return seq;
}

void check_exponent_budget(const Parameter& param, std::int64_t N) {
  double log2_max_g;
  if (param.is_circular()) {
    log2_max_g =
        std::log2(2.0 + 2.0 * std::abs(std::cos(2.0 * kPi * param.value())));
  } else {
    log2_max_g = std::log2(2.0 * std::cosh(2.0 * kPi * param.value()) + 2.0);
  }
  const double budget = 64.0 + 2.0 * static_cast<double>(N) * log2_max_g;
  const double emax = static_cast<double>(mpfr_get_emax());
  if (budget > emax)
    throw PrecisionError(
        "jones_value: required exponent budget " + std::to_string(budget) +
        " bits exceeds the working format's exponent range (" +
        std::to_string(emax) + ")");
}

JonesDetailed jones_value_detailed(const Parameter& param, std::int64_t N,
                                   const PrecisionConfig& cfg) {
  validate_n(N);
  cfg.validate();
  check_exponent_budget(param, N);
  const unsigned bits = cfg.working_bits;

  const BigReal two_pi = std::int64_t{2} * BigReal::pi(bits);
  const bool imaginary = !param.is_circular();

  // base = 2 cos(2 pi r) resp. 2 cosh(2 pi s), at working precision
  BigReal base(bits);
  BigReal r_big(bits);
  if (param.is_rational()) {
    r_big = BigReal(param.num(), bits) / param.den();
    // reduce mod 1 exactly: cos(2 pi q/p) = cos(2 pi (q mod p)/p)
    base = std::int64_t{2} *
           cos(two_pi * (param.num() % param.den()) / param.den());
  } else {
    r_big = BigReal(param.value(), bits);
    base = imaginary ? std::int64_t{2} * cosh(two_pi * r_big)
                     : std::int64_t{2} * cos(two_pi * r_big);
  }

  BigReal f(std::int64_t{1}, bits);
  BigReal sum(std::int64_t{1}, bits);
  BigReal max_abs_f(std::int64_t{1}, bits);
  std::int64_t argmax = 0;
  for (std::int64_t j = 1; j < N; ++j) {
    if (param.is_rational() && g_is_exact_zero(j, param, N)) break;
    BigReal angle(bits);
    if (param.is_rational()) {
      const __int128 modulus = static_cast<__int128>(param.den()) * N;
      const __int128 m = (static_cast<__int128>(param.num()) * j) % modulus;
      angle = two_pi * static_cast<std::int64_t>(m) /
              static_cast<std::int64_t>(modulus);
    } else {
      angle = two_pi * r_big * j / N;
    }
    const BigReal g =
        imaginary ? base - std::int64_t{2} * cosh(angle)
                  : base - std::int64_t{2} * cos(angle);
    if (g.is_zero()) break;  // real-kind degenerate case (e.g. r = 0)
    f *= g;
    sum += f;
    if (abs(f) > max_abs_f) {
      max_abs_f = abs(f);
      argmax = j;
    }
  }

  JonesDetailed out;
  out.eval.N = N;
  out.eval.precision_bits_used = bits;
  out.eval.value = sum;
  out.eval.sign = sum.sign();
  out.eval.log_abs = sum.is_zero() ? -kInf : log(abs(sum)).to_double();
  out.eval.value_double = sum.to_double();
  out.max_abs_f = max_abs_f;
  out.argmax = argmax;
  return out;
}

JonesEvaluation jones_value(const Parameter& param, std::int64_t N,
                            const PrecisionConfig& cfg) {
  return jones_value_detailed(param, N, cfg).eval;
}

double jones_log_growth(const Parameter& param, std::int64_t N,
                        const PrecisionConfig& cfg) {
  const JonesEvaluation j = jones_value(param, N, cfg);
  if (j.sign == 0)
    throw UndefinedGrowthError(
        "jones_log_growth: J_N vanished exactly; growth is undefined");
  return 2.0 * kPi * j.log_abs / static_cast<double>(N);
}

CriticalIndices critical_indices(const Parameter& param, std::int64_t N) {
  validate_n(N);
  if (!param.is_circular())
    throw DomainError("critical_indices: circular parameter required");
  const double r = param.value();
  CriticalIndices idx;
  // j runs over 0..N-1 in the sum; the right endpoint, where g always
  // vanishes, is not an index
  const double Nd = static_cast<double>(N);
  auto keep = [Nd](double v) -> std::optional<double> {
    if (v >= 0.0 && v < Nd) return v;
    return std::nullopt;
  };

  if (r > 0) {
    if (param.is_rational()) {
      const double q = static_cast<double>(param.num());
      const double p = static_cast<double>(param.den());
      idx.b = keep(Nd * std::abs(p - q) / q);
      idx.b_prime = keep(Nd * (2.0 * p - q) / q);
    } else {
      idx.b = keep(Nd * std::abs(1.0 - r) / r);
      idx.b_prime = keep(Nd * (2.0 - r) / r);
    }
    if (special::theta_defined(r)) {
      const double th = special::theta(r).value;
      idx.c = keep(Nd * th / (2.0 * kPi * r));
      idx.d = keep(Nd * (2.0 * kPi - th) / (2.0 * kPi * r));
    }
    if (special::phi_defined(r)) {
      const double ph = special::phi(r).value;
      idx.a = keep(Nd * ph / (2.0 * kPi * r));
      idx.a_prime = keep(Nd * (2.0 * kPi - ph) / (2.0 * kPi * r));
      idx.a_double_prime = keep(Nd * (2.0 * kPi + ph) / (2.0 * kPi * r));
    }
  }
  return idx;
}

FMax f_max(const Parameter& param, std::int64_t N) {
  FMax best;
  best.argmax = 0;
  best.log_f = 0.0;
  auto tail = for_each_term(param, N, [&](std::int64_t k, int s, double la) {
    if (s != 0 && la > best.log_f) {
      best.log_f = la;
      best.argmax = k;
    }
  });
  best.degenerate = tail.zero_from.has_value() && *tail.zero_from == 1;
  return best;
}

namespace {

struct Band {
  double lo_index, hi_index;  // open interval of j
  double g_lo, g_hi;          // open bounds on g
};

struct BandStructure {
  std::vector<Band> bands;
  // (index value, expected g) for boundary hits
  std::vector<std::pair<double, double>> boundaries;
};

BandStructure band_structure(const Parameter& param, std::int64_t N) {
  const double r = param.value();
  const CriticalIndices ci = critical_indices(param, N);
  const double Nd = static_cast<double>(N);
  auto need = [](const std::optional<double>& v, const char* name) -> double {
    if (!v)
      throw DomainError(std::string("sign_table_check: index ") + name +
                        " is not defined for this parameter");
    return *v;
  };

  BandStructure bs;
  auto push_boundary = [&bs](const std::optional<double>& v, double g) {
    if (v) bs.boundaries.emplace_back(*v, g);
  };

  if (r > 5.0 / 6.0 && r <= 1.0) {
    const double B = need(ci.b, "B"), C = need(ci.c, "C"), D = need(ci.d, "D");
    bs.bands = {{0, B, -1, 0}, {B, C, 0, 1}, {C, D, 1, kInf}, {D, Nd, 0, 1}};
  } else if (r > 1.0 && r < 7.0 / 6.0) {
    const double B = need(ci.b, "B"), C = need(ci.c, "C"), D = need(ci.d, "D"),
                 Bp = need(ci.b_prime, "B'");
    bs.bands = {{0, B, -1, 0},  {B, C, 0, 1},   {C, D, 1, kInf},
                {D, Bp, 0, 1},  {Bp, Nd, -1, 0}};
  } else if (r > 3.0 / 4.0 && r <= 5.0 / 6.0) {
    const double A = need(ci.a, "A"), B = need(ci.b, "B"), C = need(ci.c, "C"),
                 D = need(ci.d, "D");
    bs.bands = {{0, A, -kInf, -1}, {A, B, -1, 0}, {B, C, 0, 1},
                {C, D, 1, kInf},   {D, Nd, 0, 1}};
  } else if (r >= 7.0 / 6.0 && r < 5.0 / 4.0) {
    const double A = need(ci.a, "A"), B = need(ci.b, "B"), C = need(ci.c, "C"),
                 D = need(ci.d, "D"), Bp = need(ci.b_prime, "B'"),
                 Ap = need(ci.a_prime, "A'"),
                 App = need(ci.a_double_prime, "A''");
    bs.bands = {{0, A, -kInf, -1}, {A, B, -1, 0},   {B, C, 0, 1},
                {C, D, 1, kInf},   {D, Bp, 0, 1},   {Bp, Ap, -1, 0},
                {Ap, App, -kInf, -1}, {App, Nd, -1, 0}};
  } else {
    throw DomainError(
        "sign_table_check: no tabulated band structure for r = " +
        param.to_string());
  }
  push_boundary(ci.a, -1);
  push_boundary(ci.b, 0);
  push_boundary(ci.c, 1);
  push_boundary(ci.d, 1);
  push_boundary(ci.b_prime, 0);
  push_boundary(ci.a_prime, -1);
  push_boundary(ci.a_double_prime, -1);
  return bs;
}

}  // namespace

SuiteReport sign_table_check(const Parameter& param, std::int64_t N) {
  validate_n(N);
  if (!param.is_circular())
    throw DomainError("sign_table_check: circular parameter required");

  const BandStructure bs = band_structure(param, N);
  constexpr double kIndexEps = 1e-7;   // j this close to an index is a boundary
  constexpr double kBoundaryTol = 1e-6;
  constexpr double kBandSlack = 1e-12;

  SuiteReport report;
  report.suite = "sign-table";
  std::int64_t boundary_hits = 0;
  std::optional<std::int64_t> first_violation;
  double violating_g = 0.0;

  for (std::int64_t j = 1; j < N && !first_violation; ++j) {
    const double g = g_factor(j, param, N);
    const double jd = static_cast<double>(j);

    bool at_boundary = false;
    for (const auto& [idx, expected] : bs.boundaries) {
      if (std::abs(jd - idx) < kIndexEps) {
        at_boundary = true;
        ++boundary_hits;
        if (std::abs(g - expected) > kBoundaryTol) {
          first_violation = j;
          violating_g = g;
        }
        break;
      }
    }
    if (at_boundary) continue;

    bool in_band = false;
    for (const auto& band : bs.bands) {
      if (band.lo_index < jd && jd < band.hi_index) {
        in_band = band.g_lo - kBandSlack < g && g < band.g_hi + kBandSlack;
        break;
      }
    }
    if (!in_band) {
      first_violation = j;
      violating_g = g;
    }
  }

  report.check("g(j) lies in the band dictated by its position for all 0 < j < N",
               !first_violation,
               first_violation ? violating_g
                               : std::numeric_limits<double>::quiet_NaN(),
               std::numeric_limits<double>::quiet_NaN());
  if (first_violation)
    report.notes.push_back("first violation at j = " +
                           std::to_string(*first_violation));
  if (boundary_hits > 0)
    report.info("integer j falling exactly on a critical index",
                static_cast<double>(boundary_hits));
  return report;
}

}  // namespace fig8::eval
