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
#include <random>

#include "asymptotics.hpp"
#include "support/oracles.hpp"

using namespace fig8;
using asym::RegimeTag;

namespace {
constexpr double kPi = oracle::kPi;
const PrecisionConfig kCfg{};

// independent route to vhat through the quadrature oracle
double vhat_oracle(double r) {
  const double th = std::acos(std::cos(2 * kPi * r) - 0.5);
  return (2 * oracle::lobachevsky_quad(kPi * r + th / 2) -
          2 * oracle::lobachevsky_quad(kPi * r - th / 2)) /
         r;
}
}  // namespace

TEST_CASE("classification of the tabulated parameters") {
  auto tag = [](const Parameter& p) { return asym::classify(p, kCfg).tag; };
  CHECK(tag(Parameter::rational(1, 1)) == RegimeTag::MainIrrational);
  CHECK(tag(Parameter::real(1.0)) == RegimeTag::MainIrrational);
  CHECK(tag(Parameter::rational(9, 10)) == RegimeTag::MainRational);
  CHECK(tag(Parameter::real(0.9)) == RegimeTag::MainIrrational);
  CHECK(tag(Parameter::real(0.5)) == RegimeTag::Uncovered);
  CHECK(tag(Parameter::real(0.05)) == RegimeTag::ZeroSmallR);
  CHECK(tag(Parameter::rational(1, 20)) == RegimeTag::ZeroSmallR);
  CHECK(tag(Parameter::real(0.8)) == RegimeTag::NearMainIrrational);
  CHECK(tag(Parameter::real(1.2)) == RegimeTag::NearMainIrrational);
  // boundary memberships follow the printed inequalities
  CHECK(tag(Parameter::real(5.0 / 6.0)) == RegimeTag::NearMainIrrational);
  CHECK(tag(Parameter::real(7.0 / 6.0)) == RegimeTag::NearMainIrrational);
  CHECK(tag(Parameter::real(1.0 / 6.0)) == RegimeTag::Uncovered);
  CHECK(tag(Parameter::real(0.75)) == RegimeTag::Uncovered);
  CHECK(tag(Parameter::real(1.25)) == RegimeTag::Uncovered);
  // rational parameters outside the main window have no covering statement
  CHECK(tag(Parameter::rational(4, 5)) == RegimeTag::Uncovered);
  // imaginary side
  CHECK(tag(Parameter::imaginary(1.0)) == RegimeTag::ImaginaryAbove);
  CHECK(tag(Parameter::imaginary(0.1)) == RegimeTag::ImaginaryAtOrBelow);
}

TEST_CASE("classification predictions") {
  const auto one = asym::classify(Parameter::rational(1, 1), kCfg);
  CHECK(one.limit_exists);
  CHECK(std::abs(one.limsup_prediction - 2.0298832128193072) < 1e-9);
  CHECK(one.liminf_prediction == one.limsup_prediction);

  const auto rat = asym::classify(Parameter::rational(9, 10), kCfg);
  CHECK(!rat.limit_exists);
  CHECK(rat.liminf_prediction == 0.0);
  CHECK(std::abs(rat.limsup_prediction - 1.8984121647758735) < 1e-9);

  const auto small = asym::classify(Parameter::real(0.05), kCfg);
  CHECK(small.limit_exists);
  CHECK(small.limsup_prediction == 0.0);

  const auto unc = asym::classify(Parameter::real(0.5), kCfg);
  CHECK(std::isnan(unc.limsup_prediction));
  CHECK(!unc.limit_exists);
}

TEST_CASE("vhat anchors and oracle agreement") {
  CHECK(std::abs(asym::vhat(1.0, kCfg).vhat - 2.0298832128193072) < 1e-9);
  CHECK(std::abs(asym::vhat(2.0 / 3.0, kCfg).vhat) < 1e-12);
  CHECK(std::abs(asym::vhat(0.9, kCfg).vhat - 1.8984121647758735) < 1e-9);
  for (const double r : {0.7, 0.85, 0.9, 1.0, 1.1, 1.3}) {
    CHECK(std::abs(asym::vhat(r, kCfg).vhat - vhat_oracle(r)) < 1e-10);
  }
  CHECK(std::abs(asym::vhat(1.0, kCfg).theta_used.value - kPi / 3) < 1e-14);
  CHECK_THROWS_AS(asym::vhat(0.5, kCfg), DomainError);
}

TEST_CASE("cone manifold volume") {
  CHECK(std::abs(asym::cone_manifold_volume(special::Radians(0.0), kCfg) -
                 2.0298832128193072) < 1e-9);
  CHECK(std::abs(asym::cone_manifold_volume(
             special::Radians(2 * kPi / 3), kCfg)) < 1e-9);
  // cone angle pi/3 corresponds to r = 5/6; frozen from the oracle
  CHECK(std::abs(asym::cone_manifold_volume(special::Radians(kPi / 3), kCfg) -
                 1.4655449506835504) < 1e-9);
  CHECK_THROWS_AS(asym::cone_manifold_volume(special::Radians(2.2), kCfg),
                  DomainError);
  CHECK_THROWS_AS(asym::cone_manifold_volume(special::Radians(-0.1), kCfg),
                  DomainError);
}

TEST_CASE("delta gap values and symmetry") {
  CHECK(std::abs(asym::delta_gap(0.75, kCfg)) < 1e-12);
  CHECK(std::abs(asym::delta_gap(0.8, kCfg) - 0.399133733428869) < 1e-9);
  CHECK(asym::delta_gap(0.8, kCfg) > 0.0);
  CHECK(asym::delta_gap(1.2, kCfg) > 0.0);
  CHECK(std::abs(asym::delta_gap(0.78, kCfg) - asym::delta_gap(1.22, kCfg)) <
        1e-12);
}

TEST_CASE("imaginary growth") {
  const double threshold_s = special::arccosh_three_halves() / (2 * kPi);
  CHECK(asym::imaginary_growth(threshold_s, kCfg) == 0.0);
  CHECK(asym::imaginary_growth(0.1, kCfg) == 0.0);
  CHECK(std::abs(asym::imaginary_growth(1.0, kCfg) - 6.021683827061042) <
        1e-10);
  // continuity just above the threshold
  CHECK(asym::imaginary_growth(threshold_s * 1.0001, kCfg) < 1e-3);
  CHECK_THROWS_AS(asym::imaginary_growth(-1.0, kCfg), DomainError);
}

TEST_CASE("appendix V anchors") {
  CHECK(std::abs(asym::appendix_v(2.0 / 3.0, kCfg)) < 1e-12);
  CHECK(std::abs(asym::appendix_v(1.0, kCfg) - 1.0149416064096536) < 1e-12);
  CHECK(std::abs(asym::appendix_v(0.8, kCfg) - asym::appendix_v(1.2, kCfg)) <
        1e-12);
}

TEST_CASE("appendix dV") {
  // pi r - theta/2 = 5 pi/6 exactly at r = 1, so dV vanishes there
  CHECK(std::abs(asym::appendix_dv(1.0, kCfg)) < 1e-12);
  const double h = 1e-6;
  for (int i = 0; i < 100; ++i) {
    const double r = 0.7 + (0.99 - 0.7) * (i + 0.5) / 100.0;
    const double fd =
        (asym::appendix_v(r + h, kCfg) - asym::appendix_v(r - h, kCfg)) /
        (2 * h);
    CHECK(std::abs(fd - asym::appendix_dv(r, kCfg)) < 1e-6);
  }
  for (int i = 0; i < 50; ++i) {
    const double r = (2.0 / 3.0 + 0.01) + (0.99 - 2.0 / 3.0 - 0.01) * i / 49.0;
    CHECK(asym::appendix_dv(r, kCfg) > 0.0);
  }
}

TEST_CASE("appendix positivity grids") {
  for (int i = 0; i < 60; ++i) {
    const double t = (i + 0.5) / 60.0;
    CHECK(asym::appendix_v(2.0 / 3.0 + 0.005 + (1.0 / 3.0 - 0.01) * t, kCfg) >
          0.0);
    CHECK(asym::appendix_v(1.0 + 0.005 + (1.0 / 3.0 - 0.01) * t, kCfg) > 0.0);
    CHECK(asym::appendix_w(0.75 + 0.005 + (1.0 / 12.0 - 0.01) * t, kCfg) > 0.0);
    CHECK(asym::appendix_w(7.0 / 6.0 + 0.005 + (1.0 / 12.0 - 0.01) * t, kCfg) >
          0.0);
  }
}

TEST_CASE("V and W symmetry about r = 1 on random points") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> v_dist(2.0 / 3.0 + 1e-4, 1.0);
  std::uniform_real_distribution<double> w_dist(0.75 + 1e-4, 5.0 / 6.0);
  for (int i = 0; i < 200; ++i) {
    const double rv = v_dist(rng);
    CHECK(std::abs(asym::appendix_v(2.0 - rv, kCfg) -
                   asym::appendix_v(rv, kCfg)) < 1e-12);
    const double rw = w_dist(rng);
    CHECK(std::abs(asym::appendix_w(2.0 - rw, kCfg) -
                   asym::appendix_w(rw, kCfg)) < 1e-12);
  }
}

TEST_CASE("continuity of vhat at r = 1") {
  const double v1 = asym::vhat(1.0, kCfg).vhat;
  double prev_p = HUGE_VAL, prev_m = HUGE_VAL;
  for (int k = 2; k <= 6; ++k) {
    const double eps = std::pow(10.0, -k);
    const double gp = std::abs(asym::vhat(1.0 + eps, kCfg).vhat - v1);
    const double gm = std::abs(asym::vhat(1.0 - eps, kCfg).vhat - v1);
    CHECK(gp < prev_p);
    CHECK(gm < prev_m);
    prev_p = gp;
    prev_m = gm;
  }
}

TEST_CASE("classification is total") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> dist(0.0, 3.0);
  for (int i = 0; i < 300; ++i) {
    Parameter p = i % 3 == 0 ? Parameter::real(dist(rng))
                  : i % 3 == 1
                      ? Parameter::rational(i % 40, 1 + (i * 7) % 37)
                      : Parameter::imaginary(0.01 + dist(rng));
    const auto tag = asym::classify(p, kCfg).tag;
    CHECK(asym::regime_tag_name(tag) != "unknown");
  }
}
