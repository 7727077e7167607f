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

#include "special_functions.hpp"
#include "support/oracles.hpp"

using namespace fig8;
using special::Radians;

namespace {
constexpr double kPi = oracle::kPi;
const PrecisionConfig kCfg{};
}  // namespace

TEST_CASE("lobachevsky at the anchor points") {
  CHECK(special::lobachevsky(Radians(0.0), kCfg) == 0.0);
  CHECK(std::abs(special::lobachevsky(Radians(kPi / 2), kCfg)) < 1e-15);
  // frozen from the quadrature oracle (see also data/golden)
  CHECK(std::abs(special::lobachevsky(Radians(kPi / 6), kCfg) -
                 0.5074708032048268) < 1e-12);
  CHECK(std::abs(special::lobachevsky(Radians(kPi + 0.3), kCfg) -
                 special::lobachevsky(Radians(0.3), kCfg)) < 1e-15);
}

TEST_CASE("lobachevsky agrees with the defining-integral oracle") {
  for (int i = 0; i < 100; ++i) {
    const double x = -3.0 + 6.0 * i / 99.0;
    const double series = special::lobachevsky(Radians(x), kCfg);
    const double quad = oracle::lobachevsky_quad(x);
    CHECK(std::abs(series - quad) < 1e-11);
  }
}

TEST_CASE("lobachevsky agrees with the raw Fourier sum at pi/6") {
  const auto fourier = oracle::lobachevsky_fourier(kPi / 6, 100000);
  REQUIRE(fourier.tail_bound < 5e-10);
  CHECK(std::abs(special::lobachevsky(Radians(kPi / 6), kCfg) - fourier.value) <
        1e-8);
}

TEST_CASE("lobachevsky identities on random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  double worst_odd = 0.0, worst_periodic = 0.0, worst_dup = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = dist(rng);
    const double lx = special::lobachevsky(Radians(x), kCfg);
    worst_odd = std::max(
        worst_odd, std::abs(special::lobachevsky(Radians(-x), kCfg) + lx));
    worst_periodic = std::max(
        worst_periodic,
        std::abs(special::lobachevsky(Radians(x + kPi), kCfg) - lx));
    const double dup = special::lobachevsky(Radians(2 * x), kCfg) -
                       2 * lx -
                       2 * special::lobachevsky(Radians(x + kPi / 2), kCfg);
    worst_dup = std::max(worst_dup, std::abs(dup));
  }
  CHECK(worst_odd < 1e-12);
  CHECK(worst_periodic < 1e-12);
  CHECK(worst_dup < 1e-11);
}

TEST_CASE("lobachevsky double path matches the extended path") {
  const PrecisionConfig fast{53, 1e-14};
  for (int i = 0; i < 50; ++i) {
    const double x = -4.0 + 8.0 * i / 49.0;
    CHECK(std::abs(special::lobachevsky(Radians(x), fast) -
                   special::lobachevsky(Radians(x), kCfg)) < 1e-13);
  }
}

TEST_CASE("lobachevsky rejects bad configs and arguments") {
  CHECK_THROWS_AS((void)Radians(std::nan("")), DomainError);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS((void)Radians(inf), DomainError);
  CHECK_THROWS_AS(special::lobachevsky(Radians(1.0), {40, 1e-14}), DomainError);
  CHECK_THROWS_AS(special::lobachevsky(Radians(1.0), {128, 0.0}), DomainError);
  CHECK_THROWS_AS(special::lobachevsky(Radians(1.0), {1024, 1e-14}),
                  PrecisionError);
}

TEST_CASE("hyperbolic gamma anchors and oracle agreement") {
  CHECK(special::hyperbolic_gamma(0.0, kCfg) == 0.0);
  // frozen from the dilogarithm oracle, cross-checked by quadrature
  CHECK(std::abs(special::hyperbolic_gamma(1.0, kCfg) -
                 (-0.25236074247866913)) < 1e-12);
  for (int i = 1; i <= 100; ++i) {
    const double z = 4.0 * i / 100.0;
    CHECK(std::abs(special::hyperbolic_gamma(z, kCfg) -
                   oracle::hyperbolic_gamma_quad(z)) < 1e-11);
  }
}

TEST_CASE("hyperbolic gamma derivative matches log(2 sinh z)") {
  const double h = 1e-6;
  const double fd = (special::hyperbolic_gamma(1.0 + h, kCfg) -
                     special::hyperbolic_gamma(1.0 - h, kCfg)) /
                    (2 * h);
  CHECK(std::abs(fd - std::log(2.0 * std::sinh(1.0))) < 1e-8);
}

TEST_CASE("hyperbolic gamma domain") {
  CHECK_THROWS_AS(special::hyperbolic_gamma(-0.1, kCfg), DomainError);
  CHECK_THROWS_AS(special::hyperbolic_gamma(std::nan(""), kCfg), DomainError);
}

TEST_CASE("theta at the tabulated parameters") {
  CHECK(std::abs(special::theta(1.0).value - kPi / 3) < 1e-14);
  CHECK(std::abs(special::theta(5.0 / 6.0).value - kPi / 2) < 1e-14);
  CHECK(std::abs(special::theta(0.9).value - 2 * kPi / 5) < 1e-12);
  CHECK_THROWS_AS(special::theta(0.5), DomainError);
  CHECK(special::theta_defined(0.3));
  CHECK(!special::theta_defined(0.4));
}

TEST_CASE("phi at the tabulated parameters") {
  CHECK(std::abs(special::phi(0.75).value - kPi / 3) < 1e-14);
  CHECK(std::abs(special::phi(5.0 / 6.0).value) < 1e-6);  // boundary clamp
  CHECK(std::abs(special::phi(1.2).value - kPi / 5) < 1e-12);
  CHECK_THROWS_AS(special::phi(0.05), DomainError);
}

TEST_CASE("theta and phi land in [0, pi] and are even around r = 1") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(2.0 / 3.0, 4.0 / 3.0);
  for (int i = 0; i < 500; ++i) {
    const double r = dist(rng);
    const double th = special::theta(r).value;
    CHECK(th >= 0.0);
    CHECK(th <= kPi);
    CHECK(std::abs(special::theta(2.0 - r).value - th) < 1e-14);
    if (special::phi_defined(r)) {
      const double ph = special::phi(r).value;
      CHECK(ph >= 0.0);
      CHECK(ph <= kPi);
      CHECK(std::abs(special::phi(2.0 - r).value - ph) < 1e-14);
    }
  }
}

TEST_CASE("phi_hyperbolic threshold behavior") {
  const double threshold_s = special::arccosh_three_halves() / (2 * kPi);
  CHECK(std::abs(special::phi_hyperbolic(threshold_s)) < 1e-5);
  CHECK_THROWS_AS(special::phi_hyperbolic(0.1), DomainError);
  CHECK_THROWS_AS(special::phi_hyperbolic(-1.0), DomainError);
  // frozen from the 60-digit oracle
  CHECK(std::abs(special::phi_hyperbolic(1.0) - 6.281316112066025) < 1e-12);
  CHECK(std::abs(special::arccosh_three_halves() - 0.9624236501192069) < 1e-15);
}
