/*
 * Copyright 2026 eglfr-kit developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "eglfr/distribution.hpp"
#include "eglfr/properties.hpp"
#include "eglfr/specfun.hpp"

using namespace eglfr;

namespace {

// Quadrature oracle for E[X^r e^(t X)] style integrals on a bounded support.
double quad_moment(const Params& p, double r, double t = 0.0) {
  Support s = support(p);
  auto f = [&](double x) {
    double v = pdf(p, x);
    if (!std::isfinite(v)) return 0.0;
    return std::pow(x, r) * std::exp(t * x) * v;
  };
  if (s.bounded) return specfun::adaptive_quadrature(f, 0.0, s.hi, 1e-10).value;
  return specfun::quadrature_to_infinity(f, 0.0, 1e-10, quantile(p, 0.99)).value;
}

}  // namespace

TEST_CASE("g_k building block") {
  // alpha=1, beta=0.5: g_1 = Gamma(2)Gamma(1.5)/Gamma(2.5) = 2/3
  CHECK(g_k({1.0, 0.5, 0.0, 1.0}, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK_THROWS_AS(g_k({1.0, -0.6, 0.0, 1.0}, 2), std::domain_error);  // k beta + 1 <= 0
  CHECK_THROWS_AS(g_k({1.0, 0.0, 1.0, 0.0}, 1), std::domain_error);
}

TEST_CASE("moment series against quadrature and closed forms") {
  // psi = 1 case: E[X^2] = 1/2 exactly
  auto acc = moment_series({1.0, 1.0, 0.0, 2.0}, 2, 1e-10);
  CHECK(acc.converged);
  CHECK(acc.value == doctest::Approx(0.5).epsilon(1e-8));
  CHECK(acc.value == doctest::Approx(quad_moment({1.0, 1.0, 0.0, 2.0}, 2)).epsilon(1e-6));

  // closed form 4(1 - g_1) at (1, 0.5, 0, 1)
  auto acc2 = moment_series({1.0, 0.5, 0.0, 1.0}, 2, 1e-10);
  CHECK(acc2.converged);
  CHECK(acc2.value == doctest::Approx(4.0 * (1.0 - 2.0 / 3.0)).epsilon(1e-8));

  // generic (a > 0) point against quadrature
  auto acc3 = moment_series({2.0, 0.5, 0.1, 1.0}, 1, 1e-10);
  CHECK(acc3.converged);
  CHECK(acc3.value == doctest::Approx(quad_moment({2.0, 0.5, 0.1, 1.0}, 1)).epsilon(1e-6));

  CHECK_THROWS_AS(moment_series({1.0, -0.5, 0.0, 1.0}, 2, 1e-8), std::domain_error);
  CHECK_THROWS_AS(moment_series({1.0, 0.5, 1.0, 0.0}, 2, 1e-8), std::domain_error);
}

TEST_CASE("moment series against a Monte-Carlo mean") {
  Params p{2.0, 1.0, 0.2, 0.5};
  auto acc = moment_series(p, 2, 1e-10);
  REQUIRE(acc.converged);
  RngStream rng(2024);
  const std::size_t n = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double x = quantile(p, rng.next_uniform());
    double v = x * x;
    sum += v;
    sum2 += v * v;
  }
  double mean = sum / n;
  double se = std::sqrt((sum2 / n - mean * mean) / n);
  CHECK(std::fabs(acc.value - mean) < 3.0 * se);
}

TEST_CASE("non-integer alpha trips the cancellation guard rather than lying") {
  auto acc = moment_series({1.5, 1.0, 0.3, 0.7}, 1, 1e-10);
  // Either it converged to the quadrature value or it reported failure.
  if (acc.converged)
    CHECK(acc.value == doctest::Approx(quad_moment({1.5, 1.0, 0.3, 0.7}, 1)).epsilon(1e-5));
  else
    CHECK(acc.truncation_estimate > 0.0);
}

TEST_CASE("closed-form even moments reproduce Table 1 anchors") {
  CHECK(moment_closed_even({1.0, -0.5, 0.0, 1.0}, 1) == doctest::Approx(4.000).epsilon(1e-9));
  CHECK(std::fabs(moment_closed_even({1.0, -0.25, 0.0, 1.0}, 1) - 2.667) < 5e-4);
  CHECK(std::fabs(moment_closed_even({2.0, -0.75, 0.0, 1.0}, 1) - 14.400) < 5e-4);
  // E[X^4] closed form equals the recursion output
  Params p{1.3, 0.4, 0.0, 0.8};
  double g1 = g_k(p, 1), g2 = g_k(p, 2);
  double direct = 4.0 / (p.b * p.b * p.beta * p.beta) * (g2 - 2.0 * g1 + 1.0);
  CHECK(moment_closed_even(p, 2) == doctest::Approx(direct).epsilon(1e-12));
  // matches quadrature
  CHECK(moment_closed_even(p, 2) == doctest::Approx(quad_moment(p, 4)).epsilon(1e-7));

  CHECK_THROWS_AS(moment_closed_even({1.0, -0.6, 0.0, 1.0}, 2), std::domain_error);
  CHECK_THROWS_AS(moment_closed_even({1.0, 0.5, 0.3, 1.0}, 1), std::domain_error);
}

TEST_CASE("moment existence gate") {
  CHECK_FALSE(moment_exists({1.0, -1.0, 0.0, 1.0}, 2.0));
  CHECK(moment_exists({1.0, -0.25, 0.0, 1.0}, 5.0));
  CHECK(moment_exists({1.0, 0.5, 0.0, 1.0}, 12.0));
  CHECK(moment_exists({1.0, 0.0, 1.0, 0.0}, 7.0));
  CHECK_FALSE(moment_exists({0.7, -1.0, 0.0, 1.0}, 2.0));  // conservative for alpha < 1
}

TEST_CASE("numeric moments reproduce Table 1 odd anchors") {
  CHECK(std::fabs(moment_numeric({1.0, -1.0, 0.0, 1.0}, 1, 1e-9) - 2.221) < 2e-3);
  CHECK(std::fabs(moment_numeric({2.0, -1.0, 0.0, 1.0}, 1, 1e-9) - 3.332) < 2e-3);
  CHECK(std::fabs(moment_numeric({1.0, -0.25, 0.0, 1.0}, 5, 1e-9) - 88.857) < 0.1);
  // sqrt(2) pi / 2 analytic value for the first anchor
  CHECK(moment_numeric({1.0, -1.0, 0.0, 1.0}, 1, 1e-10) ==
        doctest::Approx(std::sqrt(2.0) * M_PI / 2.0).epsilon(1e-7));
  CHECK_THROWS_AS(moment_numeric({1.0, -1.0, 0.0, 1.0}, 2, 1e-8), std::domain_error);
}

TEST_CASE("mgf series against quadrature and Monte Carlo") {
  // M(t) for the psi=1 triangular-like case: 2(e^t(t-1)+1)/t^2
  auto acc = mgf_series({1.0, 1.0, 0.0, 2.0}, 0.5, 1e-10);
  CHECK(acc.converged);
  double expect = 2.0 * (std::exp(0.5) * (0.5 - 1.0) + 1.0) / 0.25;
  CHECK(acc.value == doctest::Approx(expect).epsilon(1e-10));

  // t -> 0 sanity
  auto acc0 = mgf_series({1.0, 1.0, 0.0, 2.0}, 1e-4, 1e-10);
  CHECK(acc0.value == doctest::Approx(1.0).epsilon(1e-3));

  // generic grid point vs quadrature of e^(tx) f(x)
  Params p{2.0, 0.5, 0.1, 1.0};
  auto acc1 = mgf_series(p, 1.0, 1e-10);
  CHECK(acc1.converged);
  CHECK(acc1.value == doctest::Approx(quad_moment(p, 0, 1.0)).epsilon(1e-5));

  // Monte-Carlo mean of e^X
  RngStream rng(77);
  const std::size_t n = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::exp(quantile(p, rng.next_uniform()));
    sum += v;
    sum2 += v * v;
  }
  double mean = sum / n, se = std::sqrt((sum2 / n - mean * mean) / n);
  CHECK(std::fabs(acc1.value - mean) < 3.0 * se);

  CHECK_THROWS_AS(mgf_series(p, 0.0, 1e-8), std::domain_error);
  CHECK_THROWS_AS(mgf_series({1.0, -1.0, 0.0, 1.0}, 0.5, 1e-8), std::domain_error);
}

TEST_CASE("Bowley skewness and Moors kurtosis") {
  Params uni{1.0, 1.0, 1.0, 0.0};
  CHECK(bowley_skewness(uni) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(moors_kurtosis(uni) == doctest::Approx(1.0).epsilon(1e-12));

  Params p{0.5, -0.5, 0.1, 0.1};
  CHECK(std::isfinite(bowley_skewness(p)));
  CHECK(std::isfinite(moors_kurtosis(p)));
  // the measures are built from these quantiles and nothing else
  double q1 = quantile(p, 0.25), q2 = quantile(p, 0.5), q3 = quantile(p, 0.75);
  CHECK(bowley_skewness(p) == doctest::Approx((q3 - 2 * q2 + q1) / (q3 - q1)));

  // scale invariance under (a,b) -> (ca, c^2 b)
  for (double c : {2.0, 10.0}) {
    Params ps{0.5, -0.5, 0.1 * c, 0.1 * c * c};
    CHECK(bowley_skewness(ps) == doctest::Approx(bowley_skewness(p)).epsilon(1e-10));
    CHECK(moors_kurtosis(ps) == doctest::Approx(moors_kurtosis(p)).epsilon(1e-10));
  }
}

TEST_CASE("Shannon entropy: anchors and direct-definition oracle") {
  CHECK(shannon_entropy({1.0, 0.0, 1.0, 0.0}, 1e-10) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(std::fabs(shannon_entropy({1.0, 1.0, 1.0, 0.0}, 1e-10)) < 1e-8);

  for (Params p : {Params{2.0, 0.0, 1.0, 0.5}, Params{1.5, 0.5, 0.5, 0.5},
                   Params{0.8, 2.0, 0.5, 0.1}}) {
    double h = shannon_entropy(p, 1e-9);
    Support s = support(p);
    auto f = [&](double x) {
      double v = pdf(p, x);
      if (!(v > 0.0) || !std::isfinite(v)) return 0.0;
      return -v * std::log(v);
    };
    double direct = s.bounded
                        ? specfun::adaptive_quadrature(f, 0.0, s.hi, 1e-10).value
                        : specfun::quadrature_to_infinity(f, 0.0, 1e-10, quantile(p, 0.99))
                              .value;
    CHECK(h == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("Renyi entropy: anchors, oracle, and the rho -> 1 limit") {
  CHECK(renyi_entropy({1.0, 0.0, 1.0, 0.0}, 2.0, 1e-10) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-8));
  CHECK(std::fabs(renyi_entropy({1.0, 1.0, 1.0, 0.0}, 0.5, 1e-10)) < 1e-8);

  Params p{2.0, 0.5, 0.3, 0.4};
  double rho = 0.5;
  double h = renyi_entropy(p, rho, 1e-9);
  Support s = support(p);
  auto f = [&](double x) {
    double v = pdf(p, x);
    if (!(v > 0.0) || !std::isfinite(v)) return 0.0;
    return std::pow(v, rho);
  };
  double direct = std::log(specfun::adaptive_quadrature(f, 0.0, s.hi, 1e-11).value) /
                  (1.0 - rho);
  CHECK(h == doctest::Approx(direct).epsilon(1e-6));

  // brackets the Shannon entropy near rho = 1
  for (Params q : {Params{1.5, 0.5, 0.5, 0.5}, Params{2.0, 0.0, 1.0, 0.5},
                   Params{1.0, 0.0, 1.0, 0.0}}) {
    double hs = shannon_entropy(q, 1e-9);
    double lo = renyi_entropy(q, 1.0 + 1e-3, 1e-9);
    double hi = renyi_entropy(q, 1.0 - 1e-3, 1e-9);
    CHECK(std::fabs(lo - hs) < 1e-2);
    CHECK(std::fabs(hi - hs) < 1e-2);
  }

  CHECK_THROWS_AS(renyi_entropy({0.4, 0.5, 1.0, 0.0}, 3.0, 1e-8), std::domain_error);
  CHECK_THROWS_AS(renyi_entropy(p, 1.0, 1e-8), std::domain_error);
}

TEST_CASE("characterization recursion") {
  Params p{1.5, 0.5, 0.5, 0.5};
  double t = 0.6 * support(p).hi;
  CHECK(characterization_delta(p, t, 0, 1e-9) == doctest::Approx(1.0).epsilon(1e-9));
  double u = characterization_U(p, t);
  double d0 = characterization_delta(p, t, 0, 1e-10);
  double d1 = characterization_delta(p, t, 1, 1e-10);
  double d2 = characterization_delta(p, t, 2, 1e-10);
  CHECK(d1 == doctest::Approx(u + (1.0 / p.alpha) * d0).epsilon(1e-6));
  CHECK(d2 == doctest::Approx(u * u + (2.0 / p.alpha) * d1).epsilon(1e-6));
  CHECK_THROWS_AS(characterization_delta(p, -1.0, 1, 1e-8), std::domain_error);
}
