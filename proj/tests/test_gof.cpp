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
#include "eglfr/dataset.hpp"
#include "eglfr/distribution.hpp"
#include "eglfr/gof.hpp"

using namespace eglfr;

TEST_CASE("K-S statistic on hand-computable inputs") {
  Dataset d = make_dataset({0.25, 0.75}, "two", "memory");
  auto r = ks_test([](double x) { return x; }, d);
  CHECK(r.stat == doctest::Approx(0.25).epsilon(1e-12));

  // data placed at the (i - 1/2)/n quantiles gives D = 1/(2n)
  Params p{1.3, 0.0, 0.7, 0.2};
  const int n = 40;
  std::vector<double> xs;
  for (int i = 1; i <= n; ++i) xs.push_back(quantile(p, (i - 0.5) / n));
  Dataset dq = make_dataset(xs, "quantiles", "memory");
  auto r2 = ks_test([&](double x) { return cdf(p, x); }, dq);
  CHECK(r2.stat == doctest::Approx(1.0 / (2.0 * n)).epsilon(1e-9));
}

TEST_CASE("K-S at the published GE fit on Aarset") {
  Dataset d = load_dataset("aarset");
  Params ge{0.7798, 0.0, 0.0187, 0.0};
  auto r = ks_test([&](double x) { return cdf(ge, x); }, d);
  CHECK(std::fabs(r.stat - 0.2042) < 0.005);
  CHECK(std::fabs(r.pvalue - 0.0309) < 0.005);
}

TEST_CASE("K-S is invariant under monotone transformation of data and cdf") {
  Dataset d = load_dataset("aarset");
  Params ge{0.7798, 0.0, 0.0187, 0.0};
  auto r1 = ks_test([&](double x) { return cdf(ge, x); }, d);
  // probability-integral transform of both sides
  std::vector<double> u;
  for (double x : d.values) u.push_back(std::log1p(x));
  Dataset du = make_dataset(u, "log1p", "memory");
  auto r2 = ks_test([&](double y) { return cdf(ge, std::expm1(y)); }, du);
  CHECK(r1.stat == doctest::Approx(r2.stat).epsilon(1e-12));
}

TEST_CASE("information criteria: published columns and the degenerate case") {
  auto c1 = information_criteria(173.9487, 4, 50);
  CHECK(c1.aic == doctest::Approx(355.8974).epsilon(1e-8));
  CHECK(c1.aicc == doctest::Approx(356.7863).epsilon(1e-6));
  CHECK(c1.bic == doctest::Approx(363.5455).epsilon(1e-6));

  auto c2 = information_criteria(239.9951, 2, 50);
  CHECK(c2.aic == doctest::Approx(483.9902).epsilon(1e-8));

  auto c3 = information_criteria(0.0, 1, 10);
  CHECK(c3.aic == doctest::Approx(2.0));
  CHECK(c3.aicc == doctest::Approx(2.5));
  CHECK(c3.bic == doctest::Approx(std::log(10.0)));

  CHECK_THROWS_AS(information_criteria(10.0, 5, 6), std::domain_error);
}

TEST_CASE("likelihood ratio test") {
  auto r1 = lrt(189.1973, 173.9487, 1);
  CHECK(r1.stat == doctest::Approx(30.4972).epsilon(1e-4));
  CHECK(r1.pvalue < 1e-6);

  auto r2 = lrt(180.5367, 173.9487, 1);
  CHECK(r2.stat == doctest::Approx(13.1760).epsilon(1e-4));
  CHECK(std::fabs(r2.pvalue - 2e-4) < 1e-4);

  auto r3 = lrt(100.0, 100.0, 2);
  CHECK(r3.stat == 0.0);
  CHECK(r3.pvalue == doctest::Approx(1.0));

  // optimizer noise clamps, material violations throw
  CHECK(lrt(100.0 - 1e-8, 100.0, 1).stat == 0.0);
  CHECK_THROWS_AS(lrt(99.0, 100.0, 1), std::invalid_argument);
}
