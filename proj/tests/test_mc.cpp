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
#include "eglfr/mc_asymptotics.hpp"

using namespace eglfr;

TEST_CASE("limit cdf closed form") {
  Params p{1.0, 1.0, 0.0, 2.0};  // psi = 1, G(psi) = 1, a + b psi = 2
  CHECK(threshold_limit_cdf(p, 0.0) == 1.0);
  // P(gap <= y) = exp(2y) for y < 0 here
  CHECK(threshold_limit_cdf(p, -0.5) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(threshold_limit_cdf(p, -2.0) == doctest::Approx(std::exp(-4.0)).epsilon(1e-12));
  CHECK_THROWS_AS(threshold_limit_cdf({1.0, -1.0, 0.0, 2.0}, -0.5), std::domain_error);
}

TEST_CASE("scaled gaps: sign, limit-law agreement, reproducibility") {
  McExperiment exp{{1.0, 1.0, 0.0, 2.0}, 2000, 1000, 12345};
  McReport r = run_threshold_experiment(exp);
  for (double g : r.scaled_gaps) CHECK(g <= 0.0);
  CHECK(r.limit_cdf_ks_pvalue > 0.01);
  CHECK(r.gap_median < 0.0);
  CHECK(r.gap_q05 <= r.gap_median);
  CHECK(r.gap_median <= r.gap_q95);

  McReport r2 = run_threshold_experiment(exp);
  CHECK(r.scaled_gaps == r2.scaled_gaps);

  CHECK_THROWS_AS(run_threshold_experiment(McExperiment{{1, -1, 0, 2}, 2000, 1000, 1}),
                  std::domain_error);
  CHECK_THROWS_AS(run_threshold_experiment(McExperiment{{1, 1, 0, 2}, 10, 1000, 1}),
                  std::invalid_argument);
}

TEST_CASE("limit law holds at further parameter points") {
  for (Params p : {Params{0.8, 2.0, 0.5, 0.1}, Params{1.7, 0.5, 0.4, 0.0}}) {
    for (std::size_t n : {std::size_t{500}, std::size_t{2000}}) {
      McExperiment exp{p, n, 1000, 777};
      McReport r = run_threshold_experiment(exp);
      CHECK(r.limit_cdf_ks_pvalue > 0.01);
    }
  }
}

TEST_CASE("doubling n halves the median gap when G(psi) = 1") {
  Params p{1.0, 1.0, 0.0, 2.0};
  // raw (unscaled) median gaps via the rate-exponent helper inputs
  auto median_gap = [&](std::size_t n) {
    McExperiment exp{p, n, 1000, 31};
    McReport r = run_threshold_experiment(exp);
    // undo the n^(1/G) scaling: G(psi)=1 here
    return std::fabs(r.gap_median) / static_cast<double>(n);
  };
  double g1000 = median_gap(1000), g2000 = median_gap(2000);
  CHECK(std::fabs(g1000 / g2000 - 2.0) < 0.5);  // within 25%
}

TEST_CASE("rate exponent estimate matches -1/G(psi)") {
  Params p{1.0, 1.0, 0.0, 2.0};
  std::vector<std::size_t> ladder = {250, 500, 1000, 2000, 4000};
  double slope = estimate_rate_exponent(p, ladder, 1000, 99);
  CHECK(std::fabs(slope - (-1.0)) < 0.1);

  // a point with G(psi) = 1/2: the n^-2 gaps make the median regression
  // noisier, so this check runs with more replications and a wider band
  Params q{0.8, 2.0, 0.5, 0.1};
  double gpsi = z_of(q, support(q).hi);
  double slope2 = estimate_rate_exponent(q, ladder, 4000, 100);
  CHECK(std::fabs(slope2 - (-1.0 / gpsi)) < 0.15);
}
