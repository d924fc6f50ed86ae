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

#ifndef EGLFR_MC_ASYMPTOTICS_HPP
#define EGLFR_MC_ASYMPTOTICS_HPP

#include <cstdint>
#include <vector>

#include "eglfr/distribution.hpp"

namespace eglfr {

/// Monte-Carlo experiment for the non-regular limit law of the threshold
/// estimator psi~ = x_(n) (requires beta > 0 so psi is finite).
struct McExperiment {
  Params true_params;        // beta > 0
  std::size_t sample_size;   // n >= 50
  std::size_t replications;  // R >= 200
  std::uint64_t seed;
};

struct McReport {
  std::vector<double> scaled_gaps;  // n^(1/G(psi)) * (psi~_r - psi), all <= 0
  double limit_cdf_ks_stat;
  double limit_cdf_ks_pvalue;
  double gap_q05, gap_median, gap_q95;
};

/// Analytic cdf of the limit -G(psi)/(a + b psi) * V^(1/G(psi)) with
/// V ~ Exp(mean 1/alpha): for y < 0,
///   P(limit <= y) = exp(-alpha * (-y (a + b psi) / G(psi))^G(psi)).
double threshold_limit_cdf(const Params& p, double y);

/// Runs the experiment: per replication (counter-split substream) draws n
/// points, records the scaled gap, then one-sample K-S of the R gaps against
/// the analytic limit law.
McReport run_threshold_experiment(const McExperiment& exp);

/// Fits the convergence-rate exponent: log-log regression of the median
/// |psi~ - psi| on n over the given ladder. The theorem's value is -1/G(psi).
double estimate_rate_exponent(const Params& p, const std::vector<std::size_t>& n_ladder,
                              std::size_t replications, std::uint64_t seed);

}  // namespace eglfr

#endif
