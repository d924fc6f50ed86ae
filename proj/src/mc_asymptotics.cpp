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

#include "eglfr/mc_asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "eglfr/specfun.hpp"

namespace eglfr {

namespace {

double g_at_psi(const Params& p, double psi) { return p.a * psi + 0.5 * p.b * psi * psi; }

double quantile_of_sorted(const std::vector<double>& v, double q) {
  double pos = q * (v.size() - 1);
  std::size_t lo = static_cast<std::size_t>(pos);
  std::size_t hi = std::min(lo + 1, v.size() - 1);
  double w = pos - lo;
  return v[lo] * (1.0 - w) + v[hi] * w;
}

// The sample maximum is quantile(max U_i); drawing only the maximum of n
// uniforms keeps the experiment linear in n without changing its law.
double sample_maximum(const Params& p, std::size_t n, RngStream& rng) {
  double umax = 0.0;
  for (std::size_t i = 0; i < n; ++i) umax = std::max(umax, rng.next_uniform());
  return quantile(p, umax);
}

}  // namespace

double threshold_limit_cdf(const Params& p, double y) {
  if (y >= 0.0) return 1.0;
  Support s = support(p);
  if (!s.bounded) throw std::domain_error("threshold_limit_cdf: requires beta > 0");
  double psi = s.hi;
  double gpsi = g_at_psi(p, psi);
  double u = -y * (p.a + p.b * psi) / gpsi;
  return std::exp(-p.alpha * std::pow(u, gpsi));
}

McReport run_threshold_experiment(const McExperiment& exp) {
  validate(exp.true_params);
  Support s = support(exp.true_params);
  if (!s.bounded) throw std::domain_error("run_threshold_experiment: requires beta > 0");
  if (exp.sample_size < 50 || exp.replications < 200)
    throw std::invalid_argument("run_threshold_experiment: requires n >= 50, R >= 200");

  const double psi = s.hi;
  const double gpsi = g_at_psi(exp.true_params, psi);
  const double rate = std::pow(static_cast<double>(exp.sample_size), 1.0 / gpsi);

  McReport rep;
  rep.scaled_gaps.resize(exp.replications);
  for (std::size_t r = 0; r < exp.replications; ++r) {
    RngStream rng = RngStream::substream(exp.seed, r);
    double mx = sample_maximum(exp.true_params, exp.sample_size, rng);
    rep.scaled_gaps[r] = rate * (mx - psi);
  }
  std::sort(rep.scaled_gaps.begin(), rep.scaled_gaps.end());

  // One-sample K-S of the scaled gaps against the analytic limit law.
  const std::size_t R = exp.replications;
  double d = 0.0;
  for (std::size_t i = 0; i < R; ++i) {
    double f = threshold_limit_cdf(exp.true_params, rep.scaled_gaps[i]);
    d = std::max(d, std::max(static_cast<double>(i + 1) / R - f,
                             f - static_cast<double>(i) / R));
  }
  rep.limit_cdf_ks_stat = d;
  rep.limit_cdf_ks_pvalue = specfun::kolmogorov_sf(d, static_cast<long>(R));
  rep.gap_q05 = quantile_of_sorted(rep.scaled_gaps, 0.05);
  rep.gap_median = quantile_of_sorted(rep.scaled_gaps, 0.5);
  rep.gap_q95 = quantile_of_sorted(rep.scaled_gaps, 0.95);
  return rep;
}

double estimate_rate_exponent(const Params& p, const std::vector<std::size_t>& n_ladder,
                              std::size_t replications, std::uint64_t seed) {
  validate(p);
  Support s = support(p);
  if (!s.bounded) throw std::domain_error("estimate_rate_exponent: requires beta > 0");
  if (n_ladder.size() < 2)
    throw std::invalid_argument("estimate_rate_exponent: need at least two sample sizes");
  const double psi = s.hi;

  std::vector<double> logn, logmed;
  std::uint64_t stream = 0;
  for (std::size_t n : n_ladder) {
    std::vector<double> gaps(replications);
    for (std::size_t r = 0; r < replications; ++r) {
      RngStream rng = RngStream::substream(seed, ++stream);
      gaps[r] = std::fabs(sample_maximum(p, n, rng) - psi);
    }
    std::sort(gaps.begin(), gaps.end());
    logn.push_back(std::log(static_cast<double>(n)));
    logmed.push_back(std::log(quantile_of_sorted(gaps, 0.5)));
  }
  // Least-squares slope of log(median gap) on log(n).
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < logn.size(); ++i) {
    mx += logn[i];
    my += logmed[i];
  }
  mx /= logn.size();
  my /= logn.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < logn.size(); ++i) {
    sxy += (logn[i] - mx) * (logmed[i] - my);
    sxx += (logn[i] - mx) * (logn[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace eglfr
