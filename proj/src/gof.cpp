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

#include "eglfr/gof.hpp"

#include <cmath>
#include <stdexcept>

#include "eglfr/specfun.hpp"

namespace eglfr {

KsResult ks_test(const std::function<double(double)>& cdf, const Dataset& data) {
  const std::size_t n = data.size();
  if (n == 0) throw std::invalid_argument("ks_test: empty dataset");
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double f = cdf(data.values[i]);
    double up = static_cast<double>(i + 1) / n - f;
    double dn = f - static_cast<double>(i) / n;
    d = std::max(d, std::max(up, dn));
  }
  return {d, specfun::kolmogorov_sf(d, static_cast<long>(n))};
}

InfoCriteria information_criteria(double neg_log_lik, int k, int n) {
  if (n <= k + 1)
    throw std::domain_error("information_criteria: AICC undefined for n <= k + 1");
  InfoCriteria c;
  c.aic = 2.0 * k + 2.0 * neg_log_lik;
  c.aicc = c.aic + 2.0 * k * (k + 1.0) / (n - k - 1.0);
  c.bic = k * std::log(static_cast<double>(n)) + 2.0 * neg_log_lik;
  return c;
}

LrtResult lrt(double neg_ll_restricted, double neg_ll_full, int df) {
  if (df < 1) throw std::invalid_argument("lrt: requires df >= 1");
  double stat = 2.0 * (neg_ll_restricted - neg_ll_full);
  if (stat < -1e-6)
    throw std::invalid_argument("lrt: restricted model scores a higher likelihood (nesting violated)");
  stat = std::max(stat, 0.0);
  double p = 1.0 - specfun::regularized_lower_gamma(df / 2.0, stat / 2.0);
  return {stat, p};
}

}  // namespace eglfr
