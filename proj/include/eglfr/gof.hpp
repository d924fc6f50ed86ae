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

#ifndef EGLFR_GOF_HPP
#define EGLFR_GOF_HPP

#include <functional>
#include <optional>
#include <string>

#include "eglfr/dataset.hpp"

namespace eglfr {

struct KsResult {
  double stat;
  double pvalue;
};

/// One-sample Kolmogorov-Smirnov against a fitted cdf:
///   D = max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n),
/// p-value from the asymptotic Kolmogorov series at sqrt(n) D.
KsResult ks_test(const std::function<double(double)>& cdf, const Dataset& data);

struct InfoCriteria {
  double aic;
  double aicc;
  double bic;
};

/// AIC = 2k + 2 nll; AICC = AIC + 2k(k+1)/(n-k-1); BIC = k ln n + 2 nll.
/// Throws std::domain_error when n <= k + 1 (AICC undefined).
InfoCriteria information_criteria(double neg_log_lik, int k, int n);

struct LrtResult {
  double stat;
  double pvalue;
};

/// Likelihood ratio test of a restricted model against the full model:
/// stat = 2(nll_restricted - nll_full), chi-square reference with df degrees
/// of freedom. Tiny negative statistics from optimizer noise are clamped to
/// zero; materially negative ones throw std::invalid_argument.
LrtResult lrt(double neg_ll_restricted, double neg_ll_full, int df);

/// Per-model scorecard used by the comparison report.
struct ModelScore {
  std::string model_id;
  int k;
  double neg_log_lik;
  double ks_stat;
  double ks_pvalue;
  double aic;
  double aicc;
  double bic;
  std::optional<double> lrt_stat;
  std::optional<double> lrt_pvalue;
  std::optional<int> lrt_df;
};

}  // namespace eglfr

#endif
