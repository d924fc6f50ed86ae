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

#ifndef EGLFR_PROPERTIES_HPP
#define EGLFR_PROPERTIES_HPP

#include "eglfr/distribution.hpp"

namespace eglfr {

/// Truncation-controlled series evaluation record.
struct SeriesAccumulator {
  double tol;
  int max_outer_terms;
  double value = 0.0;
  double truncation_estimate = 0.0;
  bool converged = false;
};

/// g_k = Gamma(alpha+1) Gamma(k beta + 1) / Gamma(alpha + k beta + 1).
/// Defined only for k*beta + 1 > 0 and beta != 0 (std::domain_error).
double g_k(const Params& p, int k);

/// r-th raw moment as the triple series (requires beta > 0 and b > 0).
/// The outer sum stops once two consecutive outer blocks contribute less
/// than tol; a floating-point cancellation guard may end the sum early with
/// converged = false.
SeriesAccumulator moment_series(const Params& p, int r, double tol,
                                int max_outer_terms = 500);

/// E[X^(2k)] for a = 0 via the g_k recursion
/// (E[X^2] = 2(1-g_1)/(b*beta), then the alternating binomial recursion).
/// Throws std::domain_error when a != 0 or k*beta + 1 <= 0.
double moment_closed_even(const Params& p, int k);

/// r-th raw moment by quadrature: bounded support directly, beta <= 0 via
/// the survival-function integral with a doubling horizon. Throws
/// std::domain_error when the moment does not exist.
double moment_numeric(const Params& p, double r, double tol);

/// Moment existence: false iff beta < 0 and k >= -2/beta (stated for
/// alpha >= 1; applied as a conservative rule for alpha < 1 as well).
bool moment_exists(const Params& p, double k);

/// MGF as the series of the moment expansion integrated against e^(tx),
/// with the inner integral int_0^psi x^q e^(tx) dx assembled exactly from
/// its finite closed form. Requires beta > 0, b > 0, t != 0.
SeriesAccumulator mgf_series(const Params& p, double t, double tol,
                             int max_outer_terms = 500);

/// Quantile-based shape measures.
double bowley_skewness(const Params& p);
double moors_kurtosis(const Params& p);

/// Shannon entropy through the beta-expectation form:
///   -ln(alpha) + (alpha-1)/alpha - E_W[ln f1(F1^{-1}(W))], W ~ Beta(alpha,1),
/// evaluated as a one-dimensional integral with the substitution W = U^(1/alpha).
double shannon_entropy(const Params& p, double tol);

/// Renyi entropy of order rho (rho > 0, rho != 1; requires rho(alpha-1)+1 > 0).
double renyi_entropy(const Params& p, double rho, double tol);

/// U(t) = -log(1 - (1 - beta z(t))^(1/beta)) (the alpha = 1 baseline cdf,
/// logged), the transform of the characterization identity.
double characterization_U(const Params& p, double t);

/// delta^(n)(t) = E[U^n(X) | X < t], computed by quadrature over (0, t).
double characterization_delta(const Params& p, double t, int n, double tol);

}  // namespace eglfr

#endif
