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

#ifndef EGLFR_SPECFUN_HPP
#define EGLFR_SPECFUN_HPP

#include <functional>
#include <vector>

namespace eglfr::specfun {

/// Result of an adaptive quadrature run.
struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;  // >= 0
  long evaluations = 0;             // >= 1
};

/// ln Gamma(x), Lanczos approximation. Relative error below 1e-13 on
/// [1e-3, 1e6]. Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// log Beta(a, b) = lgamma(a) + lgamma(b) - lgamma(a+b).
double ln_beta(double a, double b);

/// Regularized lower incomplete gamma P(s, x). Series for x < s+1,
/// continued fraction otherwise. Throws std::domain_error outside s>0, x>=0.
double regularized_lower_gamma(double s, double x);

/// Regularized incomplete beta I_x(a, b) via the continued fraction with the
/// usual symmetry switch. Throws std::domain_error outside a,b>0, 0<=x<=1.
double regularized_incomplete_beta(double a, double b, double x);

/// Adaptive Gauss-Kronrod (G7/K15) integration of f on (lo, hi). Endpoint
/// values are never requested, so integrable endpoint singularities are fine.
/// Throws std::runtime_error when the interval budget is exhausted before the
/// tolerance is met.
QuadratureResult adaptive_quadrature(const std::function<double(double)>& f,
                                     double lo, double hi, double tol,
                                     int max_intervals = 20000);

/// Integrates f over (lo, +inf) by doubling the horizon until the last
/// block's contribution falls below tol*1e-3.
QuadratureResult quadrature_to_infinity(const std::function<double(double)>& f,
                                        double lo, double tol,
                                        double initial_horizon = 1.0);

/// Asymptotic Kolmogorov survival function at sqrt(n)*d:
///   2 * sum_{j>=1} (-1)^(j-1) exp(-2 j^2 n d^2), clamped to [0,1].
double kolmogorov_sf(double d, long n);

/// Central-difference gradient and symmetric Hessian of f at theta.
/// Steps are h*max(1,|theta_i|) per coordinate. Throws std::runtime_error if
/// f is non-finite at any probe point.
struct GradHess {
  std::vector<double> gradient;
  std::vector<std::vector<double>> hessian;
};
GradHess numeric_gradient_and_hessian(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& theta, double h = 1e-5);

/// log(1 - e^u) for u < 0, accurate at both ends (switches between
/// log(-expm1(u)) and log1p(-exp(u)) at u = -ln 2).
double log1mexp(double u);

/// Generalized binomial coefficient C(p, m) for real p and integer m >= 0,
/// computed as a product so the sign of negative/fractional p survives.
double generalized_binomial(double p, long m);

/// 64-bit FNV-1a over a byte string; used for dataset digests.
unsigned long long fnv1a64(const void* data, unsigned long n);

}  // namespace eglfr::specfun

#endif
