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

#include "eglfr/properties.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "eglfr/specfun.hpp"

namespace eglfr {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_series_regime(const Params& p) {
  validate(p);
  if (!(p.beta > 0.0) || !(p.b > 0.0))
    throw std::domain_error("series form requires beta > 0 and b > 0");
}

}  // namespace

double g_k(const Params& p, int k) {
  validate(p);
  if (k < 1) throw std::domain_error("g_k: requires k >= 1");
  if (std::fabs(p.beta) < kBetaZeroTol) throw std::domain_error("g_k: requires beta != 0");
  double kb1 = k * p.beta + 1.0;
  if (!(kb1 > 0.0)) throw std::domain_error("g_k: requires k*beta + 1 > 0");
  return std::exp(specfun::ln_gamma(p.alpha + 1.0) + specfun::ln_gamma(kb1) -
                  specfun::ln_gamma(p.alpha + kb1));
}

SeriesAccumulator moment_series(const Params& p, int r, double tol, int max_outer_terms) {
  require_series_regime(p);
  if (!(tol > 0.0) || r < 1) throw std::domain_error("moment_series: requires tol > 0, r >= 1");
  const double psi = support(p).hi;
  const double log_psi = std::log(psi);

  SeriesAccumulator acc;
  acc.tol = tol;
  acc.max_outer_terms = max_outer_terms;

  double abs_sum = 0.0;  // cancellation tracker
  double last_block = kInf;
  for (int n = 0; n < max_outer_terms; ++n) {
    double cn = specfun::generalized_binomial(p.alpha - 1.0, n);
    if (cn == 0.0) {  // integer alpha: the outer series terminates exactly
      acc.converged = true;
      acc.truncation_estimate = abs_sum * kEps;
      return acc;
    }
    double pexp = (n + 1.0) / p.beta - 1.0;
    double block = 0.0, block_abs = 0.0;
    int small_inner = 0;
    for (int m = 0; m < 500; ++m) {
      double cm = specfun::generalized_binomial(pexp, m);
      if (cm == 0.0 && m > pexp) break;
      double contrib = 0.0, contrib_abs = 0.0;
      for (int k = 0; k <= m; ++k) {
        if (p.a == 0.0 && k < m) continue;  // a^(m-k) vanishes
        long j = m + k + r + 1;
        double log_mag = std::log(p.alpha) - k * std::log(2.0) + m * std::log(p.beta) +
                         (m - k > 0 ? (m - k) * std::log(p.a) : 0.0) +
                         (k > 0 ? k * std::log(p.b) : 0.0) + j * log_psi;
        double tail = p.a / j + p.b * psi / (j + 1.0);
        double choose_mk = std::exp(specfun::ln_gamma(m + 1.0) - specfun::ln_gamma(k + 1.0) -
                                    specfun::ln_gamma(m - k + 1.0));
        double term = ((m + n) % 2 == 0 ? 1.0 : -1.0) * cn * cm * choose_mk *
                      std::exp(log_mag) * tail;
        contrib += term;
        contrib_abs += std::fabs(term);
      }
      block += contrib;
      block_abs += contrib_abs;
      if (contrib_abs < tol * 1e-2) {
        if (++small_inner >= 2) break;
      } else {
        small_inner = 0;
      }
    }
    acc.value += block;
    abs_sum += block_abs;
    // Stop if round-off in the accumulated magnitude already swamps tol.
    if (abs_sum * kEps > std::max(tol, std::fabs(acc.value) * 1e-10)) {
      acc.converged = false;
      acc.truncation_estimate = std::max(std::fabs(block), abs_sum * kEps);
      return acc;
    }
    if (std::fabs(block) < tol && std::fabs(last_block) < tol) {
      acc.converged = true;
      acc.truncation_estimate = std::max(std::fabs(block), abs_sum * kEps);
      return acc;
    }
    last_block = block;
  }
  acc.converged = false;
  acc.truncation_estimate = std::fabs(last_block);
  return acc;
}

double moment_closed_even(const Params& p, int k) {
  validate(p);
  if (p.a != 0.0) throw std::domain_error("moment_closed_even: requires a = 0");
  if (k < 1) throw std::domain_error("moment_closed_even: requires k >= 1");
  if (std::fabs(p.beta) < kBetaZeroTol)
    throw std::domain_error("moment_closed_even: requires beta != 0");
  if (!(k * p.beta + 1.0 > 0.0))
    throw std::domain_error("moment_closed_even: moment does not exist (k*beta + 1 <= 0)");

  // E[X^2] = 2(1 - g_1)/(b beta); then
  // E[X^(2k)] = (-1)^k (2/(beta b))^k (g_k - 1 - sum_{r=1}^{k-1} (-1)^r C(k,r)
  //             (beta b/2)^r E[X^(2r)]).
  std::vector<double> even(k + 1, 0.0);
  even[1] = 2.0 / (p.b * p.beta) * (1.0 - g_k(p, 1));
  double c = p.beta * p.b / 2.0;
  for (int kk = 2; kk <= k; ++kk) {
    double inner = 0.0;
    double binom = 1.0;
    for (int r = 1; r <= kk - 1; ++r) {
      binom = binom * (kk - r + 1.0) / r;  // C(kk, r)
      double sgn = (r % 2 == 0) ? 1.0 : -1.0;
      inner += sgn * binom * std::pow(c, r) * even[r];
    }
    double sgn_k = (kk % 2 == 0) ? 1.0 : -1.0;
    even[kk] = sgn_k * std::pow(1.0 / c, kk) * (g_k(p, kk) - 1.0 - inner);
  }
  return even[k];
}

bool moment_exists(const Params& p, double k) {
  validate(p);
  if (!(k > 0.0)) throw std::domain_error("moment_exists: requires k > 0");
  if (p.beta >= 0.0) return true;
  return k < -2.0 / p.beta;  // conservative for alpha < 1 as well
}

double moment_numeric(const Params& p, double r, double tol) {
  validate(p);
  if (!moment_exists(p, r)) throw std::domain_error("moment_numeric: moment does not exist");
  Support s = support(p);
  if (s.bounded) {
    auto f = [&](double x) {
      double v = pdf(p, x);
      return std::isfinite(v) ? std::pow(x, r) * v : 0.0;
    };
    // rough pass scales the absolute tolerance to the moment's magnitude
    double rough = specfun::adaptive_quadrature(f, 0.0, s.hi, 1e-4).value;
    return specfun::adaptive_quadrature(f, 0.0, s.hi, tol * std::max(1.0, std::fabs(rough)))
        .value;
  }
  // Unbounded support: E[X^r] = r int_0^inf x^(r-1) (1-F(x)) dx, polynomial
  // tails handled by horizon doubling.
  auto f = [&](double x) { return r * std::pow(x, r - 1.0) * survival(p, x); };
  double horizon = quantile(p, 0.99);
  double rough = specfun::quadrature_to_infinity(f, 0.0, 1e-3, horizon).value;
  return specfun::quadrature_to_infinity(f, 0.0, tol * std::max(1.0, std::fabs(rough)),
                                         horizon)
      .value;
}

SeriesAccumulator mgf_series(const Params& p, double t, double tol, int max_outer_terms) {
  require_series_regime(p);
  if (t == 0.0) throw std::domain_error("mgf_series: requires t != 0");
  if (!(tol > 0.0)) throw std::domain_error("mgf_series: requires tol > 0");
  const double psi = support(p).hi;

  // I(q) = int_0^psi x^q e^(tx) dx. The textbook alternating form
  // e^(tx) sum_i (-1)^i q!/(q-i)! x^(q-i)/t^(i+1) cancels catastrophically
  // once q!/t^q dwarfs the integral, so the equivalent expansion
  //   psi^(q+1) sum_{j>=0} (t psi)^j / (j! (q+j+1))
  // is used instead; its terms are positive for t > 0.
  auto integral_xq = [&](long q) {
    double tp = t * psi;
    double cj = 1.0;  // (t psi)^j / j!
    double sum = 1.0 / (q + 1.0);
    for (int j = 1; j < 400; ++j) {
      cj *= tp / j;
      double add = cj / (q + j + 1.0);
      sum += add;
      if (std::fabs(add) < 1e-18 * std::fabs(sum) && j > std::fabs(tp)) break;
    }
    return std::pow(psi, static_cast<double>(q + 1)) * sum;
  };

  SeriesAccumulator acc;
  acc.tol = tol;
  acc.max_outer_terms = max_outer_terms;
  double abs_sum = 0.0;
  double last_block = kInf;
  for (int n = 0; n < max_outer_terms; ++n) {
    double cn = specfun::generalized_binomial(p.alpha - 1.0, n);
    if (cn == 0.0) {
      acc.converged = true;
      acc.truncation_estimate = abs_sum * kEps;
      return acc;
    }
    double pexp = (n + 1.0) / p.beta - 1.0;
    double block = 0.0, block_abs = 0.0;
    int small_inner = 0;
    for (int m = 0; m < 500; ++m) {
      double cm = specfun::generalized_binomial(pexp, m);
      if (cm == 0.0 && m > pexp) break;
      double contrib = 0.0, contrib_abs = 0.0;
      for (int k = 0; k <= m; ++k) {
        if (p.a == 0.0 && k < m) continue;
        double choose_mk = std::exp(specfun::ln_gamma(m + 1.0) - specfun::ln_gamma(k + 1.0) -
                                    specfun::ln_gamma(m - k + 1.0));
        double coeff = p.alpha / std::pow(2.0, k) * ((m + n) % 2 == 0 ? 1.0 : -1.0) * cn *
                       cm * choose_mk * std::pow(p.beta, m) *
                       (m - k > 0 ? std::pow(p.a, m - k) : 1.0) * std::pow(p.b, k);
        double term = coeff * (p.a * integral_xq(m + k) + p.b * integral_xq(m + k + 1));
        contrib += term;
        contrib_abs += std::fabs(term);
      }
      block += contrib;
      block_abs += contrib_abs;
      if (contrib_abs < tol * 1e-2) {
        if (++small_inner >= 2) break;
      } else {
        small_inner = 0;
      }
    }
    acc.value += block;
    abs_sum += block_abs;
    if (abs_sum * kEps > std::max(tol, std::fabs(acc.value) * 1e-10)) {
      acc.converged = false;
      acc.truncation_estimate = std::max(std::fabs(block), abs_sum * kEps);
      return acc;
    }
    if (std::fabs(block) < tol && std::fabs(last_block) < tol) {
      acc.converged = true;
      acc.truncation_estimate = std::max(std::fabs(block), abs_sum * kEps);
      return acc;
    }
    last_block = block;
  }
  acc.converged = false;
  acc.truncation_estimate = std::fabs(last_block);
  return acc;
}

double bowley_skewness(const Params& p) {
  double q1 = quantile(p, 0.25), q2 = quantile(p, 0.5), q3 = quantile(p, 0.75);
  return (q3 - 2.0 * q2 + q1) / (q3 - q1);
}

double moors_kurtosis(const Params& p) {
  double e1 = quantile(p, 1.0 / 8), e2 = quantile(p, 2.0 / 8), e3 = quantile(p, 3.0 / 8);
  double e5 = quantile(p, 5.0 / 8), e6 = quantile(p, 6.0 / 8), e7 = quantile(p, 7.0 / 8);
  return (e7 - e5 + e3 - e1) / (e6 - e2);
}

namespace {

// The alpha = 1 baseline of the family (the ELFR pieces f1, F1).
Params baseline(const Params& p) { return {1.0, p.beta, p.a, p.b}; }

}  // namespace

double shannon_entropy(const Params& p, double tol) {
  validate(p);
  Params b1 = baseline(p);
  // Substitutions W = U^(1/alpha) and u = v^2 (the latter tames the log
  // singularity the baseline density has at the left endpoint when a = 0).
  auto integrand = [&](double v) {
    double u = v * v;
    double w = std::exp(std::log(u) / p.alpha);
    double x = quantile(b1, w);
    return 2.0 * v * log_pdf(b1, x);
  };
  double ew = specfun::adaptive_quadrature(integrand, 0.0, 1.0, tol).value;
  return -std::log(p.alpha) + (p.alpha - 1.0) / p.alpha - ew;
}

double renyi_entropy(const Params& p, double rho, double tol) {
  validate(p);
  if (!(rho > 0.0) || rho == 1.0)
    throw std::domain_error("renyi_entropy: requires rho > 0, rho != 1");
  double gamma = rho * (p.alpha - 1.0) + 1.0;
  if (!(gamma > 0.0))
    throw std::domain_error("renyi_entropy: requires rho(alpha-1)+1 > 0");
  Params b1 = baseline(p);
  auto integrand = [&](double v) {
    double u = v * v;
    double w = std::exp(std::log(u) / gamma);
    double x = quantile(b1, w);
    return 2.0 * v * std::exp((rho - 1.0) * log_pdf(b1, x));
  };
  double et = specfun::adaptive_quadrature(integrand, 0.0, 1.0, tol).value;
  double log_beta_g1 = -std::log(gamma);  // ln B(gamma, 1)
  return -rho / (rho - 1.0) * std::log(p.alpha) - log_beta_g1 / (rho - 1.0) -
         std::log(et) / (rho - 1.0);
}

double characterization_U(const Params& p, double t) {
  validate(p);
  Params b1 = baseline(p);
  return -std::log(cdf(b1, t));  // D(t) = F1(t)
}

double characterization_delta(const Params& p, double t, int n, double tol) {
  validate(p);
  Support s = support(p);
  if (!(t > 0.0) || (s.bounded && t >= s.hi))
    throw std::domain_error("characterization_delta: t must lie in the open support");
  if (n < 0) throw std::domain_error("characterization_delta: requires n >= 0");
  Params b1 = baseline(p);
  auto integrand = [&](double x) {
    double lw = std::log(cdf(b1, x));
    double v = pdf(p, x);
    if (!std::isfinite(v) || v <= 0.0) return 0.0;
    return std::pow(-lw, n) * v;
  };
  double num = specfun::adaptive_quadrature(integrand, 0.0, t, tol).value;
  return num / cdf(p, t);
}

}  // namespace eglfr
