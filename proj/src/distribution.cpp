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

#include "eglfr/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eglfr/specfun.hpp"

namespace eglfr {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void validate(const Params& p) {
  if (!(p.alpha > 0.0)) throw std::invalid_argument("eglfr: requires alpha > 0");
  if (!std::isfinite(p.beta)) throw std::invalid_argument("eglfr: beta must be finite");
  if (!(p.a >= 0.0) || !(p.b >= 0.0))
    throw std::invalid_argument("eglfr: requires a >= 0 and b >= 0");
  if (!(p.a + p.b > 0.0)) throw std::invalid_argument("eglfr: requires a + b > 0");
}

Support support(const Params& p) {
  validate(p);
  Support s;
  if (p.beta <= 0.0) {
    s.hi = kInf;
    s.bounded = false;
    return s;
  }
  s.bounded = true;
  if (p.b > 0.0) {
    // psi = (sqrt(a^2 + 2b/beta) - a)/b, written to avoid cancellation.
    double c = 2.0 * p.b / p.beta;
    s.hi = c / (p.b * (std::sqrt(p.a * p.a + c) + p.a));
  } else {
    s.hi = 1.0 / (p.a * p.beta);
  }
  return s;
}

double z_of(const Params& p, double x) { return p.a * x + 0.5 * p.b * x * x; }
double dz_of(const Params& p, double x) { return p.a + p.b * x; }

namespace {

// log F1(x) = log(1-(1-beta z)^(1/beta)), the alpha=1 baseline cdf, in a
// form that stays accurate at both endpoints.
double log_w(const Params& p, double x) {
  double z = z_of(p, x);
  if (std::fabs(p.beta) < kBetaZeroTol) {
    return specfun::log1mexp(-z);  // log(1 - e^-z)
  }
  double bz = p.beta * z;
  if (bz >= 1.0) return 0.0;  // at/beyond the endpoint, w = 1
  double logt = std::log1p(-bz);  // log(1-beta z)
  return specfun::log1mexp(logt / p.beta);
}

double log_one_minus_t_pow(const Params& p, double x) {
  // log((1-beta z)^(1/beta)) for beta != 0; log(e^-z) = -z for beta = 0.
  double z = z_of(p, x);
  if (std::fabs(p.beta) < kBetaZeroTol) return -z;
  double bz = p.beta * z;
  if (bz >= 1.0) return -kInf;
  return std::log1p(-bz) / p.beta;
}

}  // namespace

double cdf(const Params& p, double x) {
  Support s = support(p);
  if (x <= 0.0) return 0.0;
  if (s.bounded && x >= s.hi) return 1.0;
  return std::exp(p.alpha * log_w(p, x));
}

double survival(const Params& p, double x) {
  Support s = support(p);
  if (x <= 0.0) return 1.0;
  if (s.bounded && x >= s.hi) return 0.0;
  return -std::expm1(p.alpha * log_w(p, x));
}

double log_pdf(const Params& p, double x) {
  Support s = support(p);
  if (x < 0.0 || (s.bounded && x > s.hi)) return -kInf;
  if (x == 0.0) {
    // Limits at the left endpoint: 0 for alpha>1, a for alpha=1, +inf below.
    if (p.alpha > 1.0) return -kInf;
    if (p.alpha == 1.0) return p.a > 0.0 ? std::log(p.a) : -kInf;
    return kInf;
  }
  if (s.bounded && x == s.hi) return p.beta >= 1.0 ? kInf : -kInf;
  double z = z_of(p, x);
  double lg = std::log(dz_of(p, x));
  if (std::fabs(p.beta) < kBetaZeroTol) {
    return std::log(p.alpha) + lg - z + (p.alpha - 1.0) * log_w(p, x);
  }
  double bz = p.beta * z;
  if (bz >= 1.0) return p.beta >= 1.0 ? kInf : -kInf;
  double logt = std::log1p(-bz);
  return std::log(p.alpha) + lg + (1.0 / p.beta - 1.0) * logt +
         (p.alpha - 1.0) * log_w(p, x);
}

double pdf(const Params& p, double x) {
  double lp = log_pdf(p, x);
  if (lp == kInf) return kInf;
  return std::exp(lp);
}

double quantile(const Params& p, double u) {
  Support s = support(p);
  if (!(u >= 0.0) || !(u <= 1.0))
    throw std::domain_error("eglfr quantile: requires u in [0,1]");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return s.hi;
  // r = u^(1/alpha); 1 - r computed stably as -expm1(log(u)/alpha).
  double one_minus_r = -std::expm1(std::log(u) / p.alpha);
  double log1mr = std::log(one_minus_r);

  bool beta_zero = std::fabs(p.beta) < kBetaZeroTol;
  // b -> 0+ with the b>0 branch cancels badly; route tiny b to the b=0 form.
  bool use_b_zero = (p.b == 0.0) || (p.a > 0.0 && p.b < 1e-12 * p.a);

  if (!beta_zero && !use_b_zero) {
    // c = (2b/beta)(1-(1-r)^beta); Q = (sqrt(a^2+c)-a)/b rationalized
    double c = 2.0 * p.b / p.beta * (-std::expm1(p.beta * log1mr));
    return c / (p.b * (std::sqrt(p.a * p.a + c) + p.a));
  }
  if (beta_zero && !use_b_zero) {
    double c = -2.0 * p.b * log1mr;
    return c / (p.b * (std::sqrt(p.a * p.a + c) + p.a));
  }
  if (!beta_zero) {
    return (-std::expm1(p.beta * log1mr)) / (p.beta * p.a);
  }
  return -log1mr / p.a;
}

double hazard(const Params& p, double x) {
  Support s = support(p);
  if (x <= 0.0) {
    if (p.alpha > 1.0) return 0.0;
    if (p.alpha == 1.0) return p.a;
    return kInf;
  }
  if (s.bounded && x >= s.hi) return p.beta > 0.0 ? kInf : 0.0;
  double lw = log_w(p, x);
  double log_sf = specfun::log1mexp(p.alpha * lw);  // log(1 - w^alpha)
  double lp = log_pdf(p, x);
  if (lp == kInf) return kInf;
  return std::exp(lp - log_sf);
}

double reversed_hazard(const Params& p, double x) {
  Support s = support(p);
  if (x <= 0.0 || (s.bounded && x > s.hi)) return kInf;
  double lp = log_pdf(p, x);
  if (lp == kInf) return kInf;
  return std::exp(lp - p.alpha * log_w(p, x));
}

std::uint64_t RngStream::next_u64() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double RngStream::next_uniform() {
  // 53-bit mantissa, shifted into (0,1).
  double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return u > 0.0 ? u : 0x1.0p-53;
}

RngStream RngStream::substream(std::uint64_t seed, std::uint64_t counter) {
  // One splitmix step decorrelates the (seed, counter) pair.
  RngStream mixer(seed ^ (0xD1B54A32D192ED03ULL * (counter + 1)));
  return RngStream(mixer.next_u64());
}

std::vector<double> sample(const Params& p, std::size_t n, RngStream& rng) {
  validate(p);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = quantile(p, rng.next_uniform());
  return out;
}

namespace {

// Stationarity equation (d/dx log f). Two displayed forms, beta = 0 and not.
double mode_equation(const Params& p, double x) {
  double g = dz_of(p, x);
  double z = z_of(p, x);
  if (std::fabs(p.beta) < kBetaZeroTol) {
    return p.b / g - g + (p.alpha - 1.0) * g / std::expm1(z);
  }
  double bz = p.beta * z;
  double t = 1.0 - bz;
  double t_pow = std::exp((1.0 / p.beta - 1.0) * std::log(t));
  double w = -std::expm1(std::log(t) / p.beta);
  return p.b / g + (p.beta - 1.0) * g / t + (p.alpha - 1.0) * g * t_pow / w;
}

}  // namespace

Mode mode(const Params& p) {
  Support s = support(p);
  Mode m;
  if (p.alpha < 1.0 && p.beta < 1.0) {
    m.kind = Mode::Kind::at_zero;
    m.location = 0.0;
    return m;
  }
  if (p.alpha < 1.0) {  // beta >= 1
    m.kind = Mode::Kind::two_boundary;
    m.location = 0.0;
    m.second = s.hi;
    return m;
  }
  if (p.beta >= 1.0) {  // alpha >= 1: density diverges at psi
    m.kind = Mode::Kind::at_psi;
    m.location = s.hi;
    return m;
  }
  // alpha >= 1, beta < 1: interior root of the stationarity equation,
  // bracketed on a geometric grid of 64 points over the support.
  double hi = s.bounded ? s.hi : quantile(p, 1.0 - 1e-10);
  double lo = hi * 1e-9;
  const int kGrid = 64;
  double prev_x = lo, prev_f = mode_equation(p, lo);
  double ratio = std::pow(hi / lo, 1.0 / (kGrid - 1));
  for (int i = 1; i < kGrid; ++i) {
    double x = lo * std::pow(ratio, i);
    if (i == kGrid - 1) x = s.bounded ? hi * (1.0 - 1e-12) : hi;
    double f = mode_equation(p, x);
    if (std::isfinite(prev_f) && std::isfinite(f) && prev_f * f <= 0.0) {
      double a = prev_x, b = x;
      for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (a + b);
        double fm = mode_equation(p, mid);
        if (prev_f * fm <= 0.0)
          b = mid;
        else {
          a = mid;
          prev_f = fm;
        }
        if (b - a < 1e-13 * std::max(1.0, b)) break;
      }
      m.kind = Mode::Kind::interior;
      m.location = 0.5 * (a + b);
      return m;
    }
    prev_x = x;
    prev_f = f;
  }
  throw std::runtime_error("eglfr mode: no sign change found for the stationarity equation");
}

}  // namespace eglfr
