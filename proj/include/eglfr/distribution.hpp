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

#ifndef EGLFR_DISTRIBUTION_HPP
#define EGLFR_DISTRIBUTION_HPP

#include <cstdint>
#include <vector>

namespace eglfr {

/// Parameter vector of the four-parameter family.
///
/// alpha > 0 (shape), beta real (extension), a >= 0 (linear hazard
/// coefficient), b >= 0 (quadratic hazard coefficient), a + b > 0.
struct Params {
  double alpha;
  double beta;
  double a;
  double b;
};

/// Validates the parameter constraints; throws std::invalid_argument.
void validate(const Params& p);

/// Support of the distribution: (0, hi), bounded iff beta > 0.
struct Support {
  double lo = 0.0;
  double hi;       // finite endpoint psi when bounded, +inf otherwise
  bool bounded;
};

Support support(const Params& p);

/// z(x) = a x + (b/2) x^2 and its derivative a + b x.
double z_of(const Params& p, double x);
double dz_of(const Params& p, double x);

/// Treat |beta| below this as the exact beta = 0 branch; the general branch
/// loses all precision as beta -> 0.
constexpr double kBetaZeroTol = 1e-8;

double cdf(const Params& p, double x);
double survival(const Params& p, double x);  // 1 - cdf without cancellation
double pdf(const Params& p, double x);      // limits at 0 / psi per the shape of the family
double log_pdf(const Params& p, double x);  // -inf outside the open support
double quantile(const Params& p, double u); // throws std::domain_error for u outside [0,1]
double hazard(const Params& p, double x);
double reversed_hazard(const Params& p, double x);

/// Minimal deterministic uniform stream (splitmix64), identical across
/// platforms. Each stream owns its state; independent streams for
/// concurrent sampling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  double next_uniform();  // in (0, 1)
  /// Stream for replication r derived from a base seed; order-independent.
  static RngStream substream(std::uint64_t seed, std::uint64_t counter);

 private:
  std::uint64_t state_;
};

/// Inverse-transform sampling: quantile(p, U_i). Deterministic given the
/// stream state.
std::vector<double> sample(const Params& p, std::size_t n, RngStream& rng);

/// Mode of the density.
struct Mode {
  enum class Kind { interior, at_zero, at_psi, two_boundary };
  Kind kind;
  double location;     // interior root, or the boundary point
  double second = 0.0; // psi when kind == two_boundary
};

/// Implements the mode trichotomy: interior root (alpha>=1, beta<1) via
/// bisection on a sign change located over a 64-point geometric grid;
/// boundary modes otherwise. Throws std::runtime_error if no bracket is
/// found.
Mode mode(const Params& p);

}  // namespace eglfr

#endif
