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

#ifndef EGLFR_COMPETITORS_HPP
#define EGLFR_COMPETITORS_HPP

#include <optional>
#include <string>
#include <vector>

namespace eglfr {

/// The fourteen comparison models. EGLFR and its sub-models evaluate through
/// the four-parameter family; the rest are the GLFR extensions plus BMW.
enum class ModelId {
  EGLFR, EGE, EGR, GLFR, GE, GR, BMW,
  BLFR, KGLFR, MCGLFR, MGLFR, PGLFR, GGLFR, GLE,
};

struct ParamDomain {
  enum class Kind { positive, real, unit_interval, below_one };
  Kind kind;
};

struct ModelSpec {
  ModelId id;
  std::string name;                       // exact external identifier
  std::vector<std::string> param_names;   // ordered
  std::vector<ParamDomain> param_domain;
  int k() const { return static_cast<int>(param_names.size()); }
};

const std::vector<ModelSpec>& all_models();
const ModelSpec& model_spec(ModelId id);
std::optional<ModelId> model_from_name(const std::string& name);

/// Baseline of the GLFR extensions: G(x) = 1 - exp(-(ax + b x^2/2)) and its
/// density g(x) = (a + bx) exp(-(ax + b x^2/2)).
struct BaselineG {
  double a, b;
  double G(double x) const;
  double log_g(double x) const;
  double log_G(double x) const;
  double log_one_minus_G(double x) const;
};

/// Log-density of the model at x. Returns -inf outside the model's support.
/// Throws std::domain_error when params violate the parameter domain.
double model_log_pdf(ModelId id, const std::vector<double>& params, double x);

/// Distribution function of the model (closed forms; BLFR/MCGLFR/BMW via the
/// regularized incomplete beta).
double model_cdf(ModelId id, const std::vector<double>& params, double x);

}  // namespace eglfr

#endif
