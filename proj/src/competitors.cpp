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

#include "eglfr/competitors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "eglfr/distribution.hpp"
#include "eglfr/specfun.hpp"

namespace eglfr {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
using Kind = ParamDomain::Kind;

ModelSpec make(ModelId id, std::string name, std::vector<std::string> pn,
               std::vector<Kind> kinds) {
  ModelSpec s;
  s.id = id;
  s.name = std::move(name);
  s.param_names = std::move(pn);
  for (Kind k : kinds) s.param_domain.push_back({k});
  return s;
}

}  // namespace

const std::vector<ModelSpec>& all_models() {
  static const std::vector<ModelSpec> models = [] {
    std::vector<ModelSpec> v;
    v.push_back(make(ModelId::EGLFR, "EGLFR", {"alpha", "beta", "a", "b"},
                     {Kind::positive, Kind::real, Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::EGE, "EGE", {"alpha", "beta", "a"},
                     {Kind::positive, Kind::real, Kind::positive}));
    v.push_back(make(ModelId::EGR, "EGR", {"alpha", "beta", "b"},
                     {Kind::positive, Kind::real, Kind::positive}));
    v.push_back(make(ModelId::GLFR, "GLFR", {"alpha", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::GE, "GE", {"alpha", "a"}, {Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::GR, "GR", {"alpha", "b"}, {Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::BMW, "BMW", {"alpha", "beta", "gamma", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive, Kind::unit_interval,
                      Kind::unit_interval}));
    v.push_back(make(ModelId::BLFR, "BLFR", {"alpha", "beta", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::KGLFR, "KGLFR", {"alpha", "beta", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::MCGLFR, "MCGLFR", {"alpha", "beta", "gamma", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive, Kind::positive,
                      Kind::positive}));
    v.push_back(make(ModelId::MGLFR, "MGLFR", {"alpha", "beta", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::PGLFR, "PGLFR", {"alpha", "beta", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::GGLFR, "GGLFR", {"alpha", "beta", "a", "b"},
                     {Kind::positive, Kind::below_one, Kind::positive, Kind::positive}));
    v.push_back(make(ModelId::GLE, "GLE", {"alpha", "beta", "a", "b"},
                     {Kind::positive, Kind::positive, Kind::positive, Kind::positive}));
    return v;
  }();
  return models;
}

const ModelSpec& model_spec(ModelId id) {
  for (const auto& m : all_models())
    if (m.id == id) return m;
  throw std::logic_error("unknown model id");
}

std::optional<ModelId> model_from_name(const std::string& name) {
  for (const auto& m : all_models())
    if (m.name == name) return m.id;
  return std::nullopt;
}

double BaselineG::G(double x) const { return -std::expm1(-(a * x + 0.5 * b * x * x)); }
double BaselineG::log_g(double x) const {
  return std::log(a + b * x) - (a * x + 0.5 * b * x * x);
}
double BaselineG::log_G(double x) const {
  return specfun::log1mexp(-(a * x + 0.5 * b * x * x));
}
double BaselineG::log_one_minus_G(double x) const { return -(a * x + 0.5 * b * x * x); }

namespace {

void check_domain(const ModelSpec& spec, const std::vector<double>& params) {
  if (params.size() != spec.param_names.size())
    throw std::domain_error(spec.name + ": expected " +
                            std::to_string(spec.param_names.size()) + " parameters");
  for (std::size_t i = 0; i < params.size(); ++i) {
    double v = params[i];
    bool ok = std::isfinite(v);
    switch (spec.param_domain[i].kind) {
      case Kind::positive: ok = ok && v > 0.0; break;
      case Kind::real: break;
      case Kind::unit_interval: ok = ok && v > 0.0 && v < 1.0; break;
      case Kind::below_one: ok = ok && v < 1.0; break;
    }
    if (!ok)
      throw std::domain_error(spec.name + ": parameter " + spec.param_names[i] +
                              " outside its domain");
  }
}

Params family_params(ModelId id, const std::vector<double>& q) {
  switch (id) {
    case ModelId::EGLFR: return {q[0], q[1], q[2], q[3]};
    case ModelId::EGE: return {q[0], q[1], q[2], 0.0};
    case ModelId::EGR: return {q[0], q[1], 0.0, q[2]};
    case ModelId::GLFR: return {q[0], 0.0, q[1], q[2]};
    case ModelId::GE: return {q[0], 0.0, q[1], 0.0};
    case ModelId::GR: return {q[0], 0.0, 0.0, q[1]};
    default: throw std::logic_error("not a family model");
  }
}

bool is_family(ModelId id) {
  return id == ModelId::EGLFR || id == ModelId::EGE || id == ModelId::EGR ||
         id == ModelId::GLFR || id == ModelId::GE || id == ModelId::GR;
}

// log(1 - G^alpha)
double log1m_pow(double log_base, double expo) {
  double t = expo * log_base;
  if (t >= 0.0) return -kInf;
  return specfun::log1mexp(t);
}

}  // namespace

double model_log_pdf(ModelId id, const std::vector<double>& params, double x) {
  const ModelSpec& spec = model_spec(id);
  check_domain(spec, params);
  if (!(x > 0.0)) return -kInf;

  if (is_family(id)) return log_pdf(family_params(id, params), x);

  switch (id) {
    case ModelId::BMW: {
      // Standard beta modified Weibull: baseline W(x) = 1-exp(-alpha x^gamma e^(beta x)).
      double al = params[0], be = params[1], ga = params[2], a = params[3], b = params[4];
      double w = al * std::pow(x, ga) * std::exp(be * x);
      double logE = specfun::log1mexp(-w);  // log(1 - e^-w)
      return std::log(al) + (ga - 1.0) * std::log(x) + std::log(ga + be * x) + be * x -
             specfun::ln_beta(a, b) - b * w + (a - 1.0) * logE;
    }
    case ModelId::BLFR: {
      double al = params[0], be = params[1];
      BaselineG base{params[2], params[3]};
      return base.log_g(x) - specfun::ln_beta(al, be) + (al - 1.0) * base.log_G(x) +
             (be - 1.0) * base.log_one_minus_G(x);
    }
    case ModelId::KGLFR: {
      double al = params[0], be = params[1];
      BaselineG base{params[2], params[3]};
      double lG = base.log_G(x);
      return std::log(al) + std::log(be) + base.log_g(x) + (al - 1.0) * lG +
             (be - 1.0) * log1m_pow(lG, al);
    }
    case ModelId::MCGLFR: {
      double al = params[0], be = params[1], ga = params[2];
      BaselineG base{params[3], params[4]};
      double lG = base.log_G(x);
      return std::log(ga) + base.log_g(x) - specfun::ln_beta(al, be) +
             (al * ga - 1.0) * lG + (be - 1.0) * log1m_pow(lG, ga);
    }
    case ModelId::MGLFR: {
      double al = params[0], be = params[1], a = params[2], b = params[3];
      double w = a * x + b * std::pow(x, be);
      double dw = a + b * be * std::pow(x, be - 1.0);
      return std::log(al) + std::log(dw) - w + (al - 1.0) * specfun::log1mexp(-w);
    }
    case ModelId::PGLFR: {
      double al = params[0], be = params[1];
      BaselineG base{params[2], params[3]};
      double lG = base.log_G(x);
      double Ga = std::exp(al * lG);
      // log(beta/(1-e^-beta)) stays accurate down to beta ~ 1e-300 via expm1.
      return std::log(be) - std::log(-std::expm1(-be)) + std::log(al) + base.log_g(x) +
             (al - 1.0) * lG - be * Ga;
    }
    case ModelId::GGLFR: {
      double al = params[0], be = params[1];
      BaselineG base{params[2], params[3]};
      double lG = base.log_G(x);
      double Ga = std::exp(al * lG);
      double den = 1.0 - be * (1.0 - Ga);
      if (!(den > 0.0)) return -kInf;
      return std::log(al) + std::log1p(-be) + base.log_g(x) + (al - 1.0) * lG -
             2.0 * std::log(den);
    }
    case ModelId::GLE: {
      double al = params[0], be = params[1], a = params[2], b = params[3];
      double w = a * x + 0.5 * b * x * x - be;
      if (!(w > 0.0)) return -kInf;  // below the support root of z(x) = beta
      return std::log(al) + std::log(a + b * x) + (al - 1.0) * std::log(w) -
             std::pow(w, al);
    }
    default: throw std::logic_error("unhandled model");
  }
}

double model_cdf(ModelId id, const std::vector<double>& params, double x) {
  const ModelSpec& spec = model_spec(id);
  check_domain(spec, params);
  if (!(x > 0.0)) return 0.0;

  if (is_family(id)) return cdf(family_params(id, params), x);

  switch (id) {
    case ModelId::BMW: {
      double al = params[0], be = params[1], ga = params[2], a = params[3], b = params[4];
      double w = al * std::pow(x, ga) * std::exp(be * x);
      double E = -std::expm1(-w);
      return specfun::regularized_incomplete_beta(a, b, E);
    }
    case ModelId::BLFR: {
      BaselineG base{params[2], params[3]};
      return specfun::regularized_incomplete_beta(params[0], params[1], base.G(x));
    }
    case ModelId::KGLFR: {
      double al = params[0], be = params[1];
      BaselineG base{params[2], params[3]};
      double lG = base.log_G(x);
      // 1 - (1 - G^alpha)^beta
      return -std::expm1(be * log1m_pow(lG, al));
    }
    case ModelId::MCGLFR: {
      double al = params[0], be = params[1], ga = params[2];
      BaselineG base{params[3], params[4]};
      double Gg = std::exp(ga * base.log_G(x));
      return specfun::regularized_incomplete_beta(al, be, std::min(Gg, 1.0));
    }
    case ModelId::MGLFR: {
      double al = params[0], be = params[1], a = params[2], b = params[3];
      double w = a * x + b * std::pow(x, be);
      return std::exp(al * specfun::log1mexp(-w));
    }
    case ModelId::PGLFR: {
      double al = params[0], be = params[1];
      BaselineG base{params[2], params[3]};
      double Ga = std::exp(al * base.log_G(x));
      return std::expm1(-be * Ga) / std::expm1(-be);
    }
    case ModelId::GGLFR: {
      double al = params[0], be = params[1];
      BaselineG base{params[2], params[3]};
      double Ga = std::exp(al * base.log_G(x));
      return Ga / (1.0 - be * (1.0 - Ga));
    }
    case ModelId::GLE: {
      double al = params[0], be = params[1], a = params[2], b = params[3];
      double w = a * x + 0.5 * b * x * x - be;
      if (!(w > 0.0)) return 0.0;
      return -std::expm1(-std::pow(w, al));
    }
    default: throw std::logic_error("unhandled model");
  }
}

}  // namespace eglfr
