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

#include "eglfr_kit.h"

#include <cstring>
#include <string>

#include "eglfr/competitors.hpp"
#include "eglfr/dataset.hpp"
#include "eglfr/distribution.hpp"
#include "eglfr/gof.hpp"
#include "eglfr/inference.hpp"
#include "eglfr/mc_asymptotics.hpp"
#include "eglfr/properties.hpp"

namespace {

thread_local std::string g_last_error;

eglfr_status fail(eglfr_status code, const char* what) {
  g_last_error = what ? what : "unknown error";
  return code;
}

// Translates C++ exceptions into status codes.
template <typename F>
eglfr_status guard(F&& fn) {
  try {
    return fn();
  } catch (const eglfr::DataError& e) {
    return fail(EGLFR_ERR_DATA, e.what());
  } catch (const std::domain_error& e) {
    return fail(EGLFR_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(EGLFR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(EGLFR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EGLFR_ERR_INTERNAL, "unknown exception");
  }
}

eglfr::Params make_params(double alpha, double beta, double a, double b) {
  return eglfr::Params{alpha, beta, a, b};
}

eglfr::ModelId require_model(const char* name) {
  if (!name) throw std::invalid_argument("model name is null");
  auto id = eglfr::model_from_name(name);
  if (!id) throw std::invalid_argument(std::string("unknown model: ") + name);
  return *id;
}

std::vector<double> to_vec(const double* p, size_t k) {
  if (!p && k > 0) throw std::invalid_argument("null parameter array");
  return std::vector<double>(p, p + k);
}

}  // namespace

struct eglfr_dataset {
  eglfr::Dataset d;
};

struct eglfr_fit {
  eglfr::FitResult r;
};

extern "C" {

const char* eglfr_version(void) { return "eglfr-kit 1.0.0"; }

const char* eglfr_last_error(void) { return g_last_error.c_str(); }

eglfr_status eglfr_dist_support(double alpha, double beta, double a, double b, double* lo,
                                double* hi, int* bounded) {
  return guard([&] {
    eglfr::Support s = eglfr::support(make_params(alpha, beta, a, b));
    if (lo) *lo = s.lo;
    if (hi) *hi = s.hi;
    if (bounded) *bounded = s.bounded ? 1 : 0;
    return EGLFR_OK;
  });
}

#define EGLFR_EVAL1(cname, cppname)                                                       \
  eglfr_status cname(double alpha, double beta, double a, double b, double x,             \
                     double* out) {                                                       \
    return guard([&] {                                                                    \
      if (!out) throw std::invalid_argument("null output pointer");                       \
      *out = eglfr::cppname(make_params(alpha, beta, a, b), x);                           \
      return EGLFR_OK;                                                                    \
    });                                                                                   \
  }

EGLFR_EVAL1(eglfr_dist_cdf, cdf)
EGLFR_EVAL1(eglfr_dist_pdf, pdf)
EGLFR_EVAL1(eglfr_dist_log_pdf, log_pdf)
EGLFR_EVAL1(eglfr_dist_quantile, quantile)
EGLFR_EVAL1(eglfr_dist_hazard, hazard)
EGLFR_EVAL1(eglfr_dist_reversed_hazard, reversed_hazard)
#undef EGLFR_EVAL1

eglfr_status eglfr_dist_mode(double alpha, double beta, double a, double b, int* kind,
                             double* location, double* second) {
  return guard([&] {
    eglfr::Mode m = eglfr::mode(make_params(alpha, beta, a, b));
    if (kind) *kind = static_cast<int>(m.kind);
    if (location) *location = m.location;
    if (second) *second = m.second;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_dist_sample(double alpha, double beta, double a, double b, size_t n,
                               uint64_t seed, double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");
    eglfr::RngStream rng(seed);
    auto v = eglfr::sample(make_params(alpha, beta, a, b), n, rng);
    std::memcpy(out, v.data(), n * sizeof(double));
    return EGLFR_OK;
  });
}

eglfr_status eglfr_moment_exists(double alpha, double beta, double a, double b, double k,
                                 int* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::moment_exists(make_params(alpha, beta, a, b), k) ? 1 : 0;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_moment(double alpha, double beta, double a, double b, double r,
                          double tol, double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::moment_numeric(make_params(alpha, beta, a, b), r, tol);
    return EGLFR_OK;
  });
}

eglfr_status eglfr_moment_closed_even(double alpha, double beta, double b, int k,
                                      double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::moment_closed_even(make_params(alpha, beta, 0.0, b), k);
    return EGLFR_OK;
  });
}

eglfr_status eglfr_moment_series(double alpha, double beta, double a, double b, int r,
                                 double tol, double* value, double* truncation_estimate,
                                 int* converged) {
  return guard([&] {
    auto acc = eglfr::moment_series(make_params(alpha, beta, a, b), r, tol);
    if (value) *value = acc.value;
    if (truncation_estimate) *truncation_estimate = acc.truncation_estimate;
    if (converged) *converged = acc.converged ? 1 : 0;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_mgf_series(double alpha, double beta, double a, double b, double t,
                              double tol, double* value, double* truncation_estimate,
                              int* converged) {
  return guard([&] {
    auto acc = eglfr::mgf_series(make_params(alpha, beta, a, b), t, tol);
    if (value) *value = acc.value;
    if (truncation_estimate) *truncation_estimate = acc.truncation_estimate;
    if (converged) *converged = acc.converged ? 1 : 0;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_bowley_skewness(double alpha, double beta, double a, double b,
                                   double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::bowley_skewness(make_params(alpha, beta, a, b));
    return EGLFR_OK;
  });
}

eglfr_status eglfr_moors_kurtosis(double alpha, double beta, double a, double b,
                                  double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::moors_kurtosis(make_params(alpha, beta, a, b));
    return EGLFR_OK;
  });
}

eglfr_status eglfr_shannon_entropy(double alpha, double beta, double a, double b,
                                   double tol, double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::shannon_entropy(make_params(alpha, beta, a, b), tol);
    return EGLFR_OK;
  });
}

eglfr_status eglfr_renyi_entropy(double alpha, double beta, double a, double b, double rho,
                                 double tol, double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::renyi_entropy(make_params(alpha, beta, a, b), rho, tol);
    return EGLFR_OK;
  });
}

eglfr_status eglfr_dataset_open(const char* path_or_keyword, eglfr_dataset** out) {
  return guard([&] {
    if (!path_or_keyword || !out) throw std::invalid_argument("null argument");
    auto* h = new eglfr_dataset{eglfr::load_dataset(path_or_keyword)};
    *out = h;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_dataset_from_values(const double* values, size_t n, const char* name,
                                       eglfr_dataset** out) {
  return guard([&] {
    if (!values || !out) throw std::invalid_argument("null argument");
    std::vector<double> v(values, values + n);
    auto* h = new eglfr_dataset{
        eglfr::make_dataset(std::move(v), name ? name : "memory", "memory")};
    *out = h;
    return EGLFR_OK;
  });
}

void eglfr_dataset_free(eglfr_dataset* d) { delete d; }

size_t eglfr_dataset_size(const eglfr_dataset* d) { return d ? d->d.size() : 0; }

double eglfr_dataset_value(const eglfr_dataset* d, size_t i) {
  return d && i < d->d.size() ? d->d.values[i] : 0.0;
}

const char* eglfr_dataset_name(const eglfr_dataset* d) {
  return d ? d->d.name.c_str() : "";
}

double eglfr_dataset_mean(const eglfr_dataset* d) { return d ? d->d.mean() : 0.0; }

uint64_t eglfr_dataset_digest(const eglfr_dataset* d) {
  return d ? eglfr::dataset_digest(d->d) : 0;
}

int eglfr_model_count(void) { return static_cast<int>(eglfr::all_models().size()); }

const char* eglfr_model_name(int index) {
  const auto& m = eglfr::all_models();
  if (index < 0 || index >= static_cast<int>(m.size())) return nullptr;
  return m[index].name.c_str();
}

int eglfr_model_param_count(const char* model) {
  if (!model) return -1;
  auto id = eglfr::model_from_name(model);
  if (!id) return -1;
  return eglfr::model_spec(*id).k();
}

const char* eglfr_model_param_name(const char* model, int i) {
  if (!model) return nullptr;
  auto id = eglfr::model_from_name(model);
  if (!id) return nullptr;
  const auto& spec = eglfr::model_spec(*id);
  if (i < 0 || i >= spec.k()) return nullptr;
  return spec.param_names[i].c_str();
}

eglfr_status eglfr_model_log_pdf(const char* model, const double* params, size_t k,
                                 double x, double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::model_log_pdf(require_model(model), to_vec(params, k), x);
    return EGLFR_OK;
  });
}

eglfr_status eglfr_model_cdf(const char* model, const double* params, size_t k, double x,
                             double* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    *out = eglfr::model_cdf(require_model(model), to_vec(params, k), x);
    return EGLFR_OK;
  });
}

eglfr_status eglfr_fit_run(const char* model, const eglfr_dataset* data,
                           const eglfr_fit_options* opts, eglfr_fit** out) {
  return guard([&] {
    if (!data || !out) throw std::invalid_argument("null argument");
    eglfr::OptimizerConfig cfg;
    if (opts) {
      if (opts->tol_f > 0) cfg.tol_f = opts->tol_f;
      if (opts->tol_x > 0) cfg.tol_x = opts->tol_x;
      if (opts->max_iters > 0) cfg.max_iters = opts->max_iters;
      if (opts->restarts > 0) cfg.restarts = opts->restarts;
      cfg.seed = opts->seed;
    }
    eglfr::FitResult r = eglfr::fit_model(require_model(model), data->d, cfg);
    bool converged = r.converged;
    *out = new eglfr_fit{std::move(r)};
    if (!converged) return fail(EGLFR_ERR_CONVERGENCE, "fit did not converge");
    return EGLFR_OK;
  });
}

void eglfr_fit_free(eglfr_fit* f) { delete f; }

const char* eglfr_fit_model(const eglfr_fit* f) { return f ? f->r.model_name.c_str() : ""; }

int eglfr_fit_param_count(const eglfr_fit* f) {
  return f ? static_cast<int>(f->r.params.size()) : 0;
}

const char* eglfr_fit_param_name(const eglfr_fit* f, int i) {
  if (!f || i < 0 || i >= static_cast<int>(f->r.param_names.size())) return nullptr;
  return f->r.param_names[i].c_str();
}

double eglfr_fit_param_value(const eglfr_fit* f, int i) {
  if (!f || i < 0 || i >= static_cast<int>(f->r.params.size())) return 0.0;
  return f->r.params[i];
}

double eglfr_fit_log_lik(const eglfr_fit* f) { return f ? f->r.log_lik : 0.0; }

int eglfr_fit_converged(const eglfr_fit* f) { return f && f->r.converged ? 1 : 0; }

int eglfr_fit_nonregular(const eglfr_fit* f) {
  return f && f->r.regime == eglfr::Regime::non_regular ? 1 : 0;
}

int eglfr_fit_restarts_used(const eglfr_fit* f) { return f ? f->r.n_restarts_used : 0; }

eglfr_status eglfr_fit_threshold(const eglfr_fit* f, double* out) {
  return guard([&] {
    if (!f || !out) throw std::invalid_argument("null argument");
    if (!f->r.threshold_estimate)
      return fail(EGLFR_ERR_NOT_AVAILABLE, "regular fit has no threshold estimate");
    *out = *f->r.threshold_estimate;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_fit_std_errors(const eglfr_fit* f, const eglfr_dataset* data,
                                  double* out, size_t k) {
  return guard([&] {
    if (!f || !data || !out) throw std::invalid_argument("null argument");
    if (f->r.regime != eglfr::Regime::regular)
      return fail(EGLFR_ERR_NOT_AVAILABLE, "standard errors require the regular regime");
    if (k != f->r.params.size()) throw std::invalid_argument("output size mismatch");
    std::vector<double> se;
    try {
      se = eglfr::std_errors(f->r, data->d);
    } catch (const std::runtime_error& e) {
      return fail(EGLFR_ERR_DOMAIN, e.what());
    }
    std::memcpy(out, se.data(), k * sizeof(double));
    return EGLFR_OK;
  });
}

eglfr_status eglfr_ks_test(const char* model, const double* params, size_t k,
                           const eglfr_dataset* data, double* stat, double* pvalue) {
  return guard([&] {
    if (!data) throw std::invalid_argument("null dataset");
    eglfr::ModelId id = require_model(model);
    std::vector<double> pv = to_vec(params, k);
    auto r = eglfr::ks_test([&](double x) { return eglfr::model_cdf(id, pv, x); }, data->d);
    if (stat) *stat = r.stat;
    if (pvalue) *pvalue = r.pvalue;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_information_criteria(double neg_log_lik, int k, int n, double* aic,
                                        double* aicc, double* bic) {
  return guard([&] {
    auto c = eglfr::information_criteria(neg_log_lik, k, n);
    if (aic) *aic = c.aic;
    if (aicc) *aicc = c.aicc;
    if (bic) *bic = c.bic;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_lrt(double neg_ll_restricted, double neg_ll_full, int df, double* stat,
                       double* pvalue) {
  return guard([&] {
    auto r = eglfr::lrt(neg_ll_restricted, neg_ll_full, df);
    if (stat) *stat = r.stat;
    if (pvalue) *pvalue = r.pvalue;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_mc_threshold(double alpha, double beta, double a, double b, size_t n,
                                size_t reps, uint64_t seed, eglfr_mc_report* out) {
  return guard([&] {
    if (!out) throw std::invalid_argument("null output pointer");
    eglfr::McExperiment exp{make_params(alpha, beta, a, b), n, reps, seed};
    eglfr::McReport rep = eglfr::run_threshold_experiment(exp);
    out->ks_stat = rep.limit_cdf_ks_stat;
    out->ks_pvalue = rep.limit_cdf_ks_pvalue;
    out->gap_q05 = rep.gap_q05;
    out->gap_median = rep.gap_median;
    out->gap_q95 = rep.gap_q95;
    return EGLFR_OK;
  });
}

eglfr_status eglfr_mc_rate_exponent(double alpha, double beta, double a, double b,
                                    const size_t* n_list, size_t len, size_t reps,
                                    uint64_t seed, double* out) {
  return guard([&] {
    if (!out || !n_list) throw std::invalid_argument("null argument");
    std::vector<std::size_t> ladder(n_list, n_list + len);
    *out = eglfr::estimate_rate_exponent(make_params(alpha, beta, a, b), ladder, reps, seed);
    return EGLFR_OK;
  });
}

}  // extern "C"
