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

/*
 * C API of the EGLFR kit shared library. All functions return an
 * eglfr_status; outputs go through pointers. On any non-OK status,
 * eglfr_last_error() returns a thread-local message describing the failure.
 * Handles (datasets, fits) are opaque and must be released with the matching
 * *_free call. All evaluation entry points are pure and safe to call from
 * multiple threads.
 */

#ifndef EGLFR_KIT_H
#define EGLFR_KIT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum eglfr_status {
  EGLFR_OK = 0,
  EGLFR_ERR_INVALID_ARGUMENT = 1,
  EGLFR_ERR_DOMAIN = 2,
  EGLFR_ERR_DATA = 3,
  EGLFR_ERR_CONVERGENCE = 4,
  EGLFR_ERR_NOT_AVAILABLE = 5,
  EGLFR_ERR_INTERNAL = 6
} eglfr_status;

const char* eglfr_version(void);
const char* eglfr_last_error(void);

/* ---- distribution (alpha, beta, a, b) ---- */

eglfr_status eglfr_dist_support(double alpha, double beta, double a, double b,
                                double* lo, double* hi, int* bounded);
eglfr_status eglfr_dist_cdf(double alpha, double beta, double a, double b, double x,
                            double* out);
eglfr_status eglfr_dist_pdf(double alpha, double beta, double a, double b, double x,
                            double* out);
eglfr_status eglfr_dist_log_pdf(double alpha, double beta, double a, double b, double x,
                                double* out);
eglfr_status eglfr_dist_quantile(double alpha, double beta, double a, double b, double u,
                                 double* out);
eglfr_status eglfr_dist_hazard(double alpha, double beta, double a, double b, double x,
                               double* out);
eglfr_status eglfr_dist_reversed_hazard(double alpha, double beta, double a, double b,
                                        double x, double* out);

/* kind: 0 interior, 1 at zero, 2 at psi, 3 two boundary modes {0, psi}. */
eglfr_status eglfr_dist_mode(double alpha, double beta, double a, double b, int* kind,
                             double* location, double* second);

/* Fills out[0..n) with a deterministic sample for the given seed. */
eglfr_status eglfr_dist_sample(double alpha, double beta, double a, double b, size_t n,
                               uint64_t seed, double* out);

/* ---- distributional summaries ---- */

eglfr_status eglfr_moment_exists(double alpha, double beta, double a, double b, double k,
                                 int* out);
eglfr_status eglfr_moment(double alpha, double beta, double a, double b, double r,
                          double tol, double* out);
eglfr_status eglfr_moment_closed_even(double alpha, double beta, double b, int k,
                                      double* out);
eglfr_status eglfr_moment_series(double alpha, double beta, double a, double b, int r,
                                 double tol, double* value, double* truncation_estimate,
                                 int* converged);
eglfr_status eglfr_mgf_series(double alpha, double beta, double a, double b, double t,
                              double tol, double* value, double* truncation_estimate,
                              int* converged);
eglfr_status eglfr_bowley_skewness(double alpha, double beta, double a, double b,
                                   double* out);
eglfr_status eglfr_moors_kurtosis(double alpha, double beta, double a, double b,
                                  double* out);
eglfr_status eglfr_shannon_entropy(double alpha, double beta, double a, double b,
                                   double tol, double* out);
eglfr_status eglfr_renyi_entropy(double alpha, double beta, double a, double b, double rho,
                                 double tol, double* out);

/* ---- datasets ---- */

typedef struct eglfr_dataset eglfr_dataset;

/* "aarset" selects the embedded device-lifetime data. */
eglfr_status eglfr_dataset_open(const char* path_or_keyword, eglfr_dataset** out);
eglfr_status eglfr_dataset_from_values(const double* values, size_t n, const char* name,
                                       eglfr_dataset** out);
void eglfr_dataset_free(eglfr_dataset* d);
size_t eglfr_dataset_size(const eglfr_dataset* d);
double eglfr_dataset_value(const eglfr_dataset* d, size_t i);
const char* eglfr_dataset_name(const eglfr_dataset* d);
double eglfr_dataset_mean(const eglfr_dataset* d);
uint64_t eglfr_dataset_digest(const eglfr_dataset* d);

/* ---- model registry ---- */

int eglfr_model_count(void);
const char* eglfr_model_name(int index);
/* Number of free parameters, or -1 for an unknown model. */
int eglfr_model_param_count(const char* model);
const char* eglfr_model_param_name(const char* model, int i);
eglfr_status eglfr_model_log_pdf(const char* model, const double* params, size_t k,
                                 double x, double* out);
eglfr_status eglfr_model_cdf(const char* model, const double* params, size_t k, double x,
                             double* out);

/* ---- fitting ---- */

typedef struct eglfr_fit_options {
  double tol_f;       /* <= 0 selects the default 1e-10 */
  double tol_x;       /* <= 0 selects the default 1e-8 */
  int max_iters;      /* <= 0 selects the default 5000 */
  int restarts;       /* <= 0 selects the default 8 */
  uint64_t seed;
} eglfr_fit_options;

typedef struct eglfr_fit eglfr_fit;

/* Maximum-likelihood fit; returns EGLFR_ERR_CONVERGENCE when the optimizer
 * did not meet its tolerances (the fit handle is still produced). */
eglfr_status eglfr_fit_run(const char* model, const eglfr_dataset* data,
                           const eglfr_fit_options* opts, eglfr_fit** out);
void eglfr_fit_free(eglfr_fit* f);
const char* eglfr_fit_model(const eglfr_fit* f);
int eglfr_fit_param_count(const eglfr_fit* f);
const char* eglfr_fit_param_name(const eglfr_fit* f, int i);
double eglfr_fit_param_value(const eglfr_fit* f, int i);
double eglfr_fit_log_lik(const eglfr_fit* f);
int eglfr_fit_converged(const eglfr_fit* f);
int eglfr_fit_nonregular(const eglfr_fit* f);
int eglfr_fit_restarts_used(const eglfr_fit* f);
/* EGLFR_ERR_NOT_AVAILABLE when the fit is regular (no threshold). */
eglfr_status eglfr_fit_threshold(const eglfr_fit* f, double* out);
/* Observed-information standard errors; EGLFR_ERR_NOT_AVAILABLE for
 * non-regular fits, EGLFR_ERR_DOMAIN when the information is singular. */
eglfr_status eglfr_fit_std_errors(const eglfr_fit* f, const eglfr_dataset* data,
                                  double* out, size_t k);

/* ---- goodness of fit ---- */

eglfr_status eglfr_ks_test(const char* model, const double* params, size_t k,
                           const eglfr_dataset* data, double* stat, double* pvalue);
eglfr_status eglfr_information_criteria(double neg_log_lik, int k, int n, double* aic,
                                        double* aicc, double* bic);
eglfr_status eglfr_lrt(double neg_ll_restricted, double neg_ll_full, int df, double* stat,
                       double* pvalue);

/* ---- Monte-Carlo threshold experiment ---- */

typedef struct eglfr_mc_report {
  double ks_stat;
  double ks_pvalue;
  double gap_q05;
  double gap_median;
  double gap_q95;
} eglfr_mc_report;

eglfr_status eglfr_mc_threshold(double alpha, double beta, double a, double b, size_t n,
                                size_t reps, uint64_t seed, eglfr_mc_report* out);
/* Slope of log(median |psi~ - psi|) on log n over the ladder n_list[0..len). */
eglfr_status eglfr_mc_rate_exponent(double alpha, double beta, double a, double b,
                                    const size_t* n_list, size_t len, size_t reps,
                                    uint64_t seed, double* out);

#ifdef __cplusplus
}
#endif

#endif /* EGLFR_KIT_H */
