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

// Exercises the shared-library C surface end to end: handles, error codes,
// and the evaluation entry points the CLI depends on.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "eglfr_kit.h"

TEST_CASE("version and model registry") {
  CHECK(std::string(eglfr_version()).find("eglfr-kit") == 0);
  CHECK(eglfr_model_count() == 14);
  CHECK(std::string(eglfr_model_name(0)) == "EGLFR");
  CHECK(eglfr_model_name(99) == nullptr);
  CHECK(eglfr_model_param_count("EGLFR") == 4);
  CHECK(eglfr_model_param_count("BMW") == 5);
  CHECK(eglfr_model_param_count("NOPE") == -1);
  CHECK(std::string(eglfr_model_param_name("GE", 1)) == "a");
}

TEST_CASE("error reporting carries a message") {
  double out;
  eglfr_status st = eglfr_dist_cdf(-1.0, 0.0, 1.0, 0.0, 1.0, &out);
  CHECK(st == EGLFR_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(eglfr_last_error()) > 0);

  st = eglfr_model_log_pdf("NOPE", nullptr, 0, 1.0, &out);
  CHECK(st == EGLFR_ERR_INVALID_ARGUMENT);

  st = eglfr_dist_quantile(1.0, 0.0, 1.0, 0.0, 2.0, &out);
  CHECK(st == EGLFR_ERR_DOMAIN);
}

TEST_CASE("dataset handles") {
  eglfr_dataset* d = nullptr;
  REQUIRE(eglfr_dataset_open("aarset", &d) == EGLFR_OK);
  CHECK(eglfr_dataset_size(d) == 50);
  CHECK(eglfr_dataset_value(d, 0) == doctest::Approx(0.1));
  CHECK(eglfr_dataset_value(d, 49) == doctest::Approx(86.0));
  CHECK(eglfr_dataset_mean(d) == doctest::Approx(45.686));
  CHECK(std::string(eglfr_dataset_name(d)) == "aarset");
  CHECK(eglfr_dataset_digest(d) != 0);
  eglfr_dataset_free(d);

  eglfr_dataset* bad = nullptr;
  CHECK(eglfr_dataset_open("missing_file.dat", &bad) == EGLFR_ERR_DATA);

  double vals[3] = {3.0, 1.0, 2.0};
  eglfr_dataset* mem = nullptr;
  REQUIRE(eglfr_dataset_from_values(vals, 3, "mem", &mem) == EGLFR_OK);
  CHECK(eglfr_dataset_value(mem, 0) == 1.0);
  eglfr_dataset_free(mem);
}

TEST_CASE("distribution evaluations through the C surface") {
  double v;
  REQUIRE(eglfr_dist_cdf(1.0, 1.0, 1.0, 0.0, 0.5, &v) == EGLFR_OK);
  CHECK(v == doctest::Approx(0.5));
  REQUIRE(eglfr_dist_pdf(1.0, 0.0, 2.0, 0.0, 0.0, &v) == EGLFR_OK);
  CHECK(v == doctest::Approx(2.0));
  REQUIRE(eglfr_dist_quantile(1.0, 0.0, 1.0, 0.0, 1.0 - std::exp(-1.0), &v) == EGLFR_OK);
  CHECK(v == doctest::Approx(1.0));
  REQUIRE(eglfr_dist_hazard(1.0, 0.0, 1.0, 2.0, 3.0, &v) == EGLFR_OK);
  CHECK(v == doctest::Approx(7.0));

  double lo, hi;
  int bounded;
  REQUIRE(eglfr_dist_support(1.0, 0.5, 0.0, 1.0, &lo, &hi, &bounded) == EGLFR_OK);
  CHECK(bounded == 1);
  CHECK(hi == doctest::Approx(2.0));

  int kind;
  double loc, second;
  REQUIRE(eglfr_dist_mode(1.0, 0.0, 0.0, 1.0, &kind, &loc, &second) == EGLFR_OK);
  CHECK(kind == 0);
  CHECK(loc == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sampling is deterministic per seed") {
  std::vector<double> s1(100), s2(100), s3(100);
  REQUIRE(eglfr_dist_sample(0.8, 2.0, 0.5, 0.1, 100, 7, s1.data()) == EGLFR_OK);
  REQUIRE(eglfr_dist_sample(0.8, 2.0, 0.5, 0.1, 100, 7, s2.data()) == EGLFR_OK);
  REQUIRE(eglfr_dist_sample(0.8, 2.0, 0.5, 0.1, 100, 8, s3.data()) == EGLFR_OK);
  CHECK(s1 == s2);
  CHECK(s1 != s3);
  double hi;
  int b;
  eglfr_dist_support(0.8, 2.0, 0.5, 0.1, nullptr, &hi, &b);
  for (double x : s1) CHECK(x < hi);
}

TEST_CASE("moments and entropy through the C surface") {
  int exists;
  REQUIRE(eglfr_moment_exists(1.0, -1.0, 0.0, 1.0, 2.0, &exists) == EGLFR_OK);
  CHECK(exists == 0);
  double m;
  REQUIRE(eglfr_moment(1.0, -1.0, 0.0, 1.0, 1.0, 1e-8, &m) == EGLFR_OK);
  CHECK(std::fabs(m - 2.221) < 2e-3);
  CHECK(eglfr_moment(1.0, -1.0, 0.0, 1.0, 2.0, 1e-8, &m) == EGLFR_ERR_DOMAIN);

  REQUIRE(eglfr_moment_closed_even(1.0, -0.5, 1.0, 1, &m) == EGLFR_OK);
  CHECK(m == doctest::Approx(4.0).epsilon(1e-9));

  double val, err;
  int conv;
  REQUIRE(eglfr_moment_series(1.0, 1.0, 0.0, 2.0, 2, 1e-10, &val, &err, &conv) == EGLFR_OK);
  CHECK(conv == 1);
  CHECK(val == doctest::Approx(0.5).epsilon(1e-8));
  REQUIRE(eglfr_mgf_series(1.0, 1.0, 0.0, 2.0, 0.5, 1e-10, &val, &err, &conv) == EGLFR_OK);
  CHECK(conv == 1);

  double h;
  REQUIRE(eglfr_shannon_entropy(1.0, 0.0, 1.0, 0.0, 1e-9, &h) == EGLFR_OK);
  CHECK(h == doctest::Approx(1.0).epsilon(1e-8));
  REQUIRE(eglfr_renyi_entropy(1.0, 0.0, 1.0, 0.0, 2.0, 1e-9, &h) == EGLFR_OK);
  CHECK(h == doctest::Approx(std::log(2.0)).epsilon(1e-8));

  double bsk, mku;
  REQUIRE(eglfr_bowley_skewness(1.0, 1.0, 1.0, 0.0, &bsk) == EGLFR_OK);
  REQUIRE(eglfr_moors_kurtosis(1.0, 1.0, 1.0, 0.0, &mku) == EGLFR_OK);
  CHECK(bsk == doctest::Approx(0.0));
  CHECK(mku == doctest::Approx(1.0));
}

TEST_CASE("fitting workflow through the C surface") {
  eglfr_dataset* d = nullptr;
  REQUIRE(eglfr_dataset_open("aarset", &d) == EGLFR_OK);

  eglfr_fit* fit = nullptr;
  eglfr_status st = eglfr_fit_run("GE", d, nullptr, &fit);
  REQUIRE(st == EGLFR_OK);
  CHECK(eglfr_fit_converged(fit) == 1);
  CHECK(eglfr_fit_param_count(fit) == 2);
  CHECK(std::string(eglfr_fit_param_name(fit, 0)) == "alpha");
  CHECK(-eglfr_fit_log_lik(fit) == doctest::Approx(239.9951).epsilon(1e-6));
  CHECK(eglfr_fit_nonregular(fit) == 0);
  double thr;
  CHECK(eglfr_fit_threshold(fit, &thr) == EGLFR_ERR_NOT_AVAILABLE);

  double se[2];
  REQUIRE(eglfr_fit_std_errors(fit, d, se, 2) == EGLFR_OK);
  CHECK(se[0] > 0.0);
  CHECK(se[1] > 0.0);

  double params[2];
  params[0] = eglfr_fit_param_value(fit, 0);
  params[1] = eglfr_fit_param_value(fit, 1);
  double ks, pv;
  REQUIRE(eglfr_ks_test("GE", params, 2, d, &ks, &pv) == EGLFR_OK);
  CHECK(std::fabs(ks - 0.2042) < 0.005);
  eglfr_fit_free(fit);

  double aic, aicc, bic;
  REQUIRE(eglfr_information_criteria(173.9487, 4, 50, &aic, &aicc, &bic) == EGLFR_OK);
  CHECK(aic == doctest::Approx(355.8974).epsilon(1e-8));

  double stat, p;
  REQUIRE(eglfr_lrt(189.1973, 173.9487, 1, &stat, &p) == EGLFR_OK);
  CHECK(stat == doctest::Approx(30.4972).epsilon(1e-4));

  eglfr_dataset_free(d);
}

TEST_CASE("Monte-Carlo surface") {
  eglfr_mc_report rep;
  REQUIRE(eglfr_mc_threshold(1.0, 1.0, 0.0, 2.0, 500, 300, 9, &rep) == EGLFR_OK);
  CHECK(rep.ks_pvalue >= 0.0);
  CHECK(rep.gap_median < 0.0);

  size_t ladder[] = {250, 500, 1000};
  double slope;
  REQUIRE(eglfr_mc_rate_exponent(1.0, 1.0, 0.0, 2.0, ladder, 3, 400, 9, &slope) == EGLFR_OK);
  CHECK(std::fabs(slope + 1.0) < 0.2);

  CHECK(eglfr_mc_threshold(1.0, -1.0, 0.0, 2.0, 500, 300, 9, &rep) == EGLFR_ERR_DOMAIN);
}
