// Copyright 2026 The contamdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CONTAMDP_HARNESS_CONFIG_H_
#define CONTAMDP_HARNESS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "contamdp/privacy/ratio_search.h"

namespace contamdp {

enum class ExperimentKind {
  kTable1,
  kMeanBench,
  kRegressionDecay,
  kFisherCheck,
  kVerifyProp1,
};

std::string_view ExperimentKindName(ExperimentKind kind);
ExperimentKind ParseExperimentKind(std::string_view name);

// Truncated-normal mean model with truncated Student-t contamination.
struct MeanModelConfig {
  double theta_star = 30.0;
  double sigma = 8.0;
  double lower = -270.0;
  double upper = 330.0;
  double nu = 5.0;
  double contamination_scale = 8.0;
  double prior_mean = 40.0;
  double prior_sd = 40.0;
};

struct MeanBenchConfig {
  int datasets = 20;
  int repeats = 20;  // mechanism runs per dataset
  std::vector<std::string> methods = {"bayes", "coinpress3", "coinpress10",
                                      "clipped", "gaussian"};
  // "published" or the path of a table1 CSV.
  std::string epsilon_source = "published";
  int bayes_burn_in = 500;
  double coinpress_center = 0.0;
  std::optional<double> coinpress_radius;  // defaults to upper - lower
  double coinpress_beta = 0.01;
  double coinpress_last_share = 0.75;
  double clipped_low = 0.05;
  double clipped_high = 0.95;
  double clipped_widen = 0.1;
};

struct RegressionConfig {
  std::vector<std::string> models = {"gaussian-linear", "logistic",
                                     "cauchy-regression"};
  std::vector<int> dims = {5};
  std::vector<bool> contaminated = {true, false};
  // theta*_j = theta_magnitude * (-1)^j.
  double theta_magnitude = 0.5;
  double prior_sd = 10.0;
  double noise_scale = 1.0;          // Gaussian sigma / Cauchy scale
  double contamination_scale = 5.0;  // t / Cauchy contamination scale
  double nu = 5.0;
  std::vector<double> extrapolate = {1e5, 1e6, 1e7};
};

struct FisherConfig {
  std::vector<double> p_grid = {0.5, 0.1, 0.01};
  double theta = 0.0;
  double sigma = 1.0;
  double nu = 5.0;
  double contamination_scale = 1.0;
};

struct Prop1Config {
  int n = 20;
  int trials = 100;
  int sets = 200;
  double theta_star = 0.0;
  double sigma = 1.0;
  double prior_mean = 0.0;
  double prior_sd = 10.0;
  double nu = 5.0;
  double contamination_scale = 5.0;
  std::optional<double> p;  // defaults to n^(-p_exponent)
  int theta_grid = 201;
  int x_grid = 2001;
  double phi_min = 0.05;
  double phi_max = 1.0;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kTable1;
  std::uint64_t seed = 20260101;
  int workers = 0;  // 0: available parallelism
  std::string output_dir = "results";

  std::vector<int> n_grid;
  double p_exponent = 0.125;  // p_n = n^(-a)
  double delta_factor = 10.0;  // delta_n = 1 / (delta_factor * n)
  int particles = 2000;
  int repeats = 200;
  double quantile = 99.0;
  bool center_at_truth = true;
  SearchOptions search;

  MeanModelConfig mean_model;
  MeanBenchConfig mean_bench;
  RegressionConfig regression;
  FisherConfig fisher;
  Prop1Config prop1;

  std::string digest;  // SHA-256 of the configuration text

  double RateFor(int n) const;
  double DeltaFor(int n) const;
  // Every setting in effect for this experiment, explicit or defaulted.
  std::vector<std::pair<std::string, std::string>> Resolved() const;
};

// Parses a JSON configuration. Unknown keys, wrong types and empty grids are
// configuration errors.
ExperimentConfig ParseConfig(const std::string& text);
ExperimentConfig LoadConfig(const std::string& path);

std::string Sha256Hex(const std::string& bytes);

}  // namespace contamdp

#endif  // CONTAMDP_HARNESS_CONFIG_H_
