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

#ifndef CONTAMDP_PRIVACY_ESTIMATE_H_
#define CONTAMDP_PRIVACY_ESTIMATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "contamdp/core/dataset.h"
#include "contamdp/core/models.h"
#include "contamdp/inference/map.h"
#include "contamdp/inference/prior.h"
#include "contamdp/privacy/ratio_search.h"

namespace contamdp {

// One configuration of the empirical (epsilon, delta) estimator.
struct EpsilonSetup {
  ContaminatedModel model;
  GaussianPrior prior;
  Vector theta_star;
  int n = 0;
  double delta = 0.0;
  int particles = 2000;
  // Centre the neighbourhood box (and the likelihood-ratio reference) on
  // theta* instead of the MAP estimate.
  bool center_at_truth = true;
  SearchOptions search{};
  MapOptions map{};
  double ess_floor = 0.01;
  // Starting point of the MAP search; the prior mean when absent.
  std::optional<Vector> map_init{};

  CovariateDomain Covariates() const;
  void Validate() const;
};

struct RepeatResult {
  bool valid = false;
  std::string status = "ok";
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double phi = 0.0;
  double delta_hat = 0.0;
  double eta = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double ess = 0.0;
  double ess_drop_last = 0.0;
  bool interior = true;
  int contaminated = 0;
  Vector map;
};

struct EpsilonEstimate {
  int n = 0;
  double p = 0.0;
  double delta = 0.0;
  double q = 99.0;
  double epsilon = 0.0;  // q-th percentile over valid repeats
  std::vector<RepeatResult> repeats;
  int valid = 0;
  int invalid = 0;
  double phi_median = 0.0;

  std::vector<double> ValidEpsilons() const;
};

// Smallest sorted value whose rank is at least q/100 of the sample size.
double NearestRankPercentile(std::vector<double> values, double q);

// One pass of the estimator: generate and contaminate data (unless `data` is
// given), approximate pi_n by importance sampling from the Laplace
// approximation, pick the box, bound eta, drop the last observation and
// bound the ratio of expectations. Sampler, curvature, convergence and
// degeneracy failures mark the repeat invalid instead of throwing.
RepeatResult EstimateEpsilonOnce(const EpsilonSetup& setup, std::uint64_t seed,
                                 const Dataset* data = nullptr);

// K independent repeats with seeds derived from `master_seed`, run in
// parallel. Throws a batch-quality error when more than 10% are invalid.
EpsilonEstimate EstimateEpsilon(const EpsilonSetup& setup, int repeats,
                                double q, std::uint64_t master_seed);

}  // namespace contamdp

#endif  // CONTAMDP_PRIVACY_ESTIMATE_H_
