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

#ifndef CONTAMDP_BASELINES_MEAN_ESTIMATORS_H_
#define CONTAMDP_BASELINES_MEAN_ESTIMATORS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "contamdp/core/dataset.h"
#include "contamdp/inference/map.h"
#include "contamdp/inference/prior.h"
#include "contamdp/privacy/zcdp.h"

namespace contamdp {

struct MeanEstimatorResult {
  double estimate = 0.0;
  ZcdpBudget spent;
  std::string method;
  std::vector<double> trace;  // per-round centres (CoinPress)
  double quantile_low = 0.0;  // private quantiles (clipped mean)
  double quantile_high = 0.0;
  bool warning = false;
  std::string note;
};

struct BayesDrawOptions {
  int burn_in = 500;
  MapOptions map;
};

struct BayesDraw {
  double value = 0.0;
  double acceptance_rate = 0.0;
  bool tuning_warning = false;
};

// One random-walk Metropolis draw from pi_n(. | data) for a one-dimensional
// model. The chain starts at the MAP estimate and uses the Laplace scale.
BayesDraw BayesMeanDraw(const ContaminatedModel& model,
                        const GaussianPrior& prior, const Dataset& data,
                        std::uint64_t seed, const BayesDrawOptions& options = {});

struct CoinPressOptions {
  int iterations = 3;
  double center = 0.0;   // initial ball, in data units
  double radius = 600.0;
  double scale = 1.0;    // known data standard deviation
  double beta = 0.01;    // failure probability in the concentration bounds
  double last_round_share = 0.75;
};

// Per-round budgets: the last round gets last_round_share of rho, the
// earlier rounds split the rest equally (one round spends everything).
std::vector<double> CoinPressBudgets(double rho, int iterations,
                                     double last_round_share = 0.75);

MeanEstimatorResult CoinPressMean(std::span<const double> data, double rho,
                                  const CoinPressOptions& options,
                                  std::uint64_t seed);

struct ClippedMeanOptions {
  double lower = -270.0;  // data bounds for the quantile search
  double upper = 330.0;
  double low_quantile = 0.05;
  double high_quantile = 0.95;
  double widen = 0.1;  // fraction of the quantile gap added on each side
};

// rho/4 on each private quantile (exponential mechanism), rho/2 on the
// Gaussian-noised clipped average.
MeanEstimatorResult ClippedMean(std::span<const double> data, double rho,
                                const ClippedMeanOptions& options,
                                std::uint64_t seed);

// Private quantile by the exponential mechanism over order-statistic gaps,
// pure epsilon-DP with utility -|rank - target rank|.
double PrivateQuantile(std::span<const double> data, double quantile,
                       double epsilon, double lower, double upper, Rng& rng);

MeanEstimatorResult GaussianMechanismMean(std::span<const double> data,
                                          double rho, double lower,
                                          double upper, std::uint64_t seed);

}  // namespace contamdp

#endif  // CONTAMDP_BASELINES_MEAN_ESTIMATORS_H_
