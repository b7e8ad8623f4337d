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

#include "contamdp/baselines/mean_estimators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "contamdp/error.h"
#include "contamdp/inference/laplace.h"
#include "contamdp/inference/posterior.h"
#include "contamdp/inference/rwm.h"

namespace contamdp {
namespace {

void CheckRho(double rho) {
  if (!(rho > 0.0)) throw Error(ErrorKind::kConfig, "rho must be positive");
}

}  // namespace

BayesDraw BayesMeanDraw(const ContaminatedModel& model,
                        const GaussianPrior& prior, const Dataset& data,
                        std::uint64_t seed, const BayesDrawOptions& options) {
  if (model.dim() != 1) {
    throw Error(ErrorKind::kConfig, "mean draw needs a one-dimensional model");
  }
  if (data.empty()) {
    // Prior-only posterior.
    Rng rng(seed);
    std::normal_distribution<double> normal(prior.mean()[0], prior.sd()[0]);
    return {normal(rng), 1.0, false};
  }
  const PosteriorTarget target(model, prior, data);
  const MapResult map = MapEstimate(target, prior.mean(), options.map);
  const LaplaceApproximation approx =
      ComputeLaplaceApproximation(target, map.theta);
  RwmOptions rwm;
  // Burn-in is kept in the chain so the acceptance rate covers every step.
  rwm.burn_in = 0;
  rwm.steps = options.burn_in + 1;
  rwm.step_scale = 2.38;
  rwm.proposal_factor = approx.cov_factor;
  const RwmResult chain = RwmSample(target, map.theta, rwm, seed);
  BayesDraw out;
  out.value = chain.chain.back()[0];
  out.acceptance_rate = chain.acceptance_rate;
  out.tuning_warning = chain.tuning_warning;
  return out;
}

std::vector<double> CoinPressBudgets(double rho, int iterations,
                                     double last_round_share) {
  CheckRho(rho);
  if (iterations < 1) throw Error(ErrorKind::kConfig, "need t >= 1 rounds");
  if (!(last_round_share > 0.0 && last_round_share <= 1.0)) {
    throw Error(ErrorKind::kConfig, "last round share must lie in (0, 1]");
  }
  if (iterations == 1) return {rho};
  const double last = last_round_share * rho;
  const double early = (rho - last) / (iterations - 1);
  std::vector<double> budgets(iterations, early);
  // The last round absorbs the rounding so the total is exactly rho.
  double used = 0.0;
  for (int i = 0; i + 1 < iterations; ++i) used += budgets[i];
  budgets.back() = rho - used;
  return budgets;
}

MeanEstimatorResult CoinPressMean(std::span<const double> data, double rho,
                                  const CoinPressOptions& options,
                                  std::uint64_t seed) {
  CheckRho(rho);
  if (data.empty()) throw Error(ErrorKind::kConfig, "empty data");
  if (!(options.radius > 0.0) || !(options.scale > 0.0)) {
    throw Error(ErrorKind::kConfig, "radius and scale must be positive");
  }
  if (!(options.beta > 0.0 && options.beta < 1.0)) {
    throw Error(ErrorKind::kConfig, "beta must lie in (0, 1)");
  }
  const std::vector<double> budgets =
      CoinPressBudgets(rho, options.iterations, options.last_round_share);
  const double n = static_cast<double>(data.size());
  const double s = options.scale;
  std::vector<double> x(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) x[i] = data[i] / s;

  const double log_nb = std::log(n / options.beta);
  const double log_b = std::log(1.0 / options.beta);
  const double gamma1 = std::sqrt(1.0 + 2.0 * std::sqrt(log_nb) + 2.0 * log_nb);
  const double gamma2 = std::sqrt(1.0 + 2.0 * std::sqrt(log_b) + 2.0 * log_b);

  MeanEstimatorResult out;
  out.method = "coinpress" + std::to_string(options.iterations);
  double c = options.center / s;
  double r = options.radius / s;
  Rng rng(seed);
  std::normal_distribution<double> normal;
  for (double rho_i : budgets) {
    if (!(r > std::numeric_limits<double>::min())) {
      out.note = "radius collapsed; returning current centre";
      out.warning = true;
      break;
    }
    const double clip =
        std::min(std::sqrt(r * r + 6.0 * r + gamma1 * gamma1), r + gamma1);
    double sum = 0.0;
    for (double xi : x) sum += std::clamp(xi, c - clip, c + clip);
    const double sensitivity = 2.0 * clip / n;
    const double sd = sensitivity / std::sqrt(2.0 * rho_i);
    c = sum / n + sd * normal(rng);
    r = std::sqrt(1.0 / n + sd * sd) * gamma2;
    out.spent.rho += rho_i;
    out.trace.push_back(c * s);
  }
  out.estimate = c * s;
  return out;
}

double PrivateQuantile(std::span<const double> data, double quantile,
                       double epsilon, double lower, double upper, Rng& rng) {
  if (!(lower < upper)) throw Error(ErrorKind::kConfig, "need lower < upper");
  if (!(quantile > 0.0 && quantile < 1.0)) {
    throw Error(ErrorKind::kConfig, "quantile must lie in (0, 1)");
  }
  if (!(epsilon > 0.0)) throw Error(ErrorKind::kConfig, "epsilon must be > 0");
  const int n = static_cast<int>(data.size());
  std::vector<double> edges;
  edges.reserve(n + 2);
  edges.push_back(lower);
  for (double x : data) edges.push_back(std::clamp(x, lower, upper));
  std::sort(edges.begin() + 1, edges.end());
  edges.push_back(upper);
  const double target = quantile * n;

  // Interval k = [edges[k], edges[k+1]] holds points of rank k.
  std::vector<double> log_w(n + 1);
  double max_w = -std::numeric_limits<double>::infinity();
  for (int k = 0; k <= n; ++k) {
    const double gap = edges[k + 1] - edges[k];
    log_w[k] = gap > 0.0 ? std::log(gap) - 0.5 * epsilon * std::abs(k - target)
                         : -std::numeric_limits<double>::infinity();
    max_w = std::max(max_w, log_w[k]);
  }
  std::vector<double> cumulative(n + 1);
  double total = 0.0;
  for (int k = 0; k <= n; ++k) {
    total += std::exp(log_w[k] - max_w);
    cumulative[k] = total;
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng) * total;
  const int k = static_cast<int>(
      std::upper_bound(cumulative.begin(), cumulative.end(), u) -
      cumulative.begin());
  const int pick = std::min(k, n);
  return edges[pick] + unit(rng) * (edges[pick + 1] - edges[pick]);
}

MeanEstimatorResult ClippedMean(std::span<const double> data, double rho,
                                const ClippedMeanOptions& options,
                                std::uint64_t seed) {
  CheckRho(rho);
  if (data.size() < 10) {
    throw Error(ErrorKind::kConfig, "clipped mean needs n >= 10");
  }
  if (!(options.low_quantile < options.high_quantile)) {
    throw Error(ErrorKind::kConfig, "quantile targets out of order");
  }
  if (!(options.widen >= 0.0)) {
    throw Error(ErrorKind::kConfig, "widen must be nonnegative");
  }
  Rng rng(seed);
  const double rho_q = 0.25 * rho;
  const double rho_mean = rho - 2.0 * rho_q;
  // Pure epsilon-DP implies epsilon^2 / 2 zCDP.
  const double eps_q = std::sqrt(2.0 * rho_q);
  double a = PrivateQuantile(data, options.low_quantile, eps_q, options.lower,
                             options.upper, rng);
  double b = PrivateQuantile(data, options.high_quantile, eps_q, options.lower,
                             options.upper, rng);
  if (a > b) std::swap(a, b);

  MeanEstimatorResult out;
  out.method = "clipped";
  out.quantile_low = a;
  out.quantile_high = b;
  const double gap = b - a;
  double lo = std::max(options.lower, a - options.widen * gap);
  double hi = std::min(options.upper, b + options.widen * gap);
  if (!(hi > lo)) {
    const double slack =
        std::max(1.0, std::abs(lo)) * std::numeric_limits<double>::epsilon();
    lo -= slack;
    hi += slack;
    out.warning = true;
    out.note = "degenerate quantile interval widened";
  }
  const double n = static_cast<double>(data.size());
  double sum = 0.0;
  for (double x : data) sum += std::clamp(x, lo, hi);
  const double sd = ((hi - lo) / n) / std::sqrt(2.0 * rho_mean);
  std::normal_distribution<double> normal;
  out.estimate = sum / n + sd * normal(rng);
  out.spent.rho = rho_q + rho_q + rho_mean;
  return out;
}

MeanEstimatorResult GaussianMechanismMean(std::span<const double> data,
                                          double rho, double lower,
                                          double upper, std::uint64_t seed) {
  CheckRho(rho);
  if (data.empty()) throw Error(ErrorKind::kConfig, "empty data");
  if (!(lower < upper)) throw Error(ErrorKind::kConfig, "need lower < upper");
  MeanEstimatorResult out;
  out.method = "gaussian";
  double sum = 0.0;
  int clipped = 0;
  for (double x : data) {
    const double c = std::clamp(x, lower, upper);
    clipped += c != x;
    sum += c;
  }
  if (clipped > 0) {
    out.warning = true;
    out.note = std::to_string(clipped) + " observations clipped to bounds";
  }
  const double n = static_cast<double>(data.size());
  const double sd = ((upper - lower) / n) / std::sqrt(2.0 * rho);
  Rng rng(seed);
  std::normal_distribution<double> normal;
  out.estimate = sum / n + sd * normal(rng);
  out.spent.rho = rho;
  return out;
}

}  // namespace contamdp
