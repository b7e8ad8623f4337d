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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "contamdp/baselines/mean_estimators.h"
#include "contamdp/core/dataset.h"
#include "contamdp/error.h"
#include "contamdp/inference/prior.h"
#include "test_util.h"

namespace contamdp {
namespace {

using testing::AllModels;

std::vector<double> NormalSample(int n, double mean, double sd,
                                 std::uint64_t seed) {
  Rng rng(seed);
  std::normal_distribution<double> normal(mean, sd);
  std::vector<double> out(n);
  for (double& x : out) x = normal(rng);
  return out;
}

double Mean(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
}

// Two-sided Kolmogorov-Smirnov statistic against a normal CDF.
double KsNormal(std::vector<double> v, double mean, double sd) {
  std::sort(v.begin(), v.end());
  const double n = v.size();
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = 0.5 * std::erfc(-(v[i] - mean) / (sd * std::sqrt(2.0)));
    d = std::max({d, f - i / n, (i + 1) / n - f});
  }
  return d;
}

TEST(CoinPressTest, BudgetsSumExactly) {
  for (int t : {1, 2, 3, 5, 7}) {
    for (double rho : {0.001, 0.0479, 1.0, 3.3}) {
      const auto b = CoinPressBudgets(rho, t);
      ASSERT_EQ(static_cast<int>(b.size()), t);
      EXPECT_NEAR(std::accumulate(b.begin(), b.end(), 0.0), rho, 1e-15);
      if (t > 1) EXPECT_NEAR(b.back(), 0.75 * rho, 1e-15);
    }
  }
  EXPECT_THROW(CoinPressBudgets(0.0, 3), Error);
  EXPECT_THROW(CoinPressBudgets(1.0, 0), Error);
}

TEST(CoinPressTest, NoiselessLimitIsSampleMean) {
  const auto data = NormalSample(2000, 30, 8, 1);
  CoinPressOptions options;
  options.scale = 8;
  const MeanEstimatorResult r = CoinPressMean(data, 1e14, options, 3);
  EXPECT_NEAR(r.estimate, Mean(data), 1e-6);
  EXPECT_EQ(r.trace.size(), 3u);
  EXPECT_NEAR(r.spent.rho, 1e14, 1e-2);
  EXPECT_EQ(r.method, "coinpress3");
}

TEST(CoinPressTest, ErrorShrinksWithBudget) {
  const auto data = NormalSample(5000, 30, 8, 2);
  CoinPressOptions options;
  options.scale = 8;
  double last = 1e300;
  for (double rho : {0.001, 0.1, 10.0}) {
    double mse = 0.0;
    for (int s = 0; s < 200; ++s) {
      const double e = CoinPressMean(data, rho, options, s).estimate - 30;
      mse += e * e / 200;
    }
    EXPECT_LT(mse, last);
    last = mse;
  }
}

TEST(ClippedMeanTest, NoiselessLimitMatchesClippedAverage) {
  const auto data = NormalSample(4000, 30, 8, 4);
  const MeanEstimatorResult r = ClippedMean(data, 1e12, {}, 5);
  std::vector<double> sorted = data;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_NEAR(r.quantile_low, sorted[200], 0.05);
  EXPECT_NEAR(r.quantile_high, sorted[3800], 0.05);
  const double gap = r.quantile_high - r.quantile_low;
  const double lo = r.quantile_low - 0.1 * gap;
  const double hi = r.quantile_high + 0.1 * gap;
  double sum = 0.0;
  for (double x : data) sum += std::clamp(x, lo, hi);
  EXPECT_NEAR(r.estimate, sum / data.size(), 1e-4);
  EXPECT_NEAR(r.spent.rho, 1e12, 1e-3);
}

TEST(ClippedMeanTest, PrivateQuantileStaysInBounds) {
  const auto data = NormalSample(100, 30, 8, 6);
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const double q = PrivateQuantile(data, 0.5, 0.01, -270, 330, rng);
    EXPECT_GE(q, -270);
    EXPECT_LE(q, 330);
  }
  EXPECT_THROW(PrivateQuantile(data, 1.0, 1.0, -270, 330, rng), Error);
  EXPECT_THROW(ClippedMean(std::vector<double>(5, 1.0), 1.0, {}, 1), Error);
}

TEST(GaussianMechanismTest, NoiseVariance) {
  const std::vector<double> data(100, 0.0);
  const double rho = 0.5;
  const double expected_sd = (600.0 / 100) / std::sqrt(2 * rho);
  std::vector<double> draws;
  for (int s = 0; s < 20000; ++s) {
    draws.push_back(GaussianMechanismMean(data, rho, -270, 330, s).estimate);
  }
  const double m = Mean(draws);
  double var = 0.0;
  for (double x : draws) var += (x - m) * (x - m);
  var /= draws.size() - 1;
  EXPECT_NEAR(var / (expected_sd * expected_sd), 1.0, 0.05);
  EXPECT_NEAR(m, 0.0, 4 * expected_sd / std::sqrt(20000.0));
}

TEST(GaussianMechanismTest, ClipsWithWarning) {
  const std::vector<double> data = {0.0, 500.0};
  const MeanEstimatorResult r = GaussianMechanismMean(data, 1e14, -270, 330, 1);
  EXPECT_TRUE(r.warning);
  EXPECT_NEAR(r.estimate, 165.0, 1e-4);
}

TEST(BayesDrawTest, LargeSampleConcentrates) {
  const auto m = AllModels(std::pow(50000.0, -0.125))[3];
  const Dataset data = testing::ContaminatedData(m, 50000, 8);
  const GaussianPrior prior = GaussianPrior::Isotropic(1, 40, 40);
  for (int s = 0; s < 5; ++s) {
    const BayesDraw d = BayesMeanDraw(m.model, prior, data, s);
    EXPECT_NEAR(d.value, 30.0, 1.0);
    EXPECT_FALSE(d.tuning_warning);
  }
}

TEST(BayesDrawTest, ConjugateDistribution) {
  const ContaminatedModel model(
      LikelihoodModel::GaussianLinear(1),
      ContaminationDensity::StudentT(5, 1, Vector::Zero(1)), 0.0);
  const Dataset data =
      SampleDataset(model.base(), Vector::Constant(1, 2.0), std::nullopt, 20, 3);
  const double prior_sd = 10;
  const double precision = data.size() + 1 / (prior_sd * prior_sd);
  const double sum = std::accumulate(data.observations().begin(),
                                     data.observations().end(), 0.0);
  const double mean = sum / precision;
  std::vector<double> draws;
  for (int s = 0; s < 400; ++s) {
    draws.push_back(BayesMeanDraw(model, GaussianPrior::Isotropic(1, 0, prior_sd),
                                  data, 1000 + s)
                        .value);
  }
  // 1.95 / sqrt(N) is the 0.1% critical value.
  EXPECT_LT(KsNormal(draws, mean, 1 / std::sqrt(precision)),
            1.95 / std::sqrt(400.0));
}

TEST(BayesDrawTest, EmptyDataDrawsFromPrior) {
  const auto m = AllModels(0.2)[3];
  std::vector<double> draws;
  for (int s = 0; s < 2000; ++s) {
    draws.push_back(
        BayesMeanDraw(m.model, GaussianPrior::Isotropic(1, 40, 40), Dataset(), s)
            .value);
  }
  EXPECT_LT(KsNormal(draws, 40, 40), 1.95 / std::sqrt(2000.0));
}

}  // namespace
}  // namespace contamdp
