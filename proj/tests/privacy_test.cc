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
#include <vector>

#include <gtest/gtest.h>

#include "contamdp/error.h"
#include "contamdp/inference/particles.h"
#include "contamdp/inference/prior.h"
#include "contamdp/privacy/decomposition.h"
#include "contamdp/privacy/estimate.h"
#include "contamdp/privacy/neighbourhood.h"
#include "contamdp/privacy/ratio_search.h"
#include "contamdp/privacy/zcdp.h"
#include "test_util.h"

namespace contamdp {
namespace {

using testing::AllModels;

ParticleCloud Cloud(std::vector<double> positions, std::vector<double> weights) {
  ParticleCloud cloud;
  cloud.particles = ParticleMatrix(positions.size(), 1);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    cloud.particles(i, 0) = positions[i];
  }
  cloud.weights = std::move(weights);
  cloud.ess = EffectiveSampleSize(cloud.weights);
  return cloud;
}

ContaminatedModel Logistic(int dim, double p) {
  return ContaminatedModel(LikelihoodModel::Logistic(dim),
                           ContaminationDensity::BernoulliHalf(), p);
}

EpsilonSetup TruncatedSetup(int n, double p) {
  const auto base = AllModels(p)[3];
  return EpsilonSetup{.model = base.model,
                      .prior = GaussianPrior::Isotropic(1, 40, 40),
                      .theta_star = base.truth,
                      .n = n,
                      .delta = 1.0 / (10 * n),
                      .particles = 1000};
}

TEST(ChoosePhiTest, SmallExamples) {
  const ParticleCloud cloud = Cloud({0.1, -0.2, 0.3}, {0.5, 0.3, 0.2});
  const Vector center = Vector::Zero(1);
  PhiChoice c = ChoosePhi(cloud, center, 0.25);
  EXPECT_DOUBLE_EQ(c.phi, 0.2);
  EXPECT_DOUBLE_EQ(c.tail_weight, 0.2);
  c = ChoosePhi(cloud, center, 0.999);
  EXPECT_DOUBLE_EQ(c.phi, 0.1);
  EXPECT_DOUBLE_EQ(c.tail_weight, 0.5);
  c = ChoosePhi(cloud, center, 0.1);
  EXPECT_DOUBLE_EQ(c.phi, 0.3);
  EXPECT_DOUBLE_EQ(c.tail_weight, 0.0);
  EXPECT_THROW(ChoosePhi(cloud, center, 0.0), Error);
}

TEST(ChoosePhiTest, TailNeverExceedsDelta) {
  Rng rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<double> pos(500), w(500);
  for (int i = 0; i < 500; ++i) {
    pos[i] = u(rng);
    w[i] = 1.0 / 500;
  }
  const ParticleCloud cloud = Cloud(pos, w);
  for (double delta : {0.001, 0.01, 0.2, 0.7}) {
    const PhiChoice c = ChoosePhi(cloud, Vector::Zero(1), delta);
    double outside = 0.0;
    for (int i = 0; i < 500; ++i) {
      if (std::abs(pos[i]) > c.phi) outside += w[i];
    }
    EXPECT_LE(outside, delta);
    EXPECT_NEAR(outside, c.tail_weight, 1e-14);
  }
}

TEST(EtaBoundTest, FullContaminationGivesOne) {
  for (const auto& m : AllModels(1.0)) {
    const CovariateDomain cov = m.model.base().uses_covariates()
                                    ? CovariateDomain::Corners(3)
                                    : CovariateDomain::InterceptOnly();
    const RatioBound b =
        EtaBound(m.model, m.truth, {m.truth, 0.5}, cov);
    EXPECT_DOUBLE_EQ(b.eta, 1.0) << m.name;
  }
}

TEST(EtaBoundTest, ZeroWidthBoxGivesOne) {
  for (const auto& m : AllModels(0.2)) {
    const CovariateDomain cov = m.model.base().uses_covariates()
                                    ? CovariateDomain::Corners(3)
                                    : CovariateDomain::InterceptOnly();
    const RatioBound b = EtaBound(m.model, m.truth, {m.truth, 0.0}, cov);
    EXPECT_NEAR(b.eta, 1.0, 1e-14) << m.name;
  }
}

TEST(EtaBoundTest, LogisticMatchesBruteForce) {
  const ContaminatedModel model = Logistic(2, 0.2);
  Vector ref(2);
  ref << 0.5, -0.5;
  const NeighbourhoodBox box{ref, 0.7};
  const CovariateDomain cov = CovariateDomain::Corners(2);
  ASSERT_EQ(cov.rows.size(), 2u);
  double sup = 0.0, inf = 1e300;
  const int grid = 201;
  for (const auto& w : cov.rows) {
    for (int a = 0; a < grid; ++a) {
      for (int b = 0; b < grid; ++b) {
        Vector theta(2);
        theta << ref[0] - 0.7 + 1.4 * a / (grid - 1),
            ref[1] - 0.7 + 1.4 * b / (grid - 1);
        for (double x : {0.0, 1.0}) {
          const double d = model.LikelihoodRatio(x, w, theta, ref);
          sup = std::max(sup, d);
          inf = std::min(inf, d);
        }
      }
    }
  }
  const RatioBound b = EtaBound(model, ref, box, cov);
  EXPECT_NEAR(b.sup, sup, 1e-9 * sup);
  EXPECT_NEAR(b.inf, inf, 1e-9 * inf);
  EXPECT_NEAR(b.eta, sup / inf, 1e-9 * sup / inf);
}

TEST(EtaBoundTest, GaussianSupIsAttainedAndDominatesSamples) {
  const auto m = AllModels(0.1)[0];
  const CovariateDomain cov = CovariateDomain::Corners(3);
  const NeighbourhoodBox box{m.truth, 0.3};
  const RatioBound b = EtaBound(m.model, m.truth, box, cov);
  EXPECT_TRUE(b.interior);
  Rng rng(5);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  std::normal_distribution<double> normal(0, 10);
  for (int i = 0; i < 2000; ++i) {
    Vector theta = m.truth;
    for (int j = 0; j < 3; ++j) theta[j] += u(rng);
    const auto& w = cov.rows[i % cov.rows.size()];
    const double d = m.model.LikelihoodRatio(normal(rng), w, theta, m.truth);
    EXPECT_LE(d, b.sup * (1 + 1e-9));
    EXPECT_GE(d, b.inf * (1 - 1e-9));
  }
  Vector at_sup = m.truth;
  // The witness predictor must be reachable from the box.
  double reach = 0.0;
  for (double v : b.sup_at.w) reach += std::abs(v);
  EXPECT_LE(std::abs(b.sup_at.t - LinearPredictor(b.sup_at.w, at_sup)),
            0.3 * reach + 1e-12);
}

TEST(EtaBoundTest, EscalatesWhenContaminationTooSmall) {
  const auto m = AllModels(1e-4)[0];
  SearchOptions options;
  options.escalation_log_ratio = 1.0;
  try {
    EtaBound(m.model, m.truth, {m.truth, 1.0}, CovariateDomain::Corners(3),
             options);
    FAIL() << "expected a numerical error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNumerical);
  }
}

TEST(ExpectationRatioTest, SingleParticleAtReference) {
  const ContaminatedModel model = Logistic(1, 0.2);
  const ParticleCloud cloud = Cloud({0.4}, {1.0});
  const ExpectationBound e = ExpectationRatio(
      cloud, model, Vector::Constant(1, 0.4), CovariateDomain::Corners(1));
  EXPECT_NEAR(e.alpha, 1.0, 1e-14);
  EXPECT_NEAR(e.beta, 1.0, 1e-14);
}

TEST(ExpectationRatioTest, TwoParticlesLogistic) {
  const ContaminatedModel model = Logistic(1, 0.2);
  const ParticleCloud cloud = Cloud({0.0, 1.5}, {0.5, 0.5});
  const Vector ref = Vector::Zero(1);
  const std::vector<double> w = {1.0};
  double hi = 0.0, lo = 1e300;
  for (double x : {0.0, 1.0}) {
    const double v = 0.5 + 0.5 * model.LikelihoodRatio(
                                     x, w, Vector::Constant(1, 1.5), ref);
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  const ExpectationBound e =
      ExpectationRatio(cloud, model, ref, CovariateDomain::Corners(1));
  EXPECT_NEAR(e.alpha, hi, 1e-12);
  EXPECT_NEAR(e.beta, lo, 1e-12);
}

TEST(ExpectationRatioTest, TwoParticlesTruncatedNormal) {
  const auto m = AllModels(0.3)[3];
  const ParticleCloud cloud = Cloud({29.0, 31.0}, {0.25, 0.75});
  const ExpectationBound e = ExpectationRatio(cloud, m.model, m.truth,
                                              CovariateDomain::InterceptOnly());
  double hi = 0.0, lo = 1e300;
  for (int k = 0; k <= 600000; ++k) {
    const double x = -270 + 0.001 * k;
    const double v =
        0.25 * m.model.LikelihoodRatio(x, {}, Vector::Constant(1, 29.0), m.truth) +
        0.75 * m.model.LikelihoodRatio(x, {}, Vector::Constant(1, 31.0), m.truth);
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  }
  EXPECT_GE(e.alpha, hi * (1 - 1e-12));
  EXPECT_NEAR(e.alpha, hi, 1e-7 * hi);
  EXPECT_LE(e.beta, lo * (1 + 1e-12));
  EXPECT_NEAR(e.beta, lo, 1e-7 * lo);
}

TEST(PercentileTest, NearestRank) {
  const std::vector<double> v = {5, 1, 4, 2, 3};
  EXPECT_EQ(NearestRankPercentile(v, 20), 1);
  EXPECT_EQ(NearestRankPercentile(v, 21), 2);
  EXPECT_EQ(NearestRankPercentile(v, 99), 5);
  EXPECT_EQ(NearestRankPercentile(v, 100), 5);
  double last = -1;
  for (double q = 1; q <= 100; q += 0.5) {
    const double x = NearestRankPercentile(v, q);
    EXPECT_GE(x, last);
    last = x;
  }
  EXPECT_THROW(NearestRankPercentile({}, 50), Error);
}

TEST(EstimateTest, FullContaminationGivesZero) {
  const RepeatResult r = EstimateEpsilonOnce(TruncatedSetup(200, 1.0), 7);
  ASSERT_TRUE(r.valid) << r.status;
  EXPECT_NEAR(r.epsilon, 0.0, 1e-12);
}

TEST(EstimateTest, EpsilonVanishesAsContaminationSaturates) {
  // Logistic ratios are bounded by (1 - p/2) / (p/2), so the estimate must
  // collapse as p approaches one.
  Vector truth(2);
  truth << 0.5, -0.5;
  double last = 1e300;
  for (double p : {0.5, 0.9, 0.99, 0.999}) {
    const EpsilonSetup setup{.model = Logistic(2, p),
                             .prior = GaussianPrior::Isotropic(2, 0, 10),
                             .theta_star = truth,
                             .n = 500,
                             .delta = 2e-4,
                             .particles = 500};
    const RepeatResult r = EstimateEpsilonOnce(setup, 3);
    ASSERT_TRUE(r.valid) << r.status;
    EXPECT_LT(r.epsilon, last) << "p=" << p;
    EXPECT_LE(r.epsilon, 3 * std::log((1 - p / 2) / (p / 2)) + 1e-12);
    last = r.epsilon;
  }
  EXPECT_LT(last, 0.01);
}

TEST(EstimateTest, TruncatedNormalSingleRepeat) {
  const RepeatResult r =
      EstimateEpsilonOnce(TruncatedSetup(1000, std::pow(1000.0, -0.125)), 11);
  ASSERT_TRUE(r.valid) << r.status;
  EXPECT_GT(r.epsilon, 0.0);
  EXPECT_LT(r.epsilon, 5.0);
  EXPECT_LE(r.delta_hat, 1.0 / 10000);
  EXPECT_GE(r.eta, 1.0);
  EXPECT_GE(r.alpha, 1.0 - 1e-12);
  EXPECT_LE(r.beta, 1.0 + 1e-12);
  EXPECT_TRUE(r.interior);
}

TEST(EstimateTest, LogisticMonotoneInContamination) {
  Vector truth(3);
  truth << 0.5, -0.5, 0.5;
  std::vector<double> eps;
  for (double p : {0.2, 0.4, 0.6}) {
    const EpsilonSetup setup{.model = Logistic(3, p),
                             .prior = GaussianPrior::Isotropic(3, 0, 10),
                             .theta_star = truth,
                             .n = 1000,
                             .delta = 1e-4,
                             .particles = 500};
    eps.push_back(EstimateEpsilon(setup, 20, 90, 99).epsilon);
  }
  EXPECT_GT(eps[0], eps[1]);
  EXPECT_GT(eps[1], eps[2]);
}

TEST(EstimateTest, DeterministicAcrossRuns) {
  const EpsilonSetup setup = TruncatedSetup(300, 0.5);
  const EpsilonEstimate a = EstimateEpsilon(setup, 10, 99, 5);
  const EpsilonEstimate b = EstimateEpsilon(setup, 10, 99, 5);
  EXPECT_EQ(a.epsilon, b.epsilon);
  EXPECT_EQ(a.valid, 10);
  EXPECT_THROW(EstimateEpsilon(setup, 5, 99, 5), Error);
  EXPECT_THROW(EstimateEpsilon(setup, 10, 0, 5), Error);
}

TEST(ZcdpTest, Conversions) {
  const ZcdpBudget rho = ZcdpFromDp({0.94, 1e-4});
  EXPECT_NEAR(rho.rho, 0.94 * 0.94 / (2 * std::log(1e4)), 1e-15);
  EXPECT_NEAR(rho.rho, 0.04797, 1e-5);
  EXPECT_NEAR(DpFromZcdp(rho, 1e-4).epsilon, 0.94, 1e-12);
  EXPECT_NEAR(DpFromZcdp({0.5}, std::exp(-1.0)).epsilon, 1.0, 1e-15);
  EXPECT_THROW(ZcdpFromDp({-1, 1e-4}), Error);
  EXPECT_THROW(ZcdpFromDp({1, 1.0}), Error);
  EXPECT_THROW(DpFromZcdp({-0.1}, 0.1), Error);
}

TEST(DecompositionTest, SmallRunHasNoViolations) {
  const auto m = ContaminatedModel(
      LikelihoodModel::GaussianLinear(1),
      ContaminationDensity::StudentT(5, 5, Vector::Zero(1)), 0.3);
  DecompositionOptions options;
  options.trials = 3;
  options.sets = 50;
  options.theta_grid = 51;
  options.x_grid = 401;
  const DecompositionReport report = VerifyDecomposition(
      m, GaussianPrior::Isotropic(1, 0, 10), 0.0, options);
  EXPECT_EQ(report.trials.size(), 3u);
  EXPECT_EQ(report.violations, 0);
  for (const auto& t : report.trials) {
    EXPECT_GE(t.eta, 1.0);
    EXPECT_LE(t.worst_gap, options.slack);
  }
  options.n = 1;
  EXPECT_THROW(VerifyDecomposition(m, GaussianPrior::Isotropic(1, 0, 10), 0.0,
                                   options),
               Error);
}

}  // namespace
}  // namespace contamdp
