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

#include "contamdp/inference/particles.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "contamdp/error.h"

namespace contamdp {

Vector ParticleCloud::Mean() const {
  Vector mean = Vector::Zero(dim());
  for (int i = 0; i < size(); ++i) {
    mean += weights[i] * particles.row(i).transpose();
  }
  return mean;
}

double EffectiveSampleSize(std::span<const double> weights) {
  double sum_sq = 0.0;
  for (double w : weights) sum_sq += w * w;
  return sum_sq > 0.0 ? 1.0 / sum_sq : 0.0;
}

ParticleCloud CloudFromLogWeights(ParticleMatrix particles,
                                  std::span<const double> log_weights,
                                  CloudTarget target,
                                  double ess_floor_fraction) {
  const int m = static_cast<int>(log_weights.size());
  double max_log = -std::numeric_limits<double>::infinity();
  for (double lw : log_weights) {
    if (!std::isnan(lw)) max_log = std::max(max_log, lw);
  }
  if (!std::isfinite(max_log)) {
    throw Error(ErrorKind::kDegeneracy,
                "every importance weight is zero or non-finite");
  }
  ParticleCloud cloud;
  cloud.particles = std::move(particles);
  cloud.target = target;
  cloud.weights.resize(m);
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double w =
        std::isnan(log_weights[i]) ? 0.0 : std::exp(log_weights[i] - max_log);
    cloud.weights[i] = w;
    total += w;
  }
  for (double& w : cloud.weights) w /= total;
  cloud.ess = EffectiveSampleSize(cloud.weights);
  cloud.degenerate = cloud.ess < ess_floor_fraction * m;
  return cloud;
}

ParticleCloud ImportanceSample(const PosteriorTarget& target,
                               const LaplaceApproximation& approx, int m,
                               std::uint64_t seed, double ess_floor_fraction) {
  if (m < 100) {
    throw Error(ErrorKind::kConfig, "importance sampling needs m >= 100");
  }
  const int d = approx.dim();
  Rng rng(seed);
  ParticleMatrix particles(m, d);
  std::vector<double> log_proposal(m);
  for (int i = 0; i < m; ++i) {
    Vector z;
    particles.row(i) = approx.Sample(rng, &z).transpose();
    log_proposal[i] = approx.LogDensityFromStandard(z);
  }
  std::vector<double> log_weights =
      kernels::LogLikelihoodBatch(target.view(), particles);
  for (int i = 0; i < m; ++i) {
    log_weights[i] += target.prior().LogDensity(particles.row(i).transpose()) -
                      log_proposal[i];
  }
  return CloudFromLogWeights(std::move(particles), log_weights,
                             CloudTarget::kFull, ess_floor_fraction);
}

ParticleCloud ReweightDropLast(const ParticleCloud& cloud,
                               const ContaminatedModel& model, double x,
                               CovariateRow w, double ess_floor_fraction) {
  const double log_g =
      model.p() > 0.0 ? model.contamination().LogDensity(x, w)
                      : -std::numeric_limits<double>::infinity();
  std::vector<double> log_weights(cloud.size());
  for (int i = 0; i < cloud.size(); ++i) {
    const Vector theta = cloud.particles.row(i).transpose();
    const double log_k =
        model.LogMixture(x, model.base().At(LinearPredictor(w, theta)), log_g);
    log_weights[i] = std::log(cloud.weights[i]) - log_k;
  }
  return CloudFromLogWeights(cloud.particles, log_weights,
                             CloudTarget::kDropLast, ess_floor_fraction);
}

}  // namespace contamdp
