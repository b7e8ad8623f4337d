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

#ifndef CONTAMDP_INFERENCE_PARTICLES_H_
#define CONTAMDP_INFERENCE_PARTICLES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "contamdp/inference/laplace.h"
#include "contamdp/inference/posterior.h"
#include "contamdp/kernels/kernels.h"

namespace contamdp {

// Which posterior a cloud represents: pi_n on the full data, or pi_{n-1}
// with the last observation removed.
enum class CloudTarget { kFull, kDropLast };

// Weighted posterior sample. Weights are normalised to sum to one.
struct ParticleCloud {
  ParticleMatrix particles;  // one particle per row
  std::vector<double> weights;
  CloudTarget target = CloudTarget::kFull;
  double ess = 0.0;
  bool degenerate = false;

  int size() const { return static_cast<int>(particles.rows()); }
  int dim() const { return static_cast<int>(particles.cols()); }
  Vector Mean() const;
};

double EffectiveSampleSize(std::span<const double> weights);

// Shifts by the max, exponentiates and normalises. A cloud whose ESS falls
// below ess_floor_fraction * m is flagged degenerate.
ParticleCloud CloudFromLogWeights(ParticleMatrix particles,
                                  std::span<const double> log_weights,
                                  CloudTarget target,
                                  double ess_floor_fraction = 0.01);

// Draws m particles from the Laplace approximation and weights them by
// pi_n(theta) / N(theta; mode, H^{-1}). Requires m >= 100.
ParticleCloud ImportanceSample(const PosteriorTarget& target,
                               const LaplaceApproximation& approx, int m,
                               std::uint64_t seed,
                               double ess_floor_fraction = 0.01);

// Turns a pi_n cloud into a pi_{n-1} cloud by dividing each weight by the
// likelihood of the removed observation (x, w) and renormalising.
ParticleCloud ReweightDropLast(const ParticleCloud& cloud,
                               const ContaminatedModel& model, double x,
                               CovariateRow w,
                               double ess_floor_fraction = 0.01);

}  // namespace contamdp

#endif  // CONTAMDP_INFERENCE_PARTICLES_H_
