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

#ifndef CONTAMDP_INFERENCE_RWM_H_
#define CONTAMDP_INFERENCE_RWM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "contamdp/inference/posterior.h"

namespace contamdp {

struct RwmOptions {
  int steps = 50000;     // retained steps after burn-in
  int burn_in = 5000;
  double step_scale = 1.0;
  // Proposal is theta + step_scale * factor * z. Identity when absent; pass
  // the Laplace covariance factor and 2.38 / sqrt(d) for the usual tuning.
  std::optional<Eigen::MatrixXd> proposal_factor;
};

struct RwmResult {
  std::vector<Vector> chain;  // post burn-in states
  double acceptance_rate = 0.0;  // over the retained steps
  bool tuning_warning = false;   // acceptance outside [0.05, 0.7]
};

// Random-walk Metropolis targeting pi_n. Deterministic given the seed.
RwmResult RwmSample(const PosteriorTarget& target, const Vector& init,
                    const RwmOptions& options, std::uint64_t seed);

}  // namespace contamdp

#endif  // CONTAMDP_INFERENCE_RWM_H_
