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

#include "contamdp/inference/rwm.h"

#include <cmath>
#include <random>

#include "contamdp/core/random.h"
#include "contamdp/error.h"

namespace contamdp {

RwmResult RwmSample(const PosteriorTarget& target, const Vector& init,
                    const RwmOptions& options, std::uint64_t seed) {
  if (options.steps < 1) {
    throw Error(ErrorKind::kConfig, "random-walk Metropolis needs steps >= 1");
  }
  if (!(options.step_scale > 0.0)) {
    throw Error(ErrorKind::kConfig, "random-walk step scale must be > 0");
  }
  const int d = target.dim();
  const Eigen::MatrixXd factor =
      options.proposal_factor.value_or(Eigen::MatrixXd::Identity(d, d)) *
      options.step_scale;

  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector current = init;
  double current_lp = target.LogPosterior(current);
  if (!std::isfinite(current_lp)) {
    throw Error(ErrorKind::kDomain,
                "random-walk start has zero posterior density");
  }

  RwmResult result;
  result.chain.reserve(options.steps);
  long accepted = 0;
  const int total = options.burn_in + options.steps;
  Vector z(d);
  for (int step = 0; step < total; ++step) {
    for (int j = 0; j < d; ++j) z[j] = normal(rng);
    const Vector proposal = current + factor * z;
    const double proposal_lp = target.LogPosterior(proposal);
    const double log_u = std::log(UniformOpen(rng));
    const bool accept = log_u < proposal_lp - current_lp;
    if (accept) {
      current = proposal;
      current_lp = proposal_lp;
    }
    if (step >= options.burn_in) {
      if (accept) ++accepted;
      result.chain.push_back(current);
    }
  }
  result.acceptance_rate =
      static_cast<double>(accepted) / static_cast<double>(options.steps);
  result.tuning_warning =
      result.acceptance_rate < 0.05 || result.acceptance_rate > 0.7;
  return result;
}

}  // namespace contamdp
