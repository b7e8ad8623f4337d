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

#include "contamdp/analysis/prior_mass.h"

#include <cmath>
#include <random>

#include <boost/math/special_functions/gamma.hpp>

#include "contamdp/core/random.h"
#include "contamdp/error.h"

namespace contamdp {

PriorMassBounds PriorMass(const Vector& theta_star, double r, int mc_draws,
                          std::uint64_t seed) {
  if (!(r > 0.0)) throw Error(ErrorKind::kConfig, "radius must be positive");
  if (theta_star.size() < 1) {
    throw Error(ErrorKind::kConfig, "theta* must be nonempty");
  }
  if (mc_draws < 1) throw Error(ErrorKind::kConfig, "mc_draws must be >= 1");
  const int d = static_cast<int>(theta_star.size());
  const double half_d = 0.5 * d;
  const double lambda = theta_star.squaredNorm();
  PriorMassBounds out;
  out.small_r = std::exp(-0.5 * lambda) *
                boost::math::gamma_p(half_d, 0.5 * r * r);
  const double big_r = r - std::sqrt(lambda);
  if (big_r > 0.0) {
    out.large_r = boost::math::gamma_p(half_d, 0.5 * big_r * big_r);
  }

  Rng rng(seed);
  std::normal_distribution<double> normal;
  long hits = 0;
  const double r2 = r * r;
  for (int i = 0; i < mc_draws; ++i) {
    double s = 0.0;
    for (int j = 0; j < d; ++j) {
      const double z = normal(rng) - theta_star[j];
      s += z * z;
    }
    hits += s <= r2;
  }
  const double pm = static_cast<double>(hits) / mc_draws;
  out.monte_carlo = pm;
  out.monte_carlo_se = std::sqrt(pm * (1.0 - pm) / mc_draws);
  return out;
}

}  // namespace contamdp
