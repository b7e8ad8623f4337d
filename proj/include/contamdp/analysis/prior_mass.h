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

#ifndef CONTAMDP_ANALYSIS_PRIOR_MASS_H_
#define CONTAMDP_ANALYSIS_PRIOR_MASS_H_

#include <cstdint>
#include <optional>

#include "contamdp/core/models.h"

namespace contamdp {

// Lower bounds on the standard Gaussian prior mass of the Euclidean ball of
// radius r around theta*, with a Monte Carlo estimate of the exact mass.
struct PriorMassBounds {
  double small_r = 0.0;          // exp(-lambda/2) P(chi2_d <= r^2)
  std::optional<double> large_r;  // P(chi2_d <= (r - |theta*|)^2), r > |theta*|
  double monte_carlo = 0.0;
  double monte_carlo_se = 0.0;
};

PriorMassBounds PriorMass(const Vector& theta_star, double r,
                          int mc_draws = 1000000, std::uint64_t seed = 1);

}  // namespace contamdp

#endif  // CONTAMDP_ANALYSIS_PRIOR_MASS_H_
