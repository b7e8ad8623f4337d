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

#ifndef CONTAMDP_PRIVACY_DECOMPOSITION_H_
#define CONTAMDP_PRIVACY_DECOMPOSITION_H_

#include <cstdint>
#include <vector>

#include "contamdp/analysis/quadrature.h"
#include "contamdp/core/models.h"
#include "contamdp/inference/prior.h"

namespace contamdp {

struct DecompositionOptions {
  int n = 20;
  int trials = 100;
  int sets = 200;          // random intervals S per trial
  int theta_grid = 201;    // grid over A_n for eta
  int x_grid = 2001;       // grid over the observation range for eta
  double phi_min = 0.05;   // A_n half-width drawn uniformly from
  double phi_max = 1.0;    // [phi_min, phi_max]
  double slack = 1e-6;
  std::uint64_t seed = 1;
  QuadratureOptions quadrature;
};

struct DecompositionTrial {
  int trial = 0;
  std::uint64_t seed = 0;
  int violations = 0;
  double phi = 0.0;
  double eta = 1.0;
  double worst_gap = 0.0;  // max over S of lhs - rhs (negative when slack)
};

struct DecompositionReport {
  std::vector<DecompositionTrial> trials;
  int violations = 0;
};

// Checks, by quadrature over theta, that for neighbouring datasets X, Z
// (differing in the last observation) every sampled interval S satisfies
//   P(S|X) <= eta (eta + m(A^c, Z) / m(Omega, X)) P(S|Z) + m(A^c, X) / m(Omega, X)
// with A = [theta* - phi, theta* + phi]. The model must be one-dimensional.
DecompositionReport VerifyDecomposition(const ContaminatedModel& model,
                                        const GaussianPrior& prior,
                                        double theta_star,
                                        const DecompositionOptions& options);

}  // namespace contamdp

#endif  // CONTAMDP_PRIVACY_DECOMPOSITION_H_
