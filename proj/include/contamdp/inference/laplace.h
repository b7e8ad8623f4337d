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

#ifndef CONTAMDP_INFERENCE_LAPLACE_H_
#define CONTAMDP_INFERENCE_LAPLACE_H_

#include <Eigen/Core>

#include "contamdp/core/random.h"
#include "contamdp/inference/posterior.h"

namespace contamdp {

// Gaussian approximation N(mode, hessian^{-1}) of the posterior at its mode.
struct LaplaceApproximation {
  Vector mode;
  Eigen::MatrixXd hessian;      // -d^2 log posterior at the mode, symmetrised
  Eigen::MatrixXd cov_factor;   // lower-triangular L with L L^T = hessian^{-1}
  double jitter = 0.0;          // diagonal jitter that made the factor succeed
  double log_det_cov_factor = 0.0;

  int dim() const { return static_cast<int>(mode.size()); }

  // Draws mode + L z with z standard normal; `z_out` receives z.
  Vector Sample(Rng& rng, Vector* z_out = nullptr) const;
  double LogDensity(const Vector& theta) const;
  // Log density of the draw mode + L z, without solving for z.
  double LogDensityFromStandard(const Vector& z) const;
};

// Central finite differences of the analytic gradient with per-coordinate
// step cbrt(machine epsilon) * (1 + |theta_j|). A non positive definite
// Hessian gets a jitter ladder 1e-8 * 10^k * I, k = 0..6, before a curvature
// error is raised.
LaplaceApproximation ComputeLaplaceApproximation(const PosteriorTarget& target,
                                                 const Vector& mode);

}  // namespace contamdp

#endif  // CONTAMDP_INFERENCE_LAPLACE_H_
