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

#include "contamdp/inference/laplace.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Cholesky>

#include "contamdp/error.h"

namespace contamdp {

Vector LaplaceApproximation::Sample(Rng& rng, Vector* z_out) const {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector z(dim());
  for (int j = 0; j < dim(); ++j) z[j] = normal(rng);
  if (z_out) *z_out = z;
  return mode + cov_factor * z;
}

double LaplaceApproximation::LogDensityFromStandard(const Vector& z) const {
  return -0.5 * z.squaredNorm() - log_det_cov_factor -
         0.5 * dim() * std::log(2.0 * std::numbers::pi);
}

double LaplaceApproximation::LogDensity(const Vector& theta) const {
  const Vector z =
      cov_factor.triangularView<Eigen::Lower>().solve(theta - mode);
  return LogDensityFromStandard(z);
}

LaplaceApproximation ComputeLaplaceApproximation(const PosteriorTarget& target,
                                                 const Vector& mode) {
  const int d = target.dim();
  const double base_step = std::cbrt(std::numeric_limits<double>::epsilon());
  Eigen::MatrixXd hessian(d, d);
  for (int j = 0; j < d; ++j) {
    const double h = base_step * (1.0 + std::abs(mode[j]));
    Vector up = mode;
    Vector down = mode;
    up[j] += h;
    down[j] -= h;
    const double width = up[j] - down[j];
    hessian.col(j) = -(target.Gradient(up) - target.Gradient(down)) / width;
  }
  hessian = 0.5 * (hessian + hessian.transpose()).eval();

  LaplaceApproximation approx;
  approx.mode = mode;
  approx.hessian = hessian;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
  for (int k = -1; k <= 6; ++k) {
    const double jitter = k < 0 ? 0.0 : 1e-8 * std::pow(10.0, k);
    Eigen::LLT<Eigen::MatrixXd> llt(hessian + jitter * eye);
    if (llt.info() != Eigen::Success) continue;
    const Eigen::MatrixXd cov = llt.solve(eye);
    Eigen::LLT<Eigen::MatrixXd> cov_llt(0.5 * (cov + cov.transpose()));
    if (cov_llt.info() != Eigen::Success) continue;
    approx.cov_factor = cov_llt.matrixL();
    if ((approx.cov_factor.diagonal().array() <= 0.0).any()) continue;
    approx.jitter = jitter;
    approx.log_det_cov_factor =
        approx.cov_factor.diagonal().array().log().sum();
    return approx;
  }
  throw Error(ErrorKind::kCurvature,
              "posterior Hessian is not positive definite at the mode, even "
              "after jitter");
}

}  // namespace contamdp
