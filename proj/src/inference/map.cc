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

#include "contamdp/inference/map.h"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

#include "contamdp/error.h"

namespace contamdp {
namespace {

constexpr double kArmijo = 1e-4;
constexpr int kMaxBacktracks = 60;

}  // namespace

MapResult MapEstimate(const PosteriorTarget& target, const Vector& init,
                      const MapOptions& options) {
  if (init.size() != target.dim() || !init.allFinite()) {
    throw Error(ErrorKind::kConfig,
                "MAP initial point must be finite and match the dimension");
  }
  const int d = target.dim();
  // Minimise the negative log posterior.
  Vector theta = init;
  double value = -target.LogPosterior(theta);
  Vector grad = -target.Gradient(theta);
  Eigen::MatrixXd inv_hessian =
      Eigen::MatrixXd::Identity(d, d) / std::max(1.0, grad.lpNorm<Eigen::Infinity>());
  bool scaled = false;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    if (grad.lpNorm<Eigen::Infinity>() < options.tolerance) {
      return {theta, grad.lpNorm<Eigen::Infinity>(), iter};
    }
    Vector direction = -inv_hessian * grad;
    double slope = grad.dot(direction);
    if (!(slope < 0.0)) {
      // Lost descent; restart from steepest descent.
      inv_hessian = Eigen::MatrixXd::Identity(d, d) /
                    std::max(1.0, grad.lpNorm<Eigen::Infinity>());
      direction = -inv_hessian * grad;
      slope = grad.dot(direction);
      scaled = false;
    }

    double step = 1.0;
    Vector next = theta + direction;
    double next_value = -target.LogPosterior(next);
    int backtracks = 0;
    // Function values carry roundoff proportional to their magnitude, which
    // dominates the Armijo decrease close to the optimum of large datasets.
    const double noise = 1e-13 * (1.0 + std::abs(value));
    while (!(next_value <= value + kArmijo * step * slope + noise) &&
           backtracks < kMaxBacktracks) {
      step *= 0.5;
      next = theta + step * direction;
      next_value = -target.LogPosterior(next);
      ++backtracks;
    }
    if (backtracks == kMaxBacktracks) {
      // The line search cannot make progress at double precision. Accept the
      // current point if the gradient is already tiny relative to its scale.
      break;
    }

    const Vector next_grad = -target.Gradient(next);
    const Vector s = next - theta;
    const Vector y = next_grad - grad;
    const double sy = s.dot(y);
    if (sy > 1e-300) {
      if (!scaled) {
        inv_hessian = Eigen::MatrixXd::Identity(d, d) * (sy / y.squaredNorm());
        scaled = true;
      }
      const double rho = 1.0 / sy;
      const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(d, d);
      inv_hessian = (eye - rho * s * y.transpose()) * inv_hessian *
                        (eye - rho * y * s.transpose()) +
                    rho * s * s.transpose();
    }
    theta = next;
    value = next_value;
    grad = next_grad;
  }

  const double gnorm = grad.lpNorm<Eigen::Infinity>();
  if (gnorm < options.tolerance) return {theta, gnorm, options.max_iterations};
  std::ostringstream msg;
  msg << "MAP optimisation did not converge: gradient sup-norm " << gnorm
      << " >= tolerance " << options.tolerance;
  throw NonConvergenceError(msg.str(), theta, gnorm);
}

}  // namespace contamdp
