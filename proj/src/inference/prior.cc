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

#include "contamdp/inference/prior.h"

#include <cmath>
#include <numbers>

#include "contamdp/error.h"

namespace contamdp {

GaussianPrior::GaussianPrior(Vector mean, Vector sd)
    : mean_(std::move(mean)), sd_(std::move(sd)) {
  if (mean_.size() != sd_.size() || mean_.size() == 0) {
    throw Error(ErrorKind::kConfig,
                "prior mean and sd must be non-empty and the same length");
  }
  if ((sd_.array() <= 0.0).any()) {
    throw Error(ErrorKind::kConfig, "prior standard deviations must be > 0");
  }
  log_norm_ = -sd_.array().log().sum() -
              0.5 * static_cast<double>(mean_.size()) *
                  std::log(2.0 * std::numbers::pi);
}

GaussianPrior GaussianPrior::Isotropic(int dim, double mean, double sd) {
  return GaussianPrior(Vector::Constant(dim, mean), Vector::Constant(dim, sd));
}

double GaussianPrior::LogDensity(const Vector& theta) const {
  const Vector z = (theta - mean_).cwiseQuotient(sd_);
  return log_norm_ - 0.5 * z.squaredNorm();
}

Vector GaussianPrior::Gradient(const Vector& theta) const {
  return -(theta - mean_).cwiseQuotient(sd_.cwiseProduct(sd_));
}

}  // namespace contamdp
