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

#ifndef CONTAMDP_INFERENCE_PRIOR_H_
#define CONTAMDP_INFERENCE_PRIOR_H_

#include "contamdp/core/models.h"

namespace contamdp {

// Gaussian prior with diagonal covariance.
class GaussianPrior {
 public:
  GaussianPrior(Vector mean, Vector sd);
  static GaussianPrior Isotropic(int dim, double mean, double sd);

  int dim() const { return static_cast<int>(mean_.size()); }
  const Vector& mean() const { return mean_; }
  const Vector& sd() const { return sd_; }

  double LogDensity(const Vector& theta) const;
  Vector Gradient(const Vector& theta) const;

 private:
  Vector mean_;
  Vector sd_;
  double log_norm_;
};

}  // namespace contamdp

#endif  // CONTAMDP_INFERENCE_PRIOR_H_
