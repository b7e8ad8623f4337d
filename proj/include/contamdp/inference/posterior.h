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

#ifndef CONTAMDP_INFERENCE_POSTERIOR_H_
#define CONTAMDP_INFERENCE_POSTERIOR_H_

#include <vector>

#include "contamdp/core/dataset.h"
#include "contamdp/core/models.h"
#include "contamdp/inference/prior.h"
#include "contamdp/kernels/kernels.h"

namespace contamdp {

// Unnormalised posterior pi_n(theta | X) under the contaminated likelihood.
// Owns its data and caches log g(x_i; w_i), which does not depend on theta.
class PosteriorTarget {
 public:
  PosteriorTarget(ContaminatedModel model, GaussianPrior prior, Dataset data);

  const ContaminatedModel& model() const { return model_; }
  const GaussianPrior& prior() const { return prior_; }
  const Dataset& data() const { return data_; }
  int dim() const { return model_.dim(); }
  DataView view() const;

  double LogLikelihood(const Vector& theta) const;
  double LogPosterior(const Vector& theta) const;
  Vector Gradient(const Vector& theta) const;

  // log k_p of a single observation at every particle row.
  std::vector<double> LogDensityAt(double x, CovariateRow w,
                                   const ParticleMatrix& particles) const;

 private:
  ContaminatedModel model_;
  GaussianPrior prior_;
  Dataset data_;
  std::vector<double> log_g_;
};

// sum_i log k_p(x_i; theta, w_i) + log pi_0(theta).
double LogPosterior(const ContaminatedModel& model, const GaussianPrior& prior,
                    const Dataset& data, const Vector& theta);

}  // namespace contamdp

#endif  // CONTAMDP_INFERENCE_POSTERIOR_H_
