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

#include "contamdp/inference/posterior.h"

#include <limits>

#include "contamdp/error.h"

namespace contamdp {

PosteriorTarget::PosteriorTarget(ContaminatedModel model, GaussianPrior prior,
                                 Dataset data)
    : model_(std::move(model)),
      prior_(std::move(prior)),
      data_(std::move(data)) {
  if (prior_.dim() != model_.dim()) {
    throw Error(ErrorKind::kConfig,
                "prior dimension does not match the model dimension");
  }
  if (data_.has_covariates() && data_.covariates().cols() != model_.dim()) {
    throw Error(ErrorKind::kConfig,
                "covariate columns do not match the model dimension");
  }
  const ObservationDomain domain = model_.domain();
  log_g_.resize(data_.size());
  for (int i = 0; i < data_.size(); ++i) {
    const double x = data_.observation(i);
    if (!domain.Contains(x)) {
      throw Error(ErrorKind::kDomain,
                  "observation " + std::to_string(x) +
                      " lies outside the model's observation domain");
    }
    log_g_[i] = model_.p() > 0.0
                    ? model_.contamination().LogDensity(x, data_.row(i))
                    : -std::numeric_limits<double>::infinity();
  }
}

DataView PosteriorTarget::view() const {
  DataView v;
  v.model = &model_;
  v.x = data_.observations();
  v.cols = data_.has_covariates() ? static_cast<int>(data_.covariates().cols())
                                  : 0;
  v.covariates = v.cols > 0 ? data_.covariates().data() : nullptr;
  v.log_g = log_g_;
  return v;
}

double PosteriorTarget::LogLikelihood(const Vector& theta) const {
  return kernels::LogLikelihood(view(), theta);
}

double PosteriorTarget::LogPosterior(const Vector& theta) const {
  return LogLikelihood(theta) + prior_.LogDensity(theta);
}

Vector PosteriorTarget::Gradient(const Vector& theta) const {
  return kernels::LogLikelihoodGradient(view(), theta) +
         prior_.Gradient(theta);
}

std::vector<double> PosteriorTarget::LogDensityAt(
    double x, CovariateRow w, const ParticleMatrix& particles) const {
  const double log_g = model_.p() > 0.0
                           ? model_.contamination().LogDensity(x, w)
                           : -std::numeric_limits<double>::infinity();
  std::vector<double> out(particles.rows());
  for (Eigen::Index i = 0; i < particles.rows(); ++i) {
    const Vector theta = particles.row(i).transpose();
    out[i] = model_.LogMixture(x, model_.base().At(LinearPredictor(w, theta)),
                               log_g);
  }
  return out;
}

double LogPosterior(const ContaminatedModel& model, const GaussianPrior& prior,
                    const Dataset& data, const Vector& theta) {
  return PosteriorTarget(model, prior, data).LogPosterior(theta);
}

}  // namespace contamdp
