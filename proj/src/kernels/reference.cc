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

#include <cmath>

#include "contamdp/kernels/kernels.h"

namespace contamdp::reference {

double LogLikelihood(const DataView& data, const Vector& theta) {
  double sum = 0.0;
  for (int i = 0; i < data.size(); ++i) {
    sum += data.model->LogDensity(data.x[i], data.row(i), theta);
  }
  return sum;
}

Vector LogLikelihoodGradient(const DataView& data, const Vector& theta) {
  Vector grad = Vector::Zero(theta.size());
  for (int i = 0; i < data.size(); ++i) {
    grad += data.model->GradLogDensity(data.x[i], data.row(i), theta);
  }
  return grad;
}

std::vector<double> LogLikelihoodBatch(const DataView& data,
                                       const ParticleMatrix& particles) {
  std::vector<double> out;
  out.reserve(particles.rows());
  for (Eigen::Index i = 0; i < particles.rows(); ++i) {
    out.push_back(LogLikelihood(data, particles.row(i).transpose()));
  }
  return out;
}

std::vector<double> WeightedRatioSums(const ContaminatedModel& model,
                                      std::span<const PredictorState> states,
                                      std::span<const double> weights,
                                      const PredictorState& ref,
                                      std::span<const double> xs,
                                      std::span<const double> log_g) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double denom =
        model.p() == 0.0
            ? std::exp(model.base().LogDensity(xs[k], ref))
            : (1.0 - model.p()) * std::exp(model.base().LogDensity(xs[k], ref)) +
                  model.p() * std::exp(log_g[k]);
    double sum = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
      const double f = std::exp(model.base().LogDensity(xs[k], states[i]));
      const double num = model.p() == 0.0
                             ? f
                             : (1.0 - model.p()) * f +
                                   model.p() * std::exp(log_g[k]);
      sum += weights[i] * num / denom;
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace contamdp::reference
