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

#include "contamdp/kernels/kernels.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <omp.h>

namespace contamdp::kernels {
namespace {

double BlockLogLikelihood(const DataView& data, const Vector& theta, int begin,
                          int end) {
  const ContaminatedModel& model = *data.model;
  double sum = 0.0;
  if (data.cols == 0) {
    const PredictorState state = model.base().At(theta[0]);
    for (int i = begin; i < end; ++i) {
      sum += model.LogMixture(data.x[i], state, data.log_g[i]);
    }
    return sum;
  }
  for (int i = begin; i < end; ++i) {
    const PredictorState state =
        model.base().At(LinearPredictor(data.row(i), theta));
    sum += model.LogMixture(data.x[i], state, data.log_g[i]);
  }
  return sum;
}

void BlockGradient(const DataView& data, const Vector& theta, int begin,
                   int end, Vector& grad) {
  const ContaminatedModel& model = *data.model;
  if (data.cols == 0) {
    const PredictorState state = model.base().At(theta[0]);
    for (int i = begin; i < end; ++i) {
      grad[0] += model.ScoreMixture(data.x[i], state, data.log_g[i]);
    }
    return;
  }
  for (int i = begin; i < end; ++i) {
    const CovariateRow w = data.row(i);
    const PredictorState state = model.base().At(LinearPredictor(w, theta));
    const double dt = model.ScoreMixture(data.x[i], state, data.log_g[i]);
    for (int j = 0; j < data.cols; ++j) grad[j] += dt * w[j];
  }
}

int NumBlocks(int n) { return (n + kBlockSize - 1) / kBlockSize; }

}  // namespace

double LogLikelihood(const DataView& data, const Vector& theta) {
  const int n = data.size();
  const int blocks = NumBlocks(n);
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel for schedule(static) if (blocks > 1)
  for (int b = 0; b < blocks; ++b) {
    const int begin = b * kBlockSize;
    partial[b] =
        BlockLogLikelihood(data, theta, begin, std::min(n, begin + kBlockSize));
  }
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

double LogLikelihoodSerial(const DataView& data, const Vector& theta) {
  const int n = data.size();
  double total = 0.0;
  for (int begin = 0; begin < n; begin += kBlockSize) {
    total += BlockLogLikelihood(data, theta, begin,
                                std::min(n, begin + kBlockSize));
  }
  return total;
}

Vector LogLikelihoodGradient(const DataView& data, const Vector& theta) {
  const int n = data.size();
  const int blocks = NumBlocks(n);
  std::vector<Vector> partial(blocks, Vector::Zero(theta.size()));
#pragma omp parallel for schedule(static) if (blocks > 1)
  for (int b = 0; b < blocks; ++b) {
    const int begin = b * kBlockSize;
    BlockGradient(data, theta, begin, std::min(n, begin + kBlockSize),
                  partial[b]);
  }
  Vector grad = Vector::Zero(theta.size());
  for (const Vector& g : partial) grad += g;
  return grad;
}

std::vector<double> LogLikelihoodBatch(const DataView& data,
                                       const ParticleMatrix& particles) {
  const int m = static_cast<int>(particles.rows());
  std::vector<double> out(m);
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < m; ++i) {
    const Vector theta = particles.row(i).transpose();
    out[i] = LogLikelihoodSerial(data, theta);
  }
  return out;
}

std::vector<double> WeightedRatioSums(const ContaminatedModel& model,
                                      std::span<const PredictorState> states,
                                      std::span<const double> weights,
                                      const PredictorState& ref,
                                      std::span<const double> xs,
                                      std::span<const double> log_g) {
  const int nx = static_cast<int>(xs.size());
  const std::size_t m = states.size();
  std::vector<double> out(nx);
#pragma omp parallel for schedule(static) if (nx * m > 16384)
  for (int k = 0; k < nx; ++k) {
    const double x = xs[k];
    const double lg = log_g[k];
    const double log_ref = model.LogMixture(x, ref, lg);
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      sum += weights[i] * std::exp(model.LogMixture(x, states[i], lg) - log_ref);
    }
    out[k] = sum;
  }
  return out;
}

}  // namespace contamdp::kernels
