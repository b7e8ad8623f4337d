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

#ifndef CONTAMDP_KERNELS_KERNELS_H_
#define CONTAMDP_KERNELS_KERNELS_H_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "contamdp/core/models.h"

namespace contamdp {

// Non-owning view of a prepared dataset: observations, row-major covariates
// (cols == 0 for intercept-only) and the cached log g(x_i; w_i). The owner
// (PosteriorTarget) keeps the storage alive.
struct DataView {
  const ContaminatedModel* model = nullptr;
  std::span<const double> x;
  const double* covariates = nullptr;
  int cols = 0;
  std::span<const double> log_g;

  int size() const { return static_cast<int>(x.size()); }
  CovariateRow row(int i) const {
    if (cols == 0) return {};
    return {covariates + static_cast<std::ptrdiff_t>(i) * cols,
            static_cast<std::size_t>(cols)};
  }
};

// Particles are stored one per row.
using ParticleMatrix = Eigen::MatrixXd;

namespace kernels {

// Observations per reduction block. Sums are accumulated block by block in a
// fixed order so results do not depend on the number of threads.
inline constexpr int kBlockSize = 2048;

// sum_i log k_p(x_i; theta, w_i).
double LogLikelihood(const DataView& data, const Vector& theta);

// Same value as LogLikelihood, computed on the calling thread only.
double LogLikelihoodSerial(const DataView& data, const Vector& theta);

// Gradient of LogLikelihood with respect to theta.
Vector LogLikelihoodGradient(const DataView& data, const Vector& theta);

// LogLikelihood for every particle row, parallel over particles.
std::vector<double> LogLikelihoodBatch(const DataView& data,
                                       const ParticleMatrix& particles);

// For each x in `xs`:
//   sum_i weights[i] * exp(log k_p(x; t_i) - log k_p(x; t_ref))
// where the t_i are particle linear predictors for one covariate row and
// `log_g` holds log g(x) for that row. Parallel over xs.
std::vector<double> WeightedRatioSums(const ContaminatedModel& model,
                                      std::span<const PredictorState> states,
                                      std::span<const double> weights,
                                      const PredictorState& ref,
                                      std::span<const double> xs,
                                      std::span<const double> log_g);

}  // namespace kernels

// Straightforward single-threaded versions of the kernels, written for
// clarity and kept as the test oracle for the parallel paths.
namespace reference {

double LogLikelihood(const DataView& data, const Vector& theta);
Vector LogLikelihoodGradient(const DataView& data, const Vector& theta);
std::vector<double> LogLikelihoodBatch(const DataView& data,
                                       const ParticleMatrix& particles);
std::vector<double> WeightedRatioSums(const ContaminatedModel& model,
                                      std::span<const PredictorState> states,
                                      std::span<const double> weights,
                                      const PredictorState& ref,
                                      std::span<const double> xs,
                                      std::span<const double> log_g);

}  // namespace reference
}  // namespace contamdp

#endif  // CONTAMDP_KERNELS_KERNELS_H_
