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

#ifndef CONTAMDP_CORE_DATASET_H_
#define CONTAMDP_CORE_DATASET_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "contamdp/core/models.h"

namespace contamdp {

using CovariateMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Observations with optional covariate rows. When covariates are present
// there is exactly one row per observation, the first column is the
// intercept (all ones) and every entry lies in [-1, 1].
class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<double> observations);
  Dataset(std::vector<double> observations, CovariateMatrix covariates);

  int size() const { return static_cast<int>(observations_.size()); }
  bool empty() const { return observations_.empty(); }
  const std::vector<double>& observations() const { return observations_; }
  double observation(int i) const { return observations_[i]; }
  bool has_covariates() const { return covariates_.cols() > 0; }
  const CovariateMatrix& covariates() const { return covariates_; }

  // Empty span for intercept-only data.
  CovariateRow row(int i) const {
    if (!has_covariates()) return {};
    return {covariates_.data() + static_cast<std::ptrdiff_t>(i) *
                                     covariates_.cols(),
            static_cast<std::size_t>(covariates_.cols())};
  }

  Dataset WithoutLast() const;
  Dataset WithReplaced(int i, double x) const;

 private:
  std::vector<double> observations_;
  CovariateMatrix covariates_;
};

// Intercept column of ones followed by i.i.d. Uniform[-1, 1] columns.
CovariateMatrix UniformCovariates(int n, int dim, Rng& rng);

// n i.i.d. draws from f(.; theta*, w_i). Regression models without supplied
// covariates get UniformCovariates of the model dimension.
Dataset SampleDataset(const LikelihoodModel& model, const Vector& theta_star,
                      std::optional<CovariateMatrix> covariates, int n,
                      std::uint64_t seed);

// Keeps each observation with probability 1 - p, otherwise replaces it with a
// draw from g located for that observation's covariates. When `replaced` is
// given it receives a 0/1 mask of replaced positions.
Dataset Contaminate(const Dataset& data, const ContaminatedModel& model,
                    std::uint64_t seed,
                    std::vector<std::uint8_t>* replaced = nullptr);

}  // namespace contamdp

#endif  // CONTAMDP_CORE_DATASET_H_
