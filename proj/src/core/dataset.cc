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

#include "contamdp/core/dataset.h"

#include <cmath>
#include <random>
#include <utility>

#include "contamdp/error.h"

namespace contamdp {

Dataset::Dataset(std::vector<double> observations)
    : observations_(std::move(observations)) {}

Dataset::Dataset(std::vector<double> observations, CovariateMatrix covariates)
    : observations_(std::move(observations)),
      covariates_(std::move(covariates)) {
  if (covariates_.cols() == 0) return;
  if (covariates_.rows() != static_cast<Eigen::Index>(observations_.size())) {
    throw Error(ErrorKind::kConfig,
                "covariate matrix must have one row per observation");
  }
  for (Eigen::Index i = 0; i < covariates_.rows(); ++i) {
    if (covariates_(i, 0) != 1.0) {
      throw Error(ErrorKind::kConfig,
                  "first covariate column must be the intercept (all ones)");
    }
  }
  if (covariates_.size() > 0 && covariates_.cwiseAbs().maxCoeff() > 1.0) {
    throw Error(ErrorKind::kConfig,
                "covariate entries must have absolute value <= 1");
  }
}

Dataset Dataset::WithoutLast() const {
  if (observations_.empty()) {
    throw Error(ErrorKind::kConfig, "cannot drop from an empty dataset");
  }
  std::vector<double> obs(observations_.begin(), observations_.end() - 1);
  if (!has_covariates()) return Dataset(std::move(obs));
  return Dataset(std::move(obs), covariates_.topRows(covariates_.rows() - 1));
}

Dataset Dataset::WithReplaced(int i, double x) const {
  Dataset copy = *this;
  copy.observations_.at(i) = x;
  return copy;
}

CovariateMatrix UniformCovariates(int n, int dim, Rng& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  CovariateMatrix w(n, dim);
  for (int i = 0; i < n; ++i) {
    w(i, 0) = 1.0;
    for (int j = 1; j < dim; ++j) w(i, j) = unif(rng);
  }
  return w;
}

Dataset SampleDataset(const LikelihoodModel& model, const Vector& theta_star,
                      std::optional<CovariateMatrix> covariates, int n,
                      std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kConfig, "dataset size must be >= 1");
  if (theta_star.size() != model.dim()) {
    throw Error(ErrorKind::kConfig,
                "true parameter dimension does not match the model");
  }
  Rng rng(seed);
  if (!covariates && model.uses_covariates()) {
    covariates = UniformCovariates(n, model.dim(), rng);
  }
  std::vector<double> obs(n);
  if (covariates) {
    if (covariates->rows() != n || covariates->cols() != model.dim()) {
      throw Error(ErrorKind::kConfig, "covariate matrix has the wrong shape");
    }
    for (int i = 0; i < n; ++i) {
      const double t = covariates->row(i).dot(theta_star.transpose());
      obs[i] = model.Sample(t, rng);
    }
    return Dataset(std::move(obs), std::move(*covariates));
  }
  for (int i = 0; i < n; ++i) obs[i] = model.Sample(theta_star[0], rng);
  return Dataset(std::move(obs));
}

Dataset Contaminate(const Dataset& data, const ContaminatedModel& model,
                    std::uint64_t seed, std::vector<std::uint8_t>* replaced) {
  const double p = model.p();
  if (replaced) replaced->assign(data.size(), 0);
  if (p == 0.0) return data;
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<double> obs = data.observations();
  const ContaminationDensity& g = model.contamination();
  for (int i = 0; i < data.size(); ++i) {
    if (!coin(rng)) continue;
    obs[i] = g.Sample(g.Location(data.row(i)), rng);
    if (replaced) (*replaced)[i] = 1;
  }
  if (!data.has_covariates()) return Dataset(std::move(obs));
  return Dataset(std::move(obs), data.covariates());
}

}  // namespace contamdp
