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

#ifndef CONTAMDP_PRIVACY_RATIO_SEARCH_H_
#define CONTAMDP_PRIVACY_RATIO_SEARCH_H_

#include <cstdint>
#include <vector>

#include "contamdp/core/models.h"
#include "contamdp/inference/particles.h"
#include "contamdp/privacy/neighbourhood.h"

namespace contamdp {

// Covariate rows searched over when optimising the likelihood ratio. An
// empty row means the intercept-only design.
struct CovariateDomain {
  std::vector<std::vector<double>> rows;

  static CovariateDomain InterceptOnly();
  // Corners of [-1, 1]^dim with the intercept fixed at 1 (2^(dim-1) rows).
  static CovariateDomain Corners(int dim);
};

struct SearchOptions {
  int grid_points = 512;
  int random_starts = 32;
  // Unbounded domains are searched on
  // [min prediction - widen * s, max prediction + widen * s], where s is the
  // larger of the model and contamination scales.
  double widen = 20.0;
  // |log d| above this at a search point with p > 0 means p is too small for
  // the search domain.
  double escalation_log_ratio = 50.0;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct Witness {
  double x = 0.0;
  std::vector<double> w;
  double t = 0.0;  // linear predictor of the extremal parameter
};

// sup_x sup_{theta in box} d(x; theta) and inf_z inf_{theta in box} d(z; theta)
// with d(x; theta) = k_p(x; theta) / k_p(x; theta_ref).
struct RatioBound {
  double sup = 1.0;
  double inf = 1.0;
  double eta = 1.0;
  Witness sup_at;
  Witness inf_at;
  bool interior = true;  // both x witnesses strictly inside the search range
};

// sup_x sum_i w_i d(x; theta_i) and inf_z sum_i w_i d(z; theta_i).
struct ExpectationBound {
  double alpha = 1.0;
  double beta = 1.0;
  Witness alpha_at;
  Witness beta_at;
  bool interior = true;
};

// Search range for x on one covariate row given the range of linear
// predictors that will be evaluated.
struct XRange {
  double lower = 0.0;
  double upper = 0.0;
};
XRange SearchRange(const ContaminatedModel& model, double t_min, double t_max,
                   const SearchOptions& options);

// Optimisation over theta in the box runs on the image of the box under
// theta -> theta^T w, which is exact for these single-index likelihoods:
// the interval endpoints are the images of the extreme corners, seeded
// together with the centre and random interior points, then refined by
// golden-section search. x is searched exhaustively on discrete domains and
// by grid plus golden-section refinement otherwise.
RatioBound EtaBound(const ContaminatedModel& model, const Vector& theta_ref,
                    const NeighbourhoodBox& box,
                    const CovariateDomain& covariates,
                    const SearchOptions& options = {});

ExpectationBound ExpectationRatio(const ParticleCloud& cloud,
                                  const ContaminatedModel& model,
                                  const Vector& theta_ref,
                                  const CovariateDomain& covariates,
                                  const SearchOptions& options = {});

}  // namespace contamdp

#endif  // CONTAMDP_PRIVACY_RATIO_SEARCH_H_
