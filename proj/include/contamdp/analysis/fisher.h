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

#ifndef CONTAMDP_ANALYSIS_FISHER_H_
#define CONTAMDP_ANALYSIS_FISHER_H_

#include <span>
#include <vector>

#include <Eigen/Core>

#include "contamdp/analysis/quadrature.h"
#include "contamdp/core/models.h"

namespace contamdp {

// Single-observation Fisher information of k_p at theta for covariate row w:
// integral of (grad log k_p)(grad log k_p)^T k_p dx.
Eigen::MatrixXd FisherInformation(const ContaminatedModel& model,
                                  const Vector& theta, CovariateRow w = {},
                                  const QuadratureOptions& options = {});

struct FisherGap {
  double p = 0.0;
  double max_entry_gap = 0.0;  // max_ij |I_p - I_0|
};

std::vector<FisherGap> FisherGaps(const ContaminatedModel& model,
                                  const Vector& theta,
                                  std::span<const double> rates,
                                  CovariateRow w = {},
                                  const QuadratureOptions& options = {});

}  // namespace contamdp

#endif  // CONTAMDP_ANALYSIS_FISHER_H_
