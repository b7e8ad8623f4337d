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

#ifndef CONTAMDP_ANALYSIS_MSE_H_
#define CONTAMDP_ANALYSIS_MSE_H_

#include <span>

namespace contamdp {

struct MseStats {
  double bias = 0.0;
  double variance = 0.0;  // unbiased sample variance
  double mse = 0.0;       // mean squared error about the truth
};

MseStats ComputeMseStats(std::span<const double> estimates, double truth);

}  // namespace contamdp

#endif  // CONTAMDP_ANALYSIS_MSE_H_
