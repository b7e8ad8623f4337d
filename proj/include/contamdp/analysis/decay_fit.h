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

#ifndef CONTAMDP_ANALYSIS_DECAY_FIT_H_
#define CONTAMDP_ANALYSIS_DECAY_FIT_H_

#include <span>
#include <vector>

namespace contamdp {

// Least-squares line log(epsilon) = intercept + slope * log(n).
struct DecayFit {
  std::vector<double> n;
  std::vector<double> epsilon;
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;

  double Extrapolate(double n_target) const;
};

DecayFit FitDecay(std::span<const double> n, std::span<const double> epsilon);

}  // namespace contamdp

#endif  // CONTAMDP_ANALYSIS_DECAY_FIT_H_
