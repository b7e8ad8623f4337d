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

#ifndef CONTAMDP_INFERENCE_MAP_H_
#define CONTAMDP_INFERENCE_MAP_H_

#include "contamdp/inference/posterior.h"

namespace contamdp {

struct MapOptions {
  double tolerance = 1e-6;  // sup-norm of the log-posterior gradient
  int max_iterations = 500;
};

struct MapResult {
  Vector theta;
  double gradient_norm = 0.0;
  int iterations = 0;
};

// Maximises the log posterior with BFGS and a backtracking Armijo line
// search. Throws NonConvergenceError when the iteration cap is reached.
MapResult MapEstimate(const PosteriorTarget& target, const Vector& init,
                      const MapOptions& options = {});

}  // namespace contamdp

#endif  // CONTAMDP_INFERENCE_MAP_H_
