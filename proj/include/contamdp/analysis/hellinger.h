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

#ifndef CONTAMDP_ANALYSIS_HELLINGER_H_
#define CONTAMDP_ANALYSIS_HELLINGER_H_

#include <functional>
#include <span>

#include "contamdp/analysis/quadrature.h"
#include "contamdp/core/models.h"

namespace contamdp {

using LogDensityFn = std::function<double(double)>;

// h^2 = 1/2 * integral (sqrt p - sqrt q)^2 over the domain (a sum on
// discrete domains). Real domains are integrated over the whole line.
double HellingerSquared(const LogDensityFn& log_p, const LogDensityFn& log_q,
                        const ObservationDomain& domain,
                        const QuadratureOptions& options = {.tolerance = 1e-8},
                        std::span<const double> breakpoints = {});

// Between k_p(.; theta1, w) and k_p(.; theta2, w).
double HellingerSquared(const ContaminatedModel& model, CovariateRow w,
                        const Vector& theta1, const Vector& theta2,
                        const QuadratureOptions& options = {.tolerance = 1e-8});

}  // namespace contamdp

#endif  // CONTAMDP_ANALYSIS_HELLINGER_H_
