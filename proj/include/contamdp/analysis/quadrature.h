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

#ifndef CONTAMDP_ANALYSIS_QUADRATURE_H_
#define CONTAMDP_ANALYSIS_QUADRATURE_H_

#include <functional>
#include <span>

namespace contamdp {

struct QuadratureOptions {
  double tolerance = 1e-10;  // relative, per panel
  unsigned max_depth = 20;
  // Infinite panels use x = a +/- tail_scale * tan(u).
  double tail_scale = 1.0;
  // A panel whose error estimate exceeds failure_ratio * (L1 norm) fails.
  double failure_ratio = 1e-6;
  // Error estimates below this absolute level never fail a panel; roundoff
  // in nearly cancelling integrands sits there.
  double absolute_floor = 1e-14;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  double l1 = 0.0;
};

// Adaptive Gauss-Kronrod over [a, b], split at the given breakpoints. Either
// end may be infinite. Throws a numerical error on non-convergence.
QuadratureResult IntegrateDetailed(const std::function<double(double)>& f,
                                   double a, double b,
                                   const QuadratureOptions& options = {},
                                   std::span<const double> breakpoints = {});

double Integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options = {},
                 std::span<const double> breakpoints = {});

}  // namespace contamdp

#endif  // CONTAMDP_ANALYSIS_QUADRATURE_H_
