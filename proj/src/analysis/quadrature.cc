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

#include "contamdp/analysis/quadrature.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "contamdp/error.h"

namespace contamdp {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

QuadratureResult Panel(const std::function<double(double)>& f, double a,
                       double b, const QuadratureOptions& options) {
  QuadratureResult r;
  r.value = Rule::integrate(f, a, b, options.max_depth, options.tolerance,
                            &r.error, &r.l1);
  return r;
}

// [a, inf) or (-inf, b] through x = a + s tan(u) / x = b - s tan(u).
QuadratureResult TailPanel(const std::function<double(double)>& f,
                           double finite_end, double direction,
                           const QuadratureOptions& options) {
  const double s = options.tail_scale;
  auto g = [&](double u) {
    const double c = std::cos(u);
    const double x = finite_end + direction * s * std::tan(u);
    const double v = f(x);
    return v == 0.0 ? 0.0 : v * s / (c * c);
  };
  return Panel(g, 0.0, std::numbers::pi / 2.0, options);
}

}  // namespace

QuadratureResult IntegrateDetailed(const std::function<double(double)>& f,
                                   double a, double b,
                                   const QuadratureOptions& options,
                                   std::span<const double> breakpoints) {
  if (std::isnan(a) || std::isnan(b) || !(a <= b)) {
    throw Error(ErrorKind::kConfig, "integration bounds must satisfy a <= b");
  }
  if (!(options.tail_scale > 0.0)) {
    throw Error(ErrorKind::kConfig, "tail scale must be positive");
  }
  std::vector<double> cuts;
  for (double c : breakpoints) {
    if (std::isfinite(c) && c > a && c < b) cuts.push_back(c);
  }
  if (std::isinf(a) && std::isinf(b) && cuts.empty()) cuts.push_back(0.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> edges;
  edges.push_back(a);
  edges.insert(edges.end(), cuts.begin(), cuts.end());
  edges.push_back(b);

  QuadratureResult total;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double lo = edges[i];
    const double hi = edges[i + 1];
    if (lo == hi) continue;
    QuadratureResult r;
    if (std::isinf(lo)) {
      r = TailPanel(f, hi, -1.0, options);
    } else if (std::isinf(hi)) {
      r = TailPanel(f, lo, 1.0, options);
    } else {
      r = Panel(f, lo, hi, options);
    }
    if (!std::isfinite(r.value) ||
        r.error > std::max(options.failure_ratio * r.l1,
                           options.absolute_floor)) {
      throw Error(ErrorKind::kNumerical,
                  "quadrature did not converge on [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "], error estimate " +
                      std::to_string(r.error));
    }
    total.value += r.value;
    total.error += r.error;
    total.l1 += r.l1;
  }
  return total;
}

double Integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& options,
                 std::span<const double> breakpoints) {
  return IntegrateDetailed(f, a, b, options, breakpoints).value;
}

}  // namespace contamdp
