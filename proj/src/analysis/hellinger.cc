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

#include "contamdp/analysis/hellinger.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace contamdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::pair<double, double> Bounds(const ObservationDomain& domain) {
  if (domain.type == ObservationDomain::Type::kReal) return {-kInf, kInf};
  return {domain.lower, domain.upper};
}

}  // namespace

double HellingerSquared(const LogDensityFn& log_p, const LogDensityFn& log_q,
                        const ObservationDomain& domain,
                        const QuadratureOptions& options,
                        std::span<const double> breakpoints) {
  auto term = [&](double x) {
    const double a = std::exp(0.5 * log_p(x));
    const double b = std::exp(0.5 * log_q(x));
    return (a - b) * (a - b);
  };
  double h2 = 0.0;
  if (domain.discrete()) {
    h2 = 0.5 * (term(0.0) + term(1.0));
  } else {
    const auto [lo, hi] = Bounds(domain);
    h2 = 0.5 * Integrate(term, lo, hi, options, breakpoints);
  }
  return std::clamp(h2, 0.0, 1.0);
}

double HellingerSquared(const ContaminatedModel& model, CovariateRow w,
                        const Vector& theta1, const Vector& theta2,
                        const QuadratureOptions& options) {
  const double loc = model.contamination().Location(w);
  const PredictorState s1 = model.base().At(LinearPredictor(w, theta1));
  const PredictorState s2 = model.base().At(LinearPredictor(w, theta2));
  auto log_g = [&](double x) {
    return model.p() > 0.0 ? model.contamination().LogDensity(x, loc) : -kInf;
  };
  std::vector<double> cuts = {s1.t, s2.t};
  if (model.p() > 0.0) cuts.push_back(loc);
  QuadratureOptions opts = options;
  opts.tail_scale = model.base().sigma();
  return HellingerSquared(
      [&](double x) { return model.LogMixture(x, s1, log_g(x)); },
      [&](double x) { return model.LogMixture(x, s2, log_g(x)); },
      model.domain(), opts, cuts);
}

}  // namespace contamdp
