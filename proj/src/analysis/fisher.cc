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

#include "contamdp/analysis/fisher.h"

#include <cmath>
#include <limits>

#include "contamdp/error.h"

namespace contamdp {

Eigen::MatrixXd FisherInformation(const ContaminatedModel& model,
                                  const Vector& theta, CovariateRow w,
                                  const QuadratureOptions& options) {
  if (theta.size() != model.dim()) {
    throw Error(ErrorKind::kConfig, "theta does not match model dimension");
  }
  if (!w.empty() && static_cast<int>(w.size()) != model.dim()) {
    throw Error(ErrorKind::kConfig, "covariate row does not match dimension");
  }
  const PredictorState state = model.base().At(LinearPredictor(w, theta));
  const double loc = model.contamination().Location(w);
  auto integrand = [&](double x) {
    const double log_g =
        model.p() > 0.0 ? model.contamination().LogDensity(x, loc)
                        : -std::numeric_limits<double>::infinity();
    const double log_k = model.LogMixture(x, state, log_g);
    if (log_k == -std::numeric_limits<double>::infinity()) return 0.0;
    const double s = model.ScoreMixture(x, state, log_g);
    return s * s * std::exp(log_k);
  };

  double info = 0.0;
  const ObservationDomain domain = model.domain();
  if (domain.discrete()) {
    info = integrand(0.0) + integrand(1.0);
  } else {
    QuadratureOptions opts = options;
    opts.tail_scale = model.base().sigma();
    const double cuts[] = {state.t, loc};
    const double inf = std::numeric_limits<double>::infinity();
    const double lo =
        domain.type == ObservationDomain::Type::kReal ? -inf : domain.lower;
    const double hi =
        domain.type == ObservationDomain::Type::kReal ? inf : domain.upper;
    info = Integrate(integrand, lo, hi, opts, cuts);
  }

  const int d = model.dim();
  Vector wv = Vector::Zero(d);
  if (w.empty()) {
    wv[0] = 1.0;
  } else {
    for (int j = 0; j < d; ++j) wv[j] = w[j];
  }
  return info * wv * wv.transpose();
}

std::vector<FisherGap> FisherGaps(const ContaminatedModel& model,
                                  const Vector& theta,
                                  std::span<const double> rates,
                                  CovariateRow w,
                                  const QuadratureOptions& options) {
  if (rates.empty()) throw Error(ErrorKind::kConfig, "empty p grid");
  const Eigen::MatrixXd base =
      FisherInformation(model.WithRate(0.0), theta, w, options);
  std::vector<FisherGap> out;
  for (double p : rates) {
    const Eigen::MatrixXd info =
        FisherInformation(model.WithRate(p), theta, w, options);
    out.push_back({p, (info - base).cwiseAbs().maxCoeff()});
  }
  return out;
}

}  // namespace contamdp
