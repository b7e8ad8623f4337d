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

#include "contamdp/analysis/decay_fit.h"

#include <cmath>

#include "contamdp/error.h"

namespace contamdp {

double DecayFit::Extrapolate(double n_target) const {
  if (!(n_target > 0.0)) {
    throw Error(ErrorKind::kDomain, "extrapolation target must be positive");
  }
  return std::exp(intercept + slope * std::log(n_target));
}

DecayFit FitDecay(std::span<const double> n, std::span<const double> epsilon) {
  if (n.size() != epsilon.size()) {
    throw Error(ErrorKind::kConfig, "n and epsilon lengths differ");
  }
  if (n.size() < 3) throw Error(ErrorKind::kConfig, "need at least 3 pairs");
  const std::size_t k = n.size();
  std::vector<double> lx(k), ly(k);
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    if (!(n[i] > 0.0) || !(epsilon[i] > 0.0)) {
      throw Error(ErrorKind::kDomain, "decay fit needs positive n and epsilon");
    }
    lx[i] = std::log(n[i]);
    ly[i] = std::log(epsilon[i]);
    mx += lx[i];
    my += ly[i];
  }
  mx /= k;
  my /= k;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (!(sxx > 0.0)) {
    throw Error(ErrorKind::kDomain, "decay fit needs distinct sample sizes");
  }
  DecayFit fit;
  fit.n.assign(n.begin(), n.end());
  fit.epsilon.assign(epsilon.begin(), epsilon.end());
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = ly[i] - (fit.intercept + fit.slope * lx[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / k);
  return fit;
}

}  // namespace contamdp
