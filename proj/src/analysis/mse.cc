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

#include "contamdp/analysis/mse.h"

#include "contamdp/error.h"

namespace contamdp {

MseStats ComputeMseStats(std::span<const double> estimates, double truth) {
  if (estimates.size() < 2) {
    throw Error(ErrorKind::kConfig, "need at least two estimates");
  }
  const double m = static_cast<double>(estimates.size());
  double mean = 0.0;
  for (double e : estimates) mean += e;
  mean /= m;
  double ss = 0.0;
  for (double e : estimates) ss += (e - mean) * (e - mean);
  MseStats s;
  s.bias = mean - truth;
  s.variance = ss / (m - 1.0);
  s.mse = s.bias * s.bias + s.variance * (m - 1.0) / m;
  return s;
}

}  // namespace contamdp
