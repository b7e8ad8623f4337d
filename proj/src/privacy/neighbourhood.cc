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

#include "contamdp/privacy/neighbourhood.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "contamdp/error.h"

namespace contamdp {

bool NeighbourhoodBox::Contains(const Vector& theta) const {
  return (theta - center).lpNorm<Eigen::Infinity>() <= half_width;
}

PhiChoice ChoosePhi(const ParticleCloud& cloud, const Vector& center,
                    double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::kConfig, "delta must lie in (0, 1)");
  }
  const int m = cloud.size();
  std::vector<double> distance(m);
  for (int i = 0; i < m; ++i) {
    distance[i] =
        (cloud.particles.row(i).transpose() - center).lpNorm<Eigen::Infinity>();
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return distance[a] > distance[b]; });

  // Walk outward-in one distance level at a time so tied particles stay on
  // the same side of the boundary.
  double tail = 0.0;
  int k = 0;
  while (k < m) {
    const double level = distance[order[k]];
    if (level == 0.0) break;
    double level_weight = 0.0;
    int j = k;
    while (j < m && distance[order[j]] == level) {
      level_weight += cloud.weights[order[j]];
      ++j;
    }
    if (tail + level_weight > delta) return {level, tail};
    tail += level_weight;
    k = j;
  }
  return {0.0, tail};
}

}  // namespace contamdp
