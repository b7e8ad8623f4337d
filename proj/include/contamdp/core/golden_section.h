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

#ifndef CONTAMDP_CORE_GOLDEN_SECTION_H_
#define CONTAMDP_CORE_GOLDEN_SECTION_H_

#include <cmath>

namespace contamdp {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
};

// Golden-section search for the maximum of a unimodal f on [a, b]. Returns
// the best point evaluated, never worse than `incumbent` (pass the value of
// the grid point that seeded the bracket).
template <typename F>
ScalarOptimum GoldenSectionMaximize(F&& f, double a, double b,
                                    ScalarOptimum incumbent,
                                    int iterations = 48) {
  constexpr double kInvPhi = 0.61803398874989484820;
  ScalarOptimum best = incumbent;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < iterations && b - a > 1e-12 * (1.0 + std::abs(a));
       ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc > best.value) best = {c, fc};
  if (fd > best.value) best = {d, fd};
  return best;
}

}  // namespace contamdp

#endif  // CONTAMDP_CORE_GOLDEN_SECTION_H_
