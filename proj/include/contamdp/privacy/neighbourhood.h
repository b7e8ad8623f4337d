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

#ifndef CONTAMDP_PRIVACY_NEIGHBOURHOOD_H_
#define CONTAMDP_PRIVACY_NEIGHBOURHOOD_H_

#include "contamdp/core/models.h"
#include "contamdp/inference/particles.h"

namespace contamdp {

// L-infinity hypercube prod_j [center_j - half_width, center_j + half_width].
struct NeighbourhoodBox {
  Vector center;
  double half_width = 0.0;

  bool Contains(const Vector& theta) const;
};

struct PhiChoice {
  double phi = 0.0;
  double tail_weight = 0.0;  // realised weight strictly outside the box
};

// Smallest particle distance r from `center` such that the total weight of
// particles farther than r is at most delta.
PhiChoice ChoosePhi(const ParticleCloud& cloud, const Vector& center,
                    double delta);

}  // namespace contamdp

#endif  // CONTAMDP_PRIVACY_NEIGHBOURHOOD_H_
