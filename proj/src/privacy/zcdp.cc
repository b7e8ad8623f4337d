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

#include "contamdp/privacy/zcdp.h"

#include <cmath>

#include "contamdp/error.h"

namespace contamdp {
namespace {

void CheckDelta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::kDomain, "delta must lie in (0, 1)");
  }
}

}  // namespace

ZcdpBudget ZcdpFromDp(const PrivacyBudget& budget) {
  CheckDelta(budget.delta);
  if (!(budget.epsilon > 0.0)) {
    throw Error(ErrorKind::kDomain, "epsilon must be positive");
  }
  return {budget.epsilon * budget.epsilon /
          (2.0 * std::log(1.0 / budget.delta))};
}

PrivacyBudget DpFromZcdp(const ZcdpBudget& rho, double delta) {
  CheckDelta(delta);
  if (!(rho.rho >= 0.0)) throw Error(ErrorKind::kDomain, "rho must be >= 0");
  return {std::sqrt(2.0 * rho.rho * std::log(1.0 / delta)), delta};
}

}  // namespace contamdp
