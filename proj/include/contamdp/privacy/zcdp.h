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

#ifndef CONTAMDP_PRIVACY_ZCDP_H_
#define CONTAMDP_PRIVACY_ZCDP_H_

namespace contamdp {

struct PrivacyBudget {
  double epsilon = 0.0;
  double delta = 0.0;
};

struct ZcdpBudget {
  double rho = 0.0;
};

// rho = epsilon^2 / (2 log(1/delta)): the rho-zCDP budget that implies
// (epsilon, delta)-DP.
ZcdpBudget ZcdpFromDp(const PrivacyBudget& budget);

// epsilon = sqrt(2 rho log(1/delta)).
PrivacyBudget DpFromZcdp(const ZcdpBudget& rho, double delta);

}  // namespace contamdp

#endif  // CONTAMDP_PRIVACY_ZCDP_H_
