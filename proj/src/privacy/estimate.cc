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

#include "contamdp/privacy/estimate.h"

#include <algorithm>
#include <cmath>
#include <exception>

#include "contamdp/error.h"
#include "contamdp/inference/laplace.h"
#include "contamdp/inference/particles.h"
#include "contamdp/inference/posterior.h"
#include "contamdp/privacy/neighbourhood.h"

namespace contamdp {
namespace {

bool RecoverableInRepeat(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSampler:
    case ErrorKind::kNonConvergence:
    case ErrorKind::kCurvature:
    case ErrorKind::kDegeneracy:
      return true;
    default:
      return false;
  }
}

}  // namespace

CovariateDomain EpsilonSetup::Covariates() const {
  if (!model.base().uses_covariates()) return CovariateDomain::InterceptOnly();
  return CovariateDomain::Corners(model.dim());
}

void EpsilonSetup::Validate() const {
  if (n < 2) throw Error(ErrorKind::kConfig, "n must be at least 2");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorKind::kConfig, "delta must lie in (0, 1)");
  }
  if (particles < 100) {
    throw Error(ErrorKind::kConfig, "need at least 100 particles");
  }
  if (theta_star.size() != model.dim() || prior.dim() != model.dim()) {
    throw Error(ErrorKind::kConfig,
                "theta* and prior must match the model dimension");
  }
}

std::vector<double> EpsilonEstimate::ValidEpsilons() const {
  std::vector<double> out;
  for (const auto& r : repeats) {
    if (r.valid) out.push_back(r.epsilon);
  }
  return out;
}

double NearestRankPercentile(std::vector<double> values, double q) {
  if (values.empty()) {
    throw Error(ErrorKind::kConfig, "percentile of an empty sample");
  }
  if (!(q > 0.0 && q <= 100.0)) {
    throw Error(ErrorKind::kConfig, "percentile level must lie in (0, 100]");
  }
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  long rank = static_cast<long>(std::ceil(q * n / 100.0 - 1e-9));
  rank = std::clamp(rank, 1L, static_cast<long>(values.size()));
  return values[rank - 1];
}

RepeatResult EstimateEpsilonOnce(const EpsilonSetup& setup, std::uint64_t seed,
                                 const Dataset* data) {
  setup.Validate();
  RepeatResult out;
  out.seed = seed;
  const ContaminatedModel& model = setup.model;
  try {
    Dataset observed;
    if (data) {
      observed = *data;
    } else {
      const Dataset clean =
          SampleDataset(model.base(), setup.theta_star, std::nullopt, setup.n,
                        DeriveSeed(seed, {1}));
      std::vector<std::uint8_t> mask;
      observed = Contaminate(clean, model, DeriveSeed(seed, {2}), &mask);
      for (auto b : mask) out.contaminated += b;
    }
    if (observed.size() < 2) {
      throw Error(ErrorKind::kConfig, "need at least two observations");
    }

    const PosteriorTarget target(model, setup.prior, observed);
    const Vector init = setup.map_init.value_or(setup.prior.mean());
    const MapResult map = MapEstimate(target, init, setup.map);
    out.map = map.theta;
    const LaplaceApproximation approx =
        ComputeLaplaceApproximation(target, map.theta);
    const ParticleCloud cloud = ImportanceSample(
        target, approx, setup.particles, DeriveSeed(seed, {3}),
        setup.ess_floor);
    out.ess = cloud.ess;
    if (cloud.degenerate) {
      throw Error(ErrorKind::kDegeneracy, "pi_n particle cloud degenerate");
    }

    const Vector center = setup.center_at_truth ? setup.theta_star : map.theta;
    const PhiChoice phi = ChoosePhi(cloud, center, setup.delta);
    out.phi = phi.phi;
    out.delta_hat = phi.tail_weight;

    SearchOptions search = setup.search;
    search.seed = DeriveSeed(seed, {4});
    const CovariateDomain covariates = setup.Covariates();
    const RatioBound eta =
        EtaBound(model, center, {center, phi.phi}, covariates, search);
    out.eta = eta.eta;

    const int last = observed.size() - 1;
    const ParticleCloud dropped =
        ReweightDropLast(cloud, model, observed.observation(last),
                         observed.row(last), setup.ess_floor);
    out.ess_drop_last = dropped.ess;
    if (dropped.degenerate) {
      throw Error(ErrorKind::kDegeneracy, "pi_{n-1} particle cloud degenerate");
    }
    const ExpectationBound ratio =
        ExpectationRatio(dropped, model, center, covariates, search);
    out.alpha = ratio.alpha;
    out.beta = ratio.beta;
    out.interior = eta.interior && ratio.interior;

    out.epsilon =
        std::log(eta.eta) + std::log(ratio.alpha) - std::log(ratio.beta);
    if (!std::isfinite(out.epsilon)) {
      throw Error(ErrorKind::kNumerical, "non-finite epsilon estimate");
    }
    out.valid = true;
  } catch (const Error& e) {
    if (!RecoverableInRepeat(e.kind())) throw;
    out.valid = false;
    out.status = std::string(ErrorKindName(e.kind())) + ": " + e.what();
  }
  return out;
}

EpsilonEstimate EstimateEpsilon(const EpsilonSetup& setup, int repeats,
                                double q, std::uint64_t master_seed) {
  setup.Validate();
  if (repeats < 10) throw Error(ErrorKind::kConfig, "need K >= 10 repeats");
  if (!(q > 0.0 && q < 100.0)) {
    throw Error(ErrorKind::kConfig, "percentile level must lie in (0, 100)");
  }
  EpsilonEstimate est;
  est.n = setup.n;
  est.p = setup.model.p();
  est.delta = setup.delta;
  est.q = q;
  est.repeats.resize(repeats);

  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < repeats; ++k) {
    try {
      est.repeats[k] = EstimateEpsilonOnce(
          setup, DeriveSeed(master_seed, {static_cast<std::uint64_t>(k)}));
    } catch (...) {
#pragma omp critical(contamdp_estimate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> phis;
  for (const auto& r : est.repeats) {
    if (r.valid) {
      ++est.valid;
      phis.push_back(r.phi);
    } else {
      ++est.invalid;
    }
  }
  if (est.invalid * 10 > repeats) {
    throw Error(ErrorKind::kBatchQuality,
                std::to_string(est.invalid) + " of " + std::to_string(repeats) +
                    " repeats invalid at n = " + std::to_string(setup.n));
  }
  est.epsilon = NearestRankPercentile(est.ValidEpsilons(), q);
  est.phi_median = NearestRankPercentile(phis, 50.0);
  return est;
}

}  // namespace contamdp
