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

#include "contamdp/privacy/decomposition.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "contamdp/core/dataset.h"
#include "contamdp/core/golden_section.h"
#include "contamdp/error.h"
#include "contamdp/privacy/ratio_search.h"

namespace contamdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log of prod_i d(x_i; theta) pi_0(theta) for one dataset, shifted by a
// constant shared by X and Z.
class MassIntegrand {
 public:
  MassIntegrand(const ContaminatedModel& model, const GaussianPrior& prior,
                const Dataset& data, double theta_star)
      : model_(model), prior_(prior) {
    const PredictorState ref = model.base().At(theta_star);
    for (int i = 0; i < data.size(); ++i) {
      const double x = data.observation(i);
      const double lg =
          model.p() > 0.0 ? model.contamination().LogDensity(x, data.row(i))
                          : -kInf;
      x_.push_back(x);
      log_g_.push_back(lg);
      ref_.push_back(model.LogMixture(x, ref, lg));
    }
  }

  double Log(double theta) const {
    const PredictorState s = model_.base().At(theta);
    double total = prior_.LogDensity(Vector::Constant(1, theta));
    for (std::size_t i = 0; i < x_.size(); ++i) {
      total += model_.LogMixture(x_[i], s, log_g_[i]) - ref_[i];
    }
    return total;
  }

 private:
  const ContaminatedModel& model_;
  const GaussianPrior& prior_;
  std::vector<double> x_;
  std::vector<double> log_g_;
  std::vector<double> ref_;
};

double LogD(const ContaminatedModel& model, double x, double theta,
            double theta_star, double log_g) {
  return model.LogMixture(x, model.base().At(theta), log_g) -
         model.LogMixture(x, model.base().At(theta_star), log_g);
}

}  // namespace

DecompositionReport VerifyDecomposition(const ContaminatedModel& model,
                                        const GaussianPrior& prior,
                                        double theta_star,
                                        const DecompositionOptions& options) {
  if (model.dim() != 1 || prior.dim() != 1) {
    throw Error(ErrorKind::kConfig, "decomposition check needs dimension 1");
  }
  if (options.n < 2 || options.n > 50) {
    throw Error(ErrorKind::kConfig, "decomposition check needs 2 <= n <= 50");
  }
  if (options.trials < 1 || options.sets < 1 || options.theta_grid < 2 ||
      options.x_grid < 3 || !(options.phi_min > 0.0) ||
      !(options.phi_max >= options.phi_min)) {
    throw Error(ErrorKind::kConfig, "invalid decomposition options");
  }
  const Vector star = Vector::Constant(1, theta_star);
  const double prior_mean = prior.mean()[0];
  const double prior_sd = prior.sd()[0];

  DecompositionReport report;
  report.trials.resize(options.trials);
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed =
        DeriveSeed(options.seed, {static_cast<std::uint64_t>(trial)});
    DecompositionTrial& out = report.trials[trial];
    out.trial = trial;
    out.seed = seed;
    try {
      Rng rng(DeriveSeed(seed, {0}));
      const Dataset clean = SampleDataset(model.base(), star, std::nullopt,
                                          options.n, DeriveSeed(seed, {1}));
      const Dataset x_data = Contaminate(clean, model, DeriveSeed(seed, {2}));
      const int last = options.n - 1;
      const CovariateRow w_last = x_data.row(last);
      const double loc = model.contamination().Location(w_last);
      // Fresh draw from k_p for the replaced entry.
      double z;
      {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        z = unit(rng) < model.p()
                ? model.contamination().Sample(loc, rng)
                : model.base().Sample(theta_star, rng);
      }
      const Dataset z_data = x_data.WithReplaced(last, z);
      const double x_last = x_data.observation(last);

      std::uniform_real_distribution<double> phi_dist(options.phi_min,
                                                      options.phi_max);
      const double phi = phi_dist(rng);
      out.phi = phi;
      const double a_lo = theta_star - phi;
      const double a_hi = theta_star + phi;

      // eta = sup over theta in A of max_x log d(x; theta) - min_z log d(z;
      // theta), on a grid that contains the two differing observations.
      const XRange range = SearchRange(model, a_lo, a_hi, SearchOptions{});
      std::vector<double> xs;
      if (model.domain().discrete()) {
        xs = {0.0, 1.0};
      } else {
        const double step = (range.upper - range.lower) / (options.x_grid - 1);
        for (int i = 0; i < options.x_grid; ++i) {
          xs.push_back(range.lower + step * i);
        }
        xs.push_back(x_last);
        xs.push_back(z);
      }
      std::vector<double> log_g(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i) {
        log_g[i] = model.p() > 0.0
                       ? model.contamination().LogDensity(xs[i], loc)
                       : -kInf;
      }
      auto spread = [&](double theta) {
        double hi = -kInf, lo = kInf;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          const double v = LogD(model, xs[i], theta, theta_star, log_g[i]);
          hi = std::max(hi, v);
          lo = std::min(lo, v);
        }
        return hi - lo;
      };
      double log_eta = 0.0;
      double best_theta = theta_star;
      for (int j = 0; j < options.theta_grid; ++j) {
        const double theta =
            a_lo + (a_hi - a_lo) * j / (options.theta_grid - 1);
        const double v = spread(theta);
        if (v > log_eta) {
          log_eta = v;
          best_theta = theta;
        }
      }
      const double cell = (a_hi - a_lo) / (options.theta_grid - 1);
      log_eta = GoldenSectionMaximize(
                    spread, std::max(a_lo, best_theta - cell),
                    std::min(a_hi, best_theta + cell), {best_theta, log_eta},
                    30)
                    .value;
      const double eta = std::exp(log_eta);
      out.eta = eta;

      // Masses. The shift is the X log-integrand maximum over a grid.
      const MassIntegrand fx(model, prior, x_data, theta_star);
      const MassIntegrand fz(model, prior, z_data, theta_star);
      double shift = -kInf;
      double mode = theta_star;
      const double span_lo = prior_mean - 6.0 * prior_sd;
      const double span_hi = prior_mean + 6.0 * prior_sd;
      for (int j = 0; j <= 4000; ++j) {
        const double t = span_lo + (span_hi - span_lo) * j / 4000.0;
        const double v = fx.Log(t);
        if (v > shift) {
          shift = v;
          mode = t;
        }
      }
      auto ux = [&](double t) { return std::exp(fx.Log(t) - shift); };
      auto uz = [&](double t) { return std::exp(fz.Log(t) - shift); };
      std::vector<double> cuts = {mode - 2.0, mode - 1.0, mode - 0.5, mode,
                                  mode + 0.5, mode + 1.0, mode + 2.0,
                                  a_lo,       a_hi,       theta_star};
      auto mass = [&](const auto& f, double lo, double hi) {
        return Integrate(f, lo, hi, options.quadrature, cuts);
      };
      const double omega_x = mass(ux, -kInf, kInf);
      const double omega_z = mass(uz, -kInf, kInf);
      const double out_x = mass(ux, -kInf, a_lo) + mass(ux, a_hi, kInf);
      const double out_z = mass(uz, -kInf, a_lo) + mass(uz, a_hi, kInf);
      if (!(omega_x > 0.0) || !(omega_z > 0.0)) {
        throw Error(ErrorKind::kNumerical, "posterior mass underflow");
      }

      std::uniform_real_distribution<double> ends(mode - 3.0, mode + 3.0);
      out.worst_gap = -kInf;
      for (int s = 0; s < options.sets; ++s) {
        double lo = ends(rng);
        double hi = ends(rng);
        if (lo > hi) std::swap(lo, hi);
        const double px = mass(ux, lo, hi) / omega_x;
        const double pz = mass(uz, lo, hi) / omega_z;
        const double rhs =
            eta * (eta + out_z / omega_x) * pz + out_x / omega_x;
        const double gap = px - rhs;
        out.worst_gap = std::max(out.worst_gap, gap);
        if (gap > options.slack) ++out.violations;
      }
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " (trial " +
                                std::to_string(trial) + ", seed " +
                                std::to_string(seed) + ")");
    }
    report.violations += out.violations;
  }
  return report;
}

}  // namespace contamdp
