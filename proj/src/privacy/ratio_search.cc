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

#include "contamdp/privacy/ratio_search.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "contamdp/core/golden_section.h"
#include "contamdp/error.h"
#include "contamdp/kernels/kernels.h"

namespace contamdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double L1Norm(CovariateRow w) {
  if (w.empty()) return 1.0;
  double s = 0.0;
  for (double v : w) s += std::abs(v);
  return s;
}

double ModelScale(const ContaminatedModel& model) {
  double s = model.base().sigma();
  if (model.p() > 0.0 &&
      model.contamination().kind() != ContaminationKind::kBernoulliHalf) {
    s = std::max(s, model.contamination().scale());
  }
  return s;
}

std::vector<double> Candidates(const ContaminatedModel& model,
                               const XRange& range, int points) {
  if (model.domain().discrete()) return {0.0, 1.0};
  std::vector<double> xs(points);
  const double step = (range.upper - range.lower) / (points - 1);
  for (int i = 0; i < points; ++i) xs[i] = range.lower + step * i;
  xs.back() = range.upper;
  return xs;
}

double LogG(const ContaminatedModel& model, double x, double loc) {
  if (model.p() == 0.0) return -kInf;
  return model.contamination().LogDensity(x, loc);
}

// Everything the inner search needs for one covariate row.
struct Row {
  const ContaminatedModel* model;
  PredictorState ref;
  double loc;
  std::vector<double> t_seeds;  // sorted, endpoints included
};

double LogRatio(const Row& row, double x, double t, double log_g) {
  const ContaminatedModel& m = *row.model;
  return m.LogMixture(x, m.base().At(t), log_g) -
         m.LogMixture(x, row.ref, log_g);
}

// max over the t interval of sign * log d(x; t).
double OptimizeT(const Row& row, double x, double sign, double* t_at) {
  const double log_g = LogG(*row.model, x, row.loc);
  auto f = [&](double t) {
    const double v = sign * LogRatio(row, x, t, log_g);
    return std::isnan(v) ? -kInf : v;
  };
  const auto& s = row.t_seeds;
  std::size_t best = 0;
  double best_v = -kInf;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double v = f(s[i]);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  const double a = s[best == 0 ? 0 : best - 1];
  const double b = s[std::min(best + 1, s.size() - 1)];
  ScalarOptimum opt{s[best], best_v};
  if (b > a) opt = GoldenSectionMaximize(f, a, b, opt);
  if (t_at) *t_at = opt.x;
  return opt.value;
}

struct XOptimum {
  double x = 0.0;
  double t = 0.0;
  double value = -kInf;
};

// max over x of sign * (extremum over t of log d), grid then golden.
XOptimum OptimizeX(const Row& row, const std::vector<double>& xs,
                   double sign, bool refine) {
  std::vector<double> values(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    values[i] = OptimizeT(row, xs[i], sign, nullptr);
  }
  const std::size_t k =
      std::max_element(values.begin(), values.end()) - values.begin();
  ScalarOptimum opt{xs[k], values[k]};
  if (refine && xs.size() > 2) {
    const double a = xs[k == 0 ? 0 : k - 1];
    const double b = xs[std::min(k + 1, xs.size() - 1)];
    opt = GoldenSectionMaximize(
        [&](double x) { return OptimizeT(row, x, sign, nullptr); }, a, b,
        opt, 40);
  }
  XOptimum out;
  out.x = opt.x;
  out.value = OptimizeT(row, opt.x, sign, &out.t);
  out.value = std::max(out.value, opt.value);
  return out;
}

bool Interior(const ContaminatedModel& model, const XRange& range, double x) {
  if (model.domain().type != ObservationDomain::Type::kReal) return true;
  return x > range.lower && x < range.upper;
}

void CheckEscalation(const ContaminatedModel& model, double log_value,
                     double limit) {
  if (model.p() > 0.0 && !(std::abs(log_value) <= limit)) {
    throw Error(ErrorKind::kNumerical,
                "likelihood ratio unbounded on the search domain (|log d| = " +
                    std::to_string(std::abs(log_value)) +
                    "); contamination rate too small for this domain");
  }
}

}  // namespace

CovariateDomain CovariateDomain::InterceptOnly() { return {{{}}}; }

CovariateDomain CovariateDomain::Corners(int dim) {
  if (dim < 1) throw Error(ErrorKind::kConfig, "dimension must be >= 1");
  if (dim > 21) throw Error(ErrorKind::kConfig, "too many covariate corners");
  CovariateDomain out;
  const int free = dim - 1;
  for (long mask = 0; mask < (1L << free); ++mask) {
    std::vector<double> w(dim, 1.0);
    for (int j = 0; j < free; ++j) w[j + 1] = (mask >> j) & 1 ? 1.0 : -1.0;
    out.rows.push_back(std::move(w));
  }
  return out;
}

XRange SearchRange(const ContaminatedModel& model, double t_min, double t_max,
                   const SearchOptions& options) {
  const ObservationDomain d = model.domain();
  if (d.type == ObservationDomain::Type::kBinary) return {0.0, 1.0};
  if (d.type == ObservationDomain::Type::kInterval) return {d.lower, d.upper};
  const double s = ModelScale(model);
  return {std::max(d.lower, t_min - options.widen * s),
          std::min(d.upper, t_max + options.widen * s)};
}

RatioBound EtaBound(const ContaminatedModel& model, const Vector& theta_ref,
                    const NeighbourhoodBox& box,
                    const CovariateDomain& covariates,
                    const SearchOptions& options) {
  if (box.center.size() != model.dim() || theta_ref.size() != model.dim()) {
    throw Error(ErrorKind::kConfig, "box and reference must match model dim");
  }
  if (!(box.half_width >= 0.0)) {
    throw Error(ErrorKind::kConfig, "box half-width must be nonnegative");
  }
  if (options.grid_points < 3) {
    throw Error(ErrorKind::kConfig, "grid_points must be at least 3");
  }
  RatioBound out;
  double log_sup = -kInf;
  double log_inf = kInf;
  Rng rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const auto& w_vec : covariates.rows) {
    const CovariateRow w(w_vec);
    const double c = LinearPredictor(w, box.center);
    const double half = box.half_width * L1Norm(w);
    Row row;
    row.model = &model;
    row.ref = model.base().At(LinearPredictor(w, theta_ref));
    row.loc = model.contamination().Location(w);
    row.t_seeds = {c - half, c, c + half};
    for (int i = 0; i < options.random_starts; ++i) {
      row.t_seeds.push_back(c - half + 2.0 * half * unit(rng));
    }
    std::sort(row.t_seeds.begin(), row.t_seeds.end());
    row.t_seeds.erase(std::unique(row.t_seeds.begin(), row.t_seeds.end()),
                      row.t_seeds.end());

    const double t_lo = std::min({c - half, row.ref.t, row.loc});
    const double t_hi = std::max({c + half, row.ref.t, row.loc});
    const XRange range = SearchRange(model, t_lo, t_hi, options);
    const auto xs = Candidates(model, range, options.grid_points);
    const bool refine = !model.domain().discrete();

    const XOptimum hi = OptimizeX(row, xs, 1.0, refine);
    const XOptimum lo = OptimizeX(row, xs, -1.0, refine);
    CheckEscalation(model, hi.value, options.escalation_log_ratio);
    CheckEscalation(model, lo.value, options.escalation_log_ratio);
    if (hi.value > log_sup) {
      log_sup = hi.value;
      out.sup_at = {hi.x, w_vec, hi.t};
      out.interior = out.interior && Interior(model, range, hi.x);
    }
    if (-lo.value < log_inf) {
      log_inf = -lo.value;
      out.inf_at = {lo.x, w_vec, lo.t};
      out.interior = out.interior && Interior(model, range, lo.x);
    }
  }
  if (covariates.rows.empty()) {
    throw Error(ErrorKind::kConfig, "covariate domain has no rows");
  }
  out.sup = std::exp(log_sup);
  out.inf = std::exp(log_inf);
  out.eta = std::exp(log_sup - log_inf);
  return out;
}

ExpectationBound ExpectationRatio(const ParticleCloud& cloud,
                                  const ContaminatedModel& model,
                                  const Vector& theta_ref,
                                  const CovariateDomain& covariates,
                                  const SearchOptions& options) {
  if (cloud.dim() != model.dim() || theta_ref.size() != model.dim()) {
    throw Error(ErrorKind::kConfig, "cloud and reference must match model dim");
  }
  if (covariates.rows.empty()) {
    throw Error(ErrorKind::kConfig, "covariate domain has no rows");
  }
  ExpectationBound out;
  double alpha = -kInf;
  double beta = kInf;
  const int m = cloud.size();
  std::vector<PredictorState> states(m);
  for (const auto& w_vec : covariates.rows) {
    const CovariateRow w(w_vec);
    double t_lo = kInf;
    double t_hi = -kInf;
    for (int i = 0; i < m; ++i) {
      const Vector theta = cloud.particles.row(i).transpose();
      states[i] = model.base().At(LinearPredictor(w, theta));
      t_lo = std::min(t_lo, states[i].t);
      t_hi = std::max(t_hi, states[i].t);
    }
    const PredictorState ref = model.base().At(LinearPredictor(w, theta_ref));
    const double loc = model.contamination().Location(w);
    t_lo = std::min({t_lo, ref.t, loc});
    t_hi = std::max({t_hi, ref.t, loc});
    const XRange range = SearchRange(model, t_lo, t_hi, options);
    const auto xs = Candidates(model, range, options.grid_points);

    auto sums_at = [&](std::span<const double> x) {
      std::vector<double> log_g(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        log_g[i] = LogG(model, x[i], loc);
      }
      return kernels::WeightedRatioSums(model, states, cloud.weights, ref, x,
                                        log_g);
    };
    auto single = [&](double x) { return sums_at({&x, 1})[0]; };

    const auto sums = sums_at(xs);
    const std::size_t k_hi =
        std::max_element(sums.begin(), sums.end()) - sums.begin();
    const std::size_t k_lo =
        std::min_element(sums.begin(), sums.end()) - sums.begin();
    ScalarOptimum hi{xs[k_hi], sums[k_hi]};
    ScalarOptimum lo{xs[k_lo], -sums[k_lo]};
    if (!model.domain().discrete()) {
      auto bracket = [&](std::size_t k) {
        return std::pair{xs[k == 0 ? 0 : k - 1],
                         xs[std::min(k + 1, xs.size() - 1)]};
      };
      auto [a1, b1] = bracket(k_hi);
      hi = GoldenSectionMaximize(single, a1, b1, hi, 40);
      auto [a2, b2] = bracket(k_lo);
      lo = GoldenSectionMaximize([&](double x) { return -single(x); }, a2, b2,
                                 lo, 40);
    }
    if (hi.value > alpha) {
      alpha = hi.value;
      out.alpha_at = {hi.x, w_vec, ref.t};
      out.interior = out.interior && Interior(model, range, hi.x);
    }
    if (-lo.value < beta) {
      beta = -lo.value;
      out.beta_at = {lo.x, w_vec, ref.t};
      out.interior = out.interior && Interior(model, range, lo.x);
    }
  }
  out.alpha = alpha;
  out.beta = beta;
  return out;
}

}  // namespace contamdp
