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

#ifndef CONTAMDP_CORE_MODELS_H_
#define CONTAMDP_CORE_MODELS_H_

#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include <Eigen/Core>

#include "contamdp/core/random.h"

namespace contamdp {

using Vector = Eigen::VectorXd;

// Covariate row of one observation. An empty row stands for the
// intercept-only design, in which the linear predictor is theta[0].
using CovariateRow = std::span<const double>;

double LinearPredictor(CovariateRow w, const Vector& theta);

// Where observations live. Every quadrature and every search over x reads
// this instead of hard-coding bounds.
struct ObservationDomain {
  enum class Type { kReal, kBinary, kInterval };

  // Numeric stand-in for the real line in quadrature and grid search.
  static constexpr double kRealBound = 1e6;

  Type type = Type::kReal;
  double lower = -kRealBound;
  double upper = kRealBound;

  static ObservationDomain Real();
  static ObservationDomain Binary();
  static ObservationDomain Interval(double lower, double upper);

  bool discrete() const { return type == Type::kBinary; }
  bool Contains(double x) const;
};

enum class ModelKind {
  kGaussianLinear,
  kLogistic,
  kCauchyRegression,
  kTruncatedNormalMean,
};

std::string_view ModelKindName(ModelKind kind);
ModelKind ParseModelKind(std::string_view name);

// Quantities of f(.; t) that depend on the linear predictor only. Computing
// them once per predictor keeps the per-observation loop free of erfc calls
// for the truncated model.
struct PredictorState {
  double t = 0.0;
  double log_norm = 0.0;   // log of the truncation mass (0 when untruncated)
  double dlog_norm = 0.0;  // d/dt of log_norm
};

// Base likelihood f(x; theta, w) = f(x; theta^T w).
class LikelihoodModel {
 public:
  static LikelihoodModel GaussianLinear(int dim, double sigma = 1.0);
  static LikelihoodModel Logistic(int dim);
  static LikelihoodModel CauchyRegression(int dim, double scale = 1.0);
  static LikelihoodModel TruncatedNormalMean(double sigma, double lower,
                                             double upper);

  ModelKind kind() const { return kind_; }
  int dim() const { return dim_; }
  double sigma() const { return sigma_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }
  bool uses_covariates() const {
    return kind_ != ModelKind::kTruncatedNormalMean;
  }
  ObservationDomain domain() const;

  PredictorState At(double t) const;
  double LogDensity(double x, const PredictorState& state) const;
  // d/dt log f(x; t).
  double Score(double x, const PredictorState& state) const;
  double LogDensity(double x, double t) const { return LogDensity(x, At(t)); }

  double Sample(double t, Rng& rng) const;

 private:
  LikelihoodModel(ModelKind kind, int dim, double sigma, double lower,
                  double upper);

  ModelKind kind_;
  int dim_;
  double sigma_;
  double lower_;
  double upper_;
};

enum class ContaminationKind {
  kStudentT,
  kTruncatedStudentT,
  kCauchy,
  kBernoulliHalf,
};

std::string_view ContaminationKindName(ContaminationKind kind);

// Contamination density g. Its location is either a global constant or the
// reference linear predictor theta*^T w of the observation being replaced.
class ContaminationDensity {
 public:
  static ContaminationDensity StudentT(double nu, double scale,
                                       Vector location_coefficients);
  static ContaminationDensity TruncatedStudentT(double nu, double scale,
                                                double location, double lower,
                                                double upper);
  static ContaminationDensity Cauchy(double scale,
                                     Vector location_coefficients);
  static ContaminationDensity BernoulliHalf();

  // Same shape, located at a fixed point regardless of covariates.
  ContaminationDensity WithGlobalLocation(double location) const;

  ContaminationKind kind() const { return kind_; }
  double nu() const { return nu_; }
  double scale() const { return scale_; }
  bool covariate_located() const { return covariate_located_; }
  double global_location() const { return location_; }
  const Vector& location_coefficients() const { return coefficients_; }
  double lower() const { return lower_; }
  double upper() const { return upper_; }

  double Location(CovariateRow w) const;
  double LogDensity(double x, double location) const;
  double LogDensity(double x, CovariateRow w) const {
    return LogDensity(x, Location(w));
  }
  double Sample(double location, Rng& rng) const;

 private:
  ContaminationDensity() = default;
  double LogTruncationMass(double location) const;

  ContaminationKind kind_ = ContaminationKind::kBernoulliHalf;
  double nu_ = 0.0;
  double scale_ = 1.0;
  bool covariate_located_ = false;
  double location_ = 0.0;
  Vector coefficients_;
  double lower_ = 0.0;
  double upper_ = 0.0;
  double log_mass_at_location_ = 0.0;
};

// k_p(x; theta, w) = (1 - p) f(x; theta, w) + p g(x; w).
class ContaminatedModel {
 public:
  ContaminatedModel(LikelihoodModel base, ContaminationDensity contamination,
                    double p);

  const LikelihoodModel& base() const { return base_; }
  const ContaminationDensity& contamination() const { return contamination_; }
  double p() const { return p_; }
  int dim() const { return base_.dim(); }
  ObservationDomain domain() const { return base_.domain(); }

  ContaminatedModel WithRate(double p) const;

  // Checked evaluation; throws a domain error when x is outside the
  // observation domain.
  double LogDensity(double x, CovariateRow w, const Vector& theta) const;
  double LikelihoodRatio(double x, CovariateRow w, const Vector& theta,
                         const Vector& theta_ref) const;
  Vector GradLogDensity(double x, CovariateRow w, const Vector& theta) const;

  // Unchecked hot-path forms taking the predictor state and log g(x).
  double LogMixture(double x, const PredictorState& state,
                    double log_g) const {
    if (p_ == 0.0) return base_.LogDensity(x, state);
    if (p_ == 1.0) return log_g;
    const double a = log1m_p_ + base_.LogDensity(x, state);
    const double b = log_p_ + log_g;
    return LogAddExp(a, b);
  }
  // d/dt log k_p(x; t).
  double ScoreMixture(double x, const PredictorState& state,
                      double log_g) const;

  static double LogAddExp(double a, double b) {
    if (a < b) std::swap(a, b);
    if (b == -std::numeric_limits<double>::infinity()) return a;
    return a + std::log1p(std::exp(b - a));
  }

 private:
  LikelihoodModel base_;
  ContaminationDensity contamination_;
  double p_;
  double log_p_;
  double log1m_p_;
};

}  // namespace contamdp

#endif  // CONTAMDP_CORE_MODELS_H_
