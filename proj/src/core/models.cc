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

#include "contamdp/core/models.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <boost/math/distributions/students_t.hpp>

#include "contamdp/error.h"

namespace contamdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr int kRejectionCap = 10000;

double Softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

// log Q(z) = log P(Z > z). The continued fraction for the Mills ratio takes
// over where erfc underflows.
double LogUpperTail(double z) {
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  if (z < 30.0) return std::log(0.5 * std::erfc(z * kInvSqrt2));
  double f = z;
  for (int k = 60; k >= 1; --k) f = z + k / f;
  return -0.5 * z * z - kLogSqrt2Pi - std::log(f);
}

// log(Phi(b) - Phi(a)) for a < b, choosing the tail that avoids cancellation.
double LogNormalMass(double a, double b) {
  if (a >= 0.0) {
    const double la = LogUpperTail(a);
    return la + std::log1p(-std::exp(LogUpperTail(b) - la));
  }
  if (b <= 0.0) {
    const double lb = LogUpperTail(-b);
    return lb + std::log1p(-std::exp(LogUpperTail(-a) - lb));
  }
  const double outside =
      std::exp(LogUpperTail(-a)) + std::exp(LogUpperTail(b));
  return std::log1p(-outside);
}

double StudentTLogConstant(double nu, double scale) {
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(nu * std::numbers::pi) - std::log(scale);
}

}  // namespace

double LinearPredictor(CovariateRow w, const Vector& theta) {
  if (w.empty()) return theta[0];
  double t = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) t += w[j] * theta[j];
  return t;
}

ObservationDomain ObservationDomain::Real() { return {}; }

ObservationDomain ObservationDomain::Binary() {
  return {Type::kBinary, 0.0, 1.0};
}

ObservationDomain ObservationDomain::Interval(double lower, double upper) {
  return {Type::kInterval, lower, upper};
}

bool ObservationDomain::Contains(double x) const {
  switch (type) {
    case Type::kReal:
      return std::isfinite(x);
    case Type::kBinary:
      return x == 0.0 || x == 1.0;
    case Type::kInterval:
      return x >= lower && x <= upper;
  }
  return false;
}

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kGaussianLinear:
      return "gaussian-linear";
    case ModelKind::kLogistic:
      return "logistic";
    case ModelKind::kCauchyRegression:
      return "cauchy-regression";
    case ModelKind::kTruncatedNormalMean:
      return "truncated-normal-mean";
  }
  return "unknown";
}

ModelKind ParseModelKind(std::string_view name) {
  if (name == "gaussian-linear" || name == "linear") {
    return ModelKind::kGaussianLinear;
  }
  if (name == "logistic") return ModelKind::kLogistic;
  if (name == "cauchy-regression" || name == "cauchy") {
    return ModelKind::kCauchyRegression;
  }
  if (name == "truncated-normal-mean") return ModelKind::kTruncatedNormalMean;
  throw Error(ErrorKind::kConfig,
              "unknown model kind '" + std::string(name) + "'");
}

std::string_view ContaminationKindName(ContaminationKind kind) {
  switch (kind) {
    case ContaminationKind::kStudentT:
      return "student-t";
    case ContaminationKind::kTruncatedStudentT:
      return "truncated-student-t";
    case ContaminationKind::kCauchy:
      return "cauchy-scale";
    case ContaminationKind::kBernoulliHalf:
      return "bernoulli-half";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// LikelihoodModel

LikelihoodModel::LikelihoodModel(ModelKind kind, int dim, double sigma,
                                 double lower, double upper)
    : kind_(kind), dim_(dim), sigma_(sigma), lower_(lower), upper_(upper) {
  if (dim < 1) throw Error(ErrorKind::kConfig, "model dimension must be >= 1");
  if (!(sigma > 0.0)) {
    throw Error(ErrorKind::kConfig, "model scale must be positive");
  }
  if (!(lower < upper)) {
    throw Error(ErrorKind::kConfig, "truncation bounds require lower < upper");
  }
}

LikelihoodModel LikelihoodModel::GaussianLinear(int dim, double sigma) {
  return LikelihoodModel(ModelKind::kGaussianLinear, dim, sigma,
                         -ObservationDomain::kRealBound,
                         ObservationDomain::kRealBound);
}

LikelihoodModel LikelihoodModel::Logistic(int dim) {
  return LikelihoodModel(ModelKind::kLogistic, dim, 1.0, 0.0, 1.0);
}

LikelihoodModel LikelihoodModel::CauchyRegression(int dim, double scale) {
  return LikelihoodModel(ModelKind::kCauchyRegression, dim, scale,
                         -ObservationDomain::kRealBound,
                         ObservationDomain::kRealBound);
}

LikelihoodModel LikelihoodModel::TruncatedNormalMean(double sigma,
                                                     double lower,
                                                     double upper) {
  return LikelihoodModel(ModelKind::kTruncatedNormalMean, 1, sigma, lower,
                         upper);
}

ObservationDomain LikelihoodModel::domain() const {
  switch (kind_) {
    case ModelKind::kLogistic:
      return ObservationDomain::Binary();
    case ModelKind::kTruncatedNormalMean:
      return ObservationDomain::Interval(lower_, upper_);
    default:
      return ObservationDomain::Real();
  }
}

PredictorState LikelihoodModel::At(double t) const {
  PredictorState state;
  state.t = t;
  if (kind_ == ModelKind::kTruncatedNormalMean) {
    const double a = (lower_ - t) / sigma_;
    const double b = (upper_ - t) / sigma_;
    state.log_norm = LogNormalMass(a, b);
    // Ratios taken in log space so far tails do not give 0 / 0.
    const double log_pdf_a = -0.5 * a * a - kLogSqrt2Pi;
    const double log_pdf_b = -0.5 * b * b - kLogSqrt2Pi;
    state.dlog_norm = (std::exp(log_pdf_a - state.log_norm) -
                       std::exp(log_pdf_b - state.log_norm)) /
                      sigma_;
  }
  return state;
}

double LikelihoodModel::LogDensity(double x, const PredictorState& s) const {
  switch (kind_) {
    case ModelKind::kGaussianLinear: {
      const double z = (x - s.t) / sigma_;
      return -0.5 * z * z - std::log(sigma_) - kLogSqrt2Pi;
    }
    case ModelKind::kLogistic:
      return x == 1.0 ? -Softplus(-s.t) : -Softplus(s.t);
    case ModelKind::kCauchyRegression: {
      const double z = (x - s.t) / sigma_;
      return -std::log(std::numbers::pi * sigma_) - std::log1p(z * z);
    }
    case ModelKind::kTruncatedNormalMean: {
      if (x < lower_ || x > upper_) return -kInf;
      const double z = (x - s.t) / sigma_;
      return -0.5 * z * z - std::log(sigma_) - kLogSqrt2Pi - s.log_norm;
    }
  }
  return -kInf;
}

double LikelihoodModel::Score(double x, const PredictorState& s) const {
  switch (kind_) {
    case ModelKind::kGaussianLinear:
      return (x - s.t) / (sigma_ * sigma_);
    case ModelKind::kLogistic:
      return x - 1.0 / (1.0 + std::exp(-s.t));
    case ModelKind::kCauchyRegression: {
      const double r = x - s.t;
      return 2.0 * r / (sigma_ * sigma_ + r * r);
    }
    case ModelKind::kTruncatedNormalMean:
      return (x - s.t) / (sigma_ * sigma_) - s.dlog_norm;
  }
  return 0.0;
}

double LikelihoodModel::Sample(double t, Rng& rng) const {
  switch (kind_) {
    case ModelKind::kGaussianLinear: {
      std::normal_distribution<double> normal(t, sigma_);
      return normal(rng);
    }
    case ModelKind::kLogistic: {
      std::bernoulli_distribution coin(1.0 / (1.0 + std::exp(-t)));
      return coin(rng) ? 1.0 : 0.0;
    }
    case ModelKind::kCauchyRegression: {
      std::cauchy_distribution<double> cauchy(t, sigma_);
      return cauchy(rng);
    }
    case ModelKind::kTruncatedNormalMean: {
      std::normal_distribution<double> normal(t, sigma_);
      for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        const double x = normal(rng);
        if (x >= lower_ && x <= upper_) return x;
      }
      throw Error(ErrorKind::kSampler,
                  "truncated normal rejection sampler exhausted its retry "
                  "cap; check the truncation bounds");
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// ContaminationDensity

ContaminationDensity ContaminationDensity::StudentT(double nu, double scale,
                                                    Vector coefficients) {
  if (!(nu > 0.0) || !(scale > 0.0)) {
    throw Error(ErrorKind::kConfig,
                "student-t contamination needs nu > 0 and scale > 0");
  }
  ContaminationDensity g;
  g.kind_ = ContaminationKind::kStudentT;
  g.nu_ = nu;
  g.scale_ = scale;
  g.covariate_located_ = true;
  g.coefficients_ = std::move(coefficients);
  g.lower_ = -kInf;
  g.upper_ = kInf;
  return g;
}

ContaminationDensity ContaminationDensity::TruncatedStudentT(
    double nu, double scale, double location, double lower, double upper) {
  if (!(nu > 0.0) || !(scale > 0.0)) {
    throw Error(ErrorKind::kConfig,
                "student-t contamination needs nu > 0 and scale > 0");
  }
  if (!(lower < upper)) {
    throw Error(ErrorKind::kConfig, "truncation bounds require lower < upper");
  }
  ContaminationDensity g;
  g.kind_ = ContaminationKind::kTruncatedStudentT;
  g.nu_ = nu;
  g.scale_ = scale;
  g.covariate_located_ = false;
  g.location_ = location;
  g.lower_ = lower;
  g.upper_ = upper;
  g.log_mass_at_location_ = g.LogTruncationMass(location);
  return g;
}

ContaminationDensity ContaminationDensity::Cauchy(double scale,
                                                  Vector coefficients) {
  if (!(scale > 0.0)) {
    throw Error(ErrorKind::kConfig, "cauchy contamination needs scale > 0");
  }
  ContaminationDensity g;
  g.kind_ = ContaminationKind::kCauchy;
  g.scale_ = scale;
  g.covariate_located_ = true;
  g.coefficients_ = std::move(coefficients);
  g.lower_ = -kInf;
  g.upper_ = kInf;
  return g;
}

ContaminationDensity ContaminationDensity::BernoulliHalf() {
  ContaminationDensity g;
  g.kind_ = ContaminationKind::kBernoulliHalf;
  g.lower_ = 0.0;
  g.upper_ = 1.0;
  return g;
}

ContaminationDensity ContaminationDensity::WithGlobalLocation(
    double location) const {
  ContaminationDensity g = *this;
  g.covariate_located_ = false;
  g.location_ = location;
  g.coefficients_.resize(0);
  if (kind_ == ContaminationKind::kTruncatedStudentT) {
    g.log_mass_at_location_ = g.LogTruncationMass(location);
  }
  return g;
}

double ContaminationDensity::LogTruncationMass(double location) const {
  boost::math::students_t_distribution<double> t(nu_);
  const double a = (lower_ - location) / scale_;
  const double b = (upper_ - location) / scale_;
  const double below = boost::math::cdf(t, a);
  const double above = boost::math::cdf(boost::math::complement(t, b));
  return std::log1p(-(below + above));
}

double ContaminationDensity::Location(CovariateRow w) const {
  if (!covariate_located_) return location_;
  if (w.empty()) return coefficients_[0];
  double loc = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) loc += w[j] * coefficients_[j];
  return loc;
}

double ContaminationDensity::LogDensity(double x, double location) const {
  switch (kind_) {
    case ContaminationKind::kStudentT: {
      const double z = (x - location) / scale_;
      return StudentTLogConstant(nu_, scale_) -
             0.5 * (nu_ + 1.0) * std::log1p(z * z / nu_);
    }
    case ContaminationKind::kTruncatedStudentT: {
      if (x < lower_ || x > upper_) return -kInf;
      const double z = (x - location) / scale_;
      const double log_mass = (location == location_)
                                  ? log_mass_at_location_
                                  : LogTruncationMass(location);
      return StudentTLogConstant(nu_, scale_) -
             0.5 * (nu_ + 1.0) * std::log1p(z * z / nu_) - log_mass;
    }
    case ContaminationKind::kCauchy: {
      const double z = (x - location) / scale_;
      return -std::log(std::numbers::pi * scale_) - std::log1p(z * z);
    }
    case ContaminationKind::kBernoulliHalf:
      return (x == 0.0 || x == 1.0) ? -std::numbers::ln2 : -kInf;
  }
  return -kInf;
}

double ContaminationDensity::Sample(double location, Rng& rng) const {
  switch (kind_) {
    case ContaminationKind::kStudentT: {
      std::student_t_distribution<double> t(nu_);
      return location + scale_ * t(rng);
    }
    case ContaminationKind::kTruncatedStudentT: {
      std::student_t_distribution<double> t(nu_);
      for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        const double x = location + scale_ * t(rng);
        if (x >= lower_ && x <= upper_) return x;
      }
      throw Error(ErrorKind::kSampler,
                  "truncated student-t rejection sampler exhausted its retry "
                  "cap; check the truncation bounds");
    }
    case ContaminationKind::kCauchy: {
      std::cauchy_distribution<double> cauchy(location, scale_);
      return cauchy(rng);
    }
    case ContaminationKind::kBernoulliHalf: {
      std::bernoulli_distribution coin(0.5);
      return coin(rng) ? 1.0 : 0.0;
    }
  }
  return 0.0;
}

// ---------------------------------------------------------------------------
// ContaminatedModel

ContaminatedModel::ContaminatedModel(LikelihoodModel base,
                                     ContaminationDensity contamination,
                                     double p)
    : base_(std::move(base)), contamination_(std::move(contamination)), p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::kConfig, "contamination rate must lie in [0, 1]");
  }
  log_p_ = std::log(p);
  log1m_p_ = std::log1p(-p);
}

ContaminatedModel ContaminatedModel::WithRate(double p) const {
  return ContaminatedModel(base_, contamination_, p);
}

double ContaminatedModel::LogDensity(double x, CovariateRow w,
                                     const Vector& theta) const {
  if (!domain().Contains(x)) {
    throw Error(ErrorKind::kDomain,
                "observation " + std::to_string(x) +
                    " lies outside the model's observation domain");
  }
  const PredictorState state = base_.At(LinearPredictor(w, theta));
  const double log_g = p_ > 0.0 ? contamination_.LogDensity(x, w) : -kInf;
  return LogMixture(x, state, log_g);
}

double ContaminatedModel::LikelihoodRatio(double x, CovariateRow w,
                                          const Vector& theta,
                                          const Vector& theta_ref) const {
  return std::exp(LogDensity(x, w, theta) - LogDensity(x, w, theta_ref));
}

double ContaminatedModel::ScoreMixture(double x, const PredictorState& state,
                                       double log_g) const {
  if (p_ == 1.0) return 0.0;
  const double score = base_.Score(x, state);
  if (p_ == 0.0) return score;
  const double log_k = LogMixture(x, state, log_g);
  return std::exp(log1m_p_ + base_.LogDensity(x, state) - log_k) * score;
}

Vector ContaminatedModel::GradLogDensity(double x, CovariateRow w,
                                         const Vector& theta) const {
  const PredictorState state = base_.At(LinearPredictor(w, theta));
  const double log_g = p_ > 0.0 ? contamination_.LogDensity(x, w) : -kInf;
  const double dt = ScoreMixture(x, state, log_g);
  Vector grad = Vector::Zero(theta.size());
  if (w.empty()) {
    grad[0] = dt;
  } else {
    for (std::size_t j = 0; j < w.size(); ++j) grad[j] = dt * w[j];
  }
  return grad;
}

}  // namespace contamdp
