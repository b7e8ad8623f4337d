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

#include "contamdp/harness/experiments.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <limits>
#include <optional>

#include <omp.h>

#include "contamdp/analysis/mse.h"
#include "contamdp/baselines/mean_estimators.h"
#include "contamdp/error.h"
#include "contamdp/harness/csv.h"
#include "contamdp/privacy/zcdp.h"

namespace contamdp {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string OutputPath(const ExperimentConfig& config,
                       const std::string& file) {
  std::filesystem::create_directories(config.output_dir);
  return (std::filesystem::path(config.output_dir) / file).string();
}

std::vector<std::pair<std::string, std::string>> Header(
    const ExperimentConfig& config) {
  std::vector<std::pair<std::string, std::string>> h;
  h.emplace_back("contamdp_version", CONTAMDP_VERSION);
  h.emplace_back("config_sha256", config.digest);
  for (const auto& kv : config.Resolved()) h.push_back(kv);
  return h;
}

std::string Status(const Error& e) {
  std::string s = std::string(ErrorKindName(e.kind())) + ": " + e.what();
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string Int(long long v) { return std::to_string(v); }
std::string U64(std::uint64_t v) { return std::to_string(v); }
std::string Num(double v) { return FormatDouble(v); }

// Keeps the first failure so it can be rethrown after the CSV is complete.
class FirstError {
 public:
  void Record(const Error& e) {
    if (!error_) error_ = e;
  }
  void Rethrow() const {
    if (error_) throw *error_;
  }

 private:
  std::optional<Error> error_;
};

std::map<int, double> EpsilonSource(const ExperimentConfig& config) {
  const std::string& src = config.mean_bench.epsilon_source;
  if (src == "published") return PublishedTable1();
  const CsvTable table = ReadCsv(src);
  const int n_col = table.Column("n");
  const int e_col = table.Column("epsilon_hat_q99");
  if (n_col < 0 || e_col < 0) {
    throw Error(ErrorKind::kConfig, src + " lacks n / epsilon_hat_q99 columns");
  }
  std::map<int, double> out;
  for (const auto& row : table.rows) {
    const double eps = std::stod(row[e_col]);
    if (std::isfinite(eps) && eps > 0.0) out[std::stoi(row[n_col])] = eps;
  }
  return out;
}

LikelihoodModel RegressionBase(const RegressionConfig& r, ModelKind kind,
                               int dim) {
  switch (kind) {
    case ModelKind::kGaussianLinear:
      return LikelihoodModel::GaussianLinear(dim, r.noise_scale);
    case ModelKind::kLogistic:
      return LikelihoodModel::Logistic(dim);
    case ModelKind::kCauchyRegression:
      return LikelihoodModel::CauchyRegression(dim, r.noise_scale);
    case ModelKind::kTruncatedNormalMean:
      break;
  }
  throw Error(ErrorKind::kConfig, "not a regression model");
}

ContaminationDensity RegressionContamination(const RegressionConfig& r,
                                             ModelKind kind,
                                             const Vector& truth) {
  switch (kind) {
    case ModelKind::kGaussianLinear:
      return ContaminationDensity::StudentT(r.nu, r.contamination_scale, truth);
    case ModelKind::kLogistic:
      return ContaminationDensity::BernoulliHalf();
    case ModelKind::kCauchyRegression:
      return ContaminationDensity::Cauchy(r.contamination_scale, truth);
    case ModelKind::kTruncatedNormalMean:
      break;
  }
  throw Error(ErrorKind::kConfig, "not a regression model");
}

}  // namespace

const std::map<int, double>& PublishedTable1() {
  static const std::map<int, double> kTable = {
      {100, 2.85},   {1000, 0.94},  {2000, 0.72}, {5000, 0.46},
      {10000, 0.32}, {20000, 0.26}, {50000, 0.18}};
  return kTable;
}

ContaminatedModel MeanModel(const MeanModelConfig& m, double p) {
  return ContaminatedModel(
      LikelihoodModel::TruncatedNormalMean(m.sigma, m.lower, m.upper),
      ContaminationDensity::TruncatedStudentT(m.nu, m.contamination_scale,
                                              m.theta_star, m.lower, m.upper),
      p);
}

EpsilonSetup Table1Setup(const ExperimentConfig& config, int n) {
  const MeanModelConfig& m = config.mean_model;
  return EpsilonSetup{
      .model = MeanModel(m, config.RateFor(n)),
      .prior = GaussianPrior::Isotropic(1, m.prior_mean, m.prior_sd),
      .theta_star = Vector::Constant(1, m.theta_star),
      .n = n,
      .delta = config.DeltaFor(n),
      .particles = config.particles,
      .center_at_truth = config.center_at_truth,
      .search = config.search,
  };
}

Vector RegressionTruth(int dim, double magnitude) {
  Vector theta(dim);
  for (int j = 0; j < dim; ++j) theta[j] = j % 2 == 0 ? magnitude : -magnitude;
  return theta;
}

EpsilonSetup RegressionSetup(const ExperimentConfig& config,
                             const std::string& model, int dim,
                             bool contaminated, int n) {
  const RegressionConfig& r = config.regression;
  const ModelKind kind = ParseModelKind(model);
  const Vector truth = RegressionTruth(dim, r.theta_magnitude);
  return EpsilonSetup{
      .model = ContaminatedModel(RegressionBase(r, kind, dim),
                                 RegressionContamination(r, kind, truth),
                                 contaminated ? config.RateFor(n) : 0.0),
      .prior = GaussianPrior::Isotropic(dim, 0.0, r.prior_sd),
      .theta_star = truth,
      .n = n,
      .delta = config.DeltaFor(n),
      .particles = config.particles,
      .center_at_truth = config.center_at_truth,
      .search = config.search,
  };
}

const MeanBenchRow* MeanBenchResult::Find(int n,
                                          const std::string& method) const {
  for (const auto& r : rows) {
    if (r.n == n && r.method == method) return &r;
  }
  return nullptr;
}

const RegressionRow* RegressionResult::Find(const std::string& model, int dim,
                                            bool contaminated, int n) const {
  for (const auto& r : rows) {
    if (r.model == model && r.dim == dim && r.contaminated == contaminated &&
        r.n == n) {
      return &r;
    }
  }
  return nullptr;
}

Table1Result RunTable1(const ExperimentConfig& config) {
  Table1Result result;
  result.csv_path = OutputPath(config, "table1.csv");
  CsvWriter csv(result.csv_path, Header(config),
                {"n", "p", "delta", "epsilon_hat_q99", "repeats_valid",
                 "phi_median", "seed", "status"});
  CsvWriter repeats_csv(OutputPath(config, "table1_repeats.csv"),
                        Header(config),
                        {"n", "repeat", "valid", "epsilon_hat", "phi",
                         "delta_hat", "eta", "alpha", "beta", "ess",
                         "ess_drop_last", "seed", "status"});
  FirstError failure;
  for (int n : config.n_grid) {
    Table1Row row;
    row.n = n;
    row.p = config.RateFor(n);
    row.delta = config.DeltaFor(n);
    row.seed = DeriveSeed(config.seed, {1, static_cast<std::uint64_t>(n)});
    try {
      const EpsilonEstimate est = EstimateEpsilon(
          Table1Setup(config, n), config.repeats, config.quantile, row.seed);
      row.epsilon = est.epsilon;
      row.valid = est.valid;
      row.phi_median = est.phi_median;
      for (std::size_t k = 0; k < est.repeats.size(); ++k) {
        const RepeatResult& r = est.repeats[k];
        std::string status = r.status;
        std::replace(status.begin(), status.end(), ',', ';');
        repeats_csv.Row({Int(n), Int(k), r.valid ? "1" : "0", Num(r.epsilon),
                         Num(r.phi), Num(r.delta_hat), Num(r.eta),
                         Num(r.alpha), Num(r.beta), Num(r.ess),
                         Num(r.ess_drop_last), U64(r.seed), status});
      }
    } catch (const Error& e) {
      row.epsilon = kNaN;
      row.phi_median = kNaN;
      row.status = Status(e);
      failure.Record(e);
    }
    csv.Row({Int(n), Num(row.p), Num(row.delta), Num(row.epsilon),
             Int(row.valid), Num(row.phi_median), U64(row.seed), row.status});
    result.rows.push_back(row);
  }
  failure.Rethrow();
  return result;
}

MeanBenchResult RunMeanBench(const ExperimentConfig& config) {
  const MeanModelConfig& m = config.mean_model;
  const MeanBenchConfig& b = config.mean_bench;
  const std::map<int, double> epsilons = EpsilonSource(config);
  for (int n : config.n_grid) {
    if (!epsilons.count(n)) {
      throw Error(ErrorKind::kConfig,
                  "no epsilon available for n = " + std::to_string(n));
    }
  }
  MeanBenchResult result;
  result.csv_path = OutputPath(config, "mean_bench.csv");
  result.dataset_csv_path = OutputPath(config, "mean_bench_datasets.csv");
  CsvWriter csv(result.csv_path, Header(config),
                {"n", "method", "rho", "bias", "variance", "mse", "repeats"});
  CsvWriter dataset_csv(result.dataset_csv_path, Header(config),
                        {"n", "method", "dataset", "rho", "bias", "variance",
                         "mse", "repeats"});

  const LikelihoodModel clean_model =
      LikelihoodModel::TruncatedNormalMean(m.sigma, m.lower, m.upper);
  const GaussianPrior prior = GaussianPrior::Isotropic(1, m.prior_mean,
                                                       m.prior_sd);
  const Vector truth = Vector::Constant(1, m.theta_star);
  const double radius = b.coinpress_radius.value_or(m.upper - m.lower);

  for (int n : config.n_grid) {
    const double delta = config.DeltaFor(n);
    const double rho = ZcdpFromDp({epsilons.at(n), delta}).rho;
    const ContaminatedModel bayes_model = MeanModel(m, config.RateFor(n));
    const int methods = static_cast<int>(b.methods.size());
    // stats[d * methods + k]
    std::vector<MseStats> stats(static_cast<std::size_t>(b.datasets) *
                                methods);
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 1)
    for (int d = 0; d < b.datasets; ++d) {
      try {
        const std::uint64_t dseed = DeriveSeed(
            config.seed, {2, static_cast<std::uint64_t>(n),
                          static_cast<std::uint64_t>(d)});
        const Dataset data =
            SampleDataset(clean_model, truth, std::nullopt, n, dseed);
        const auto& x = data.observations();
        for (int k = 0; k < methods; ++k) {
          const std::string& method = b.methods[k];
          std::vector<double> estimates(b.repeats);
          for (int r = 0; r < b.repeats; ++r) {
            const std::uint64_t seed =
                DeriveSeed(dseed, {static_cast<std::uint64_t>(k + 1),
                                   static_cast<std::uint64_t>(r)});
            if (method == "bayes") {
              const Dataset contaminated =
                  Contaminate(data, bayes_model, DeriveSeed(seed, {1}));
              BayesDrawOptions opts;
              opts.burn_in = b.bayes_burn_in;
              estimates[r] = BayesMeanDraw(bayes_model, prior, contaminated,
                                           DeriveSeed(seed, {2}), opts)
                                 .value;
            } else if (method == "coinpress3" || method == "coinpress10") {
              CoinPressOptions opts;
              opts.iterations = method == "coinpress3" ? 3 : 10;
              opts.center = b.coinpress_center;
              opts.radius = radius;
              opts.scale = m.sigma;
              opts.beta = b.coinpress_beta;
              opts.last_round_share = b.coinpress_last_share;
              estimates[r] = CoinPressMean(x, rho, opts, seed).estimate;
            } else if (method == "clipped") {
              ClippedMeanOptions opts;
              opts.lower = m.lower;
              opts.upper = m.upper;
              opts.low_quantile = b.clipped_low;
              opts.high_quantile = b.clipped_high;
              opts.widen = b.clipped_widen;
              estimates[r] = ClippedMean(x, rho, opts, seed).estimate;
            } else {
              estimates[r] =
                  GaussianMechanismMean(x, rho, m.lower, m.upper, seed)
                      .estimate;
            }
          }
          stats[static_cast<std::size_t>(d) * methods + k] =
              ComputeMseStats(estimates, m.theta_star);
        }
      } catch (...) {
#pragma omp critical(contamdp_mean_bench_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (int k = 0; k < methods; ++k) {
      MeanBenchRow agg;
      agg.n = n;
      agg.method = b.methods[k];
      agg.rho = rho;
      for (int d = 0; d < b.datasets; ++d) {
        const MseStats& s = stats[static_cast<std::size_t>(d) * methods + k];
        MeanBenchRow row{n, b.methods[k], d, rho, s.bias, s.variance, s.mse,
                         b.repeats};
        dataset_csv.Row({Int(n), row.method, Int(d), Num(rho), Num(s.bias),
                         Num(s.variance), Num(s.mse), Int(b.repeats)});
        result.dataset_rows.push_back(row);
        agg.bias += s.bias / b.datasets;
        agg.variance += s.variance / b.datasets;
        agg.mse += s.mse / b.datasets;
      }
      agg.repeats = b.datasets * b.repeats;
      csv.Row({Int(n), agg.method, Num(rho), Num(agg.bias), Num(agg.variance),
               Num(agg.mse), Int(agg.repeats)});
      result.rows.push_back(agg);
    }
  }
  return result;
}

RegressionResult RunRegressionDecay(const ExperimentConfig& config) {
  const RegressionConfig& r = config.regression;
  RegressionResult result;
  result.csv_path = OutputPath(config, "regression_decay.csv");
  result.fit_csv_path = OutputPath(config, "regression_fit.csv");
  CsvWriter csv(result.csv_path, Header(config),
                {"model", "dim", "contaminated", "n", "p", "delta",
                 "epsilon_hat", "repeats_valid", "status"});
  FirstError failure;
  for (std::size_t mi = 0; mi < r.models.size(); ++mi) {
    const std::string name(ModelKindName(ParseModelKind(r.models[mi])));
    for (int dim : r.dims) {
      for (bool contaminated : r.contaminated) {
        for (int n : config.n_grid) {
          RegressionRow row;
          row.model = name;
          row.dim = dim;
          row.contaminated = contaminated;
          row.n = n;
          row.p = contaminated ? config.RateFor(n) : 0.0;
          row.delta = config.DeltaFor(n);
          const std::uint64_t seed =
              DeriveSeed(config.seed, {3, mi, static_cast<std::uint64_t>(dim),
                                       static_cast<std::uint64_t>(n)});
          try {
            const EpsilonEstimate est = EstimateEpsilon(
                RegressionSetup(config, name, dim, contaminated, n),
                config.repeats, config.quantile, seed);
            row.epsilon = est.epsilon;
            row.valid = est.valid;
          } catch (const Error& e) {
            row.epsilon = kNaN;
            row.status = Status(e);
            failure.Record(e);
          }
          csv.Row({row.model, Int(dim), contaminated ? "true" : "false",
                   Int(n), Num(row.p), Num(row.delta), Num(row.epsilon),
                   Int(row.valid), row.status});
          result.rows.push_back(row);
        }
      }
    }
  }

  CsvWriter fit_csv(result.fit_csv_path, Header(config),
                    {"model", "dim", "contaminated", "slope", "intercept",
                     "residual_rms", "n_target", "epsilon_hat_extrapolated"});
  for (const auto& model : r.models) {
    const std::string name(ModelKindName(ParseModelKind(model)));
    for (int dim : r.dims) {
      for (bool contaminated : r.contaminated) {
        std::vector<double> ns, eps;
        for (const auto& row : result.rows) {
          if (row.model == name && row.dim == dim &&
              row.contaminated == contaminated && row.epsilon > 0.0 &&
              std::isfinite(row.epsilon)) {
            ns.push_back(row.n);
            eps.push_back(row.epsilon);
          }
        }
        if (ns.size() < 3) continue;
        RegressionFitRow fit_row;
        fit_row.model = name;
        fit_row.dim = dim;
        fit_row.contaminated = contaminated;
        fit_row.fit = FitDecay(ns, eps);
        for (double target : r.extrapolate) {
          const double value = fit_row.fit.Extrapolate(target);
          fit_row.extrapolated.emplace_back(target, value);
          fit_csv.Row({name, Int(dim), contaminated ? "true" : "false",
                       Num(fit_row.fit.slope), Num(fit_row.fit.intercept),
                       Num(fit_row.fit.residual_rms), Num(target),
                       Num(value)});
        }
        result.fits.push_back(std::move(fit_row));
      }
    }
  }
  failure.Rethrow();
  return result;
}

FisherResult RunFisherCheck(const ExperimentConfig& config) {
  const FisherConfig& f = config.fisher;
  const ContaminatedModel model(
      LikelihoodModel::GaussianLinear(1, f.sigma),
      ContaminationDensity::StudentT(f.nu, f.contamination_scale,
                                     Vector::Constant(1, f.theta)),
      0.0);
  FisherResult result;
  result.gaps = FisherGaps(model, Vector::Constant(1, f.theta), f.p_grid);
  result.csv_path = OutputPath(config, "fisher.csv");
  CsvWriter csv(result.csv_path, Header(config), {"p", "max_entry_gap"});
  for (const auto& g : result.gaps) {
    csv.Row({Num(g.p), Num(g.max_entry_gap)});
  }
  return result;
}

Prop1Result RunVerifyProp1(const ExperimentConfig& config) {
  const Prop1Config& c = config.prop1;
  const double p = c.p.value_or(config.RateFor(c.n));
  const ContaminatedModel model(
      LikelihoodModel::GaussianLinear(1, c.sigma),
      ContaminationDensity::StudentT(c.nu, c.contamination_scale,
                                     Vector::Constant(1, c.theta_star)),
      p);
  const GaussianPrior prior =
      GaussianPrior::Isotropic(1, c.prior_mean, c.prior_sd);
  DecompositionOptions options;
  options.n = c.n;
  options.trials = c.trials;
  options.sets = c.sets;
  options.theta_grid = c.theta_grid;
  options.x_grid = c.x_grid;
  options.phi_min = c.phi_min;
  options.phi_max = c.phi_max;
  options.seed = DeriveSeed(config.seed, {5});
  Prop1Result result;
  result.report = VerifyDecomposition(model, prior, c.theta_star, options);
  result.csv_path = OutputPath(config, "prop1.csv");
  CsvWriter csv(result.csv_path, Header(config),
                {"trial", "violations", "seed", "phi", "eta", "worst_gap"});
  for (const auto& t : result.report.trials) {
    csv.Row({Int(t.trial), Int(t.violations), U64(t.seed), Num(t.phi),
             Num(t.eta), Num(t.worst_gap)});
  }
  return result;
}

void RunExperiment(const ExperimentConfig& config) {
  if (config.workers > 0) omp_set_num_threads(config.workers);
  switch (config.kind) {
    case ExperimentKind::kTable1:
      RunTable1(config);
      return;
    case ExperimentKind::kMeanBench:
      RunMeanBench(config);
      return;
    case ExperimentKind::kRegressionDecay:
      RunRegressionDecay(config);
      return;
    case ExperimentKind::kFisherCheck:
      RunFisherCheck(config);
      return;
    case ExperimentKind::kVerifyProp1:
      RunVerifyProp1(config);
      return;
  }
}

}  // namespace contamdp
