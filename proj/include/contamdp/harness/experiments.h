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

#ifndef CONTAMDP_HARNESS_EXPERIMENTS_H_
#define CONTAMDP_HARNESS_EXPERIMENTS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "contamdp/analysis/decay_fit.h"
#include "contamdp/analysis/fisher.h"
#include "contamdp/harness/config.h"
#include "contamdp/privacy/decomposition.h"
#include "contamdp/privacy/estimate.h"

namespace contamdp {

// Published epsilon estimates for the truncated-normal mean model, by n.
const std::map<int, double>& PublishedTable1();

ContaminatedModel MeanModel(const MeanModelConfig& config, double p);
EpsilonSetup Table1Setup(const ExperimentConfig& config, int n);
Vector RegressionTruth(int dim, double magnitude);
EpsilonSetup RegressionSetup(const ExperimentConfig& config,
                             const std::string& model, int dim,
                             bool contaminated, int n);

struct Table1Row {
  int n = 0;
  double p = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  int valid = 0;
  double phi_median = 0.0;
  std::uint64_t seed = 0;
  std::string status = "ok";
};

struct Table1Result {
  std::vector<Table1Row> rows;
  std::string csv_path;
};

struct MeanBenchRow {
  int n = 0;
  std::string method;
  int dataset = -1;  // -1 for rows aggregated over datasets
  double rho = 0.0;
  double bias = 0.0;
  double variance = 0.0;
  double mse = 0.0;
  int repeats = 0;
};

struct MeanBenchResult {
  std::vector<MeanBenchRow> rows;          // averaged over datasets
  std::vector<MeanBenchRow> dataset_rows;  // one per (n, method, dataset)
  std::string csv_path;
  std::string dataset_csv_path;

  const MeanBenchRow* Find(int n, const std::string& method) const;
};

struct RegressionRow {
  std::string model;
  int dim = 0;
  bool contaminated = false;
  int n = 0;
  double p = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  int valid = 0;
  std::string status = "ok";
};

struct RegressionFitRow {
  std::string model;
  int dim = 0;
  bool contaminated = false;
  DecayFit fit;
  std::vector<std::pair<double, double>> extrapolated;  // (n, epsilon)
};

struct RegressionResult {
  std::vector<RegressionRow> rows;
  std::vector<RegressionFitRow> fits;
  std::string csv_path;
  std::string fit_csv_path;

  const RegressionRow* Find(const std::string& model, int dim,
                            bool contaminated, int n) const;
};

struct FisherResult {
  std::vector<FisherGap> gaps;
  std::string csv_path;
};

struct Prop1Result {
  DecompositionReport report;
  std::string csv_path;
};

// Each driver writes its CSVs under config.output_dir. Component failures are
// written to the status column first and then rethrown.
Table1Result RunTable1(const ExperimentConfig& config);
MeanBenchResult RunMeanBench(const ExperimentConfig& config);
RegressionResult RunRegressionDecay(const ExperimentConfig& config);
FisherResult RunFisherCheck(const ExperimentConfig& config);
Prop1Result RunVerifyProp1(const ExperimentConfig& config);

// Applies the worker count and dispatches on config.kind.
void RunExperiment(const ExperimentConfig& config);

}  // namespace contamdp

#endif  // CONTAMDP_HARNESS_EXPERIMENTS_H_
