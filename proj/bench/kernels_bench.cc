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

// Parallel kernels against the serial reference on the regression workloads.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "contamdp/core/dataset.h"
#include "contamdp/inference/posterior.h"
#include "contamdp/inference/prior.h"
#include "contamdp/kernels/kernels.h"

namespace contamdp {
namespace {

struct Workload {
  PosteriorTarget target;
  ParticleMatrix particles;
  Vector theta;
};

Workload Make(int n, int m) {
  const int dim = 5;
  Vector truth(dim);
  for (int j = 0; j < dim; ++j) truth[j] = j % 2 == 0 ? 0.5 : -0.5;
  const ContaminatedModel model(LikelihoodModel::GaussianLinear(dim),
                                ContaminationDensity::StudentT(5, 5, truth),
                                0.3);
  const Dataset clean = SampleDataset(model.base(), truth, std::nullopt, n, 1);
  Workload w{PosteriorTarget(model, GaussianPrior::Isotropic(dim, 0, 10),
                             Contaminate(clean, model, 2)),
             ParticleMatrix(m, dim), truth};
  Rng rng(3);
  std::normal_distribution<double> normal(0, 0.05);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < dim; ++j) w.particles(i, j) = truth[j] + normal(rng);
  }
  return w;
}

void BM_LogLikelihood(benchmark::State& state) {
  const Workload w = Make(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::LogLikelihood(w.target.view(), w.theta));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LogLikelihoodReference(benchmark::State& state) {
  const Workload w = Make(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reference::LogLikelihood(w.target.view(), w.theta));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Gradient(benchmark::State& state) {
  const Workload w = Make(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::LogLikelihoodGradient(w.target.view(), w.theta));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GradientReference(benchmark::State& state) {
  const Workload w = Make(state.range(0), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reference::LogLikelihoodGradient(w.target.view(), w.theta));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Batch(benchmark::State& state) {
  const Workload w = Make(state.range(0), 500);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::LogLikelihoodBatch(w.target.view(), w.particles));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 500);
}

void BM_BatchReference(benchmark::State& state) {
  const Workload w = Make(state.range(0), 500);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reference::LogLikelihoodBatch(w.target.view(), w.particles));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * 500);
}

template <bool kParallel>
void RatioSums(benchmark::State& state) {
  const Workload w = Make(10, 2000);
  const ContaminatedModel& model = w.target.model();
  const std::vector<double> row = {1, 1, -1, 1, -1};
  std::vector<PredictorState> states;
  for (int i = 0; i < w.particles.rows(); ++i) {
    states.push_back(
        model.base().At(LinearPredictor(row, w.particles.row(i).transpose())));
  }
  const std::vector<double> weights(states.size(), 1.0 / states.size());
  const PredictorState ref = model.base().At(LinearPredictor(row, w.theta));
  std::vector<double> xs, log_g;
  for (int k = 0; k < state.range(0); ++k) {
    xs.push_back(-50 + 100.0 * k / state.range(0));
    log_g.push_back(model.contamination().LogDensity(xs.back(), row));
  }
  for (auto _ : state) {
    if constexpr (kParallel) {
      benchmark::DoNotOptimize(
          kernels::WeightedRatioSums(model, states, weights, ref, xs, log_g));
    } else {
      benchmark::DoNotOptimize(
          reference::WeightedRatioSums(model, states, weights, ref, xs, log_g));
    }
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * states.size());
}

BENCHMARK(BM_LogLikelihood)->Arg(5000)->Arg(50000);
BENCHMARK(BM_LogLikelihoodReference)->Arg(5000)->Arg(50000);
BENCHMARK(BM_Gradient)->Arg(5000)->Arg(50000);
BENCHMARK(BM_GradientReference)->Arg(5000)->Arg(50000);
BENCHMARK(BM_Batch)->Arg(5000);
BENCHMARK(BM_BatchReference)->Arg(5000);
BENCHMARK(RatioSums<true>)->Name("BM_RatioSums")->Arg(512);
BENCHMARK(RatioSums<false>)->Name("BM_RatioSumsReference")->Arg(512);

}  // namespace
}  // namespace contamdp

BENCHMARK_MAIN();
