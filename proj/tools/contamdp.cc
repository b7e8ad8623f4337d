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

// Command-line driver:
//   contamdp <table1|mean-bench|regression-decay|fisher-check|verify-prop1>
//            --config <path> [--seed S] [--workers W] [--out DIR]

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "contamdp/error.h"
#include "contamdp/harness/config.h"
#include "contamdp/harness/experiments.h"

int main(int argc, char** argv) {
  CLI::App app{"Empirical privacy estimates for contaminated posteriors"};
  app.set_version_flag("--version", std::string(CONTAMDP_VERSION));
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> out;
  for (const char* name : {"table1", "mean-bench", "regression-decay",
                           "fisher-check", "verify-prop1"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON configuration")
        ->required();
    sub->add_option("--seed", seed, "master seed (overrides the config)");
    sub->add_option("--workers", workers, "worker threads, 0 = all cores");
    sub->add_option("--out", out, "output directory");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::string command = app.get_subcommands().front()->get_name();
    contamdp::ExperimentConfig config = contamdp::LoadConfig(config_path);
    if (contamdp::ExperimentKindName(config.kind) != command) {
      throw contamdp::Error(contamdp::ErrorKind::kConfig,
                            "config is for '" +
                                std::string(contamdp::ExperimentKindName(
                                    config.kind)) +
                                "', not '" + command + "'");
    }
    if (seed) config.seed = *seed;
    if (workers) {
      if (*workers < 0) {
        throw contamdp::Error(contamdp::ErrorKind::kConfig,
                              "--workers must be >= 0");
      }
      config.workers = *workers;
    }
    if (out) config.output_dir = *out;
    contamdp::RunExperiment(config);
    std::cout << "wrote results to " << config.output_dir << "\n";
    return 0;
  } catch (const contamdp::Error& e) {
    std::cerr << "contamdp: " << contamdp::ErrorKindName(e.kind())
              << " error: " << e.what() << "\n";
    return contamdp::ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "contamdp: " << e.what() << "\n";
    return 3;
  }
}
