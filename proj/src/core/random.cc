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

#include "contamdp/core/random.h"

#include "contamdp/error.h"

namespace contamdp {
namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t master,
                         std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = SplitMix64(master);
  for (std::uint64_t index : path) {
    state = SplitMix64(state ^ SplitMix64(index + 0x632be59bd9b4e019ULL));
  }
  return state;
}

double UniformOpen(Rng& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = unif(rng);
  while (u <= 0.0) u = unif(rng);
  return u;
}

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
      return "config";
    case ErrorKind::kDomain:
      return "domain";
    case ErrorKind::kNumerical:
      return "numerical";
    case ErrorKind::kSampler:
      return "sampler";
    case ErrorKind::kNonConvergence:
      return "non-convergence";
    case ErrorKind::kCurvature:
      return "curvature";
    case ErrorKind::kDegeneracy:
      return "degeneracy";
    case ErrorKind::kBatchQuality:
      return "batch-quality";
  }
  return "unknown";
}

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
      return 2;
    case ErrorKind::kBatchQuality:
      return 4;
    default:
      return 3;
  }
}

}  // namespace contamdp
