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

#ifndef CONTAMDP_CORE_RANDOM_H_
#define CONTAMDP_CORE_RANDOM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace contamdp {

using Rng = std::mt19937_64;

// Derives a child seed from a master seed and a path of stream indices
// (e.g. {grid index, repeat index}). Children of distinct paths are
// statistically independent streams; the map is a pure function so every
// experiment is reproducible from its master seed alone.
std::uint64_t DeriveSeed(std::uint64_t master,
                         std::initializer_list<std::uint64_t> path);

// Uniform draw on the open interval (0, 1).
double UniformOpen(Rng& rng);

}  // namespace contamdp

#endif  // CONTAMDP_CORE_RANDOM_H_
