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

#ifndef CONTAMDP_ERROR_H_
#define CONTAMDP_ERROR_H_

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace contamdp {

enum class ErrorKind {
  kConfig,
  kDomain,
  kNumerical,
  kSampler,
  kNonConvergence,
  kCurvature,
  kDegeneracy,
  kBatchQuality,
};

const char* ErrorKindName(ErrorKind kind);

// Base exception for every failure raised by the library. The kind decides
// the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the MAP optimizer when the iteration cap is hit.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, Eigen::VectorXd last_iterate,
                      double gradient_norm)
      : Error(ErrorKind::kNonConvergence, message),
        last_iterate_(std::move(last_iterate)),
        gradient_norm_(gradient_norm) {}

  const Eigen::VectorXd& last_iterate() const { return last_iterate_; }
  double gradient_norm() const { return gradient_norm_; }

 private:
  Eigen::VectorXd last_iterate_;
  double gradient_norm_;
};

// Exit codes: 0 success, 2 config, 3 numerical, 4 batch quality.
int ExitCodeFor(ErrorKind kind);

}  // namespace contamdp

#endif  // CONTAMDP_ERROR_H_
