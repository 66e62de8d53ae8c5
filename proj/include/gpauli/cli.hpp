// Copyright 2026 The gpauli Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gpauli::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  std::string command;
  std::optional<int> dim;
  std::string preset;
  std::vector<std::string> gammas;
  std::vector<double> constants;
  std::vector<double> lambdas;
  std::vector<double> probs;
  double t_max = 5.0;
  int steps = 400;
  std::uint64_t seed = 42;
  std::optional<double> tol;
  int attempts = 2000;
  int refine_iters = 50;
  int blp_pairs = 48;
  std::string out_dir;
  std::string format;
};

// Parses argv, runs the subcommand and returns the process exit code.
// Never throws: 0 success, 2 usage/validation error, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpauli::cli
