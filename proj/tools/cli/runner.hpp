// Copyright 2026 The Zeroscope Authors.
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

#include "report.hpp"

namespace zeroscope::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

/// Parsed command line.  Every subcommand reads only the fields it echoes
/// into the report config.
struct RunConfig {
  std::string subcommand;
  std::string model = "elliptic";
  int degree = 0;
  std::optional<double> domain_radius;
  std::string degrees;
  int trials = 0;
  std::uint64_t seed = 1;
  std::string stat = "smooth";
  std::string phi = "gauss:0:1";
  std::string region;
  std::string orders = "1,2,3,5,10";
  double density = 2.0;
  int max_order = 4;
  int max_vertices = 4;
  int matrices = 20;
  int pairs = 10;
  double b = 3.0;
  bool oracle = false;
  std::string out;
  Format format = Format::kJson;
  std::optional<int> threads;
};

/// Checks ranges and spec strings; throws kInvalidArgument.
void validate(const RunConfig& config);

/// Runs a validated configuration.  Internal consistency checks that fail
/// are recorded in details.checks_passed = false.
RunReport execute(const RunConfig& config);

/// Full command line handling: parse, validate, execute, write.  Returns the
/// process exit code; diagnostics go to `err`, stdout output to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeroscope::cli
