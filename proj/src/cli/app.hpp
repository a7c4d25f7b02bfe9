// Copyright 2026 The aerts-machines Authors
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
#include <stdexcept>
#include <string>
#include <vector>

#include "cli/render.hpp"

namespace aerts::cli {

inline constexpr std::uint64_t kDefaultTrials = 100000;
inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "AERTS_MACHINES_SEED";

/// Bad flags or parameter values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;  // sqm | epsilon | bell | lhv | quantum
  std::string gamma_spec;
  std::vector<double> gammas;
  std::optional<double> epsilon;
  std::string scenario;
  std::uint64_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  Format format = Format::Table;
  std::optional<std::string> output_path;
  int threads = 0;
};

/// "g" or "start:stop:steps" (inclusive, evenly spaced; steps may be 0).
std::vector<double> parse_gamma(const std::string& spec);

/// Runs the configured command. Throws UsageError for invalid parameters.
Report build_report(const RunConfig& config);

/// Full CLI: parses `args` (without the program name), writes the rendered
/// report to `out` or --out, diagnostics to `err`. `env_seed` stands in for
/// the AERTS_MACHINES_SEED environment variable. Returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_seed);

/// Same, reading the seed override from the process environment.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aerts::cli
