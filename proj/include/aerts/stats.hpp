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
#include <span>

namespace aerts::stats {

/// Project-wide acceptance level for binomial checks.
inline constexpr double kDefaultZ = 3.0;

/// Large-n Kolmogorov-Smirnov critical coefficient at alpha ~ 0.01.
inline constexpr double kKsCoefficient = 1.63;

/// Binomial frequency: successes out of trials.
struct FrequencyEstimate {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  double p_hat = 0.0;
  double std_err = 0.0;
};

/// Throws InvalidParameter when trials == 0 or successes > trials.
FrequencyEstimate make_frequency(std::uint64_t successes, std::uint64_t trials);

/// Passes iff |p_hat - expected| <= z * sqrt(expected (1 - expected) / trials).
/// For expected in {0, 1} the frequency has to match exactly.
bool z_check(const FrequencyEstimate& estimate, double expected, double z = kDefaultZ);

/// Mean of +-1 valued samples with the standard error of that mean.
struct ExpectationEstimate {
  double value = 0.0;
  std::uint64_t trials = 0;
  double standard_error = 0.0;
};

/// Builds the estimate from the sum of `trials` samples that are each +1 or
/// -1. Sample standard deviation uses the n - 1 denominator (0 for n = 1).
ExpectationEstimate make_pm1_expectation(std::int64_t sum, std::uint64_t trials);

struct KsResult {
  double statistic = 0.0;
  double critical_value = 0.0;
  bool pass = false;
};

/// One-sample KS test of `samples` against uniform[lo, hi]. Throws
/// InvalidParameter for empty input or lo >= hi.
KsResult ks_uniformity(std::span<const double> samples, double lo, double hi);

}  // namespace aerts::stats
