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

#include "aerts/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "aerts/error.hpp"

namespace aerts::stats {

FrequencyEstimate make_frequency(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) throw InvalidParameter("frequency estimate needs at least one trial");
  if (successes > trials) throw InvalidParameter("more successes than trials");
  FrequencyEstimate f;
  f.successes = successes;
  f.trials = trials;
  f.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
  f.std_err = std::sqrt(f.p_hat * (1.0 - f.p_hat) / static_cast<double>(trials));
  return f;
}

bool z_check(const FrequencyEstimate& estimate, double expected, double z) {
  if (expected == 0.0) return estimate.successes == 0;
  if (expected == 1.0) return estimate.successes == estimate.trials;
  const double bound =
      z * std::sqrt(expected * (1.0 - expected) / static_cast<double>(estimate.trials));
  return std::abs(estimate.p_hat - expected) <= bound;
}

ExpectationEstimate make_pm1_expectation(std::int64_t sum, std::uint64_t trials) {
  if (trials == 0) throw InvalidParameter("expectation estimate needs at least one trial");
  const double n = static_cast<double>(trials);
  ExpectationEstimate e;
  e.trials = trials;
  e.value = std::clamp(static_cast<double>(sum) / n, -1.0, 1.0);
  if (trials > 1) {
    // Every sample squares to 1, so sum (x - mean)^2 = n (1 - mean^2).
    const double variance = std::max(0.0, n * (1.0 - e.value * e.value) / (n - 1.0));
    e.standard_error = std::sqrt(variance / n);
  }
  return e;
}

KsResult ks_uniformity(std::span<const double> samples, double lo, double hi) {
  if (samples.empty()) throw InvalidParameter("KS test needs at least one sample");
  if (!(lo < hi)) throw InvalidParameter("KS test needs lo < hi");

  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());

  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = std::clamp((sorted[i] - lo) / (hi - lo), 0.0, 1.0);
    d = std::max({d, static_cast<double>(i + 1) / n - cdf, cdf - static_cast<double>(i) / n});
  }

  KsResult r;
  r.statistic = d;
  r.critical_value = kKsCoefficient / std::sqrt(n);
  r.pass = d <= r.critical_value;
  return r;
}

}  // namespace aerts::stats
