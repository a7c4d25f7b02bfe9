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

#include "aerts/geometry.hpp"
#include "aerts/random.hpp"
#include "aerts/sqm.hpp"
#include "aerts/stats.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

/// Monte Carlo batch kernels. Every trial `i` draws from
/// RandomStream::for_trial(seed, i) and contributes an integer, so the serial
/// reference and the OpenMP variant return identical results for any thread
/// count and schedule.
namespace aerts::kernels {

enum class Execution { Serial, Parallel };

/// Sets the OpenMP team size for subsequent parallel kernels; <= 0 restores
/// the runtime default. No-op without OpenMP.
void set_thread_count(int threads);
int max_threads();

template <class TrialFn>
std::int64_t sum_trials_serial(std::uint64_t trials, std::uint64_t seed, TrialFn&& fn) {
  std::int64_t total = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    RandomStream rng = RandomStream::for_trial(seed, i);
    total += fn(i, rng);
  }
  return total;
}

template <class TrialFn>
std::int64_t sum_trials_parallel(std::uint64_t trials, std::uint64_t seed, TrialFn&& fn) {
  std::int64_t total = 0;
  const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(static) reduction(+ : total)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    RandomStream rng = RandomStream::for_trial(seed, idx);
    total += fn(idx, rng);
  }
  return total;
}

/// fn(trial_index, RandomStream&) -> integer contribution.
template <class TrialFn>
std::int64_t sum_trials(Execution exec, std::uint64_t trials, std::uint64_t seed, TrialFn&& fn) {
  return exec == Execution::Parallel ? sum_trials_parallel(trials, seed, fn)
                                     : sum_trials_serial(trials, seed, fn);
}

/// Frequency of +u over `trials` measurements of the particle at `v`.
stats::FrequencyEstimate sqm_plus_frequency(const UnitVector3& v, const UnitVector3& u,
                                            const sqm::BreakProfile& profile,
                                            std::uint64_t trials, std::uint64_t seed,
                                            Execution exec = Execution::Parallel);

/// Same, but each trial first draws x0 ~ U[-1, 1) and then runs the
/// deterministic FixedPoint(x0) elastic.
stats::FrequencyEstimate hidden_mixture_plus_frequency(const UnitVector3& v,
                                                       const UnitVector3& u,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       Execution exec = Execution::Parallel);

/// Frequency of +1 for projective measurements of |+>_v along u.
stats::FrequencyEstimate born_plus_frequency(const UnitVector3& v, const UnitVector3& u,
                                             std::uint64_t trials, std::uint64_t seed,
                                             Execution exec = Execution::Parallel);

/// Mean of o_A o_B over singlet samples with settings c and d.
stats::ExpectationEstimate singlet_correlation(const UnitVector3& c, const UnitVector3& d,
                                               std::uint64_t trials, std::uint64_t seed,
                                               Execution exec = Execution::Parallel);

}  // namespace aerts::kernels
