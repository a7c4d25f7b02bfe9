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

#include "aerts/kernels.hpp"

#include "aerts/error.hpp"
#include "aerts/quantum.hpp"

namespace aerts::kernels {

void set_thread_count(int threads) {
#if defined(_OPENMP)
  static const int default_threads = omp_get_max_threads();
  omp_set_num_threads(threads > 0 ? threads : default_threads);
#else
  (void)threads;
#endif
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw InvalidParameter("Monte Carlo batch needs at least one trial");
}

}  // namespace

stats::FrequencyEstimate sqm_plus_frequency(const UnitVector3& v, const UnitVector3& u,
                                            const sqm::BreakProfile& profile,
                                            std::uint64_t trials, std::uint64_t seed,
                                            Execution exec) {
  require_trials(trials);
  const sqm::ParticleState particle{v};
  const auto plus = sum_trials(exec, trials, seed, [&](std::uint64_t, RandomStream& rng) {
    return sqm::run_measurement(particle, u, profile, rng).sign == Outcome::Plus ? 1 : 0;
  });
  return stats::make_frequency(static_cast<std::uint64_t>(plus), trials);
}

stats::FrequencyEstimate hidden_mixture_plus_frequency(const UnitVector3& v,
                                                       const UnitVector3& u,
                                                       std::uint64_t trials, std::uint64_t seed,
                                                       Execution exec) {
  require_trials(trials);
  const sqm::ParticleState particle{v};
  const auto plus = sum_trials(exec, trials, seed, [&](std::uint64_t, RandomStream& rng) {
    const double x0 = -1.0 + 2.0 * rng.uniform();
    const sqm::BreakProfile deterministic = sqm::fixed_point_profile(x0);
    return sqm::run_measurement(particle, u, deterministic, rng).sign == Outcome::Plus ? 1 : 0;
  });
  return stats::make_frequency(static_cast<std::uint64_t>(plus), trials);
}

stats::FrequencyEstimate born_plus_frequency(const UnitVector3& v, const UnitVector3& u,
                                             std::uint64_t trials, std::uint64_t seed,
                                             Execution exec) {
  require_trials(trials);
  const SpinState s = state_from_direction(v);
  const auto plus = sum_trials(exec, trials, seed, [&](std::uint64_t, RandomStream& rng) {
    return sample_spin_measurement(s, u, rng).outcome == Outcome::Plus ? 1 : 0;
  });
  return stats::make_frequency(static_cast<std::uint64_t>(plus), trials);
}

stats::ExpectationEstimate singlet_correlation(const UnitVector3& c, const UnitVector3& d,
                                               std::uint64_t trials, std::uint64_t seed,
                                               Execution exec) {
  require_trials(trials);
  const auto sum = sum_trials(exec, trials, seed, [&](std::uint64_t, RandomStream& rng) {
    const auto [a, b] = singlet_sample(c, d, rng);
    return value(a) * value(b);
  });
  return stats::make_pm1_expectation(sum, trials);
}

}  // namespace aerts::kernels
