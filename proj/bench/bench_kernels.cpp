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

// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include "aerts/bell.hpp"
#include "aerts/kernels.hpp"
#include "aerts/sqm.hpp"

using namespace aerts;
using kernels::Execution;

namespace {

const UnitVector3 kParticle = UnitVector3::from_polar(1.0, 0.0);

template <Execution E>
void BM_SqmUniform(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::sqm_plus_frequency(kParticle, UnitVector3::z_axis(), sqm::Uniform{}, n, 42, E));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <Execution E>
void BM_SingletCorrelation(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::singlet_correlation(UnitVector3::z_axis(), kParticle, n, 42, E));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

template <Execution E>
void BM_UniformBandPullPull(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const bell::BandFactory fresh = [](std::uint64_t) { return bell::BandEntity::whole(bell::UniformBreak{}); };
  for (auto _ : state) {
    benchmark::DoNotOptimize(bell::estimate_expectation(fresh, bell::kPullA, bell::kPullB, n, 42, E));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

}  // namespace

BENCHMARK(BM_SqmUniform<Execution::Serial>)->Arg(1 << 20);
BENCHMARK(BM_SqmUniform<Execution::Parallel>)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_SingletCorrelation<Execution::Serial>)->Arg(1 << 20);
BENCHMARK(BM_SingletCorrelation<Execution::Parallel>)->Arg(1 << 20)->UseRealTime();
BENCHMARK(BM_UniformBandPullPull<Execution::Serial>)->Arg(1 << 18);
BENCHMARK(BM_UniformBandPullPull<Execution::Parallel>)->Arg(1 << 18)->UseRealTime();

BENCHMARK_MAIN();
