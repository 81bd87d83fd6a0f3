// Copyright 2026 The epdkit Authors
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


#include <benchmark/benchmark.h>

#include "epd/engine.hpp"
#include "epd/gates.hpp"
#include "epd/random.hpp"

namespace {

void BM_EpDenseTwoCopy(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  epd::CounterRng rng(1, 0);
  const auto u = epd::sample_haar_unitary(d * d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(epd::ep_exact(u, d, d));
}
BENCHMARK(BM_EpDenseTwoCopy)->Arg(2)->Arg(3)->Arg(4);

void BM_EpOperatorEntanglement(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  epd::CounterRng rng(2, 0);
  const auto u = epd::sample_haar_unitary(d * d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(epd::ep_from_operator_entanglement(epd::operator_entanglement(u, d, d), d, d));
  }
}
BENCHMARK(BM_EpOperatorEntanglement)->Arg(2)->Arg(4)->Arg(8);

void BM_EpdDenseFourCopy(benchmark::State& state) {
  const auto u = epd::build(epd::make_spec(epd::GateFamily::cnot));
  for (auto _ : state) benchmark::DoNotOptimize(epd::epd_exact_dense(u, 2, 2));
}
BENCHMARK(BM_EpdDenseFourCopy)->Unit(benchmark::kMillisecond);

void BM_EpdCycle(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  epd::CounterRng rng(3, 0);
  const auto u = epd::sample_haar_unitary(d * d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(epd::epd_exact_cycle(u, d, d, {.threads = 1}));
}
BENCHMARK(BM_EpdCycle)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EpdCycleExtended(benchmark::State& state) {
  const auto u = epd::build(epd::make_spec(epd::GateFamily::cnot));
  const epd::CycleOptions options{.threads = 1, .precision = epd::Precision::extended};
  for (auto _ : state) benchmark::DoNotOptimize(epd::epd_exact_cycle(u, 2, 2, options));
}
BENCHMARK(BM_EpdCycleExtended)->Unit(benchmark::kMillisecond);

}  // namespace
