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

#include "epd/gates.hpp"
#include "epd/monte_carlo.hpp"
#include "epd/random.hpp"

namespace {

void BM_MonteCarloThroughput(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  epd::CounterRng rng(6, 0);
  const auto u = epd::sample_haar_unitary(d * d, rng);
  epd::SamplerConfig cfg;
  cfg.seed = 1;
  cfg.samples = 20000;
  cfg.d1 = cfg.d2 = d;
  cfg.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(epd::estimate_ep_epd(u, cfg));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * cfg.samples));
}
BENCHMARK(BM_MonteCarloThroughput)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_HaarUnitary(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  epd::CounterRng rng(7, 0);
  for (auto _ : state) benchmark::DoNotOptimize(epd::sample_haar_unitary(n, rng));
}
BENCHMARK(BM_HaarUnitary)->Arg(4)->Arg(16);

}  // namespace
