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

#include "epd/network.hpp"
#include "epd/permutation.hpp"
#include "epd/random.hpp"
#include "epd/trace_terms.hpp"

namespace {

// One four-copy sandwich trace with a long cycle structure.
void BM_ContractSandwich(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  epd::CounterRng rng(4, 0);
  const auto u = epd::sample_haar_unitary(d * d, rng);
  const auto sigma = epd::Permutation::parse("(1357)(2864)", 8);
  const auto tau = epd::Permutation::parse("(13)(57)", 8);
  const auto nodes = epd::sandwich_network(u, d, d, sigma, tau);
  for (auto _ : state) benchmark::DoNotOptimize(epd::contract_network(nodes));
}
BENCHMARK(BM_ContractSandwich)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

void BM_ContractSandwichExtended(benchmark::State& state) {
  epd::CounterRng rng(5, 0);
  const auto u = epd::sample_haar_unitary(4, rng);
  const auto sigma = epd::Permutation::parse("(1357)(2864)", 8);
  const auto tau = epd::Permutation::parse("(13)(57)", 8);
  const auto nodes = epd::sandwich_network(u, 2, 2, sigma, tau);
  for (auto _ : state) benchmark::DoNotOptimize(epd::contract_network(nodes, epd::Precision::extended));
}
BENCHMARK(BM_ContractSandwichExtended);

void BM_GroupTerms(benchmark::State& state) {
  const auto terms = epd::moment_terms(4, epd::Permutation::parse("(13)(57)", 8));
  for (auto _ : state) benchmark::DoNotOptimize(epd::group_terms(terms));
}
BENCHMARK(BM_GroupTerms)->Unit(benchmark::kMillisecond);

}  // namespace
