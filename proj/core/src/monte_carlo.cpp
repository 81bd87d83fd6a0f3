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

#include "epd/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <span>
#include <thread>
#include <vector>

#include "epd/errors.hpp"
#include "epd/random.hpp"

namespace epd {

namespace {

struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;  // Σ (x − mean)²
};

Moments merge(const Moments& a, const Moments& b) {
  if (a.n == 0.0) return b;
  if (b.n == 0.0) return a;
  const double n = a.n + b.n;
  const double delta = b.mean - a.mean;
  return {n, a.mean + delta * (b.n / n), a.m2 + b.m2 + delta * delta * (a.n * b.n / n)};
}

Moments tree_merge(std::span<const Moments> parts) {
  if (parts.empty()) return {};
  if (parts.size() == 1) return parts.front();
  const std::size_t half = parts.size() / 2;
  return merge(tree_merge(parts.first(half)), tree_merge(parts.subspan(half)));
}

Moments run_block(const ComplexMatrix& u, const SamplerConfig& cfg, std::size_t begin, std::size_t end) {
  const std::size_t d1 = cfg.d1, d2 = cfg.d2, n = d1 * d2;
  std::vector<Complex> a(d1), b(d2), in(n), out(n);
  Moments m;
  for (std::size_t i = begin; i < end; ++i) {
    CounterRng rng(cfg.seed, i);
    sample_haar_vector(rng, a);
    sample_haar_vector(rng, b);
    for (std::size_t x = 0; x < d1; ++x)
      for (std::size_t y = 0; y < d2; ++y) in[x * d2 + y] = a[x] * b[y];
    for (std::size_t r = 0; r < n; ++r) {
      Complex acc = 0.0;
      for (std::size_t c = 0; c < n; ++c) acc += u(r, c) * in[c];
      out[r] = acc;
    }
    double e = linear_entropy(out, d1, d2);
    if (std::abs(e) < kEntropyFloor) e = 0.0;
    // Welford update.
    m.n += 1.0;
    const double delta = e - m.mean;
    m.mean += delta / m.n;
    m.m2 += delta * (e - m.mean);
  }
  return m;
}

}  // namespace

McEstimate estimate_ep_epd(const ComplexMatrix& u, const SamplerConfig& cfg) {
  if (cfg.samples < 2) throw DomainError("estimate_ep_epd: need at least 2 samples for a variance");
  require_unitary(u, cfg.d1, cfg.d2);

  const std::size_t blocks = (cfg.samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<Moments> parts(blocks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < blocks; k = next++) {
      const std::size_t begin = k * kSampleBlock;
      parts[k] = run_block(u, cfg, begin, std::min(cfg.samples, begin + kSampleBlock));
    }
  };
  std::size_t threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  threads = std::min(threads, blocks);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  const Moments total = tree_merge(parts);
  McEstimate e;
  e.n = cfg.samples;
  e.mean = total.mean;
  e.std = std::sqrt(std::max(total.m2, 0.0) / (total.n - 1.0));
  e.se_mean = e.std / std::sqrt(total.n);
  e.se_std = e.std / std::sqrt(2.0 * (total.n - 1.0));
  return e;
}

EpEpdResult to_result(const McEstimate& e) { return {e.mean, e.std, Method::monte_carlo, e.se_mean, e.se_std}; }

}  // namespace epd
