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

#include "epd/tools/studies.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "epd/errors.hpp"

namespace epd::tools {

EpEpdResult evaluate(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const EngineSettings& settings) {
  switch (settings.method) {
    case Method::exact_dense:
      return ep_epd_dense(u, d1, d2);
    case Method::exact_cycle:
      return ep_epd_cycle(u, d1, d2, {.threads = settings.threads});
    case Method::monte_carlo: {
      SamplerConfig cfg = settings.sampler;
      cfg.d1 = d1;
      cfg.d2 = d2;
      cfg.threads = settings.threads;
      return to_result(estimate_ep_epd(u, cfg));
    }
    case Method::closed_form:
      break;
  }
  throw FormatError("closed form needs a catalog gate, not a raw matrix");
}

EpEpdResult evaluate(const GateSpec& spec, const EngineSettings& settings) {
  if (settings.method == Method::closed_form) return closed_form_ep_epd(spec);
  return evaluate(build(spec), spec.d1, spec.d2, settings);
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<double> axis_values(double from, double to, double step) {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
    throw DomainError("grid bounds and step must be finite");
  }
  if (step <= 0.0) throw DomainError("grid step must be positive");
  if (to < from) throw DomainError("grid end lies before its start");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> values(count);
  for (std::size_t i = 0; i < count; ++i) values[i] = from + static_cast<double>(i) * step;
  // Land exactly on the end point when the grid reaches it.
  if (std::abs(values.back() - to) <= 1e-9 * step) values.back() = to;
  return values;
}

bool sweep_supported(GateFamily family) { return !family_parameters(family).empty(); }

std::vector<SweepRow> run_sweep(const SweepRequest& request) {
  if (!sweep_supported(request.family)) {
    throw FormatError(std::string(family_name(request.family)) + " has no parameters to sweep");
  }
  if (request.axes.empty() || request.axes.size() > 2) throw FormatError("sweep takes one or two grid axes");
  const auto& known = family_parameters(request.family);
  std::vector<std::vector<double>> values;
  for (const auto& axis : request.axes) {
    const bool found = std::any_of(known.begin(), known.end(), [&](const auto& p) { return p.name == axis.name; });
    if (!found) {
      throw FormatError(std::string(family_name(request.family)) + " has no parameter '" + axis.name + "'");
    }
    if (request.fixed.contains(axis.name)) throw FormatError("parameter '" + axis.name + "' is both fixed and swept");
    values.push_back(axis_values(axis.from, axis.to, axis.step));
  }
  if (request.axes.size() == 2 && request.axes[0].name == request.axes[1].name) {
    throw FormatError("the two sweep axes must differ");
  }

  const std::size_t inner = values.size() == 2 ? values[1].size() : 1;
  const std::size_t total = values[0].size() * inner;
  std::vector<GateSpec> specs(total);
  std::vector<SweepRow> rows(total);
  // Validate every grid point up front so a bad range fails before any work.
  for (std::size_t i = 0; i < total; ++i) {
    auto params = request.fixed;
    rows[i].params.push_back(values[0][i / inner]);
    params[request.axes[0].name] = values[0][i / inner];
    if (values.size() == 2) {
      rows[i].params.push_back(values[1][i % inner]);
      params[request.axes[1].name] = values[1][i % inner];
    }
    specs[i] = make_spec(request.family, params);
  }

  EngineSettings per_point = request.engine;
  per_point.threads = 1;
  parallel_for(total, request.threads, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.closed = closed_form_ep_epd(specs[i]);
    row.engine = evaluate(specs[i], per_point);
    row.eta = row.closed.ep > 1e-14 ? row.closed.epd / row.closed.ep : std::nan("");
  });
  return rows;
}

std::vector<double> kak_axis(std::size_t resolution) {
  if (resolution < 2) throw DomainError("KAK scan resolution must be at least 2");
  std::vector<double> axis(resolution);
  const double quarter = std::numbers::pi / 4.0;
  for (std::size_t k = 0; k < resolution; ++k) {
    axis[k] = static_cast<double>(k) * quarter / static_cast<double>(resolution - 1);
  }
  return axis;
}

KakScan scan_kak(std::size_t resolution, const EngineSettings& settings, std::size_t threads) {
  const auto axis = kak_axis(resolution);
  const std::size_t n = resolution;
  KakScan scan;
  scan.points.resize(n * n * n);
  EngineSettings per_point = settings;
  per_point.threads = 1;
  parallel_for(scan.points.size(), threads, [&](std::size_t i) {
    KakPoint& p = scan.points[i];
    p.b1 = axis[i / (n * n)];
    p.b2 = axis[(i / n) % n];
    p.b3 = axis[i % n];
    if (settings.method == Method::closed_form) {
      p.ep = kak_ep(p.b1, p.b2, p.b3);
      p.epd = kak_epd(p.b1, p.b2, p.b3);
    } else {
      const auto r = evaluate(make_spec(GateFamily::kak, {{"b1", p.b1}, {"b2", p.b2}, {"b3", p.b3}}), per_point);
      p.ep = r.ep;
      p.epd = r.epd;
    }
  });

  for (const auto& p : scan.points) {
    scan.max_ep = std::max(scan.max_ep, p.ep);
    scan.max_epd = std::max(scan.max_epd, p.epd);
  }
  for (auto& p : scan.points) {
    p.max_ep = p.ep >= scan.max_ep - kBoundSlack;
    p.max_epd = p.epd >= scan.max_epd - kBoundSlack;
    if (p.ep > kKakEpBound - kJointWindow && p.epd > kKakEpdBound - kJointWindow) ++scan.joint_count;
  }
  scan.within_bounds = scan.max_ep <= kKakEpBound + kBoundSlack && scan.max_epd <= kKakEpdBound + kBoundSlack;
  return scan;
}

}  // namespace epd::tools
