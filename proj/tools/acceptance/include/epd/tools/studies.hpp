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

// Parameter sweeps and the KAK cube scan shared by the CLI and the
// acceptance suite.

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "epd/engine.hpp"
#include "epd/gates.hpp"
#include "epd/monte_carlo.hpp"

namespace epd::tools {

/// Evaluation settings for a non-closed-form method.
struct EngineSettings {
  Method method = Method::exact_cycle;
  SamplerConfig sampler{};
  /// Threads for one evaluation; 0 picks the hardware concurrency.
  std::size_t threads = 0;
};

/// EP/EPD of `u` by `settings.method`. Closed form is not available here
/// (it needs a GateSpec) and throws FormatError.
EpEpdResult evaluate(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const EngineSettings& settings);

/// EP/EPD of a catalog gate; handles the closed form too.
EpEpdResult evaluate(const GateSpec& spec, const EngineSettings& settings);

/// Runs body(i) for i in [0, n) on up to `threads` workers (0 = hardware
/// concurrency). Each index is visited exactly once.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& body);

/// from, from+step, ... up to `to` inclusive (with 1e-9·step slack). Throws
/// DomainError for a non-positive step, to < from or non-finite bounds.
std::vector<double> axis_values(double from, double to, double step);

struct GridAxis {
  std::string name;
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;
};

struct SweepRequest {
  GateFamily family = GateFamily::cp;
  std::map<std::string, double> fixed;  // parameters held constant
  std::vector<GridAxis> axes;           // one or two, first axis outermost
  EngineSettings engine{};
  std::size_t threads = 0;              // workers across grid points
};

struct SweepRow {
  std::vector<double> params;  // one value per axis
  EpEpdResult closed;
  EpEpdResult engine;
  double eta = std::nan("");   // closed-form epd/ep; NaN when ep vanishes
};

/// Families with at least one sweepable parameter.
bool sweep_supported(GateFamily family);

/// Evaluates the closed form and the engine on the grid; rows come back in
/// grid order. Throws FormatError for unsupported families, axis names the
/// family lacks, or a wrong axis count.
std::vector<SweepRow> run_sweep(const SweepRequest& request);

inline const double kKakEpBound = 2.0 / 9.0;
inline const double kKakEpdBound = 1.0 / (3.0 * std::sqrt(5.0));
/// Slack on the bound checks.
inline constexpr double kBoundSlack = 1e-9;
/// Points within this of both bounds count as attaining both maxima.
inline constexpr double kJointWindow = 1e-6;

struct KakPoint {
  double b1 = 0.0, b2 = 0.0, b3 = 0.0;
  double ep = 0.0;
  double epd = 0.0;
  bool max_ep = false;   // within kBoundSlack of the grid maximum
  bool max_epd = false;
};

struct KakScan {
  std::vector<KakPoint> points;  // b1 outermost, b3 innermost
  double max_ep = 0.0;
  double max_epd = 0.0;
  std::size_t joint_count = 0;   // points near both bounds at once
  bool within_bounds = true;
};

/// Axis values k·(π/4)/(resolution−1), k = 0..resolution−1.
std::vector<double> kak_axis(std::size_t resolution);

/// Scans [0, π/4]³ at `resolution` points per axis. Closed form by
/// default; any engine method may be requested instead. Throws DomainError
/// for resolution < 2.
KakScan scan_kak(std::size_t resolution, const EngineSettings& settings = {Method::closed_form, {}, 0},
                 std::size_t threads = 0);

}  // namespace epd::tools
