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

// Cross-validation suite: each criterion bundles numeric checks of the
// engine against closed forms, literal reference values, the dense oracle,
// Monte Carlo, and algebraic identities.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "epd/tensor.hpp"

namespace epd::tools {

enum class Level { quick, full };

Level parse_level(std::string_view text);
std::string_view level_name(Level level);

/// One comparison |computed − expected| ≤ tolerance.
struct Check {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;

  double delta() const;
  bool passed() const;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  double time_limit = std::numeric_limits<double>::infinity();
  std::string error;  // set when the criterion threw

  bool within_time() const { return seconds <= time_limit; }
  bool passed() const;
  std::size_t failures() const;
};

using EpFunction = std::function<double(const ComplexMatrix&, std::size_t, std::size_t)>;

struct SuiteOptions {
  Level level = Level::quick;
  std::uint64_t seed = 20240611;
  std::size_t mc_samples = 100000;
  std::size_t threads = 0;
  /// Dense two-copy EP used wherever the suite needs it. Replaceable so a
  /// deliberately broken implementation can be shown to fail.
  EpFunction dense_ep;
};

/// Criterion ids run at `level`: quick is {1, 2, 3, 7}, full is 1..8.
std::vector<int> criteria_for(Level level);
std::string_view criterion_title(int id);

/// Runs one criterion. Exceptions are caught and reported as a failure.
CriterionResult run_criterion(int id, const SuiteOptions& options);
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// Table of every check: criterion, name, expected, computed, delta,
/// tolerance, status.
void print_checks(std::ostream& os, const std::vector<CriterionResult>& results);
/// One "PASS"/"FAIL" line per criterion with timing.
void print_summary(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace epd::tools
