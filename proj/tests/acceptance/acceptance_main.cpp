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


// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exits nonzero when any criterion fails.

#include <iostream>

#include "epd/tools/acceptance.hpp"

int main() {
  epd::tools::SuiteOptions options;
  options.level = epd::tools::Level::full;
  const auto results = epd::tools::run_suite(options);
  epd::tools::print_checks(std::cout, results);
  std::cout << '\n';
  epd::tools::print_summary(std::cout, results);
  for (const auto& r : results)
    if (!r.passed()) return 1;
  return 0;
}
