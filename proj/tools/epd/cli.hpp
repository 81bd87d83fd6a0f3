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

// The epd command line: compute, sweep, scan-kak, verify and replay.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace epd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitAcceptance = 2;

/// Runs the tool on `args` (without the program name). Results go to `out`,
/// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Real number with an optional multiple of pi: "0.5", "pi", "-pi/4",
/// "3pi/8", "2*pi", "1e-3". Throws FormatError otherwise.
double parse_real(std::string_view text);

}  // namespace epd::cli
