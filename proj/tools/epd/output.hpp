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

// Run manifests and tabular output shared by all commands.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

namespace epd::cli {

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

/// Everything needed to reproduce a run. The hash covers every field except
/// the wall time, so identical requests share one hash.
struct RunManifest {
  std::vector<std::string> args;  // command line without the program name
  std::string command;
  std::uint64_t seed = 0;
  std::string version;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  double wall_seconds = 0.0;

  std::string hash() const;
  /// Reproducible fields plus the hash; embedded in output files.
  nlohmann::ordered_json reproducible_json() const;
  /// reproducible_json() plus the wall time; written next to output files.
  nlohmann::ordered_json sidecar_json() const;
  /// Reads a sidecar. Throws FormatError on missing fields.
  static RunManifest from_json(const nlohmann::ordered_json& j);
};

/// A table cell: number, text, or empty (NaN-like "not defined").
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };
Format parse_format(std::string_view text);

/// %.12g; non-finite values print as "nan"/"inf".
std::string format_number(double value);
/// The number as it appears in output: rounded to 12 significant digits.
double rounded(double value);

/// RFC 4180 CSV preceded by "# manifest fnv1a64:<hash>".
void write_csv(std::ostream& os, const RunManifest& manifest, const Table& table);
/// {"manifest": ..., "columns": [...], "rows": [{column: value}]}.
void write_json(std::ostream& os, const RunManifest& manifest, const Table& table);
void write_table(std::ostream& os, Format format, const RunManifest& manifest, const Table& table);

}  // namespace epd::cli
