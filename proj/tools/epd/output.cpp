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

#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "epd/errors.hpp"

namespace epd::cli {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

nlohmann::ordered_json reproducible_fields(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["args"] = m.args;
  j["seed"] = m.seed;
  j["version"] = m.version;
  j["params"] = m.params;
  return j;
}

// Arguments that never change results, dropped before hashing.
std::vector<std::string> hashed_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--threads") {
      ++i;
      continue;
    }
    if (args[i].rfind("--threads=", 0) == 0) continue;
    out.push_back(args[i]);
  }
  return out;
}

bool needs_quotes(std::string_view s) { return s.find_first_of(",\"\r\n") != std::string_view::npos; }

std::string csv_field(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) {
    const double v = std::get<double>(cell);
    return std::isfinite(v) ? format_number(v) : "";
  }
  if (std::holds_alternative<std::string>(cell)) {
    const auto& s = std::get<std::string>(cell);
    if (!needs_quotes(s)) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  }
  return "";
}

nlohmann::ordered_json json_value(const Cell& cell) {
  if (std::holds_alternative<double>(cell)) {
    const double v = std::get<double>(cell);
    return std::isfinite(v) ? nlohmann::ordered_json(rounded(v)) : nlohmann::ordered_json(nullptr);
  }
  if (std::holds_alternative<std::string>(cell)) return std::get<std::string>(cell);
  return nullptr;
}

}  // namespace

std::string RunManifest::hash() const {
  char buf[17];
  auto fields = reproducible_fields(*this);
  fields["args"] = hashed_args(args);
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(fields.dump())));
  return buf;
}

nlohmann::ordered_json RunManifest::reproducible_json() const {
  auto j = reproducible_fields(*this);
  j["hash"] = "fnv1a64:" + hash();
  return j;
}

nlohmann::ordered_json RunManifest::sidecar_json() const {
  auto j = reproducible_json();
  j["wall_seconds"] = wall_seconds;
  return j;
}

RunManifest RunManifest::from_json(const nlohmann::ordered_json& j) {
  RunManifest m;
  try {
    m.args = j.at("args").get<std::vector<std::string>>();
    m.command = j.at("command").get<std::string>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.version = j.at("version").get<std::string>();
    m.params = j.at("params");
    if (j.contains("wall_seconds")) m.wall_seconds = j.at("wall_seconds").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  return m;
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw FormatError("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double rounded(double value) { return std::isfinite(value) ? std::stod(format_number(value)) : value; }

void write_csv(std::ostream& os, const RunManifest& manifest, const Table& table) {
  os << "# manifest fnv1a64:" << manifest.hash() << "\r\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_field(table.columns[i]);
  os << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
    os << "\r\n";
  }
}

void write_json(std::ostream& os, const RunManifest& manifest, const Table& table) {
  nlohmann::ordered_json j;
  j["manifest"] = manifest.reproducible_json();
  j["columns"] = table.columns;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) r[table.columns[i]] = json_value(row[i]);
    j["rows"].push_back(std::move(r));
  }
  os << j.dump(2) << '\n';
}

void write_table(std::ostream& os, Format format, const RunManifest& manifest, const Table& table) {
  if (format == Format::csv) {
    write_csv(os, manifest, table);
  } else {
    write_json(os, manifest, table);
  }
}

}  // namespace epd::cli
