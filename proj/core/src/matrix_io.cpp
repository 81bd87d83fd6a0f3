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

#include "epd/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "epd/errors.hpp"

namespace epd {

namespace {

using nlohmann::json;

std::vector<std::vector<double>> read_rows(const json& j, const char* key) {
  if (!j.is_array()) throw FormatError(std::string("matrix file: \"") + key + "\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError(std::string("matrix file: \"") + key + "\" rows must be arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw FormatError(std::string("matrix file: non-numeric entry in \"") + key + "\"");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

BipartiteOperator parse_matrix_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("matrix file: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("matrix file: top level must be an object");
  if (!j.contains("dims")) throw FormatError("matrix file: missing mandatory \"dims\"");
  if (!j.contains("re")) throw FormatError("matrix file: missing \"re\"");

  const auto& jd = j["dims"];
  if (!jd.is_array() || jd.size() != 2 || !jd[0].is_number_unsigned() || !jd[1].is_number_unsigned()) {
    throw FormatError("matrix file: \"dims\" must be [d1, d2] with positive integers");
  }
  const auto d1 = jd[0].get<std::size_t>();
  const auto d2 = jd[1].get<std::size_t>();
  if (d1 == 0 || d2 == 0) throw FormatError("matrix file: dimensions must be positive");

  const auto re = read_rows(j["re"], "re");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) im = read_rows(j["im"], "im");

  const std::size_t n = re.size();
  if (n != d1 * d2) {
    throw FormatError("matrix file: dims " + std::to_string(d1) + "x" + std::to_string(d2) +
                      " do not match matrix dimension " + std::to_string(n));
  }
  if (!im.empty() && im.size() != n) throw FormatError("matrix file: \"re\" and \"im\" differ in row count");

  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (re[r].size() != n || (!im.empty() && im[r].size() != n)) {
      throw FormatError("matrix file: row " + std::to_string(r) + " has the wrong length (matrix must be square)");
    }
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(re[r][c], im.empty() ? 0.0 : im[r][c]);
  }
  return {std::move(m), SubsystemLayout{d1, d2}};
}

BipartiteOperator read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open matrix file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_json(ss.str());
}

std::string to_matrix_json(const ComplexMatrix& m, std::size_t d1, std::size_t d2) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ri = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ri.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  json j;
  j["dims"] = {d1, d2};
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

}  // namespace epd
