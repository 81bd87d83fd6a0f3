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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "epd/tensor.hpp"

namespace epd {

/// Operator read from disk together with its bipartition.
struct BipartiteOperator {
  ComplexMatrix matrix;
  SubsystemLayout layout;  // always two subsystems (d1, d2)
};

/// Parses {"dims": [d1, d2], "re": [[...]], "im": [[...]]}.
///
/// "dims" is mandatory. "im" may be omitted for real matrices. Throws
/// FormatError for malformed JSON, ragged rows, a non-square matrix, or when
/// d1·d2 differs from the matrix dimension.
BipartiteOperator parse_matrix_json(std::string_view text);
BipartiteOperator read_matrix_file(const std::filesystem::path& path);

std::string to_matrix_json(const ComplexMatrix& m, std::size_t d1, std::size_t d2);

}  // namespace epd
