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

#include <stdexcept>
#include <string>

namespace epd {

/// Shapes or subsystem layouts that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument outside the mathematical domain of an operation
/// (non-unitary input, unnormalized state, zero dimension, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Permutation applied to a layout whose cycles mix unequal local dimensions.
class LayoutError : public DimensionError {
 public:
  using DimensionError::DimensionError;
};

/// Tensor network that is not closed or whose paired legs disagree.
class NetworkError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request that would exceed the memory ceiling of a dense evaluation path.
class FeasibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not; indicates a bug, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed external input (matrix files, cycle strings, catalog names).
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace epd
