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

#include <cstddef>
#include <span>
#include <vector>

#include "epd/tensor.hpp"

namespace epd {

struct Leg {
  int label = 0;
  std::size_t dim = 0;
};

/// An operator seen as a tensor: rows are indexed by `out` legs, columns by
/// `in` legs, each group in mixed radix with its first leg most significant.
struct NetworkNode {
  ComplexMatrix op;
  std::vector<Leg> out;
  std::vector<Leg> in;
};

/// Dense tensor with labelled axes, row-major over `labels` order.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<int> labels, std::vector<std::size_t> dims, std::vector<Complex> data);

  static Tensor from_node(const NetworkNode& node);

  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::span<const Complex> data() const { return data_; }
  std::size_t rank() const { return labels_.size(); }
  std::size_t size() const { return data_.size(); }

  /// Reorders axes: axis i of the result is axis `order[i]` of this tensor.
  Tensor permuted(std::span<const std::size_t> order) const;
  /// Sums over every label that appears on two axes of this tensor.
  Tensor self_traced() const;

 private:
  std::vector<int> labels_;
  std::vector<std::size_t> dims_;
  std::vector<Complex> data_;
};

/// Contracts two tensors over all labels they share; the result carries the
/// free axes of `a` followed by the free axes of `b`.
Tensor contract_pair(const Tensor& a, const Tensor& b);

/// Arithmetic used inside a contraction. `extended` runs the same schedule
/// in 113-bit binary floating point (roughly 1e-34 unit round-off) and
/// rounds the final scalar back to double; it is far slower.
enum class Precision { standard, extended };

/// Full contraction of a closed network.
///
/// Every label must occur on exactly two legs across all nodes (a node may
/// hold both ends) with equal dimensions; otherwise throws NetworkError.
/// Pairs are contracted greedily by smallest intermediate, ties broken by
/// position, so the schedule is deterministic.
Complex contract_network(std::span<const NetworkNode> nodes, Precision precision = Precision::standard);
Complex contract_network(std::span<const Tensor> tensors, Precision precision = Precision::standard);

}  // namespace epd
