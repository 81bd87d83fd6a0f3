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

#include "epd/network.hpp"

#include <numeric>
#include <string>

#include "epd/errors.hpp"
#include "tensor_kernel.hpp"

namespace epd {

namespace {

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

detail::DenseTensor<Complex> as_dense(const Tensor& t) {
  return {t.labels(), t.dims(), std::vector<Complex>(t.data().begin(), t.data().end())};
}

Tensor from_dense(detail::DenseTensor<Complex>&& d) {
  return {std::move(d.labels), std::move(d.dims), std::move(d.data)};
}

detail::DenseTensor<detail::QuadComplex> to_quad(const Tensor& t) {
  detail::DenseTensor<detail::QuadComplex> q{t.labels(), t.dims(), {}};
  q.data.reserve(t.size());
  for (const Complex& z : t.data()) q.data.emplace_back(z.real(), z.imag());
  return q;
}

}  // namespace

Tensor::Tensor(std::vector<int> labels, std::vector<std::size_t> dims, std::vector<Complex> data)
    : labels_(std::move(labels)), dims_(std::move(dims)), data_(std::move(data)) {
  if (labels_.size() != dims_.size()) throw NetworkError("Tensor: label/dimension count mismatch");
  if (data_.size() != product(dims_)) throw NetworkError("Tensor: data size does not match dimensions");
}

Tensor Tensor::from_node(const NetworkNode& node) {
  std::vector<int> labels;
  std::vector<std::size_t> dims;
  std::size_t rows = 1, cols = 1;
  for (const Leg& l : node.out) {
    labels.push_back(l.label);
    dims.push_back(l.dim);
    rows *= l.dim;
  }
  for (const Leg& l : node.in) {
    labels.push_back(l.label);
    dims.push_back(l.dim);
    cols *= l.dim;
  }
  if (node.op.rows() != rows || node.op.cols() != cols) {
    throw NetworkError("network node: operator is " + std::to_string(node.op.rows()) + "x" +
                       std::to_string(node.op.cols()) + " but legs imply " + std::to_string(rows) + "x" +
                       std::to_string(cols));
  }
  auto e = node.op.entries();
  return {std::move(labels), std::move(dims), std::vector<Complex>(e.begin(), e.end())};
}

Tensor Tensor::permuted(std::span<const std::size_t> order) const {
  return from_dense(detail::permute(as_dense(*this), order));
}

Tensor Tensor::self_traced() const { return from_dense(detail::self_trace(as_dense(*this))); }

Tensor contract_pair(const Tensor& a, const Tensor& b) {
  return from_dense(detail::contract_two(as_dense(a), as_dense(b)));
}

Complex contract_network(std::span<const Tensor> tensors, Precision precision) {
  if (precision == Precision::extended) {
    std::vector<detail::DenseTensor<detail::QuadComplex>> pool;
    pool.reserve(tensors.size());
    for (const Tensor& t : tensors) pool.push_back(to_quad(t));
    const detail::QuadComplex z = detail::contract_closed(std::move(pool));
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
  }
  std::vector<detail::DenseTensor<Complex>> pool;
  pool.reserve(tensors.size());
  for (const Tensor& t : tensors) pool.push_back(as_dense(t));
  return detail::contract_closed(std::move(pool));
}

Complex contract_network(std::span<const NetworkNode> nodes, Precision precision) {
  std::vector<Tensor> tensors;
  tensors.reserve(nodes.size());
  for (const NetworkNode& n : nodes) tensors.push_back(Tensor::from_node(n));
  return contract_network(std::span<const Tensor>(tensors), precision);
}

namespace detail {

QuadComplex contract_network_quad(std::span<const NetworkNode> nodes) {
  std::vector<DenseTensor<QuadComplex>> pool;
  pool.reserve(nodes.size());
  for (const NetworkNode& n : nodes) pool.push_back(to_quad(Tensor::from_node(n)));
  return contract_closed(std::move(pool));
}

}  // namespace detail

}  // namespace epd
