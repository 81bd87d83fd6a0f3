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

#include "epd/trace_terms.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "epd/errors.hpp"
#include "epd/group_sum.hpp"

namespace epd {

namespace {

std::size_t copies_of(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw DimensionError("trace term: sigma and tau differ in degree");
  if (sigma.degree() == 0 || sigma.degree() % 2 != 0) {
    throw DimensionError("trace term: degree must be a positive even number of wires");
  }
  return sigma.degree() / 2;
}

}  // namespace

std::vector<NetworkNode> sandwich_network(const ComplexMatrix& u, std::size_t d1, std::size_t d2,
                                          const Permutation& sigma, const Permutation& tau) {
  const std::size_t copies = copies_of(sigma, tau);
  if (u.rows() != d1 * d2 || u.cols() != d1 * d2) {
    throw DimensionError("sandwich_network: operator is " + std::to_string(u.rows()) + "x" +
                         std::to_string(u.cols()) + ", expected " + std::to_string(d1 * d2) + "-square");
  }
  const auto layout = SubsystemLayout::alternating(d1, d2, copies);
  check_layout_compatible(sigma, layout);
  check_layout_compatible(tau, layout);

  const std::size_t wires = 2 * copies;
  const auto sigma_inv = sigma.inverse();
  const auto tau_inv = tau.inverse();
  // Output wires of U carry labels [0, wires); output wires of U† carry
  // [wires, 2·wires). Inputs are glued through the permutations.
  auto out_u = [&](std::size_t m) { return static_cast<int>(m); };
  auto out_udag = [&](std::size_t m) { return static_cast<int>(wires + m); };
  auto in_u = [&](std::size_t m) { return out_udag(sigma_inv(m)); };
  auto in_udag = [&](std::size_t m) { return out_u(tau_inv(m)); };

  const ComplexMatrix udag = u.adjoint();
  std::vector<NetworkNode> nodes;
  nodes.reserve(2 * copies);
  for (std::size_t c = 0; c < copies; ++c) {
    const std::size_t a = 2 * c, b = 2 * c + 1;
    nodes.push_back({u, {{out_u(a), d1}, {out_u(b), d2}}, {{in_u(a), d1}, {in_u(b), d2}}});
    nodes.push_back({udag, {{out_udag(a), d1}, {out_udag(b), d2}}, {{in_udag(a), d1}, {in_udag(b), d2}}});
  }
  return nodes;
}

Complex sandwich_trace(const ComplexMatrix& u, std::size_t d1, std::size_t d2, const Permutation& sigma,
                       const Permutation& tau, Precision precision) {
  const auto nodes = sandwich_network(u, d1, d2, sigma, tau);
  return contract_network(std::span<const NetworkNode>(nodes), precision);
}

std::vector<TraceTerm> moment_terms(std::size_t copies, const Permutation& tau) {
  const std::size_t wires = 2 * copies;
  if (tau.degree() != wires) throw DimensionError("moment_terms: tau has the wrong degree");
  std::vector<std::size_t> even, odd;
  for (std::size_t c = 0; c < copies; ++c) {
    even.push_back(2 * c);
    odd.push_back(2 * c + 1);
  }
  const auto first = permutations_of(wires, even);
  const auto second = permutations_of(wires, odd);
  std::vector<TraceTerm> terms;
  terms.reserve(first.size() * second.size());
  for (const auto& p : first)
    for (const auto& q : second) terms.push_back({compose(p, q), tau, Rational(1)});
  return terms;
}

std::vector<TermClass> group_terms(std::span<const TraceTerm> terms) {
  if (terms.empty()) return {};
  const std::size_t copies = copies_of(terms.front().sigma, terms.front().tau);
  const std::size_t wires = 2 * copies;

  // Copy relabelings lifted to wires: copy c → g(c) moves wire 2c+p to 2g(c)+p.
  std::vector<Permutation> lifts;
  for (const auto& g : all_permutations(copies)) {
    std::vector<std::size_t> img(wires);
    for (std::size_t m = 0; m < wires; ++m) img[m] = 2 * g(m / 2) + m % 2;
    lifts.emplace_back(std::move(img));
  }
  std::vector<Permutation> lift_inv;
  for (const auto& l : lifts) lift_inv.push_back(l.inverse());

  using Key = std::vector<std::size_t>;
  auto key_of = [&](const Permutation& s, const Permutation& t) {
    Key best;
    const Permutation si = s.inverse(), ti = t.inverse();
    for (std::size_t g = 0; g < lifts.size(); ++g) {
      for (int flip = 0; flip < 2; ++flip) {
        const Permutation& a = flip ? si : s;
        const Permutation& b = flip ? ti : t;
        const auto ca = compose(lifts[g], compose(a, lift_inv[g]));
        const auto cb = compose(lifts[g], compose(b, lift_inv[g]));
        Key k = ca.image();
        k.insert(k.end(), cb.image().begin(), cb.image().end());
        if (best.empty() || k < best) best = std::move(k);
      }
    }
    return best;
  };

  std::map<Key, TermClass> classes;
  for (const auto& term : terms) {
    if (copies_of(term.sigma, term.tau) != copies) throw DimensionError("group_terms: mixed term degrees");
    auto [it, inserted] = classes.try_emplace(key_of(term.sigma, term.tau), TermClass{term, 0});
    if (!inserted && it->second.representative.coefficient != term.coefficient) {
      throw ConsistencyError("group_terms: equivalent terms carry different coefficients");
    }
    ++it->second.multiplicity;
  }
  std::vector<TermClass> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

Complex cycle_trace(std::span<const ComplexMatrix> factors, const Permutation& p) {
  if (factors.size() != p.degree()) {
    throw DimensionError("cycle_trace: " + std::to_string(factors.size()) + " factors for a permutation of degree " +
                         std::to_string(p.degree()));
  }
  if (factors.empty()) return 1.0;
  const std::size_t n = factors.front().rows();
  for (const auto& f : factors)
    if (f.rows() != n || f.cols() != n) throw DimensionError("cycle_trace: factors must be square of equal size");

  // Walking each cycle of p⁻¹ from its smallest point yields l, p⁻¹(l), ...
  Complex result = 1.0;
  for (const auto& cycle : p.inverse().cycles(true)) {
    ComplexMatrix acc = factors[cycle.front()];
    for (std::size_t i = 1; i < cycle.size(); ++i) acc = acc * factors[cycle[i]];
    result *= trace(acc);
  }
  return result;
}

double tree_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() == 1) return values.front();
  const std::size_t half = values.size() / 2;
  return tree_sum(values.first(half)) + tree_sum(values.subspan(half));
}

}  // namespace epd
