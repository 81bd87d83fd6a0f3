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

#include "epd/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "epd/errors.hpp"

namespace epd {

Permutation::Permutation(std::size_t degree) : image_(degree) {
  std::iota(image_.begin(), image_.end(), std::size_t{0});
}

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v]) throw FormatError("Permutation: image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(std::size_t degree, std::size_t a, std::size_t b) {
  if (a >= degree || b >= degree) throw FormatError("Permutation: transposition point out of range");
  Permutation p(degree);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree, std::span<const Cycle> cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const Cycle& c : cycles) {
    for (std::size_t v : c) {
      if (v >= degree) {
        throw FormatError("Permutation: point " + std::to_string(v + 1) + " exceeds degree " +
                          std::to_string(degree));
      }
      if (used[v]) throw FormatError("Permutation: point " + std::to_string(v + 1) + " repeated in cycles");
      used[v] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) p.image_[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw FormatError("Permutation: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    const auto close = text.find(')', i);
    if (close == std::string_view::npos) throw FormatError("Permutation: unbalanced '(' in \"" + std::string(text) + "\"");
    const std::string_view body = text.substr(i, close - i);
    const bool separated = body.find_first_of(", ") != std::string_view::npos;
    if (!separated && degree > 9 && body.size() > 1) {
      throw FormatError("Permutation: degree > 9 needs separators inside cycles");
    }
    Cycle c;
    std::size_t k = 0;
    while (k < body.size()) {
      if (body[k] == ',' || std::isspace(static_cast<unsigned char>(body[k]))) {
        ++k;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[k]))) {
        throw FormatError("Permutation: unexpected character '" + std::string(1, body[k]) + "'");
      }
      std::size_t v = 0;
      if (separated) {
        while (k < body.size() && std::isdigit(static_cast<unsigned char>(body[k]))) v = v * 10 + (body[k++] - '0');
      } else {
        v = static_cast<std::size_t>(body[k++] - '0');
      }
      if (v == 0) throw FormatError("Permutation: points are 1-based");
      c.push_back(v - 1);
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    i = close + 1;
    skip_space();
  }
  return from_cycles(degree, cycles);
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = i;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

std::vector<Permutation::Cycle> Permutation::cycles(bool include_fixed) const {
  std::vector<Cycle> out;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (std::size_t v = start; !seen[v]; v = image_[v]) {
      seen[v] = true;
      c.push_back(v);
    }
    if (include_fixed || c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

int Permutation::sign() const {
  const std::size_t parity = (degree() - cycle_count()) % 2;
  return parity == 0 ? 1 : -1;
}

std::string Permutation::to_string() const {
  const auto cs = cycles(false);
  if (cs.empty()) return "()";
  const bool sep = degree() > 9;
  std::string s;
  for (const Cycle& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sep && i > 0) s += ',';
      s += std::to_string(c[i] + 1);
    }
    s += ')';
  }
  return s;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < image_.size()) throw FormatError("Permutation::extended: cannot shrink");
  Permutation p(degree);
  std::copy(image_.begin(), image_.end(), p.image_.begin());
  return p;
}

Permutation Permutation::embedded(std::size_t degree, std::span<const std::size_t> map) const {
  if (map.size() != image_.size()) throw FormatError("Permutation::embedded: map has wrong length");
  Permutation p(degree);
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (map[i] >= degree) throw FormatError("Permutation::embedded: target out of range");
    p.image_[map[i]] = map[image_[i]];
  }
  // Validate that the result is still a bijection (map injective).
  return Permutation(p.image_);
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw FormatError("compose: degree mismatch");
  std::vector<std::size_t> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<std::size_t> img(degree);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> permutations_of(std::size_t degree, std::span<const std::size_t> points) {
  std::vector<Permutation> out;
  for (const Permutation& local : all_permutations(points.size())) out.push_back(local.embedded(degree, points));
  return out;
}

}  // namespace epd
