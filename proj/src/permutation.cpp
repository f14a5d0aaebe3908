// Copyright 2026 The xichar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xichar/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "xichar/errors.hpp"

namespace xichar {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidPermutation("image array is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycle_list(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point from = cycle[i];
      if (from >= degree)
        throw InvalidPermutation("point " + std::to_string(from) +
                                 " out of range for degree " +
                                 std::to_string(degree));
      if (used[from])
        throw InvalidPermutation("point " + std::to_string(from) +
                                 " appears twice; cycles must be disjoint");
      used[from] = true;
      images[from] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", i);
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw ParseError("unterminated cycle", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > 0xffffffffu) throw ParseError("point index too large", i);
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return from_cycle_list(degree, cycles);
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(std::int64_t k) const {
  const auto n = images_.size();
  Permutation out = identity(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    cycle.clear();
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      cycle.push_back(p);
    }
    const auto len = static_cast<std::int64_t>(cycle.size());
    const auto shift = ((k % len) + len) % len;
    for (std::int64_t j = 0; j < len; ++j) out.images_[cycle[j]] = cycle[(j + shift) % len];
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start]) continue;
    std::uint64_t len = 0;
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::embedded(std::size_t new_degree, std::size_t shift) const {
  Permutation out = identity(new_degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    out.images_[i + shift] = static_cast<Point>(images_[i] + shift);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream os;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    os << '(';
    bool first = true;
    for (Point p = static_cast<Point>(start); !done[p]; p = images_[p]) {
      done[p] = true;
      if (!first) os << ' ';
      os << p;
      first = false;
    }
    os << ')';
    any = true;
  }
  if (!any) return "()";
  return os.str();
}

}  // namespace xichar
