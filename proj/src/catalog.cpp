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

#include "xichar/catalog.hpp"

#include <array>
#include <cctype>
#include <functional>
#include <numeric>

#include "xichar/errors.hpp"

namespace xichar {

namespace {

constexpr int kMaxSymmetricDegree = 8;
constexpr int kMaxFamilyParameter = 100000;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void validate(const FamilyFactor& f, std::size_t pos) {
  switch (f.family) {
    case Family::Cyclic:
    case Family::Dihedral:
      if (f.n < 1) throw UnsupportedFamily(f.name() + ": parameter must be at least 1");
      break;
    case Family::Symmetric:
    case Family::Alternating:
      if (f.n < 1 || f.n > kMaxSymmetricDegree)
        throw UnsupportedFamily(f.name() + ": degree must be between 1 and 8");
      break;
    case Family::Quaternion:
      if (!is_power_of_two(f.n) || f.n < 8 || f.n > 64)
        throw UnsupportedFamily(f.name() + ": order must be a power of 2 between 8 and 64");
      break;
    case Family::SL23:
      break;
  }
  (void)pos;
}

// Right regular representation of a group given by its multiplication.
std::vector<Permutation> regular_generators(std::size_t size,
                                            const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                            const std::vector<std::size_t>& gens) {
  std::vector<Permutation> out;
  for (std::size_t g : gens) {
    std::vector<Point> images(size);
    for (std::size_t x = 0; x < size; ++x) images[x] = static_cast<Point>(mul(x, g));
    out.emplace_back(std::move(images));
  }
  return out;
}

GroupDescription describe_factor(const FamilyFactor& f) {
  GroupDescription d;
  const auto n = static_cast<std::size_t>(f.n);
  switch (f.family) {
    case Family::Cyclic: {
      d.degree = n;
      if (n > 1) {
        std::vector<Point> cycle(n);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        d.generators.push_back(Permutation::from_cycle_list(n, {cycle}));
      }
      break;
    }
    case Family::Dihedral: {
      // Symmetries of a regular n-gon; n = 1, 2 have no faithful n-point action.
      if (n == 1) {
        d.degree = 2;
        d.generators.push_back(Permutation::from_cycle_list(2, {{0, 1}}));
      } else if (n == 2) {
        d.degree = 4;
        d.generators.push_back(Permutation::from_cycle_list(4, {{0, 1}}));
        d.generators.push_back(Permutation::from_cycle_list(4, {{2, 3}}));
      } else {
        d.degree = n;
        std::vector<Point> rot(n), refl(n);
        for (std::size_t i = 0; i < n; ++i) {
          rot[i] = static_cast<Point>((i + 1) % n);
          refl[i] = static_cast<Point>((n - i) % n);
        }
        d.generators.emplace_back(std::move(rot));
        d.generators.emplace_back(std::move(refl));
      }
      break;
    }
    case Family::Symmetric: {
      d.degree = n;
      if (n >= 2) {
        std::vector<Point> cycle(n);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        d.generators.push_back(Permutation::from_cycle_list(n, {cycle}));
        d.generators.push_back(Permutation::from_cycle_list(n, {{0, 1}}));
      }
      break;
    }
    case Family::Alternating: {
      d.degree = n;
      for (std::size_t i = 2; i < n; ++i)
        d.generators.push_back(Permutation::from_cycle_list(n, {{0, 1, static_cast<Point>(i)}}));
      break;
    }
    case Family::Quaternion: {
      // <a, b | a^(n/2) = 1, b^2 = a^(n/4), b^-1 a b = a^-1>, element a^i b^j <-> i + j*h.
      const std::size_t h = n / 2;
      auto mul = [h](std::size_t x, std::size_t y) {
        const std::size_t i1 = x % h, j1 = x / h, i2 = y % h, j2 = y / h;
        if (j1 == 0) return (i1 + i2) % h + j2 * h;
        const std::size_t i = (i1 + h - i2) % h;
        if (j2 == 0) return i + h;
        return (i + h / 2) % h;
      };
      d.degree = n;
      d.generators = regular_generators(n, mul, {1, h});
      break;
    }
    case Family::SL23: {
      using M = std::array<int, 4>;  // row-major 2x2 over F_3
      std::vector<M> elems;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c)
            for (int e = 0; e < 3; ++e)
              if (((a * e - b * c) % 3 + 3) % 3 == 1) elems.push_back({a, b, c, e});
      auto index = [&](const M& m) {
        for (std::size_t i = 0; i < elems.size(); ++i)
          if (elems[i] == m) return i;
        throw InternalError("SL(2,3) product left the group");
      };
      auto mul = [&](std::size_t x, std::size_t y) {
        const M& p = elems[x];
        const M& q = elems[y];
        const M r{(p[0] * q[0] + p[1] * q[2]) % 3, (p[0] * q[1] + p[1] * q[3]) % 3,
                  (p[2] * q[0] + p[3] * q[2]) % 3, (p[2] * q[1] + p[3] * q[3]) % 3};
        return index(r);
      };
      d.degree = elems.size();
      d.generators = regular_generators(elems.size(), mul, {index({1, 1, 0, 1}), index({0, 2, 1, 0})});
      break;
    }
  }
  return d;
}

}  // namespace

std::string FamilyFactor::name() const {
  switch (family) {
    case Family::Cyclic: return "C:" + std::to_string(n);
    case Family::Dihedral: return "D:" + std::to_string(n);
    case Family::Symmetric: return "S:" + std::to_string(n);
    case Family::Alternating: return "A:" + std::to_string(n);
    case Family::Quaternion: return "Q:" + std::to_string(n);
    case Family::SL23: return "SL23";
  }
  return "?";
}

std::string GroupSpecifier::canonical_name() const {
  if (file) return "file:" + file->string();
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += 'x';
    out += factors[i].name();
  }
  return out;
}

GroupSpecifier parse_specifier(std::string_view text) {
  GroupSpecifier spec;
  constexpr std::string_view kFile = "file:";
  if (text.substr(0, kFile.size()) == kFile) {
    if (text.size() == kFile.size()) throw ParseError("empty file path", kFile.size());
    spec.file = std::filesystem::path(std::string(text.substr(kFile.size())));
    return spec;
  }

  std::size_t i = 0;
  for (;;) {
    const std::size_t start = i;
    if (text.substr(i, 4) == "SL23") {
      spec.factors.push_back({Family::SL23, 24});
      i += 4;
    } else {
      if (i >= text.size()) throw ParseError("expected a group family", i);
      Family fam;
      switch (text[i]) {
        case 'C': fam = Family::Cyclic; break;
        case 'D': fam = Family::Dihedral; break;
        case 'S': fam = Family::Symmetric; break;
        case 'A': fam = Family::Alternating; break;
        case 'Q': fam = Family::Quaternion; break;
        default:
          if (std::isalpha(static_cast<unsigned char>(text[i])))
            throw UnsupportedFamily(std::string("unknown group family '") + text[i] + "'");
          throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
      }
      ++i;
      if (i >= text.size() || text[i] != ':') throw ParseError("expected ':' after family letter", i);
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a number", i);
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > kMaxFamilyParameter) throw UnsupportedFamily("family parameter too large");
        ++i;
      }
      FamilyFactor f{fam, static_cast<int>(value)};
      validate(f, start);
      spec.factors.push_back(f);
    }
    if (i == text.size()) break;
    if (text[i] != 'x') throw ParseError(std::string("unexpected character '") + text[i] + "'", i);
    ++i;
  }
  return spec;
}

GroupDescription describe(const GroupSpecifier& spec) {
  if (spec.file) return load_group_description(*spec.file);
  GroupDescription out;
  std::vector<GroupDescription> parts;
  for (const auto& f : spec.factors) {
    parts.push_back(describe_factor(f));
    out.degree += parts.back().degree;
  }
  std::size_t shift = 0;
  for (const auto& part : parts) {
    for (const auto& g : part.generators) out.generators.push_back(g.embedded(out.degree, shift));
    shift += part.degree;
  }
  return out;
}

GroupPtr build_group(const GroupSpecifier& spec, std::size_t cap) {
  GroupDescription d = describe(spec);
  return std::make_shared<const FiniteGroup>(FiniteGroup::close(d.degree, std::move(d.generators), cap));
}

std::vector<GroupSpecifier> default_catalog() {
  std::vector<GroupSpecifier> out;
  auto single = [](Family f, int n) { return GroupSpecifier{{FamilyFactor{f, n}}, std::nullopt}; };
  for (int n = 1; n <= 64; ++n) out.push_back(single(Family::Cyclic, n));
  for (int n = 1; n <= 64; ++n) out.push_back(single(Family::Dihedral, n));
  for (int n = 1; n <= 6; ++n) out.push_back(single(Family::Symmetric, n));
  for (int n = 1; n <= 6; ++n) out.push_back(single(Family::Alternating, n));
  for (int n : {8, 16, 32}) out.push_back(single(Family::Quaternion, n));
  out.push_back(single(Family::SL23, 24));
  for (int m = 2; m * m <= 64; ++m)
    for (int n = m; m * n <= 64; ++n)
      out.push_back(GroupSpecifier{{FamilyFactor{Family::Cyclic, m}, FamilyFactor{Family::Cyclic, n}}, std::nullopt});
  return out;
}

}  // namespace xichar
