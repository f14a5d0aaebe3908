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

#include "xichar/group_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "xichar/errors.hpp"

namespace xichar {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

GroupDescription parse_group_description(std::string_view text) {
  GroupDescription desc;
  bool have_degree = false;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    auto eol = text.find('\n', offset);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(offset, eol - offset);
    const std::size_t line_start = offset;
    offset = eol + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto lead = line.find_first_not_of(" \t\r");
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t pos = line_start + lead;

    if (!have_degree) {
      constexpr std::string_view kKeyword = "degree";
      if (line.substr(0, kKeyword.size()) != kKeyword)
        throw ParseError("expected header line 'degree N'", pos);
      auto rest = trim(line.substr(kKeyword.size()));
      std::size_t degree = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), degree);
      if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
        throw ParseError("invalid degree '" + std::string(rest) + "'", pos);
      if (degree < 1) throw ParseError("degree must be at least 1", pos);
      desc.degree = degree;
      have_degree = true;
      continue;
    }

    try {
      desc.generators.push_back(Permutation::from_cycles(desc.degree, line));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad generator '") + std::string(line) + "': " + e.what(),
                       pos + e.position());
    }
  }
  if (!have_degree) throw ParseError("missing header line 'degree N'", 0);
  return desc;
}

GroupDescription load_group_description(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open group file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_description(buf.str());
}

std::string format_group_description(const GroupDescription& desc) {
  std::ostringstream os;
  os << "degree " << desc.degree << '\n';
  for (const auto& g : desc.generators) os << g.to_cycle_string() << '\n';
  return os.str();
}

}  // namespace xichar
