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


#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "test_util.hpp"
#include "xichar/errors.hpp"
#include "xichar/report.hpp"

namespace xichar {
namespace {

using testing::group;

TEST(Specifier, RoundTrips) {
  for (const char* text : {"C:6", "D:3", "S:8", "A:1", "Q:64", "SL23", "C:3xC:4", "SL23xC:2", "Q:8xD:4xC:1"}) {
    const auto spec = parse_specifier(text);
    EXPECT_EQ(spec.canonical_name(), text);
    EXPECT_EQ(parse_specifier(spec.canonical_name()), spec);
  }
  EXPECT_EQ(parse_specifier("file:/tmp/x.txt").canonical_name(), "file:/tmp/x.txt");
}

TEST(Specifier, ParseErrorsCarryPositions) {
  auto position = [](const char* text) -> std::size_t {
    try {
      parse_specifier(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 999;
  };
  EXPECT_EQ(position(""), 0U);
  EXPECT_EQ(position("C6"), 1U);
  EXPECT_EQ(position("C:"), 2U);
  EXPECT_EQ(position("C:3x"), 4U);
  EXPECT_EQ(position("C:3 "), 3U);
  EXPECT_EQ(position("file:"), 5U);
}

TEST(Specifier, UnsupportedFamilies) {
  for (const char* text : {"S:9", "A:0", "Q:12", "Q:4", "Q:128", "C:0", "X:3", "GL23"})
    EXPECT_THROW(parse_specifier(text), UnsupportedFamily) << text;
}

TEST(Catalog, Families) {
  auto q8 = group("Q:8");
  EXPECT_EQ(q8->order(), 8);
  EXPECT_EQ(q8->psi(), 27);
  auto orders = std::vector<std::int64_t>(q8->element_orders().begin(), q8->element_orders().end());
  EXPECT_EQ(std::count(orders.begin(), orders.end(), 2), 1);  // unique involution
  EXPECT_EQ(group("Q:32")->order(), 32);
  EXPECT_EQ(group("D:1")->order(), 2);
  EXPECT_EQ(group("D:2")->order(), 4);
  EXPECT_EQ(group("D:2")->exponent(), 2);
  EXPECT_EQ(group("A:6")->order(), 360);
  EXPECT_EQ(group("S:1")->order(), 1);
  EXPECT_EQ(group("C:1")->order(), 1);
  const auto sl = group("SL23");
  EXPECT_EQ(sl->order(), 24);
  EXPECT_EQ(sl->num_classes(), 7U);
  const auto klein = group("C:2xC:2");
  EXPECT_EQ(klein->order(), 4);
  EXPECT_EQ(klein->exponent(), 2);
  EXPECT_EQ(klein->degree(), 4U);
}

TEST(Catalog, D3AndS3Agree) {
  const auto d3 = verify_group("D:3", group("D:3"), CheckSet{});
  const auto s3 = verify_group("S:3", group("S:3"), CheckSet{});
  EXPECT_EQ(d3.psi, s3.psi);
  EXPECT_EQ(d3.psi, 13);
  auto sizes = [](const char* spec) {
    auto v = group(spec)->classes().class_sizes;
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(sizes("D:3"), sizes("S:3"));
  auto m1 = d3.multiplicities, m2 = s3.multiplicities;
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  EXPECT_EQ(m1, m2);
}

TEST(Catalog, DefaultContents) {
  const auto cat = default_catalog();
  EXPECT_EQ(cat.size(), 224U);
  std::set<std::string> names;
  for (const auto& s : cat) names.insert(s.canonical_name());
  EXPECT_EQ(names.size(), cat.size());
  for (const char* n : {"C:1", "C:64", "D:64", "S:6", "A:6", "Q:32", "SL23", "C:2xC:32", "C:8xC:8"})
    EXPECT_TRUE(names.count(n)) << n;
  EXPECT_FALSE(names.count("C:3xC:2"));
  EXPECT_FALSE(names.count("Q:64"));
}

TEST(CheckSet, Parse) {
  const auto a = CheckSet::parse("theorem-a,artin");
  EXPECT_TRUE(a.theorem_a && a.artin);
  EXPECT_FALSE(a.theorem_b || a.zeros);
  const auto all = CheckSet::parse("all");
  EXPECT_TRUE(all.theorem_a && all.theorem_b && all.artin && all.zeros);
  EXPECT_THROW(CheckSet::parse("theorem-c"), InputError);
}

TEST(Report, RecordSchema) {
  const auto rec = verify_group("S:3", group("S:3"), CheckSet{});
  EXPECT_TRUE(rec.passed());
  EXPECT_EQ(rec.to_json_line(),
            R"({"group":"S:3","order":6,"psi":13,"num_irreducibles":3,"dixon_prime":7,"degrees":[1,1,2],)"
            R"("multiplicities":[13,1,-4],"zero_rows":[],"min_multiplicity":-4,"m_of_G":6,"theorem_a_ok":true,)"
            R"("theorem_b_ok":true,"artin_ok":true,"zeros_ok":true,"identities_ok":true,"error":null})");
  const auto partial = verify_group("C:2", group("C:2"), CheckSet::parse("artin"));
  EXPECT_FALSE(partial.theorem_a_ok);
  EXPECT_FALSE(partial.m_of_g);
  EXPECT_TRUE(partial.passed());
  EXPECT_NE(partial.to_json_line().find(R"("theorem_a_ok":null)"), std::string::npos);
}

TEST(Report, ScanIsDeterministicAcrossWorkerCounts) {
  ScanJob job;
  for (const char* s : {"S:4", "C:12", "Q:16", "A:5", "D:7", "C:4xC:4", "SL23"}) job.groups.push_back(parse_specifier(s));
  job.workers = 1;
  const auto one = run_scan(job);
  job.workers = 4;
  const auto four = run_scan(job);
  EXPECT_EQ(one.to_json_lines(), four.to_json_lines());
  EXPECT_EQ(one.exit_code(), kExitOk);
  EXPECT_EQ(one.summary.groups, 7U);
  EXPECT_EQ(one.summary.passed, 7U);
  const std::string text = one.to_json_lines();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 8);
  EXPECT_EQ(text.rfind(R"({"summary":)", std::string::npos), text.find(R"({"summary":)"));
}

TEST(Report, ScanCapturesPerGroupErrors) {
  ScanJob job;
  job.groups = {parse_specifier("C:3"), parse_specifier("S:5"), parse_specifier("file:/nonexistent/g.txt")};
  job.cap = 100;
  const auto rep = run_scan(job);
  ASSERT_EQ(rep.records.size(), 3U);
  EXPECT_TRUE(rep.records[0].passed());
  EXPECT_TRUE(rep.records[1].error);
  EXPECT_TRUE(rep.records[1].input_error);
  EXPECT_TRUE(rep.records[2].error);
  EXPECT_EQ(rep.summary.errors, 2U);
  EXPECT_EQ(rep.exit_code(), kExitInputError);
}

TEST(Report, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "xichar_report_test.jsonl";
  ScanJob job;
  job.groups = {parse_specifier("C:2"), parse_specifier("S:3")};
  job.output = path;
  const auto rep = run_scan(job);
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, rep.to_json_lines());
  std::filesystem::remove(path);
}

TEST(Catalog, FileSpecifier) {
  const auto path = std::filesystem::temp_directory_path() / "xichar_frobenius21.txt";
  {
    std::ofstream out(path);
    out << "# order 21\ndegree 7\n(0 1 2 3 4 5 6)\n(1 2 4)(3 6 5)\n";
  }
  const auto g = build_group(parse_specifier("file:" + path.string()));
  EXPECT_EQ(g->order(), 21);
  EXPECT_TRUE(verify_group("F21", g, CheckSet{}).passed());
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace xichar
