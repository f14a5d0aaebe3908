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

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "xichar/artin.hpp"
#include "xichar/catalog.hpp"
#include "xichar/character_table.hpp"
#include "xichar/errors.hpp"
#include "xichar/number_theory.hpp"
#include "xichar/report.hpp"
#include "xichar/xi.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace xichar;

struct Options {
  std::string spec;
  std::vector<std::string> specs;
  std::string json_path;
  std::string checks = "all";
  unsigned workers = 1;
  std::size_t cap = kDefaultClosureCap;
};

void write_json(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  out << text << '\n';
}

std::string rational_string(const BigRational& q) { return q.get_str(); }

// Left-aligned columns separated by two spaces.
void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << line << '\n';
  }
}

GroupPtr load(const Options& opt) { return build_group(parse_specifier(opt.spec), opt.cap); }

std::string name_of(const Options& opt) { return parse_specifier(opt.spec).canonical_name(); }

int cmd_info(const Options& opt) {
  const GroupPtr g = load(opt);
  const auto& cls = g->classes();
  std::cout << "group     " << name_of(opt) << '\n'
            << "order     " << g->order() << '\n'
            << "degree    " << g->degree() << '\n'
            << "exponent  " << g->exponent() << '\n'
            << "psi       " << g->psi() << '\n'
            << "classes   " << g->num_classes() << '\n'
            << "cyclic subgroups up to conjugacy  " << g->cyclic_subgroups_up_to_conjugacy().size() << "\n\n";
  std::vector<std::vector<std::string>> rows{{"class", "size", "order", "representative"}};
  for (ClassIndex c = 0; c < cls.size(); ++c)
    rows.push_back({std::to_string(c), std::to_string(cls.class_sizes[c]), std::to_string(cls.rep_orders[c]),
                    g->element(cls.class_reps[c]).to_cycle_string()});
  print_table(std::cout, rows);
  if (!opt.json_path.empty()) {
    Json j;
    j["group"] = name_of(opt);
    j["order"] = g->order();
    j["degree"] = g->degree();
    j["exponent"] = g->exponent();
    j["psi"] = g->psi();
    Json classes = Json::array();
    for (ClassIndex c = 0; c < cls.size(); ++c)
      classes.push_back({{"size", cls.class_sizes[c]},
                         {"order", cls.rep_orders[c]},
                         {"representative", g->element(cls.class_reps[c]).to_cycle_string()}});
    j["classes"] = std::move(classes);
    write_json(opt.json_path, j.dump(2));
  }
  return kExitOk;
}

int cmd_table(const Options& opt) {
  const GroupPtr g = load(opt);
  const CharacterTable t = CharacterTable::compute(g);
  const auto& cls = g->classes();
  std::cout << "group " << name_of(opt) << ", order " << g->order() << ", values in Q(z), z = exp(2 pi i/"
            << t.ambient_order() << "), prime " << t.prime() << "\n\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> sizes{"size"}, orders{"order"};
  for (ClassIndex c = 0; c < cls.size(); ++c) {
    sizes.push_back(std::to_string(cls.class_sizes[c]));
    orders.push_back(std::to_string(cls.rep_orders[c]));
  }
  rows.push_back(sizes);
  rows.push_back(orders);
  for (std::size_t r = 0; r < t.size(); ++r) {
    std::vector<std::string> line{"X." + std::to_string(r + 1)};
    for (const auto& v : t.row(r).values) line.push_back(v.to_string());
    rows.push_back(std::move(line));
  }
  print_table(std::cout, rows);
  if (!opt.json_path.empty()) {
    Json j;
    j["group"] = name_of(opt);
    j["order"] = g->order();
    j["cyclotomic_order"] = t.ambient_order();
    j["dixon_prime"] = t.prime();
    Json classes = Json::array();
    for (ClassIndex c = 0; c < cls.size(); ++c)
      classes.push_back({{"size", cls.class_sizes[c]},
                         {"order", cls.rep_orders[c]},
                         {"representative", g->element(cls.class_reps[c]).to_cycle_string()}});
    j["classes"] = std::move(classes);
    Json table = Json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
      Json values = Json::array();
      for (const auto& v : t.row(r).values) values.push_back(v.to_string());
      table.push_back({{"degree", t.degree(r)}, {"values", std::move(values)}});
    }
    j["rows"] = std::move(table);
    write_json(opt.json_path, j.dump(2));
  }
  return kExitOk;
}

int cmd_xi(const Options& opt) {
  const GroupPtr g = load(opt);
  const std::string name = name_of(opt);
  const CharacterTable t = CharacterTable::compute(g);
  const XiReport xi = xi_multiplicities(t, name);
  const MinimalityReport m = minimal_m(t, name);

  std::cout << "group " << name << ", order " << xi.order << ", psi " << xi.psi << "\n\n";
  std::vector<std::vector<std::string>> rows{{"row", "degree", "[Xi,chi]", "galois-orbit", "moebius"}};
  bool agree = true;
  for (std::size_t r = 0; r < t.size(); ++r) {
    const std::int64_t b = theorem_b_multiplicity(t, r).value;
    std::string moebius = "-";
    if (t.is_linear(r)) {
      const std::int64_t mb = linear_moebius_multiplicity(t, r).value;
      agree = agree && mb == xi.multiplicities[r];
      moebius = std::to_string(mb);
    }
    agree = agree && b == xi.multiplicities[r];
    rows.push_back({"X." + std::to_string(r + 1), std::to_string(t.degree(r)),
                    std::to_string(xi.multiplicities[r]), std::to_string(b), moebius});
  }
  print_table(std::cout, rows);
  std::cout << "\nminimum multiplicity  " << xi.min_multiplicity << '\n' << "zero rows             ";
  if (xi.zero_rows.empty()) std::cout << "none";
  for (std::size_t r : xi.zero_rows) std::cout << "X." << r + 1 << ' ';
  std::cout << "\nm(G)                  " << m.m_of_g << (m.equals_order ? " (= |G|)" : " (differs from |G|)") << '\n';
  for (const auto& w : m.witnesses)
    std::cout << "witness p=" << w.p << " b=" << w.b << " n=" << w.n << "  n*psi(P)/p^(a-b) = "
              << rational_string(w.value) << '\n';
  std::cout << "formulas agree        " << (agree ? "yes" : "NO") << '\n';

  if (!opt.json_path.empty()) {
    Json j;
    j["group"] = name;
    j["order"] = xi.order;
    j["psi"] = xi.psi;
    j["multiplicities"] = xi.multiplicities;
    j["zero_rows"] = xi.zero_rows;
    j["min_multiplicity"] = xi.min_multiplicity;
    j["m_of_G"] = m.m_of_g;
    write_json(opt.json_path, j.dump());
  }
  return agree && m.equals_order ? kExitOk : kExitCheckFailed;
}

int cmd_artin(const Options& opt) {
  const GroupPtr g = load(opt);
  const ArtinDecomposition d = artin_decompose_xi(*g);
  std::vector<std::vector<std::string>> rows{{"generator order", "subgroup order", "coefficient"}};
  for (std::size_t s = 0; s < d.induced.size(); ++s)
    rows.push_back({std::to_string(d.induced[s].generator_order), std::to_string(d.induced[s].source.order()),
                    d.coefficients[s].get_str()});
  print_table(std::cout, rows);
  const bool ok =
      std::all_of(d.residual.begin(), d.residual.end(), [](const BigInt& v) { return sgn(v) == 0; });
  std::cout << "verdict: " << (ok ? "verified, the combination equals Xi on every class" : "FAILED") << '\n';
  if (!opt.json_path.empty()) {
    Json j;
    j["group"] = name_of(opt);
    Json terms = Json::array();
    for (std::size_t s = 0; s < d.induced.size(); ++s)
      terms.push_back({{"generator_order", d.induced[s].generator_order},
                       {"subgroup_order", d.induced[s].source.order()},
                       {"coefficient", d.coefficients[s].get_str()}});
    j["terms"] = std::move(terms);
    j["artin_ok"] = ok;
    write_json(opt.json_path, j.dump());
  }
  return ok ? kExitOk : kExitCheckFailed;
}

void print_record(const GroupRecord& rec) {
  auto flag = [](const std::optional<bool>& b) { return !b ? std::string("skipped") : *b ? "ok" : "FAILED"; };
  std::cout << "group        " << rec.group << '\n'
            << "order        " << rec.order << '\n'
            << "psi          " << rec.psi << '\n'
            << "theorem-a    " << flag(rec.theorem_a_ok) << '\n'
            << "theorem-b    " << flag(rec.theorem_b_ok) << '\n'
            << "artin        " << flag(rec.artin_ok) << '\n'
            << "zeros        " << flag(rec.zeros_ok) << '\n'
            << "identities   " << (rec.identities_ok ? "ok" : "FAILED") << '\n';
  if (rec.error) std::cout << "error        " << *rec.error << '\n';
}

int cmd_verify(const Options& opt) {
  const GroupSpecifier spec = parse_specifier(opt.spec);
  const GroupRecord rec = verify_group(spec.canonical_name(), build_group(spec, opt.cap), CheckSet::parse(opt.checks));
  print_record(rec);
  if (!opt.json_path.empty()) write_json(opt.json_path, rec.to_json_line());
  if (rec.passed()) return kExitOk;
  return rec.input_error ? kExitInputError : kExitCheckFailed;
}

int cmd_scan(const Options& opt) {
  ScanJob job;
  job.checks = CheckSet::parse(opt.checks);
  job.workers = opt.workers;
  job.cap = opt.cap;
  if (opt.specs.empty()) {
    job.groups = default_catalog();
  } else {
    for (const auto& s : opt.specs) job.groups.push_back(parse_specifier(s));
  }
  if (!opt.json_path.empty()) job.output = opt.json_path;
  const ScanReport report = run_scan(job);
  if (opt.json_path.empty()) {
    std::cout << report.to_json_lines();
  } else {
    const auto& s = report.summary;
    std::cout << "groups " << s.groups << ", passed " << s.passed << ", failures " << s.failures << ", errors "
              << s.errors << ", with zero constituents " << s.zero_constituent_groups.size() << '\n';
    for (const auto& rec : report.records)
      if (!rec.passed()) std::cout << "  " << rec.group << (rec.error ? ": " + *rec.error : ": check failed") << '\n';
    for (const auto& g : s.zero_constituent_groups) std::cout << "  zero constituent: " << g << '\n';
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Xi = |G| o(g): character tables, multiplicities and Artin decompositions of finite groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", opt.json_path, "Write JSON output to this path");
    sub->add_option("--cap", opt.cap, "Largest group order to enumerate")->check(CLI::PositiveNumber);
  };
  auto add_single = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("group", opt.spec, "Group specifier, e.g. S:4, C:3xC:4, file:path")->required();
    add_common(sub);
    return sub;
  };

  CLI::App* info = add_single("info", "Order, exponent, psi and conjugacy classes");
  CLI::App* table = add_single("table", "Character table with exact cyclotomic values");
  CLI::App* xi = add_single("xi", "Multiplicities of every irreducible character in Xi");
  CLI::App* artin = add_single("artin", "Integer decomposition of Xi over induced cyclic characters");
  CLI::App* verify = add_single("verify", "Run all checks on one group");
  verify->add_option("--checks", opt.checks, "theorem-a, theorem-b, artin, zeros or all (comma separated)");
  CLI::App* scan = app.add_subcommand("scan", "Verify many groups; no arguments means the default catalog");
  scan->add_option("groups", opt.specs, "Group specifiers");
  scan->add_option("--workers", opt.workers, "Worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--checks", opt.checks, "theorem-a, theorem-b, artin, zeros or all (comma separated)");
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*info) return cmd_info(opt);
    if (*table) return cmd_table(opt);
    if (*xi) return cmd_xi(opt);
    if (*artin) return cmd_artin(opt);
    if (*verify) return cmd_verify(opt);
    if (*scan) return cmd_scan(opt);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitInputError;
}
