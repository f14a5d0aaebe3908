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

#include "xichar/report.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "xichar/artin.hpp"
#include "xichar/character_table.hpp"
#include "xichar/errors.hpp"
#include "xichar/number_theory.hpp"
#include "xichar/parallel.hpp"
#include "xichar/xi.hpp"

namespace xichar {

namespace {

using Json = nlohmann::ordered_json;

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

bool check_theorem_a(const CharacterTable& table, GroupRecord& rec) {
  const FiniteGroup& g = table.group();
  const MinimalityReport m = minimal_m(table, rec.group);
  rec.m_of_g = m.m_of_g;
  if (!m.equals_order) return false;
  for (const auto& [p, a] : factorize(g.order())) {
    for (int b = 0; b < a; ++b) {
      try {
        const SylowWitness w = sylow_witness(g, p, b);
        if (w.value.get_den() == 1) return false;
      } catch (const WitnessUnexpectedlyIntegral&) {
        return false;
      }
    }
  }
  return true;
}

bool check_theorem_b(const CharacterTable& table, const std::vector<std::int64_t>& direct) {
  for (std::size_t row = 0; row < table.size(); ++row) {
    if (theorem_b_multiplicity(table, row).value != direct[row]) return false;
    if (xi_multiplicity_unconjugated(table, row) != direct[row]) return false;
    if (table.is_linear(row) && linear_moebius_multiplicity(table, row).value != direct[row]) return false;
  }
  return true;
}

bool check_artin(const FiniteGroup& g) {
  try {
    const ArtinDecomposition d = artin_decompose_xi(g);
    return std::all_of(d.residual.begin(), d.residual.end(), [](const BigInt& v) { return sgn(v) == 0; });
  } catch (const NoIntegerSolution&) {
    return false;
  }
}

bool check_identities(const CharacterTable& table, const GroupRecord& rec) {
  if (rec.multiplicities.empty() || rec.multiplicities[0] != rec.psi) return false;
  std::int64_t weighted = 0;
  for (std::size_t row = 0; row < table.size(); ++row) weighted += rec.multiplicities[row] * table.degree(row);
  if (weighted != rec.order) return false;
  return rec.order == 1 || rec.min_multiplicity < 0;
}

}  // namespace

CheckSet CheckSet::parse(std::string_view list) {
  CheckSet out{false, false, false, false};
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    const std::string_view item = list.substr(start, end - start);
    if (item == "theorem-a") out.theorem_a = true;
    else if (item == "theorem-b") out.theorem_b = true;
    else if (item == "artin") out.artin = true;
    else if (item == "zeros") out.zeros = true;
    else if (item == "all") out = CheckSet{};
    else throw InputError("unknown check '" + std::string(item) + "'");
    start = end + 1;
  }
  return out;
}

bool GroupRecord::passed() const {
  if (error || !identities_ok) return false;
  for (const auto& ok : {theorem_a_ok, theorem_b_ok, artin_ok, zeros_ok})
    if (ok && !*ok) return false;
  return true;
}

std::string GroupRecord::to_json_line() const {
  Json j;
  j["group"] = group;
  j["order"] = order;
  j["psi"] = psi;
  j["num_irreducibles"] = num_irreducibles;
  j["dixon_prime"] = dixon_prime;
  j["degrees"] = degrees;
  j["multiplicities"] = multiplicities;
  j["zero_rows"] = zero_rows;
  j["min_multiplicity"] = min_multiplicity;
  j["m_of_G"] = optional_json(m_of_g);
  j["theorem_a_ok"] = optional_json(theorem_a_ok);
  j["theorem_b_ok"] = optional_json(theorem_b_ok);
  j["artin_ok"] = optional_json(artin_ok);
  j["zeros_ok"] = optional_json(zeros_ok);
  j["identities_ok"] = identities_ok;
  j["error"] = optional_json(error);
  return j.dump();
}

GroupRecord verify_group(const std::string& name, const GroupPtr& group, const CheckSet& checks) {
  GroupRecord rec;
  rec.group = name;
  try {
    rec.order = group->order();
    rec.psi = group->psi();
    const CharacterTable table = CharacterTable::compute(group);
    rec.num_irreducibles = table.size();
    rec.dixon_prime = table.prime();
    rec.degrees.assign(table.degrees().begin(), table.degrees().end());
    const XiReport xi = xi_multiplicities(table, name);
    rec.multiplicities = xi.multiplicities;
    rec.zero_rows = xi.zero_rows;
    rec.min_multiplicity = xi.min_multiplicity;
    rec.identities_ok = check_identities(table, rec);

    if (checks.theorem_a) rec.theorem_a_ok = check_theorem_a(table, rec);
    if (checks.theorem_b) rec.theorem_b_ok = check_theorem_b(table, rec.multiplicities);
    if (checks.artin) rec.artin_ok = check_artin(*group);
    if (checks.zeros) {
      rec.zeros_ok = std::all_of(rec.zero_rows.begin(), rec.zero_rows.end(), [&](std::size_t row) {
        return theorem_b_multiplicity(table, row).value == 0;
      });
    }
  } catch (const InputError& e) {
    rec.error = e.what();
    rec.input_error = true;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

std::string ScanReport::to_json_lines() const {
  std::string out;
  for (const auto& rec : records) {
    out += rec.to_json_line();
    out += '\n';
  }
  Json s;
  s["groups"] = summary.groups;
  s["passed"] = summary.passed;
  s["failures"] = summary.failures;
  s["errors"] = summary.errors;
  s["zero_constituent_count"] = summary.zero_constituent_groups.size();
  s["zero_constituent_groups"] = summary.zero_constituent_groups;
  Json wrapper;
  wrapper["summary"] = std::move(s);
  out += wrapper.dump();
  out += '\n';
  return out;
}

int ScanReport::exit_code() const {
  bool input_error = false;
  for (const auto& rec : records) {
    if (rec.passed()) continue;
    if (!rec.input_error) return kExitCheckFailed;
    input_error = true;
  }
  return input_error ? kExitInputError : kExitOk;
}

ScanReport run_scan(const ScanJob& job) {
  ScanReport report;
  report.records.resize(job.groups.size());
  parallel_for(job.groups.size(), job.workers, [&](std::size_t i) {
    const GroupSpecifier& spec = job.groups[i];
    const std::string name = spec.canonical_name();
    GroupPtr group;
    try {
      group = build_group(spec, job.cap);
    } catch (const std::exception& e) {
      GroupRecord rec;
      rec.group = name;
      rec.error = e.what();
      rec.input_error = dynamic_cast<const InputError*>(&e) != nullptr;
      report.records[i] = std::move(rec);
      return;
    }
    report.records[i] = verify_group(name, group, job.checks);
  });

  ScanSummary& s = report.summary;
  s.groups = report.records.size();
  for (const auto& rec : report.records) {
    if (rec.error) ++s.errors;
    else if (rec.passed()) ++s.passed;
    else ++s.failures;
    if (!rec.zero_rows.empty()) s.zero_constituent_groups.push_back(rec.group);
  }

  if (job.output) {
    std::ofstream out(*job.output, std::ios::binary);
    if (!out) throw InputError("cannot open report file " + job.output->string());
    out << report.to_json_lines();
  }
  return report;
}

}  // namespace xichar
