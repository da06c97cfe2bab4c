#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arcond/class_function.hpp"
#include "arcond/lattice.hpp"
#include "arcond/oracle.hpp"
#include "arcond/ramification.hpp"

namespace arcond::io {

using nlohmann::json;

/// Parses JSON; syntax errors become InputError with line and column.
json parse_json(std::string_view text);

/// Rationals encode as "a/b" strings, everything else as {"n": N, "terms": [[k, "a/b"], ...]}.
json encode(const Cyclotomic& a);
/// Accepts integers, rational strings and term lists with arbitrary exponents.
Cyclotomic decode_cyclotomic(const json& j);
json encode(const ClassFunction& chi);

/// {"cyclic": n} | {"abelian": [...]} | {"perm": [[cycles], ...]} | {"table": [[...]]}
Group decode_group(const json& j);

struct JobFile {
  Group group;
  std::vector<Subgroup> filtration;
  long p = 0;
  std::optional<TameCharacter> tame;
  std::map<std::string, json> reps;
  bool p_average = false;
  bool strict_rational = false;
  bool realizable = true;

  /// Violations of the ramification invariants, empty if valid.
  std::vector<std::string> violations(RamificationData::Check check = RamificationData::Check::strict) const;
  RamificationData data(RamificationData::Check check = RamificationData::Check::strict) const;
  /// A named representation from "reps"; "regular", "trivial" and "augmentation" are built in.
  ClassFunction rep(const std::string& name) const;
};

/// InputError for format problems, ValidationError for non-closed subgroups.
JobFile parse_job(std::string_view text);

/// Writes data in the job-file format.
json encode(const RamificationData& r);

struct OracleFixture {
  MonogenicOrder order;
  std::optional<std::vector<IntMatrix>> module;
};
OracleFixture parse_oracle_fixture(std::string_view text);

std::string read_file(const std::string& path);

/// Indented JSON that keeps flat arrays and table rows on one line.
std::string dump_compact(const json& j);

}  // namespace arcond::io
