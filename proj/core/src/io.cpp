#include "arcond/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "arcond/errors.hpp"

namespace arcond::io {

namespace {

std::string where_of(std::string_view text, std::size_t byte) {
  long line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void bad(const std::string& msg) { throw InputError(msg); }

long as_long(const json& j, const std::string& what) {
  if (!j.is_number_integer()) bad(what + " must be an integer");
  return j.get<long>();
}

Integer as_integer(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (q.get_den() != 1) bad(what + " must be an integer");
    return q.get_num();
  }
  bad(what + " must be an integer or an integer string");
}

Rational as_rational(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad(what + " must be an integer or a rational string such as \"3/2\"");
}

std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(static_cast<int>(as_long(x, what + " entry")));
  return out;
}

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& what) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) bad("unknown key \"" + it.key() + "\" in " + what);
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& ex) {
    throw InputError("JSON syntax error at " + where_of(text, ex.byte) + ": " + ex.what());
  }
}

json encode(const Cyclotomic& a) {
  if (auto q = a.to_rational()) return to_string(*q);
  json terms = json::array();
  for (const auto& [k, c] : a.terms()) terms.push_back(json::array({k, to_string(c)}));
  return json{{"n", a.conductor()}, {"terms", terms}};
}

Cyclotomic decode_cyclotomic(const json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(as_rational(j, "value"));
  if (!j.is_object()) bad("a cyclotomic value must be a rational or an object {\"n\", \"terms\"}");
  only_keys(j, {"n", "terms"}, "cyclotomic value");
  if (!j.contains("n") || !j.contains("terms")) bad("cyclotomic value needs \"n\" and \"terms\"");
  const long n = as_long(j["n"], "n");
  if (n < 1) bad("cyclotomic level n must be positive");
  if (!j["terms"].is_array()) bad("\"terms\" must be an array of [k, \"a/b\"] pairs");
  std::vector<std::pair<long, Rational>> terms;
  for (const auto& t : j["terms"]) {
    if (!t.is_array() || t.size() != 2) bad("each term must be a pair [k, \"a/b\"]");
    terms.emplace_back(as_long(t[0], "term exponent"), as_rational(t[1], "term coefficient"));
  }
  return Cyclotomic::from_terms(n, terms);
}

json encode(const ClassFunction& chi) {
  json out = json::array();
  for (const auto& v : chi.values()) out.push_back(encode(v));
  return out;
}

Group decode_group(const json& j) {
  if (!j.is_object() || j.size() != 1) bad("group must be one of {\"cyclic\"}, {\"abelian\"}, {\"perm\"}, {\"table\"}");
  const std::string key = j.begin().key();
  const json& val = j.begin().value();
  if (key == "cyclic") {
    const long n = as_long(val, "cyclic order");
    if (n < 1 || n > 100000) bad("cyclic order must be between 1 and 100000");
    return FiniteGroup::cyclic(static_cast<int>(n));
  }
  if (key == "abelian") return FiniteGroup::abelian(int_list(val, "abelian invariants"));
  if (key == "perm") {
    if (!val.is_array()) bad("perm must be an array of generators");
    std::vector<std::vector<std::vector<int>>> gens;
    for (const auto& g : val) {
      if (!g.is_array()) bad("each permutation generator must be an array of cycles");
      std::vector<std::vector<int>> cycles;
      for (const auto& c : g) cycles.push_back(int_list(c, "cycle"));
      gens.push_back(std::move(cycles));
    }
    return FiniteGroup::permutations(gens);
  }
  if (key == "table") {
    if (!val.is_array()) bad("table must be an array of rows");
    FiniteGroup::Table t;
    for (const auto& row : val) t.push_back(int_list(row, "table row"));
    return FiniteGroup::from_table(std::move(t));
  }
  bad("unknown group kind \"" + key + "\"");
}

std::vector<std::string> JobFile::violations(RamificationData::Check check) const {
  return RamificationData::violations(group, filtration, p, tame, check);
}

RamificationData JobFile::data(RamificationData::Check check) const {
  return RamificationData::build(group, filtration, p, tame, check);
}

ClassFunction JobFile::rep(const std::string& name) const {
  auto it = reps.find(name);
  if (it == reps.end()) {
    if (name == "regular") return regular_character(group);
    if (name == "trivial") return trivial_character(group);
    if (name == "augmentation") return augmentation_character(group);
    bad("unknown representation \"" + name + "\"");
  }
  const json& r = it->second;
  if (!r.is_object() || !r.contains("values")) bad("representation \"" + name + "\" needs a \"values\" array");
  only_keys(r, {"values"}, "representation \"" + name + "\"");
  const json& vals = r["values"];
  if (!vals.is_array()) bad("representation \"" + name + "\" values must be an array");
  if (static_cast<int>(vals.size()) != group->num_classes())
    bad("representation \"" + name + "\" has " + std::to_string(vals.size()) + " values; the group has " +
        std::to_string(group->num_classes()) + " conjugacy classes");
  std::vector<Cyclotomic> v;
  for (const auto& x : vals) v.push_back(decode_cyclotomic(x));
  return ClassFunction(group, std::move(v));
}

JobFile parse_job(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) bad("job file must be a JSON object");
  only_keys(j, {"version", "group", "filtration", "p", "tame", "reps", "rep", "options"}, "job file");
  if (!j.contains("version")) bad("missing \"version\"");
  if (as_long(j["version"], "version") != 1) bad("unsupported version " + j["version"].dump() + " (expected 1)");
  if (!j.contains("group")) bad("missing \"group\"");
  JobFile job;
  job.group = decode_group(j["group"]);
  if (j.contains("filtration")) {
    if (!j["filtration"].is_array()) bad("filtration must be an array of subgroups");
    std::vector<std::string> errs;
    std::size_t i = 0;
    for (const auto& s : j["filtration"]) {
      const auto members = int_list(s, "filtration entry");
      try {
        job.filtration.emplace_back(job.group, members);
      } catch (const ValidationError& ex) {
        for (const auto& v : ex.violations()) errs.push_back("Gamma_" + std::to_string(i) + ": " + v);
      }
      ++i;
    }
    if (!errs.empty()) throw ValidationError(std::move(errs));
  }
  job.p = j.contains("p") ? as_long(j["p"], "p") : 0;
  if (j.contains("tame")) {
    const json& t = j["tame"];
    if (!t.is_object()) bad("tame must be an object {\"generator\", \"exponent\"}");
    only_keys(t, {"generator", "exponent"}, "tame");
    if (!t.contains("generator") || !t.contains("exponent")) bad("tame needs \"generator\" and \"exponent\"");
    job.tame = TameCharacter{static_cast<int>(as_long(t["generator"], "tame generator")),
                             as_long(t["exponent"], "tame exponent")};
  }
  if (j.contains("reps")) {
    if (!j["reps"].is_object()) bad("reps must be an object mapping names to representations");
    for (auto it = j["reps"].begin(); it != j["reps"].end(); ++it) job.reps[it.key()] = it.value();
  }
  if (j.contains("rep")) job.reps["rep"] = j["rep"];
  if (j.contains("options")) {
    const json& o = j["options"];
    if (!o.is_object()) bad("options must be an object");
    only_keys(o, {"p_average", "strict_rational", "realizable"}, "options");
    auto flag = [&](const char* k, bool& out) {
      if (!o.contains(k)) return;
      if (!o[k].is_boolean()) bad(std::string("option ") + k + " must be true or false");
      out = o[k].get<bool>();
    };
    flag("p_average", job.p_average);
    flag("strict_rational", job.strict_rational);
    flag("realizable", job.realizable);
  }
  for (const auto& [name, r] : job.reps) (void)job.rep(name);
  return job;
}

json encode(const RamificationData& r) {
  json filt = json::array();
  for (const auto& s : r.filtration()) filt.push_back(s.members());
  json out{{"version", 1},
           {"group", {{"table", r.gamma()->table()}}},
           {"filtration", filt},
           {"p", r.p()}};
  if (r.n() > 1) out["tame"] = {{"generator", r.tame().generator}, {"exponent", r.tame().exponent}};
  return out;
}

OracleFixture parse_oracle_fixture(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) bad("oracle fixture must be a JSON object");
  only_keys(j, {"p", "f", "galois", "module", "comment"}, "oracle fixture");
  for (const char* k : {"p", "f", "galois"})
    if (!j.contains(k)) bad(std::string("oracle fixture is missing \"") + k + "\"");
  auto poly = [](const json& a, const std::string& what) {
    if (!a.is_array()) bad(what + " must be an array of coefficients (ascending degree)");
    std::vector<Integer> c;
    for (const auto& x : a) c.push_back(as_integer(x, what + " coefficient"));
    return c;
  };
  const long p = as_long(j["p"], "p");
  auto f = poly(j["f"], "f");
  if (!j["galois"].is_array()) bad("galois must be an array of polynomials");
  std::vector<std::vector<Integer>> g;
  for (const auto& x : j["galois"]) g.push_back(poly(x, "galois"));
  OracleFixture fx{MonogenicOrder(p, std::move(f), std::move(g)), std::nullopt};
  if (j.contains("module")) {
    if (!j["module"].is_array()) bad("module must be an array of matrices");
    std::vector<IntMatrix> mats;
    for (const auto& m : j["module"]) {
      if (!m.is_array() || m.empty() || !m[0].is_array()) bad("module matrices must be non-empty arrays of rows");
      if (m[0].size() != m.size()) bad("module matrices must be square");
      IntMatrix a(m.size(), m[0].size());
      for (std::size_t r = 0; r < m.size(); ++r) {
        if (!m[r].is_array() || m[r].size() != m[0].size()) bad("module matrix rows must have equal length");
        for (std::size_t c = 0; c < m[r].size(); ++c) a(r, c) = as_integer(m[r][c], "module entry");
      }
      mats.push_back(std::move(a));
    }
    if (mats.size() != j["galois"].size())
      bad("module has " + std::to_string(mats.size()) + " matrices; galois lists " + std::to_string(j["galois"].size()));
    fx.module = std::move(mats);
  }
  return fx;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

bool flat(const json& j) {
  if (!j.is_structured()) return true;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void dump_into(const json& j, int indent, std::string& out) {
  if (flat(j)) {
    out += j.dump();
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t k = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++k) {
    out += pad;
    if (obj) out += json(it.key()).dump() + ": ";
    dump_into(*it, indent + 2, out);
    if (k + 1 < j.size()) out += ",";
    out += "\n";
  }
  out += std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump_compact(const json& j) {
  std::string out;
  dump_into(j, 0, out);
  return out;
}

}  // namespace arcond::io
