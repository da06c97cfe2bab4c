#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "arcond/conductor.hpp"
#include "arcond/errors.hpp"
#include "arcond/io.hpp"
#include "arcond/oracle.hpp"

namespace arcond::cli {

namespace {

using io::json;

struct Settings {
  std::string format = "text";
  bool p_average = false;
  bool strict_rational = false;
  bool advisory = false;
  unsigned threads = 0;
};

bool as_json(const Settings& s) { return s.format == "json"; }

std::string value_text(const Cyclotomic& v) {
  const json j = io::encode(v);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

void print_rational(std::ostream& out, const Settings& s, const Rational& q) {
  if (as_json(s))
    out << json{{"result", to_string(q)}}.dump() << "\n";
  else
    out << to_string(q) << "\n";
}

void print_class_function(std::ostream& out, const Settings& s, const ClassFunction& chi) {
  if (as_json(s)) {
    out << json{{"classes", chi.group()->classes()}, {"values", io::encode(chi)}}.dump() << "\n";
    return;
  }
  for (const auto& v : chi.values()) out << value_text(v) << "\n";
}

io::JobFile load_job(const std::string& path) { return io::parse_job(io::read_file(path)); }

int cmd_validate(const std::string& path, const Settings& s, std::ostream& out, std::ostream& err) {
  const auto job = load_job(path);
  const auto errs = job.violations();
  if (as_json(s)) {
    out << json{{"valid", errs.empty()}, {"violations", errs}}.dump() << "\n";
  } else if (errs.empty()) {
    const auto r = job.data();
    out << "valid: |G| = " << r.gamma()->order() << ", e = " << r.e() << ", f = " << r.f() << ", n = " << r.n()
        << ", p = " << r.p() << "\n";
  }
  for (const auto& e : errs) err << "invalid: " << e << "\n";
  return errs.empty() ? ok : binding_failure;
}

Subgroup parse_subgroup(const Group& g, const std::string& text) {
  std::string t = text;
  for (char& c : t)
    if (c == '[' || c == ']' || c == ',' || c == '{' || c == '}') c = ' ';
  std::istringstream in(t);
  std::vector<int> members;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      members.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw InputError("subgroup members must be integers, got \"" + tok + "\"");
    }
  }
  return Subgroup(g, members);
}

int cmd_compute(const std::string& path, const std::vector<std::string>& what, const Settings& s, std::ostream& out,
                std::ostream& err) {
  if (what.empty()) throw InputError("compute needs a quantity: artin, bar, bar-avg, conductor, artin-conductor, herbrand, disc");
  const auto job = load_job(path);
  const auto r = job.data();
  ConductorOptions opts;
  opts.p_average = s.p_average || job.p_average;
  opts.strict_rational = s.strict_rational || job.strict_rational;
  const std::string& q = what[0];
  auto arg = [&](std::size_t i, const char* name) -> std::string {
    if (what.size() <= i) throw InputError("compute " + q + " needs " + name);
    return what[i];
  };
  auto rep_name = [&](std::size_t i) {
    std::string n = what.size() > i ? what[i] : std::string("rep");
    if (n.rfind("rep=", 0) == 0) n = n.substr(4);
    return n;
  };
  if (q == "artin") {
    print_class_function(out, s, artin_character(r));
  } else if (q == "bar") {
    print_class_function(out, s, refined_artin(r));
  } else if (q == "bar-avg") {
    print_class_function(out, s, p_average(refined_artin(r), r.p(), r.n()));
  } else if (q == "conductor") {
    const ClassFunction chi = job.rep(rep_name(1));
    const auto res = conductor_pairing(r, chi, opts);
    if (!res.stable)
      err << "warning: character is not stable under Gal(Q_p(mu)/Q_p) for p = " << r.p()
          << "; it cannot be the character of a Q_p-rational representation\n";
    if (auto v = res.value.to_rational()) {
      print_rational(out, s, *v);
    } else {
      if (opts.strict_rational) throw ComputationError("pairing is not rational: " + res.value.str());
      err << "warning: pairing is not rational\n";
      if (as_json(s))
        out << json{{"result", io::encode(res.value)}}.dump() << "\n";
      else
        out << value_text(res.value) << "\n";
    }
  } else if (q == "artin-conductor") {
    print_rational(out, s, artin_conductor(r, job.rep(rep_name(1))));
  } else if (q == "herbrand") {
    const std::string fn = arg(1, "phi or psi");
    const Rational x = parse_rational(arg(2, "a rational argument"));
    if (fn == "phi")
      print_rational(out, s, herbrand_phi(r, x));
    else if (fn == "psi")
      print_rational(out, s, herbrand_psi(r, x));
    else
      throw InputError("herbrand expects phi or psi, got \"" + fn + "\"");
  } else if (q == "disc") {
    print_rational(out, s, discriminant_valuation(r, parse_subgroup(r.gamma(), arg(1, "a subgroup such as \"0,2\""))));
  } else {
    throw InputError("unknown quantity \"" + q + "\"");
  }
  return ok;
}

json record_json(const ReportRecord& rec) {
  return json{{"identity", rec.identity}, {"instance", rec.instance}, {"expected", rec.expected},
              {"computed", rec.computed}, {"pass", rec.pass},         {"binding", rec.binding}};
}

int cmd_verify(const std::string& path, const Settings& s, std::ostream& out, std::ostream& err) {
  const auto job = load_job(path);
  VerifyOptions vo;
  vo.realizable = job.realizable && !s.advisory;
  vo.threads = s.threads;
  ConductorReport report;
  const auto errs = job.violations();
  if (!errs.empty()) {
    for (const auto& e : errs) report.records.push_back({"validation", "input", "valid data", e, false, true});
    // a non-injective tame character is the only defect: still run the battery
    if (job.violations(RamificationData::Check::allow_degenerate_tame).empty()) {
      auto more = verify_suite(job.data(RamificationData::Check::allow_degenerate_tame), vo);
      report.records.insert(report.records.end(), more.records.begin(), more.records.end());
    }
  } else {
    report = verify_suite(job.data(), vo);
  }
  for (const auto& rec : report.records) out << record_json(rec).dump() << "\n";
  const std::size_t total = report.records.size();
  err << "verify: " << total << " records; binding " << report.count(true, true) << " passed, "
      << report.count(true, false) << " failed; advisory " << report.count(false, true) << " passed, "
      << report.count(false, false) << " failed\n";
  return report.binding_ok() ? ok : binding_failure;
}

int cmd_oracle_tame(const std::vector<long>& args, const Settings& s, std::ostream& out) {
  if (args.empty()) throw InputError("oracle tame needs n followed by exponents");
  const long n = args[0];
  if (n < 1) throw InputError("n must be positive");
  std::vector<long> ex(args.begin() + 1, args.end());
  print_rational(out, s, oracle_tame_clin(n, ex));
  return ok;
}

int cmd_oracle_monogenic(const std::string& path, const std::string& module, const Settings& s, std::ostream& out) {
  const auto fx = io::parse_oracle_fixture(io::read_file(path));
  std::vector<IntMatrix> action;
  if (module == "regular")
    action = fx.order.regular_module();
  else if (module == "trivial")
    action = fx.order.trivial_module();
  else if (module == "file") {
    if (!fx.module) throw InputError("fixture has no \"module\" section");
    action = *fx.module;
  } else {
    throw InputError("--module expects regular, trivial or file");
  }
  print_rational(out, s, oracle_monogenic_clin(fx.order, action));
  return ok;
}

int cmd_derive(const std::string& path, const std::string& output, long choice, std::ostream& out) {
  const auto fx = io::parse_oracle_fixture(io::read_file(path));
  const std::string text = io::dump_compact(io::encode(filtration_from_monogenic(fx.order, choice))) + "\n";
  if (output.empty() || output == "-") {
    out << text;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw InputError("cannot write " + output);
    f << text;
  }
  return ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Artin characters, refined Artin characters and base change conductors"};
  app.name("arcond");
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, output, module = "auto";
  std::vector<std::string> what;
  std::vector<long> tame_args;
  long choice = 0;

  auto* validate = app.add_subcommand("validate", "Check a job file against the ramification invariants");
  validate->add_option("file", file, "Job file")->required();

  auto* compute = app.add_subcommand("compute", "Compute artin | bar | bar-avg | conductor NAME | artin-conductor NAME | herbrand phi|psi Q | disc SUBGROUP");
  compute->add_option("file", file, "Job file")->required();
  compute->add_option("what", what, "Quantity and its arguments")->required();
  compute->add_flag("--p-average", s.p_average, "Pair with the Frobenius-averaged refined character");
  compute->add_flag("--strict-rational", s.strict_rational, "Fail on characters that are not sigma_p-stable");

  auto* verify = app.add_subcommand("verify", "Run the identity battery; exit 1 on binding failures");
  verify->add_option("file", file, "Job file")->required();
  verify->add_flag("--advisory", s.advisory, "Treat the data as abstract: realizability-dependent rows are advisory");
  verify->add_option("--threads", s.threads, "Worker threads (0 = hardware concurrency)");

  auto* oracle = app.add_subcommand("oracle", "Lattice-determinant oracles");
  oracle->require_subcommand(1);
  auto* o_tame = oracle->add_subcommand("tame", "c_lin of diag(zeta^i...) over the tame cyclic model");
  o_tame->add_option("args", tame_args, "n i1 i2 ...")->required();
  auto* o_mono = oracle->add_subcommand("monogenic", "c_lin over a monogenic order");
  o_mono->add_option("file", file, "Oracle fixture")->required();
  o_mono->add_option("--module", module, "regular | trivial | file")->check(CLI::IsMember({"auto", "regular", "trivial", "file"}));
  auto* o_derive = oracle->add_subcommand("derive-fixture", "Write the ramification data of a monogenic order as a job file");
  o_derive->add_option("file", file, "Oracle fixture")->required();
  o_derive->add_option("-o,--output", output, "Output path (default stdout)");
  o_derive->add_option("--prime-choice", choice, "Index of the prime above p used for the tame character");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (validate->parsed()) return cmd_validate(file, s, out, err);
    if (compute->parsed()) return cmd_compute(file, what, s, out, err);
    if (verify->parsed()) return cmd_verify(file, s, out, err);
    if (o_tame->parsed()) return cmd_oracle_tame(tame_args, s, out);
    if (o_mono->parsed()) {
      if (module == "auto") {
        const auto fx = io::parse_oracle_fixture(io::read_file(file));
        module = fx.module ? "file" : "regular";
      }
      return cmd_oracle_monogenic(file, module, s, out);
    }
    if (o_derive->parsed()) return cmd_derive(file, output, choice, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations()) err << "invalid: " << v << "\n";
    return binding_failure;
  } catch (const ComputationError& e) {
    err << "computation error: " << e.what() << "\n";
    return computation_error;
  }
  return input_error;
}

}  // namespace arcond::cli
