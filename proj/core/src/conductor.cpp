#include "arcond/conductor.hpp"

#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "arcond/errors.hpp"

namespace arcond {

namespace {

// Units u mod m with u = p^j modulo the prime-to-p part of m.
std::vector<long> decomposition_units(long m, long p) {
  long mp = m;
  if (p > 0)
    while (mp % p == 0) mp /= p;
  std::set<long> powers;
  if (p > 0) {
    long x = 1 % mp;
    do {
      powers.insert(x);
      x = nt::mod(x * p, mp);
    } while (!powers.count(x));
  }
  std::vector<long> out;
  for (long u = 1; u <= m; ++u) {
    if (nt::gcd(u, m) != 1) continue;
    if (p == 0 || powers.count(nt::mod(u, mp))) out.push_back(u % m);
  }
  return out;
}

ClassFunction galois_orbit_sum(const ClassFunction& chi, const std::vector<long>& units) {
  std::set<std::vector<std::vector<Rational>>> seen;
  auto acc = ClassFunction::zero(chi.group());
  const long m = chi.value_conductor();
  for (long u : units) {
    const ClassFunction img = chi.galois(u);
    std::vector<std::vector<Rational>> key;
    for (const auto& x : img.values()) key.push_back(x.coeffs_at(m));
    if (seen.insert(key).second) acc = acc + img;
  }
  return acc;
}

}  // namespace

bool is_qp_stable(const ClassFunction& chi, long p) {
  const long m = chi.value_conductor();
  if (p == 0) return m == 1;
  for (long u : decomposition_units(m, p))
    if (chi.galois(u) != chi) return false;
  return true;
}

ConductorPairing conductor_pairing(const RamificationData& r, const ClassFunction& chi,
                                   const ConductorOptions& opts) {
  const bool stable = is_qp_stable(chi, r.p());
  if (opts.strict_rational && !stable)
    throw ComputationError("character " + chi.str() + " is not stable under Gal(Q_p(mu)/Q_p) for p = " +
                           std::to_string(r.p()));
  ClassFunction bar = refined_artin(r);
  if (opts.p_average) bar = p_average(bar, r.p(), r.n());
  return {pair(bar, chi), stable};
}

Rational conductor(const RamificationData& r, const ClassFunction& chi, const ConductorOptions& opts) {
  const auto res = conductor_pairing(r, chi, opts);
  auto q = res.value.to_rational();
  if (!q) throw ComputationError("pairing is not rational: " + res.value.str());
  return *q;
}

Rational artin_conductor(const RamificationData& r, const ClassFunction& chi) {
  const Cyclotomic v = pair(artin_character(r), chi);
  auto q = v.to_rational();
  if (!q) throw ComputationError("Artin pairing is not rational: " + v.str());
  return *q;
}

std::vector<ClassFunction> qp_irreducibles_cyclic(long n, long p) {
  if (n < 1) throw ComputationError("qp_irreducibles_cyclic needs n >= 1");
  const auto units = decomposition_units(n, p);
  std::vector<bool> done(static_cast<std::size_t>(n), false);
  auto g = FiniteGroup::cyclic(static_cast<int>(n));
  std::vector<ClassFunction> out;
  for (long r = 0; r < n; ++r) {
    if (done[r]) continue;
    std::set<long> orbit;
    for (long u : units) orbit.insert(nt::mod(r * u, n));
    for (long x : orbit) done[x] = true;
    std::vector<Cyclotomic> v;
    for (long j = 0; j < n; ++j) {
      std::vector<std::pair<long, Rational>> terms;
      for (long x : orbit) terms.emplace_back(x * j, Rational(1));
      v.push_back(Cyclotomic::from_terms(n, terms));
    }
    out.emplace_back(g, std::move(v));
  }
  return out;
}

std::vector<ClassFunction> qp_irreducibles(const Group& g, long p) {
  const auto lin = abelian_irreducibles(g);
  long e = 1;
  for (const auto& chi : lin) e = nt::lcm(e, chi.value_conductor());
  const auto units = decomposition_units(e, p);
  std::vector<ClassFunction> out;
  std::vector<bool> used(lin.size(), false);
  for (std::size_t i = 0; i < lin.size(); ++i) {
    if (used[i]) continue;
    for (long u : units) {
      const ClassFunction img = lin[i].galois(u);
      for (std::size_t j = i; j < lin.size(); ++j)
        if (!used[j] && lin[j] == img) used[j] = true;
    }
    out.push_back(galois_orbit_sum(lin[i], units));
  }
  return out;
}

std::vector<ClassFunction> induced_test_characters(const Group& g, long p) {
  std::vector<ClassFunction> out;
  std::set<std::vector<int>> seen;
  for (int x = 0; x < g->order(); ++x) {
    const Subgroup c = Subgroup::generated(g, {x});
    if (!seen.insert(c.members()).second) continue;
    auto [sub, incl] = embed(c);
    for (const auto& psi : qp_irreducibles(sub, p)) {
      ClassFunction ind = pushforward(incl, psi);
      bool dup = false;
      for (const auto& y : out)
        if (y == ind) dup = true;
      if (!dup) out.push_back(std::move(ind));
    }
  }
  return out;
}

WeilCheck weil_restriction_check(const RamificationData& r, const Subgroup& h, const ClassFunction& chi,
                                 const ConductorOptions& opts) {
  const auto sd = subgroup_data(r, h);
  const ClassFunction on_sub(sd.data.gamma(), chi.values());
  const Rational lhs = conductor(r, pushforward(sd.inclusion, on_sub), opts);
  const Rational dim = to_rational(chi.degree());
  const Rational rhs = Rational(sd.f) * conductor(sd.data, on_sub, opts) +
                       frac(1, 2) * discriminant_valuation(r, h) * dim;
  return {lhs, rhs};
}

std::size_t ConductorReport::count(bool binding, bool pass) const {
  std::size_t k = 0;
  for (const auto& rec : records)
    if (rec.binding == binding && rec.pass == pass) ++k;
  return k;
}

namespace {

ReportRecord compare(std::string identity, std::string instance, const std::string& expected,
                     const std::string& computed, bool pass, bool binding) {
  return {std::move(identity), std::move(instance), expected, computed, pass, binding};
}

ReportRecord compare_cf(std::string identity, std::string instance, const ClassFunction& expected,
                        const ClassFunction& computed, bool binding) {
  return compare(std::move(identity), std::move(instance), expected.str(), computed.str(), expected == computed,
                 binding);
}

ReportRecord compare_q(std::string identity, std::string instance, const Rational& expected, const Rational& computed,
                       bool binding) {
  return compare(std::move(identity), std::move(instance), to_string(expected), to_string(computed),
                 expected == computed, binding);
}

template <class F>
std::vector<ReportRecord> guarded(const std::string& identity, const std::string& instance, bool binding, F&& body) {
  try {
    return body();
  } catch (const Error& ex) {
    return {compare(identity, instance, "a value", std::string("error: ") + ex.what(), false, binding)};
  }
}

}  // namespace

std::vector<ReportRecord> bar_relations(long n, long d) {
  std::vector<ReportRecord> out;
  const std::string inst = "n=" + std::to_string(n) + " d=" + std::to_string(d);
  const ClassFunction b = bar_n(n);
  const Group& cn = b.group();
  if (d == 1) {
    out.push_back(compare("bar-trivial-pairing", inst, "0", pair(b, trivial_character(cn)).str(),
                          pair(b, trivial_character(cn)).is_zero(), true));
    out.push_back(compare_cf("bar-bisection", inst, augmentation_character(cn), b + b.conjugate(), true));
  }
  const ClassFunction big = bar_n(n * d);
  const Group& cnd = big.group();
  std::vector<int> power(static_cast<std::size_t>(n * d)), incl(static_cast<std::size_t>(n));
  for (long j = 0; j < n * d; ++j) power[j] = static_cast<int>(j % n);
  for (long j = 0; j < n; ++j) incl[j] = static_cast<int>(j * d);
  // zeta_{nd}^j -> zeta_{nd}^{jd} = zeta_n^j
  const GroupHom pw(cnd, cn, power);
  const GroupHom in(cn, cnd, incl);
  out.push_back(compare_cf("bar-pushforward", inst, b, pushforward(pw, big), true));
  const ClassFunction expected_res = b + Cyclotomic(frac(d - 1, 2)) * regular_character(cn);
  out.push_back(compare_cf("bar-restriction", inst, expected_res, restrict(in, big), true));
  return out;
}

ConductorReport verify_suite(const RamificationData& r, const VerifyOptions& opts) {
  using Task = std::function<std::vector<ReportRecord>()>;
  std::vector<Task> tasks;
  const bool real = opts.realizable;
  const long p = r.p();

  // shared, computed once up front
  const ClassFunction bar = refined_artin(r);
  const ClassFunction ar = artin_character(r);
  const auto subgroups = all_subgroups(r.gamma());
  const auto test_chars = induced_test_characters(r.gamma(), p);

  for (long d = 1; d <= 5; ++d)
    tasks.push_back([n = r.n(), d] { return bar_relations(n, d); });

  tasks.push_back([&] {
    std::vector<ReportRecord> out;
    for (long num = -4; num <= 40; ++num) {
      const Rational u = frac(num, 4);
      const std::string inst = "u=" + to_string(u);
      out.push_back(compare_q("herbrand-inverse", inst, u, herbrand_psi(r, herbrand_phi(r, u)), true));
      out.push_back(compare_q("herbrand-inverse", "v=" + to_string(u), u, herbrand_phi(r, herbrand_psi(r, u)), true));
    }
    return out;
  });

  tasks.push_back([&] {
    return std::vector<ReportRecord>{compare_cf("bisection", "whole group", ar, bar + bar.conjugate(), true)};
  });

  tasks.push_back([&] {
    return guarded("upper-numbering", "whole group", true, [&] {
      return std::vector<ReportRecord>{compare_cf("upper-numbering", "whole group", bar, refined_artin_upper(r), true)};
    });
  });

  for (const auto& nsub : subgroups) {
    if (!nsub.is_normal()) continue;
    tasks.push_back([&, nsub] {
      const std::string inst = "N=" + describe(nsub);
      return guarded("quotient-pushforward", inst, real, [&] {
        const auto qd = quotient_data(r, nsub);
        return std::vector<ReportRecord>{
            compare_cf("quotient-pushforward", inst, refined_artin(qd.data), pushforward(qd.projection, bar), real)};
      });
    });
  }

  for (const auto& h : subgroups) {
    tasks.push_back([&, h] {
      const std::string inst = "H=" + describe(h);
      std::vector<ReportRecord> out;
      auto more = guarded("conductor-discriminant", inst, true, [&] {
        auto [sub, incl] = embed(h);
        const Cyclotomic lhs = pair(ar, pushforward(incl, trivial_character(sub)));
        const Rational disc = discriminant_valuation(r, h);
        return std::vector<ReportRecord>{
            compare("conductor-discriminant", inst, to_string(disc), lhs.str(), lhs == Cyclotomic(disc), true)};
      });
      out.insert(out.end(), more.begin(), more.end());
      more = guarded("subgroup-restriction", inst, real, [&] {
        const auto sd = subgroup_data(r, h);
        const ClassFunction lhs = restrict(sd.inclusion, p_average(bar, p, r.n()));
        const ClassFunction sub_bar = p_average(refined_artin(sd.data), p, sd.data.n());
        const ClassFunction reg(sd.inclusion.source(), regular_character(sd.data.gamma()).values());
        const ClassFunction sub_bar_on(sd.inclusion.source(), sub_bar.values());
        const ClassFunction rhs = Cyclotomic(Rational(sd.f)) * sub_bar_on +
                                  Cyclotomic(frac(1, 2) * discriminant_valuation(r, h)) * reg;
        return std::vector<ReportRecord>{compare_cf("subgroup-restriction", inst, rhs, lhs, real)};
      });
      out.insert(out.end(), more.begin(), more.end());
      more = guarded("weil-restriction", inst, real, [&] {
        std::vector<ReportRecord> recs;
        const auto sd = subgroup_data(r, h);
        for (const auto& chi : induced_test_characters(sd.data.gamma(), p)) {
          const auto w = weil_restriction_check(r, h, chi);
          recs.push_back(compare_q("weil-restriction", inst + " chi=" + chi.str(), w.rhs, w.lhs, real));
        }
        return recs;
      });
      out.insert(out.end(), more.begin(), more.end());
      return out;
    });
  }

  tasks.push_back([&] {
    return guarded("averaging", "whole group", true, [&] {
      std::vector<ReportRecord> out;
      const ClassFunction avg = p_average(bar, p, r.n());
      for (const auto& chi : test_chars) {
        if (!is_qp_stable(chi, p)) continue;
        const Cyclotomic a = pair(avg, chi), b = pair(bar, chi);
        out.push_back(compare("averaging", "chi=" + chi.str(), b.str(), a.str(), a == b, true));
      }
      return out;
    });
  });

  if (r.gamma()->is_abelian()) {
    tasks.push_back([&] {
      std::vector<ReportRecord> out;
      for (const auto& v : upper_jumps(r))
        out.push_back(compare("hasse-arf", "jump", "an integer", to_string(v), is_integer(v), real));
      return out;
    });
  }

  std::vector<std::vector<ReportRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& ex) {
        results[i] = {compare("internal", "task " + std::to_string(i), "a value", ex.what(), false, true)};
      }
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  ConductorReport report;
  for (auto& chunk : results)
    for (auto& rec : chunk) report.records.push_back(std::move(rec));
  return report;
}

}  // namespace arcond
