#pragma once

#include <random>
#include <string>
#include <vector>

#include "arcond/class_function.hpp"
#include "arcond/conductor.hpp"
#include "arcond/cyclotomic.hpp"
#include "arcond/group.hpp"
#include "arcond/io.hpp"
#include "arcond/oracle.hpp"
#include "arcond/ramification.hpp"

namespace arcond::test {

inline std::string fixture(const std::string& name) { return std::string(ARCOND_FIXTURE_DIR) + "/" + name; }

inline io::JobFile load_job(const std::string& name) { return io::parse_job(io::read_file(fixture(name))); }

inline RamificationData load_data(const std::string& name) { return load_job(name).data(); }

inline io::OracleFixture load_oracle(const std::string& name) {
  return io::parse_oracle_fixture(io::read_file(fixture(name)));
}

inline Cyclotomic Q(long a, long b = 1) { return Cyclotomic(frac(a, b)); }

/// chi_r on FiniteGroup::cyclic(n): g^m -> zeta_n^{rm}.
inline ClassFunction linear_cyclic(const Group& cn, long r) {
  const long n = cn->order();
  return ClassFunction::from_elements(cn, [&](int m) { return make_root(n, r * m); });
}

/// Gamma = Gamma_0 = C_n, Psi(1) = zeta_n^exponent.
inline RamificationData tame_cyclic(long n, long p, long exponent = 1) {
  const Group g = FiniteGroup::cyclic(static_cast<int>(n));
  std::optional<TameCharacter> tame;
  if (n > 1) tame = TameCharacter{1, exponent};
  return RamificationData::build(g, {Subgroup::whole(g)}, p, tame);
}

struct NamedGroup {
  std::string name;
  Group group;
};

/// Groups of order at most 24 used by the randomized suites.
inline const std::vector<NamedGroup>& catalogue() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> g;
    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16})
      g.push_back({"C" + std::to_string(n), FiniteGroup::cyclic(n)});
    g.push_back({"C2xC2", FiniteGroup::abelian({2, 2})});
    g.push_back({"C2xC4", FiniteGroup::abelian({2, 4})});
    g.push_back({"C2xC2xC2", FiniteGroup::abelian({2, 2, 2})});
    g.push_back({"C3xC3", FiniteGroup::abelian({3, 3})});
    g.push_back({"C2xC6", FiniteGroup::abelian({2, 6})});
    g.push_back({"C2xC2xC4", FiniteGroup::abelian({2, 2, 4})});
    g.push_back({"S3", FiniteGroup::permutations({{{1, 2}}, {{1, 2, 3}}})});
    g.push_back({"D4", FiniteGroup::permutations({{{1, 2, 3, 4}}, {{1, 3}}})});
    g.push_back({"Q8", FiniteGroup::permutations({{{1, 2, 3, 4}, {5, 6, 7, 8}}, {{1, 5, 3, 7}, {2, 8, 4, 6}}})});
    g.push_back({"D5", FiniteGroup::permutations({{{1, 2, 3, 4, 5}}, {{2, 5}, {3, 4}}})});
    g.push_back({"A4", FiniteGroup::permutations({{{1, 2, 3}}, {{1, 2}, {3, 4}}})});
    g.push_back({"D6", FiniteGroup::permutations({{{1, 2, 3, 4, 5, 6}}, {{2, 6}, {3, 5}}})});
    g.push_back({"C3:C4", FiniteGroup::permutations({{{1, 2, 3}}, {{2, 3}, {4, 5, 6, 7}}})});
    g.push_back({"S3xC3", FiniteGroup::permutations({{{1, 2}}, {{1, 2, 3}}, {{4, 5, 6}}})});
    g.push_back({"D4xC3", FiniteGroup::permutations({{{1, 2, 3, 4}}, {{1, 3}}, {{5, 6, 7}}})});
    g.push_back({"S4", FiniteGroup::permutations({{{1, 2}}, {{1, 2, 3, 4}}})});
    g.push_back({"A4xC2", FiniteGroup::permutations({{{1, 2, 3}}, {{1, 2}, {3, 4}}, {{5, 6}}})});
    return g;
  }();
  return groups;
}

inline long p_part(long m, long p) {
  long q = 1;
  while (p > 1 && m % p == 0) {
    m /= p;
    q *= p;
  }
  return q;
}

/// A random RamificationData accepted by RamificationData::build, of group order at most 24.
/// Gamma_0 is a normal subgroup with a normal Sylow p-subgroup and cyclic tame quotient;
/// the wild part is a random decreasing chain of G-normal subgroups with repeats.
inline RamificationData random_admissible(std::mt19937& rng) {
  const auto& cat = catalogue();
  for (;;) {
    const Group g = cat[std::uniform_int_distribution<std::size_t>(0, cat.size() - 1)(rng)].group;
    const long primes[] = {0, 2, 2, 3, 3, 5, 7};
    const long p = primes[std::uniform_int_distribution<int>(0, 6)(rng)];
    const auto normals = normal_subgroups(g);
    const Subgroup g0 = normals[std::uniform_int_distribution<std::size_t>(0, normals.size() - 1)(rng)];

    const long wild_order = p == 0 ? 1 : p_part(g0.order(), p);
    std::vector<Subgroup> wild_normals;
    for (const auto& h : normals)
      if (g0.contains(h) && wild_order % h.order() == 0) wild_normals.push_back(h);
    std::optional<Subgroup> g1;
    for (const auto& h : wild_normals)
      if (h.order() == wild_order) g1 = h;
    if (!g1) continue;

    const long n = g0.order() / wild_order;
    std::vector<int> gens;
    for (int x : g0.members())
      if (order_modulo(*g1, x) == n) gens.push_back(x);
    if (gens.empty()) continue;

    std::vector<Subgroup> filt{g0};
    Subgroup cur = *g1;
    while (!cur.is_trivial()) {
      const int reps = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < reps; ++k) filt.push_back(cur);
      std::vector<Subgroup> below;
      for (const auto& h : wild_normals)
        if (cur.contains(h) && h.order() < cur.order()) below.push_back(h);
      cur = below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)];
    }

    std::optional<TameCharacter> tame;
    if (n > 1) {
      std::vector<long> units;
      for (long k = 1; k < n; ++k)
        if (nt::gcd(k, n) == 1) units.push_back(k);
      tame = TameCharacter{gens[std::uniform_int_distribution<std::size_t>(0, gens.size() - 1)(rng)],
                           units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)]};
    }
    return RamificationData::build(g, filt, p, tame);
  }
}

/// Curated job fixtures whose identities are binding.
inline const std::vector<std::string>& curated_jobs() {
  static const std::vector<std::string> names{"quad.json",         "tame_c4.json",      "tame_c12_p7.json",
                                              "mixed_c6.json",     "tame_s3_p5.json",   "tame_s3_p2.json",
                                              "unramified_c2.json"};
  return names;
}

/// Monogenic fixtures for Q_p(zeta_{p^k}) with p in {2, 3}, k <= 2, plus two extra orders.
inline const std::vector<std::string>& cyclotomic_oracles() {
  static const std::vector<std::string> names{"zeta4_oracle.json", "zeta3_oracle.json", "zeta9_oracle.json"};
  return names;
}

struct Curated {
  std::string name;
  RamificationData data;
};

/// Every curated data set: job files, tame C_n for n <= 12 over several p, and monogenic derivations.
inline std::vector<Curated> curated_data() {
  std::vector<Curated> out;
  for (const auto& name : curated_jobs()) out.push_back({name, load_data(name)});
  for (long n = 1; n <= 12; ++n)
    for (long p : {0L, 2L, 3L, 5L, 7L, 11L, 13L})
      if (p == 0 || n % p != 0) out.push_back({"tame C" + std::to_string(n) + " p=" + std::to_string(p), tame_cyclic(n, p)});
  for (const auto& name : cyclotomic_oracles())
    out.push_back({name, filtration_from_monogenic(load_oracle(name).order)});
  out.push_back({"zeta8_oracle.json", filtration_from_monogenic(load_oracle("zeta8_oracle.json").order)});
  out.push_back({"sqrt3_oracle.json", filtration_from_monogenic(load_oracle("sqrt3_oracle.json").order)});
  out.push_back({"cubic7_oracle.json", filtration_from_monogenic(load_oracle("cubic7_oracle.json").order)});
  return out;
}

}  // namespace arcond::test
