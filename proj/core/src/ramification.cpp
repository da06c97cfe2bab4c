#include "arcond/ramification.hpp"

#include "arcond/errors.hpp"

namespace arcond {

namespace {

long ceil_of(const Rational& t) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return q.get_si();
}

long floor_of(const Rational& t) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  return q.get_si();
}

std::vector<Subgroup> strip_trailing(std::vector<Subgroup> filt, const Group& gamma) {
  if (filt.empty()) filt.push_back(Subgroup::trivial(gamma));
  while (filt.size() > 1 && filt.back().is_trivial()) filt.pop_back();
  return filt;
}

// m with g = gen^m modulo Gamma_1, or -1.
long tame_log(const RamificationData& r, int g) {
  const auto& G = *r.gamma();
  const Subgroup g1 = r.lower(1);
  int x = 0;
  for (long m = 0; m < r.n(); ++m) {
    if (g1.contains(G.mul(G.inv(x), g))) return m;
    x = G.mul(x, r.tame().generator);
  }
  return -1;
}

}  // namespace

std::vector<std::string> RamificationData::violations(const Group& gamma, const std::vector<Subgroup>& filtration,
                                                      long p, const std::optional<TameCharacter>& tame,
                                                      Check check) {
  std::vector<std::string> errs;
  for (std::size_t i = 0; i < filtration.size(); ++i)
    if (!same_group(filtration[i].parent(), gamma))
      errs.push_back("Gamma_" + std::to_string(i) + " is not a subgroup of the Galois group");
  if (!errs.empty()) return errs;
  const auto filt = strip_trailing(filtration, gamma);
  for (std::size_t i = 0; i < filt.size(); ++i) {
    if (!filt[i].is_normal())
      errs.push_back("Gamma_" + std::to_string(i) + " = " + describe(filt[i]) + " is not normal");
    if (i > 0 && !filt[i - 1].contains(filt[i]))
      errs.push_back("filtration is not decreasing: Gamma_" + std::to_string(i) + " is not contained in Gamma_" +
                     std::to_string(i - 1));
  }
  if (p < 0 || (p > 0 && !nt::is_prime(p)))
    errs.push_back("residue characteristic " + std::to_string(p) + " is neither 0 nor a prime");
  const Subgroup& g0 = filt[0];
  const Subgroup g1 = filt.size() > 1 ? filt[1] : Subgroup::trivial(gamma);
  if (!g0.contains(g1)) return errs;
  const long n = g0.order() / g1.order();
  if (p > 0 && nt::is_prime(p)) {
    if (!is_p_group(g1, p))
      errs.push_back("Gamma_1 = " + describe(g1) + " has order " + std::to_string(g1.order()) + ", not a power of " +
                     std::to_string(p));
    if (n % p == 0)
      errs.push_back("tame degree |Gamma_0/Gamma_1| = " + std::to_string(n) + " is divisible by p = " +
                     std::to_string(p));
  }
  if (p == 0 && !g1.is_trivial()) errs.push_back("p = 0 requires Gamma_1 to be trivial");
  bool cyclic = false;
  for (int x : g0.members())
    if (order_modulo(g1, x) == n) cyclic = true;
  if (!cyclic) errs.push_back("Gamma_0/Gamma_1 is not cyclic");
  if (!tame) {
    if (n > 1) errs.push_back("a tame character is required when |Gamma_0/Gamma_1| = " + std::to_string(n) + " > 1");
    return errs;
  }
  if (tame->generator < 0 || tame->generator >= gamma->order() || !g0.contains(tame->generator)) {
    errs.push_back("tame generator " + std::to_string(tame->generator) + " is not in Gamma_0");
    return errs;
  }
  if (cyclic && order_modulo(g1, tame->generator) != n)
    errs.push_back("tame generator " + std::to_string(tame->generator) + " does not generate Gamma_0/Gamma_1");
  if (check == Check::strict && nt::gcd(tame->exponent, n) != 1)
    errs.push_back("tame character is not injective: exponent " + std::to_string(tame->exponent) +
                   " is not a unit modulo " + std::to_string(n));
  return errs;
}

RamificationData RamificationData::build(Group gamma, std::vector<Subgroup> filtration, long p,
                                         std::optional<TameCharacter> tame, Check check) {
  auto errs = violations(gamma, filtration, p, tame, check);
  if (!errs.empty()) throw ValidationError(std::move(errs));
  auto filt = strip_trailing(std::move(filtration), gamma);
  const long g1 = filt.size() > 1 ? filt[1].order() : 1;
  const long n = filt[0].order() / g1;
  TameCharacter t = tame.value_or(TameCharacter{});
  t.exponent = nt::mod(t.exponent, n);
  return RamificationData(std::move(gamma), std::move(filt), p, t, n);
}

Subgroup RamificationData::lower(long i) const {
  if (i < 0) return Subgroup::whole(gamma_);
  if (i < static_cast<long>(filt_.size())) return filt_[static_cast<std::size_t>(i)];
  return Subgroup::trivial(gamma_);
}

Subgroup RamificationData::lower_at(const Rational& t) const {
  if (t < -1) throw ComputationError("ramification index below -1");
  return lower(ceil_of(t));
}

long RamificationData::last_jump() const {
  if (filt_[0].is_trivial()) return -1;
  return static_cast<long>(filt_.size()) - 1;
}

Cyclotomic RamificationData::psi(int g) const {
  const long m = tame_log(*this, g);
  if (m < 0) throw ComputationError("element " + std::to_string(g) + " is not in Gamma_0");
  return Cyclotomic::root(n_, tame_.exponent * m);
}

RamificationData::TameMaps RamificationData::tame_maps() const {
  auto [g0, incl] = embed(filt_[0]);
  auto [q, proj] = quotient(preimage(incl, lower(1)));
  const auto& Q = *q;
  std::vector<int> map(static_cast<std::size_t>(Q.order()), 0);
  int pos = 0;
  while (incl(pos) != tame_.generator) ++pos;
  const int qg = proj(pos);
  int x = 0;
  for (long m = 0; m < n_; ++m) {
    map[x] = static_cast<int>(nt::mod(tame_.exponent * m, n_));
    x = Q.mul(x, qg);
  }
  GroupHom psi_hom(q, FiniteGroup::cyclic(static_cast<int>(n_)), std::move(map));
  return {g0, incl, proj, psi_hom};
}

Rational herbrand_phi(const RamificationData& r, const Rational& u) {
  if (u < -1) throw ComputationError("Herbrand function argument below -1");
  if (u <= 0) return u;
  const long s = r.last_jump();
  const Rational e(r.e());
  Rational acc(0);
  for (long i = 1; i <= s; ++i) {
    if (u <= i - 1) return acc;
    const Rational hi = u < i ? u : Rational(i);
    acc += (hi - (i - 1)) * r.lower(i).order() / e;
  }
  const long start = s > 0 ? s : 0;
  if (u > start) acc += (u - start) / e;
  return acc;
}

Rational herbrand_psi(const RamificationData& r, const Rational& v) {
  if (v < -1) throw ComputationError("Herbrand function argument below -1");
  if (v <= 0) return v;
  const long s = r.last_jump();
  const Rational e(r.e());
  Rational rem = v;
  for (long i = 1; i <= s; ++i) {
    const Rational slope = Rational(r.lower(i).order()) / e;
    if (rem <= slope) return Rational(i - 1) + rem / slope;
    rem -= slope;
  }
  const long start = s > 0 ? s : 0;
  return Rational(start) + rem * e;
}

Subgroup upper_group(const RamificationData& r, const Rational& v) { return r.lower_at(herbrand_psi(r, v)); }

Subgroup upper_group_after(const RamificationData& r, const Rational& v) {
  return r.lower(floor_of(herbrand_psi(r, v)) + 1);
}

std::vector<Rational> upper_jumps(const RamificationData& r) {
  std::vector<Rational> out;
  for (long i = 0; i <= r.last_jump(); ++i)
    if (r.lower(i) != r.lower(i + 1)) out.push_back(herbrand_phi(r, Rational(i)));
  return out;
}

ClassFunction artin_character(const RamificationData& r) {
  auto acc = ClassFunction::zero(r.gamma());
  for (long i = 0; i <= r.last_jump(); ++i) {
    const Subgroup gi = r.lower(i);
    acc = acc + Cyclotomic(frac(gi.order(), r.e())) * induced_augmentation(gi);
  }
  return acc;
}

ClassFunction bar_n(long n) {
  if (n < 1) throw ComputationError("bar_n needs n >= 1");
  auto g = FiniteGroup::cyclic(static_cast<int>(n));
  std::vector<Cyclotomic> v;
  for (long j = 0; j < n; ++j) {
    std::vector<std::pair<long, Rational>> terms;
    for (long r = 1; r < n; ++r) terms.emplace_back(r * j, frac(r, n));
    v.push_back(Cyclotomic::from_terms(n, terms));
  }
  return ClassFunction(g, std::move(v));
}

ClassFunction refined_artin(const RamificationData& r) {
  const auto maps = r.tame_maps();
  const Group& g0 = maps.gamma0;
  ClassFunction inner = pullback(maps.projection, pullback(maps.psi, bar_n(r.n())));
  const Rational half(1, 2);
  inner = inner + Cyclotomic(half) * induced_augmentation(preimage(maps.inclusion, r.lower(1)));
  for (long i = 1; i <= r.last_jump(); ++i) {
    const Subgroup gi = preimage(maps.inclusion, r.lower(i));
    inner = inner + Cyclotomic(half * frac(gi.order(), r.e())) * induced_augmentation(gi);
  }
  (void)g0;
  return pushforward(maps.inclusion, inner);
}

ClassFunction refined_artin_upper(const RamificationData& r) {
  const long g0 = r.e();
  const Subgroup top = upper_group(r, Rational(0));
  const Subgroup wild = upper_group(r, frac(1, g0));
  auto [sub, incl] = embed(top);
  const ClassFunction bar = bar_n(r.n());
  const Group& cn = bar.group();
  ClassFunction inner = ClassFunction::from_elements(sub, [&](int x) {
    // Psi(x) = zeta_n^j picks the value of bar_n at element j
    const Cyclotomic z = r.psi(incl(x));
    for (int j = 0; j < cn->order(); ++j)
      if (Cyclotomic::root(r.n(), j) == z) return bar(j);
    throw ComputationError("tame character value outside mu_n");
  });
  inner = inner + Cyclotomic(frac(1, 2)) * induced_augmentation(preimage(incl, wild));
  const Cyclotomic weight(frac(1, 2 * g0));
  for (long i = 1;; ++i) {
    const Subgroup gi = upper_group(r, frac(i, g0));
    if (gi.is_trivial()) break;
    inner = inner + weight * induced_augmentation(preimage(incl, gi));
  }
  return pushforward(incl, inner);
}

ClassFunction p_average(const ClassFunction& chi, long p, long n) {
  if (p == 0) return chi;
  if (n > 0 && n % p == 0)
    throw ComputationError("p = " + std::to_string(p) + " divides n = " + std::to_string(n));
  std::vector<Cyclotomic> v;
  for (const auto& x : chi.values()) v.push_back(x.frobenius_average(p));
  return ClassFunction(chi.group(), std::move(v));
}

SubgroupData subgroup_data(const RamificationData& r, const Subgroup& h) {
  if (!same_group(h.parent(), r.gamma())) throw ValidationError({"subgroup of a different group"});
  auto [sub, incl] = embed(h);
  const Subgroup h0 = intersect(h, r.lower(0));
  const Subgroup h1 = intersect(h, r.lower(1));
  std::vector<Subgroup> filt;
  for (long i = 0; i <= std::max(r.last_jump(), 0L); ++i) filt.push_back(preimage(incl, intersect(h, r.lower(i))));
  const long n1 = h0.order() / h1.order();
  const long e_wild = r.lower(1).order() / h1.order();
  const long f = static_cast<long>(r.gamma()->order()) * h0.order() / (r.e() * h.order());
  TameCharacter t;
  if (n1 > 1) {
    int sigma = -1;
    for (int x : h0.members())
      if (order_modulo(h1, x) == n1) {
        sigma = x;
        break;
      }
    const long m = tame_log(r, sigma);
    const long a = r.tame().exponent * m / (r.n() / n1);
    int pos = 0;
    while (h.members()[pos] != sigma) ++pos;
    t.generator = pos;
    t.exponent = nt::mod(a * nt::inverse_mod(e_wild, n1), n1);
  }
  const bool degenerate = nt::gcd(r.tame().exponent, r.n()) != 1;
  auto data = RamificationData::build(sub, std::move(filt), r.p(), t,
                                      degenerate ? RamificationData::Check::allow_degenerate_tame
                                                 : RamificationData::Check::strict);
  return {std::move(data), incl, f, e_wild};
}

QuotientData quotient_data(const RamificationData& r, const Subgroup& nsub) {
  auto [q, proj] = quotient(nsub);
  const Subgroup q0 = image(proj, r.lower(0));
  std::vector<Subgroup> filt{q0};
  if (!q0.is_trivial()) {
    Rational phi_q(0);
    while (true) {
      const Subgroup h = image(proj, upper_group_after(r, phi_q));
      if (h.is_trivial()) break;
      const Rational end = phi_q + frac(h.order(), q0.order());
      if (image(proj, upper_group(r, end)) != h)
        throw ComputationError("quotient by " + describe(nsub) +
                               " has no integral lower numbering filtration (upper filtration jumps inside (" +
                               to_string(phi_q) + ", " + to_string(end) + "])");
      filt.push_back(h);
      phi_q = end;
    }
  }
  const long nq = q0.order() / (filt.size() > 1 ? filt[1].order() : 1);
  TameCharacter t;
  if (nq > 1) {
    t.generator = proj(r.tame().generator);
    t.exponent = nt::mod(r.tame().exponent, nq);
  }
  const bool degenerate = nt::gcd(r.tame().exponent, r.n()) != 1;
  auto data = RamificationData::build(q, std::move(filt), r.p(), t,
                                      degenerate ? RamificationData::Check::allow_degenerate_tame
                                                 : RamificationData::Check::strict);
  return {std::move(data), proj};
}

long different_valuation(const RamificationData& r) {
  long d = 0;
  for (long i = 0; i <= r.last_jump(); ++i) d += r.lower(i).order() - 1;
  return d;
}

Rational discriminant_valuation(const RamificationData& r, const Subgroup& h) {
  const auto sd = subgroup_data(r, h);
  const long e_lm = sd.data.e();
  return frac(sd.f * (different_valuation(r) - different_valuation(sd.data)), e_lm);
}

}  // namespace arcond
