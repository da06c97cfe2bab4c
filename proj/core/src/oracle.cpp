#include "arcond/oracle.hpp"

#include <algorithm>
#include <map>

#include "arcond/cyclotomic.hpp"
#include "arcond/errors.hpp"

namespace arcond {

namespace {

QPoly to_qpoly(const std::vector<Integer>& c) {
  std::vector<Rational> v;
  for (const auto& z : c) v.emplace_back(z);
  return QPoly(std::move(v));
}

// y(g(x)) by Horner, reduced mod f at each step
QPoly compose_mod(const QPoly& y, const QPoly& g, const QPoly& f) {
  QPoly acc;
  for (std::size_t k = y.coeffs().size(); k-- > 0;) acc = (acc * g + QPoly::constant(y.coeffs()[k])) % f;
  return acc;
}

Integer as_integer(const Rational& q) {
  if (q.get_den() != 1) throw ComputationError("expected an integral coefficient, got " + to_string(q));
  return q.get_num();
}

UPoly<Cyclotomic> exact_div_cyc(const UPoly<Cyclotomic>& a, const UPoly<Cyclotomic>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) throw ComputationError("inexact division in fraction-free elimination");
  return q;
}

QPoly exact_div_q(const QPoly& a, const QPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.zero()) throw ComputationError("inexact division in fraction-free elimination");
  return q;
}

std::vector<long> roots_of_unity_mod(long n, long p) {
  std::vector<long> out;
  for (long a = 1; a < p; ++a)
    if (nt::multiplicative_order(a, p) == n) out.push_back(a);
  return out;
}

}  // namespace

Rational oracle_tame_clin(long n, const std::vector<long>& exponents) {
  if (n < 1) throw ComputationError("tame oracle needs n >= 1");
  const std::size_t d = exponents.size();
  const std::size_t dim = d * static_cast<std::size_t>(n);
  // sigma on e_j (x) pi^k is zeta^{i_j + k}; stack sigma - 1
  Matrix<Cyclotomic> a(dim, dim);
  for (std::size_t j = 0; j < d; ++j)
    for (long k = 0; k < n; ++k) {
      const std::size_t idx = j * static_cast<std::size_t>(n) + static_cast<std::size_t>(k);
      a(idx, idx) = Cyclotomic::root(n, exponents[j] + k) - Cyclotomic(1);
    }
  const Matrix<Cyclotomic> inv = field_kernel(a);
  if (inv.cols() != d) throw ComputationError("invariant lattice has rank " + std::to_string(inv.cols()));
  Matrix<UPoly<Cyclotomic>> w(d, d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Cyclotomic> c;
      for (long k = 0; k < n; ++k) c.push_back(inv(j * static_cast<std::size_t>(n) + static_cast<std::size_t>(k), col));
      w(j, col) = UPoly<Cyclotomic>(std::move(c));
    }
  const auto det = det_bareiss<UPoly<Cyclotomic>>(w, exact_div_cyc);
  if (det.zero()) throw ComputationError("degenerate lattice map");
  return frac(det.low_degree(), n);
}

MonogenicOrder::MonogenicOrder(long p, std::vector<Integer> f, std::vector<std::vector<Integer>> galois) : p_(p) {
  std::vector<std::string> errs;
  if (!nt::is_prime(p)) errs.push_back("p = " + std::to_string(p) + " is not prime");
  f_ = to_qpoly(f);
  if (f_.degree() < 1 || f_.lead() != 1) errs.emplace_back("f must be monic of positive degree");
  if (!errs.empty()) throw ValidationError(std::move(errs));
  const Integer pz(p);
  for (long k = 0; k < f_.degree(); ++k)
    if (!mpz_divisible_p(as_integer(f_.coeff(static_cast<std::size_t>(k))).get_mpz_t(), pz.get_mpz_t()))
      errs.push_back("f is not Eisenstein at " + std::to_string(p) + ": coefficient of x^" + std::to_string(k) +
                     " is not divisible by p");
  const Integer c0 = as_integer(f_.coeff(0));
  if (c0 == 0 || mpz_divisible_p(c0.get_mpz_t(), Integer(pz * pz).get_mpz_t()))
    errs.push_back("f is not Eisenstein at " + std::to_string(p) + ": constant term divisible by p^2");
  if (!errs.empty()) throw ValidationError(std::move(errs));

  for (std::size_t i = 0; i < galois.size(); ++i) {
    QPoly g = to_qpoly(galois[i]) % f_;
    if (!compose_mod(f_, g, f_).zero())
      errs.push_back("galois[" + std::to_string(i) + "] is not a root of f modulo f");
    for (std::size_t j = 0; j < g_.size(); ++j)
      if (g_[j] == g) errs.push_back("galois[" + std::to_string(i) + "] repeats galois[" + std::to_string(j) + "]");
    g_.push_back(std::move(g));
  }
  if (!errs.empty()) throw ValidationError(std::move(errs));
  const QPoly x({Rational(0), Rational(1)});
  if (g_.empty() || !(g_[0] == x % f_)) errs.emplace_back("the first automorphism must be the identity x -> x");
  if (static_cast<long>(g_.size()) != f_.degree())
    errs.push_back("expected " + std::to_string(f_.degree()) + " automorphisms (f must define a Galois extension), got " +
                   std::to_string(g_.size()));
  if (!errs.empty()) throw ValidationError(std::move(errs));
  const std::size_t n = g_.size();
  FiniteGroup::Table t(n, std::vector<int>(n));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = 0; u < n; ++u) {
      const QPoly prod = compose_mod(g_[u], g_[s], f_);
      auto it = std::find(g_.begin(), g_.end(), prod);
      if (it == g_.end())
        throw ValidationError({"automorphisms are not closed under composition (" + std::to_string(s) + ", " +
                               std::to_string(u) + ")"});
      t[s][u] = static_cast<int>(it - g_.begin());
    }
  group_ = FiniteGroup::from_table(std::move(t));
}

QPoly MonogenicOrder::act(int sigma, const QPoly& y) const { return compose_mod(y, g_[sigma], f_); }

IntMatrix MonogenicOrder::action_matrix(int sigma) const {
  const auto e = static_cast<std::size_t>(degree());
  IntMatrix m(e, e);
  QPoly xk = QPoly::constant(Rational(1));
  for (std::size_t k = 0; k < e; ++k) {
    for (std::size_t r = 0; r < e; ++r) m(r, k) = as_integer(xk.coeff(r));
    xk = (xk * g_[sigma]) % f_;
  }
  return m;
}

Rational MonogenicOrder::norm(const QPoly& y) const { return resultant(f_, reduce(y)); }

std::optional<long> MonogenicOrder::valuation(const QPoly& y) const {
  const QPoly r = reduce(y);
  if (r.zero()) return std::nullopt;
  const Rational nm = norm(r);
  return arcond::valuation(nm.get_num(), p_) - arcond::valuation(nm.get_den(), p_);
}

std::vector<IntMatrix> MonogenicOrder::regular_module() const {
  const auto n = static_cast<std::size_t>(group_->order());
  std::vector<IntMatrix> out;
  for (std::size_t s = 0; s < n; ++s) {
    IntMatrix m(n, n);
    for (std::size_t t = 0; t < n; ++t) m(static_cast<std::size_t>(group_->mul(static_cast<int>(s), static_cast<int>(t))), t) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<IntMatrix> MonogenicOrder::trivial_module() const {
  return std::vector<IntMatrix>(static_cast<std::size_t>(group_->order()), IntMatrix::identity(1));
}

Rational oracle_monogenic_clin(const MonogenicOrder& o, const std::vector<IntMatrix>& action) {
  const auto& G = *o.group();
  if (static_cast<int>(action.size()) != G.order())
    throw ValidationError({"module needs one matrix per group element (" + std::to_string(G.order()) + ")"});
  const std::size_t d = action[0].rows();
  std::vector<std::string> errs;
  for (std::size_t s = 0; s < action.size(); ++s)
    if (action[s].rows() != d || action[s].cols() != d)
      errs.push_back("module matrix " + std::to_string(s) + " is not " + std::to_string(d) + "x" + std::to_string(d));
  if (!errs.empty()) throw ValidationError(std::move(errs));
  if (!(action[0] == IntMatrix::identity(d))) errs.emplace_back("module matrix of the identity is not the identity");
  for (int s = 0; s < G.order(); ++s)
    for (int t = 0; t < G.order(); ++t)
      if (!(action[static_cast<std::size_t>(G.mul(s, t))] == action[static_cast<std::size_t>(s)] * action[static_cast<std::size_t>(t)])) {
        errs.push_back("module matrices are not a representation at (" + std::to_string(s) + ", " + std::to_string(t) + ")");
        s = G.order();
        break;
      }
  if (!errs.empty()) throw ValidationError(std::move(errs));

  const auto e = static_cast<std::size_t>(o.degree());
  const std::size_t dim = d * e;
  IntMatrix stacked(dim * static_cast<std::size_t>(G.order() - 1), dim);
  for (int s = 1; s < G.order(); ++s) {
    IntMatrix m = kronecker(action[static_cast<std::size_t>(s)], o.action_matrix(s));
    for (std::size_t i = 0; i < dim; ++i) m(i, i) -= 1;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked((static_cast<std::size_t>(s) - 1) * dim + i, j) = m(i, j);
  }
  const IntMatrix inv = G.order() > 1 ? integer_kernel(stacked) : IntMatrix::identity(dim);
  if (inv.cols() != d)
    throw ComputationError("invariant lattice has rank " + std::to_string(inv.cols()) + ", module rank is " +
                           std::to_string(d));
  Matrix<QPoly> w(d, d);
  for (std::size_t col = 0; col < d; ++col)
    for (std::size_t j = 0; j < d; ++j) {
      std::vector<Rational> c;
      for (std::size_t k = 0; k < e; ++k) c.emplace_back(inv(j * e + k, col));
      w(j, col) = QPoly(std::move(c));
    }
  const QPoly det = det_bareiss<QPoly>(w, exact_div_q);
  const auto v = o.valuation(det);
  if (!v) throw ComputationError("lattice map is not injective");
  return frac(*v, o.degree());
}

std::vector<Subgroup> lower_filtration_from_monogenic(const MonogenicOrder& o) {
  const auto& G = o.group();
  const QPoly x({Rational(0), Rational(1)});
  std::vector<long> level(static_cast<std::size_t>(G->order()), 0);
  long top = 0;
  for (int s = 1; s < G->order(); ++s) {
    const auto v = o.valuation(o.galois()[s] - x);
    level[s] = *v;
    top = std::max(top, *v);
  }
  std::vector<Subgroup> filt;
  for (long i = 0; i < std::max(top, 1L); ++i) {
    std::vector<int> m{0};
    for (int s = 1; s < G->order(); ++s)
      if (level[s] >= i + 1) m.push_back(s);
    filt.emplace_back(G, std::move(m));
  }
  return filt;
}

long prime_choice_count(long n, long p) { return static_cast<long>(roots_of_unity_mod(n, p).size()); }

TameCharacter tame_character_from_monogenic(const MonogenicOrder& o, long prime_choice) {
  const auto filt = lower_filtration_from_monogenic(o);
  const Subgroup g1 = filt.size() > 1 ? filt[1] : Subgroup::trivial(o.group());
  const long n = filt[0].order() / g1.order();
  const long p = o.p();
  if (n == 1) throw ComputationError("tame quotient is trivial; there is no tame character to compute");
  if (n % p == 0) throw ComputationError("p divides the tame degree");
  if ((p - 1) % n != 0)
    throw ComputationError("mu_" + std::to_string(n) + " is not in the residue field F_" + std::to_string(p));
  const auto roots = roots_of_unity_mod(n, p);
  if (prime_choice < 0 || prime_choice >= static_cast<long>(roots.size()))
    throw ComputationError("prime choice " + std::to_string(prime_choice) + " out of range 0.." +
                           std::to_string(roots.size() - 1));
  const long a = roots[static_cast<std::size_t>(prime_choice)];
  int gen = -1;
  for (int s : filt[0].members())
    if (order_modulo(g1, s) == n) {
      gen = s;
      break;
    }
  // sigma(x)/x = c_1 + (terms in m_L) since p | c_0 and e >= 2
  const QPoly& g = o.galois()[gen];
  const Integer c1 = as_integer(g.coeff(1));
  const long u = nt::mod(Integer(c1 % p).get_si(), p);
  long k = 0, ak = 1;
  while (ak != u) {
    ak = nt::mod(ak * a, p);
    if (++k > n) throw ComputationError("sigma(pi)/pi is not an n-th root of unity mod p");
  }
  return {gen, k};
}

RamificationData filtration_from_monogenic(const MonogenicOrder& o, long prime_choice) {
  auto filt = lower_filtration_from_monogenic(o);
  const Subgroup g1 = filt.size() > 1 ? filt[1] : Subgroup::trivial(o.group());
  std::optional<TameCharacter> tame;
  if (filt[0].order() != g1.order()) tame = tame_character_from_monogenic(o, prime_choice);
  return RamificationData::build(o.group(), std::move(filt), o.p(), tame);
}

}  // namespace arcond
