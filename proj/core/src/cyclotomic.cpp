#include "arcond/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "arcond/errors.hpp"

namespace arcond {

namespace {

std::shared_mutex phi_mutex;
std::map<long, std::unique_ptr<QPoly>> phi_cache;

QPoly compute_cyclotomic(long n) {
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1, Rational(0));
  v[0] = -1;
  v[static_cast<std::size_t>(n)] = 1;
  QPoly acc(std::move(v));
  for (long d = 1; d < n; ++d)
    if (n % d == 0) acc = acc / cyclotomic_polynomial(d);
  return acc;
}

// Reduces sum v[k] X^k modulo Phi_n, returning phi(n) coordinates.
std::vector<Rational> reduce(std::vector<Rational> v, long n) {
  const auto& phi = cyclotomic_polynomial(n).coeffs();
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = v.size(); k-- > d;) {
    if (is_zero(v[k])) continue;
    const Rational t = v[k];
    for (std::size_t j = 0; j < d; ++j)
      if (!is_zero(phi[j])) v[k - d + j] -= t * phi[j];
    v[k] = 0;
  }
  v.resize(d, Rational(0));
  return v;
}

// Coordinates of a level-n vector inside level m (n | m), unreduced, length m.
std::vector<Rational> spread(const std::vector<Rational>& c, long n, long m) {
  std::vector<Rational> v(static_cast<std::size_t>(m), Rational(0));
  const long step = m / n;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!is_zero(c[j])) v[static_cast<std::size_t>((static_cast<long>(j) * step) % m)] += c[j];
  return v;
}

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& a : v)
    if (!is_zero(a)) return false;
  return true;
}

// Attempts to express a level-n value at level n/q; empty optional if impossible.
std::optional<std::vector<Rational>> descend(const std::vector<Rational>& c, long n, long q) {
  const long m = n / q;
  if (m % q == 0) {
    std::vector<Rational> out(static_cast<std::size_t>(nt::euler_phi(m)), Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (is_zero(c[j])) continue;
      if (j % static_cast<std::size_t>(q) != 0) return std::nullopt;
      out[j / static_cast<std::size_t>(q)] = c[j];
    }
    return out;
  }
  const long q_inv = m == 1 ? 0 : nt::inverse_mod(q, m);
  const long m_inv = nt::inverse_mod(m, q);
  std::vector<std::vector<Rational>> parts(static_cast<std::size_t>(q),
                                           std::vector<Rational>(static_cast<std::size_t>(m), Rational(0)));
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (is_zero(c[j])) continue;
    const long jj = static_cast<long>(j);
    const long x = m == 1 ? 0 : nt::mod(jj * q_inv, m);
    const long y = nt::mod(jj * m_inv, q);
    parts[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] += c[j];
  }
  for (auto& part : parts) part = reduce(std::move(part), m);
  for (long y = 2; y < q; ++y)
    if (parts[static_cast<std::size_t>(y)] != parts[1]) return std::nullopt;
  std::vector<Rational> out = parts[0];
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= parts[1][k];
  return out;
}

}  // namespace

const QPoly& cyclotomic_polynomial(long n) {
  if (n < 1) throw ComputationError("cyclotomic polynomial of non-positive index");
  {
    std::shared_lock lock(phi_mutex);
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<QPoly>(compute_cyclotomic(n));
  std::unique_lock lock(phi_mutex);
  auto [it, inserted] = phi_cache.try_emplace(n, std::move(fresh));
  return *it->second;
}

void Cyclotomic::canonicalize() {
  bool moved = true;
  while (moved && n_ > 1) {
    moved = false;
    if (all_zero(c_)) {
      n_ = 1;
      c_.assign(1, Rational(0));
      return;
    }
    for (long q : nt::prime_divisors(n_)) {
      if (auto lower = descend(c_, n_, q)) {
        n_ /= q;
        c_ = std::move(*lower);
        moved = true;
        break;
      }
    }
  }
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<Rational> coeffs) {
  if (n < 1) throw ComputationError("cyclotomic level must be positive");
  Cyclotomic out(n, reduce(std::move(coeffs), n));
  out.canonicalize();
  return out;
}

Cyclotomic Cyclotomic::from_terms(long n, const std::vector<std::pair<long, Rational>>& terms) {
  if (n < 1) throw ComputationError("cyclotomic level must be positive");
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  for (const auto& [k, a] : terms) v[static_cast<std::size_t>(nt::mod(k, n))] += a;
  return from_coeffs(n, std::move(v));
}

Cyclotomic Cyclotomic::root(long n, long k) { return from_terms(n, {{k, Rational(1)}}); }

std::vector<Rational> Cyclotomic::coeffs_at(long m) const {
  if (m % n_ != 0) throw ComputationError("level " + std::to_string(m) + " does not contain conductor " + std::to_string(n_));
  if (m == n_) return c_;
  return reduce(spread(c_, n_, m), m);
}

std::optional<Rational> Cyclotomic::to_rational() const {
  if (n_ != 1) return std::nullopt;
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& a : out.c_) a = -a;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  const long m = nt::lcm(a.n_, b.n_);
  std::vector<Rational> x = a.coeffs_at(m);
  const std::vector<Rational> y = b.coeffs_at(m);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
  Cyclotomic out(m, std::move(x));
  out.canonicalize();
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1) return a.c_[0] * b;
  if (b.n_ == 1) return b.c_[0] * a;
  const long m = nt::lcm(a.n_, b.n_);
  const std::vector<Rational> x = a.coeffs_at(m);
  const std::vector<Rational> y = b.coeffs_at(m);
  std::vector<Rational> prod(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (is_zero(y[j])) continue;
      prod[(i + j) % static_cast<std::size_t>(m)] += x[i] * y[j];
    }
  }
  Cyclotomic out(m, reduce(std::move(prod), m));
  out.canonicalize();
  return out;
}

Cyclotomic operator*(const Rational& s, const Cyclotomic& a) {
  if (is_zero(s)) return Cyclotomic();
  Cyclotomic out(a);
  for (auto& x : out.c_) x *= s;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw ComputationError("division by zero");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  auto [g, s, t] = xgcd(QPoly(c_), cyclotomic_polynomial(n_));
  (void)t;
  return from_coeffs(n_, s.coeffs());
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  if (nt::gcd(k, n_) != 1)
    throw ComputationError("Galois exponent " + std::to_string(k) + " is not coprime to conductor " +
                           std::to_string(n_));
  std::vector<Rational> v(static_cast<std::size_t>(n_), Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!arcond::is_zero(c_[j])) v[static_cast<std::size_t>(nt::mod(static_cast<long>(j) * k, n_))] += c_[j];
  return from_coeffs(n_, std::move(v));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

Cyclotomic Cyclotomic::frobenius_average(long p) const {
  if (n_ == 1) return *this;
  if (nt::gcd(p, n_) != 1)
    throw ComputationError(std::to_string(p) + " divides the conductor " + std::to_string(n_));
  const long r = nt::multiplicative_order(p, n_);
  Cyclotomic acc;
  long k = 1;
  for (long j = 0; j < r; ++j) {
    acc += galois(k);
    k = nt::mod(k * p, n_);
  }
  return frac(1, r) * acc;
}

std::vector<std::pair<long, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<long, Rational>> out;
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!arcond::is_zero(c_[j])) out.emplace_back(static_cast<long>(j), c_[j]);
  return out;
}

std::string Cyclotomic::str() const {
  if (n_ == 1) return to_string(c_[0]);
  std::string s;
  for (const auto& [k, a] : terms()) {
    std::string coef = to_string(a);
    if (!s.empty()) {
      if (sgn(a) < 0) {
        s += " - ";
        coef = to_string(Rational(-a));
      } else {
        s += " + ";
      }
    }
    if (k == 0) {
      s += coef;
    } else {
      if (coef == "1") coef.clear();
      else if (coef == "-1") coef = "-";
      else coef += "*";
      s += coef + "z" + std::to_string(n_) + (k == 1 ? "" : "^" + std::to_string(k));
    }
  }
  return s;
}

Cyclotomic make_root(long n, long k) {
  if (n < 1) throw ComputationError("make_root requires n >= 1");
  return Cyclotomic::root(n, k);
}
Cyclotomic conjugate(const Cyclotomic& a) { return a.conjugate(); }
Cyclotomic galois_apply(const Cyclotomic& a, long k) { return a.galois(k); }
Cyclotomic frobenius_average(const Cyclotomic& a, long p) { return a.frobenius_average(p); }

Rational to_rational(const Cyclotomic& a) {
  auto q = a.to_rational();
  if (!q) throw ComputationError("not rational: " + a.str());
  return *q;
}

}  // namespace arcond
