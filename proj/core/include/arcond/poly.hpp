#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <tuple>
#include <utility>
#include <vector>

#include "arcond/errors.hpp"
#include "arcond/rational.hpp"

namespace arcond {

/// Dense univariate polynomial, coefficients in ascending degree.
/// F needs ring operations, F(0), F(1) and a free is_zero(const F&).
/// Division routines additionally need a field.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(long a) { if (a != 0) c_.push_back(F(a)); }
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const F& a) { return UPoly(std::vector<F>{a}); }
  static UPoly monomial(const F& a, std::size_t k) {
    std::vector<F> v(k + 1, F(0));
    v[k] = a;
    return UPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0); }
  const F& lead() const { return c_.back(); }

  /// Index of the lowest nonzero coefficient; -1 for zero.
  long low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!is_zero(c_[k])) return static_cast<long>(k);
    return -1;
  }

  F operator()(const F& x) const {
    F acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  UPoly operator-() const {
    std::vector<F> v(c_);
    for (auto& a : v) a = -a;
    return UPoly(std::move(v));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = v[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.zero() || b.zero()) return UPoly();
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }

  friend UPoly operator*(const F& s, const UPoly& a) {
    std::vector<F> v(a.c_);
    for (auto& x : v) x = s * x;
    return UPoly(std::move(v));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool is_zero(const UPoly& a) { return a.zero(); }

  /// Euclidean division over a field; throws ComputationError on b = 0.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.zero()) throw ComputationError("polynomial division by zero");
    std::vector<F> r(a.c_);
    const long db = b.degree();
    if (a.degree() < db) return {UPoly(), a};
    std::vector<F> q(static_cast<std::size_t>(a.degree() - db + 1), F(0));
    const F inv_lead = F(1) / b.lead();
    for (long k = a.degree(); k >= db; --k) {
      const F t = r[static_cast<std::size_t>(k)] * inv_lead;
      if (is_zero(t)) continue;
      q[static_cast<std::size_t>(k - db)] = t;
      for (long j = 0; j <= db; ++j) {
        auto& slot = r[static_cast<std::size_t>(k - db + j)];
        slot = slot - t * b.c_[static_cast<std::size_t>(j)];
      }
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

  /// Returns (g, s, t) with s*a + t*b = g, g monic (or zero when a = b = 0).
  friend std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0 = constant(F(1)), s1, t0, t1 = constant(F(1));
    while (!r1.zero()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UPoly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      UPoly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (!r0.zero()) {
      const F inv = F(1) / r0.lead();
      r0 = inv * r0;
      s0 = inv * s0;
      t0 = inv * t0;
    }
    return {r0, s0, t0};
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

using QPoly = UPoly<Rational>;

/// Resultant of a and b over a field, by the Euclidean algorithm.
template <class F>
F resultant(UPoly<F> a, UPoly<F> b) {
  if (a.zero() || b.zero()) return F(0);
  F acc(1);
  while (b.degree() > 0) {
    const long da = a.degree(), db = b.degree();
    UPoly<F> r = a % b;
    if (r.zero()) return F(0);
    // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
    if ((da * db) % 2 == 1) acc = -acc;
    const long dr = r.degree();
    for (long k = 0; k < da - dr; ++k) acc = acc * b.lead();
    a = std::move(b);
    b = std::move(r);
  }
  // b constant
  F bc = b.lead();
  for (long k = 0; k < a.degree(); ++k) acc = acc * bc;
  return acc;
}

}  // namespace arcond
