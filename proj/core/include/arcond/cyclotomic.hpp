#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcond/poly.hpp"
#include "arcond/rational.hpp"

namespace arcond {

/// The N-th cyclotomic polynomial, computed once per N and cached.
/// Safe for concurrent callers.
const QPoly& cyclotomic_polynomial(long n);

/// Exact element of Q(zeta_N) in the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1},
/// always stored at the smallest N containing it (so N is never 2 mod 4).
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_{Rational(0)} {}
  Cyclotomic(long v) : n_(1), c_{Rational(v)} {}
  Cyclotomic(const Rational& q) : n_(1), c_{q} {}

  /// zeta_n^k.
  static Cyclotomic root(long n, long k);
  /// sum of a_i zeta_n^{k_i}; exponents may be arbitrary integers.
  static Cyclotomic from_terms(long n, const std::vector<std::pair<long, Rational>>& terms);
  /// Power-basis coordinates at level n (any length; reduced mod Phi_n).
  static Cyclotomic from_coeffs(long n, std::vector<Rational> coeffs);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  /// Coordinates at level m, where conductor() divides m.
  std::vector<Rational> coeffs_at(long m) const;

  bool is_zero() const { return n_ == 1 && arcond::is_zero(c_[0]); }
  bool is_rational() const { return n_ == 1; }
  std::optional<Rational> to_rational() const;

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  Cyclotomic conjugate() const;
  /// zeta_N -> zeta_N^k; k must be coprime to the conductor.
  Cyclotomic galois(long k) const;
  /// (1/r) sum_{j<r} galois(p^j), r the order of p modulo the conductor.
  Cyclotomic frobenius_average(long p) const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Rational& s, const Cyclotomic& a);

  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  /// Sparse (exponent, coefficient) list at the canonical conductor, zero terms omitted.
  std::vector<std::pair<long, Rational>> terms() const;
  /// Human-readable form such as "1/2 + 3*z12^5"; rationals print bare.
  std::string str() const;

 private:
  Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void canonicalize();

  long n_;
  std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }

Cyclotomic make_root(long n, long k);
Cyclotomic conjugate(const Cyclotomic& a);
Cyclotomic galois_apply(const Cyclotomic& a, long k);
Cyclotomic frobenius_average(const Cyclotomic& a, long p);
/// The rational value; throws ComputationError("not rational") otherwise.
Rational to_rational(const Cyclotomic& a);

}  // namespace arcond
