#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arcond {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a", "a/b"; the result is canonical. Throws InputError.
Rational parse_rational(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// a/b in lowest terms
template <class A, class B>
Rational frac(A a, B b) {
  Rational q(Integer(static_cast<long>(a)), Integer(static_cast<long>(b)));
  q.canonicalize();
  return q;
}

/// p-adic valuation of a nonzero integer.
long valuation(const Integer& z, long p);

// Small-integer number theory used for conductors, group orders and
// residue characteristics. Arguments are expected to fit in a long.
namespace nt {

long gcd(long a, long b);
long lcm(long a, long b);
/// Non-negative residue of a mod m (m > 0).
long mod(long a, long m);
long pow_mod(long base, long exp, long m);
/// Inverse of a mod m; throws ComputationError if gcd(a, m) != 1.
long inverse_mod(long a, long m);
/// Multiplicative order of a mod m; requires gcd(a, m) = 1. Order mod 1 is 1.
long multiplicative_order(long a, long m);
bool is_prime(long n);
/// Distinct prime divisors in increasing order.
std::vector<long> prime_divisors(long n);
long euler_phi(long n);
/// True if n is 1 or a power of p (p > 1).
bool is_power_of(long n, long p);

}  // namespace nt

}  // namespace arcond
