#include "arcond/rational.hpp"

#include <cctype>

#include "arcond/errors.hpp"

namespace arcond {

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error([&] {
        std::string msg = "validation failed";
        for (const auto& v : violations) msg += "; " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw InputError("not a rational number: \"" + std::string(text) + "\"");
  if (num.front() == '+') num.remove_prefix(1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

long valuation(const Integer& z, long p) {
  if (z == 0) throw ComputationError("valuation of zero");
  Integer r = z;
  long v = 0;
  const Integer pz(p);
  while (mpz_divisible_p(r.get_mpz_t(), pz.get_mpz_t())) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), pz.get_mpz_t());
    ++v;
  }
  return v;
}

namespace nt {

__extension__ typedef __int128 wide;

long gcd(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) {
  if (a == 0 || b == 0) return 0;
  return (a / gcd(a, b)) * b;
}

long mod(long a, long m) {
  const long r = a % m;
  return r < 0 ? r + m : r;
}

long pow_mod(long base, long exp, long m) {
  if (m == 1) return 0;
  wide result = 1;
  wide b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = (result * b) % m;
    b = (b * b) % m;
    exp >>= 1;
  }
  return static_cast<long>(result);
}

long inverse_mod(long a, long m) {
  long old_r = mod(a, m), r = m;
  long old_s = 1, s = 0;
  while (r != 0) {
    const long q = old_r / r;
    long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && m != 1)
    throw ComputationError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return mod(old_s, m);
}

long multiplicative_order(long a, long m) {
  if (m == 1) return 1;
  if (gcd(a, m) != 1)
    throw ComputationError(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  long x = mod(a, m);
  long k = 1;
  while (x != 1) {
    x = static_cast<long>((static_cast<wide>(x) * mod(a, m)) % m);
    ++k;
  }
  return k;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  if (n < 0) n = -n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long euler_phi(long n) {
  long result = n;
  for (long q : prime_divisors(n)) result -= result / q;
  return result;
}

bool is_power_of(long n, long p) {
  if (n < 1 || p < 2) return n == 1;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace nt

}  // namespace arcond
