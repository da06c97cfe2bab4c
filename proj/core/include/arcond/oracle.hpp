#pragma once

#include <optional>
#include <vector>

#include "arcond/group.hpp"
#include "arcond/lattice.hpp"
#include "arcond/poly.hpp"
#include "arcond/ramification.hpp"

namespace arcond {

/// c_lin of the rank-d lattice on which a generator of C_n acts by diag(zeta^{i_1}, ..., zeta^{i_d}),
/// over the tame model O_L = O_K[pi]/(pi^n - t) with sigma(pi) = zeta_n pi.
Rational oracle_tame_clin(long n, const std::vector<long>& exponents);

/// Z[x]/(f) with f Eisenstein at p, Galois over Q, and the action x -> g_sigma(x)
/// of every automorphism. The identity is listed first.
class MonogenicOrder {
 public:
  /// Throws ValidationError on a non-Eisenstein f, a bad automorphism list or a
  /// list that is not closed under composition.
  MonogenicOrder(long p, std::vector<Integer> f, std::vector<std::vector<Integer>> galois);

  long p() const { return p_; }
  long degree() const { return f_.degree(); }
  const QPoly& f() const { return f_; }
  /// g_sigma reduced modulo f.
  const std::vector<QPoly>& galois() const { return g_; }
  /// (s t)(x) = g_t(g_s(x)).
  const Group& group() const { return group_; }

  QPoly reduce(const QPoly& y) const { return y % f_; }
  /// sigma(y) = y(g_sigma(x)) mod f.
  QPoly act(int sigma, const QPoly& y) const;
  /// Matrix of sigma on the basis 1, x, ..., x^{e-1}.
  IntMatrix action_matrix(int sigma) const;
  /// Normalized valuation nu_L; empty for y = 0.
  std::optional<long> valuation(const QPoly& y) const;
  /// Norm of y, as the resultant of f and y.
  Rational norm(const QPoly& y) const;

  /// Permutation matrices of the left regular representation.
  std::vector<IntMatrix> regular_module() const;
  std::vector<IntMatrix> trivial_module() const;

 private:
  long p_;
  QPoly f_;
  std::vector<QPoly> g_;
  Group group_;
};

/// Lattice determinant c_lin(M) = nu_K(det phi_{M,L}). One matrix per group element.
Rational oracle_monogenic_clin(const MonogenicOrder& o, const std::vector<IntMatrix>& action);

/// i(sigma) = nu_L(g_sigma(x) - x); Gamma_i = {sigma : i(sigma) >= i + 1}.
std::vector<Subgroup> lower_filtration_from_monogenic(const MonogenicOrder& o);

/// Psi from sigma(pi)/pi mod m_L, identified with mu_n through the root of Phi_n mod p
/// with index prime_choice in increasing order. Throws ComputationError if the tame quotient is trivial.
TameCharacter tame_character_from_monogenic(const MonogenicOrder& o, long prime_choice);

/// Number of primes of Z[zeta_n] above p, i.e. roots of Phi_n mod p (n | p - 1).
long prime_choice_count(long n, long p);

/// Full ramification data; the tame character uses prime_choice when n > 1.
RamificationData filtration_from_monogenic(const MonogenicOrder& o, long prime_choice = 0);

}  // namespace arcond
