#pragma once

#include <string>
#include <vector>

#include "arcond/class_function.hpp"
#include "arcond/ramification.hpp"

namespace arcond {

struct ConductorOptions {
  /// Pair with the Frobenius-averaged refined character instead.
  bool p_average = false;
  /// Reject characters that fail the sigma_p stability test.
  bool strict_rational = false;
};

/// Values fixed by Gal(Q_p(mu_m)/Q_p), m the value conductor; for p = 0, rational values.
bool is_qp_stable(const ClassFunction& chi, long p);

struct ConductorPairing {
  Cyclotomic value;
  bool stable;
};
/// The pairing (bAr | chi) without insisting on a rational result.
ConductorPairing conductor_pairing(const RamificationData& r, const ClassFunction& chi,
                                   const ConductorOptions& opts = {});
/// Throws ComputationError on an irrational pairing, or on instability in strict mode.
Rational conductor(const RamificationData& r, const ClassFunction& chi, const ConductorOptions& opts = {});
Rational artin_conductor(const RamificationData& r, const ClassFunction& chi);

/// Characters of the simple Q_p[C_n]-modules on FiniteGroup::cyclic(n), by smallest exponent.
/// p = 0 gives the Q-irreducibles.
std::vector<ClassFunction> qp_irreducibles_cyclic(long n, long p);
/// Same for any abelian group: Galois orbit sums of its linear characters.
std::vector<ClassFunction> qp_irreducibles(const Group& g, long p);
/// Ind from every cyclic subgroup of its Q_p-irreducibles; spans the Q_p-rational characters.
std::vector<ClassFunction> induced_test_characters(const Group& g, long p);

struct WeilCheck {
  Rational lhs;
  Rational rhs;
};
/// chi lives on the group of subgroup_data(r, h).
WeilCheck weil_restriction_check(const RamificationData& r, const Subgroup& h, const ClassFunction& chi,
                                 const ConductorOptions& opts = {});

struct ReportRecord {
  std::string identity;
  std::string instance;
  std::string expected;
  std::string computed;
  bool pass = false;
  bool binding = true;
};

struct ConductorReport {
  std::vector<ReportRecord> records;

  std::size_t count(bool binding, bool pass) const;
  bool binding_ok() const { return count(true, false) == 0; }
};

struct VerifyOptions {
  /// When false, checks that need a genuine extension are advisory.
  bool realizable = true;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

ConductorReport verify_suite(const RamificationData& r, const VerifyOptions& opts = {});

/// The four relations for bar_n at (n, d): pairing with 1, bisection, pushforward, restriction.
std::vector<ReportRecord> bar_relations(long n, long d);

}  // namespace arcond
