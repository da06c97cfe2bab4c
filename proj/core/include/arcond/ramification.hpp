#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcond/class_function.hpp"
#include "arcond/group.hpp"
#include "arcond/rational.hpp"

namespace arcond {

/// Psi(g^m mod Gamma_1) = zeta_n^(exponent * m).
struct TameCharacter {
  int generator = 0;
  long exponent = 0;
};

/// Lower ramification filtration of a finite Galois group together with the
/// residue characteristic and the tame character.
class RamificationData {
 public:
  enum class Check {
    strict,
    /// Accepts a tame character that is not injective (for diagnostics only).
    allow_degenerate_tame,
  };

  /// filtration lists Gamma_0, Gamma_1, ...; trailing trivial groups are dropped.
  /// Throws ValidationError listing every violated invariant.
  static RamificationData build(Group gamma, std::vector<Subgroup> filtration, long p,
                                std::optional<TameCharacter> tame, Check check = Check::strict);
  /// Same checks, returned instead of thrown.
  static std::vector<std::string> violations(const Group& gamma, const std::vector<Subgroup>& filtration, long p,
                                             const std::optional<TameCharacter>& tame,
                                             Check check = Check::strict);

  const Group& gamma() const { return gamma_; }
  /// Gamma_0 .. Gamma_s, Gamma_s nontrivial unless s = 0.
  const std::vector<Subgroup>& filtration() const { return filt_; }
  long p() const { return p_; }
  const TameCharacter& tame() const { return tame_; }
  /// |Gamma_0 / Gamma_1|.
  long n() const { return n_; }
  /// [Gamma : Gamma_0].
  long f() const { return gamma_->order() / filt_[0].order(); }
  /// |Gamma_0|.
  long e() const { return filt_[0].order(); }

  /// Gamma_i for integer i >= -1.
  Subgroup lower(long i) const;
  /// Gamma_t = Gamma_{ceil t} for real t >= -1.
  Subgroup lower_at(const Rational& t) const;
  /// Index i of the last nontrivial Gamma_i; -1 when Gamma_0 is trivial.
  long last_jump() const;

  /// Psi on an element of Gamma_0.
  Cyclotomic psi(int g) const;
  /// Psi as a homomorphism Gamma_0/Gamma_1 -> C_n, with the pieces it is built from.
  struct TameMaps {
    Group gamma0;          // Gamma_0 as a group
    GroupHom inclusion;    // Gamma_0 -> Gamma
    GroupHom projection;   // Gamma_0 -> Gamma_0/Gamma_1
    GroupHom psi;          // Gamma_0/Gamma_1 -> C_n
  };
  TameMaps tame_maps() const;

 private:
  RamificationData(Group gamma, std::vector<Subgroup> filt, long p, TameCharacter tame, long n)
      : gamma_(std::move(gamma)), filt_(std::move(filt)), p_(p), tame_(tame), n_(n) {}

  Group gamma_;
  std::vector<Subgroup> filt_;
  long p_;
  TameCharacter tame_;
  long n_;
};

Rational herbrand_phi(const RamificationData& r, const Rational& u);
Rational herbrand_psi(const RamificationData& r, const Rational& v);
/// Gamma^v = Gamma_{psi(v)}.
Subgroup upper_group(const RamificationData& r, const Rational& v);
/// Gamma^{v+epsilon} for all small epsilon > 0.
Subgroup upper_group_after(const RamificationData& r, const Rational& v);
/// Upper numbering jumps v >= 0 where Gamma^v differs from Gamma^{v+epsilon}.
std::vector<Rational> upper_jumps(const RamificationData& r);

ClassFunction artin_character(const RamificationData& r);
/// (1/n) sum_r r chi_r on FiniteGroup::cyclic(n).
ClassFunction bar_n(long n);
ClassFunction refined_artin(const RamificationData& r);
/// Same function built from the upper numbering filtration.
ClassFunction refined_artin_upper(const RamificationData& r);
/// Frobenius average of every value; p = 0 returns chi unchanged.
ClassFunction p_average(const ClassFunction& chi, long p, long n);

struct SubgroupData {
  RamificationData data;
  GroupHom inclusion;
  long f;
  long e_wild;
};
SubgroupData subgroup_data(const RamificationData& r, const Subgroup& h);

struct QuotientData {
  RamificationData data;
  GroupHom projection;
};
/// Throws ComputationError when the image filtration has no integral lower numbering.
QuotientData quotient_data(const RamificationData& r, const Subgroup& n);

long different_valuation(const RamificationData& r);
Rational discriminant_valuation(const RamificationData& r, const Subgroup& h);

}  // namespace arcond
