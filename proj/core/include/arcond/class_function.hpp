#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arcond/cyclotomic.hpp"
#include "arcond/group.hpp"

namespace arcond {

/// Central function on a finite group with cyclotomic values, one per class.
class ClassFunction {
 public:
  ClassFunction(Group g, std::vector<Cyclotomic> class_values);

  static ClassFunction zero(const Group& g);
  /// Builds from an element-wise function; throws ValidationError if not central.
  static ClassFunction from_elements(const Group& g, const std::function<Cyclotomic(int)>& f);

  const Group& group() const { return g_; }
  const std::vector<Cyclotomic>& values() const { return v_; }
  const Cyclotomic& on_class(int c) const { return v_[c]; }
  const Cyclotomic& operator()(int element) const { return v_[g_->class_of(element)]; }
  const Cyclotomic& degree() const { return v_[0]; }

  /// g -> chi(g^{-1}).
  ClassFunction conjugate() const;
  /// Applies zeta -> zeta^k to every value.
  ClassFunction galois(long k) const;
  bool is_rational() const;
  /// Least common multiple of the value conductors.
  long value_conductor() const;

  ClassFunction operator-() const;
  friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Cyclotomic& s, const ClassFunction& a);
  /// Pointwise product.
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend bool operator==(const ClassFunction& a, const ClassFunction& b);
  friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }

  std::string str() const;

 private:
  Group g_;
  std::vector<Cyclotomic> v_;
};

/// (1/|G|) sum_g a(g) b(g^{-1}).
Cyclotomic pair(const ClassFunction& a, const ClassFunction& b);

ClassFunction regular_character(const Group& g);
ClassFunction trivial_character(const Group& g);
ClassFunction augmentation_character(const Group& g);

struct StandardCharacters {
  ClassFunction regular;
  ClassFunction trivial;
  ClassFunction augmentation;
};
StandardCharacters standard_characters(const Group& g);

/// chi' o alpha for any homomorphism.
ClassFunction pullback(const GroupHom& alpha, const ClassFunction& chi);
/// Pullback along an injective hom; throws ValidationError otherwise.
ClassFunction restrict(const GroupHom& alpha, const ClassFunction& chi);
/// Pullback along a surjective hom; throws ValidationError otherwise.
ClassFunction inflate(const GroupHom& alpha, const ClassFunction& chi);
/// Adjoint of pullback with respect to pair.
ClassFunction pushforward(const GroupHom& alpha, const ClassFunction& chi);

/// Induction from a subgroup, chi given on embed(h).first.
ClassFunction induce(const Subgroup& h, const ClassFunction& chi);
/// Ind_H^G of the augmentation character of H.
ClassFunction induced_augmentation(const Subgroup& h);
/// Ind_H^G 1_H.
ClassFunction permutation_character(const Subgroup& h);

/// All linear characters of an abelian group, pairwise orthonormal.
/// For FiniteGroup::cyclic(n) entry r sends element 1 to zeta_n^r.
std::vector<ClassFunction> abelian_irreducibles(const Group& g);

}  // namespace arcond
