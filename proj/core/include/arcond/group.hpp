#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace arcond {

class FiniteGroup;
class Subgroup;
class GroupHom;
using Group = std::shared_ptr<const FiniteGroup>;

/// Finite group given by its Cayley table; element 0 is the identity.
/// Conjugacy classes are ordered by their smallest element, so class 0 is {0}.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<int>>;

  /// Validates the group axioms. Throws ValidationError.
  static Group from_table(Table table);
  /// Element k is g^k.
  static Group cyclic(int n);
  /// Mixed-radix encoding of Z/n1 x Z/n2 x ...; the first factor varies fastest.
  static Group abelian(const std::vector<int>& invariants);
  /// Generators as lists of 1-based cycles. Elements are enumerated breadth first.
  static Group permutations(const std::vector<std::vector<std::vector<int>>>& generators);

  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, long k) const;
  int element_order(int a) const;
  int conj(int g, int by) const { return mul(mul(by, g), inverse_[by]); }

  const Table& table() const { return table_; }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  int class_of(int g) const { return class_of_[g]; }
  int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
  bool is_abelian() const { return static_cast<int>(classes_.size()) == order(); }

  /// Permutation images, only for groups built from generators (0-based points).
  const std::vector<std::vector<int>>& permutation_images() const { return perms_; }

 private:
  explicit FiniteGroup(Table table);
  friend std::pair<Group, GroupHom> embed(const Subgroup& h);
  friend std::pair<Group, GroupHom> quotient(const Subgroup& n);

  Table table_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::vector<int>> perms_;
};

/// Pointer identity or identical tables.
bool same_group(const Group& a, const Group& b);

class Subgroup {
 public:
  /// Throws ValidationError unless members form a subgroup.
  Subgroup(Group parent, std::vector<int> members);

  static Subgroup whole(const Group& g);
  static Subgroup trivial(const Group& g);
  static Subgroup generated(const Group& g, const std::vector<int>& gens);

  const Group& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return in_[g]; }
  bool is_trivial() const { return order() == 1; }
  bool is_normal() const;
  bool contains(const Subgroup& h) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return same_group(a.parent_, b.parent_) && a.members_ == b.members_;
  }
  friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }

 private:
  Group parent_;
  std::vector<int> members_;
  std::vector<bool> in_;
};

Subgroup intersect(const Subgroup& a, const Subgroup& b);
/// Subgroup generated by a and b.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// Smallest r >= 1 with g^r in h.
int order_modulo(const Subgroup& h, int g);
bool is_p_group(const Subgroup& h, long p);

/// All subgroups, sorted by order then members.
std::vector<Subgroup> all_subgroups(const Group& g);
std::vector<Subgroup> normal_subgroups(const Group& g);

class GroupHom {
 public:
  /// Throws ValidationError unless map is a homomorphism.
  GroupHom(Group source, Group target, std::vector<int> map);

  static GroupHom identity(const Group& g);

  const Group& source() const { return source_; }
  const Group& target() const { return target_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int g) const { return map_[g]; }

  bool injective() const;
  bool surjective() const;
  Subgroup kernel() const;
  Subgroup image() const;

 private:
  struct Unchecked {};
  GroupHom(Group source, Group target, std::vector<int> map, Unchecked);
  friend GroupHom compose(const GroupHom& second, const GroupHom& first);
  friend std::pair<Group, GroupHom> embed(const Subgroup& h);
  friend std::pair<Group, GroupHom> quotient(const Subgroup& n);

  Group source_;
  Group target_;
  std::vector<int> map_;
};

/// second o first.
GroupHom compose(const GroupHom& second, const GroupHom& first);
/// h as a group in its own right (members in increasing order) with the inclusion.
std::pair<Group, GroupHom> embed(const Subgroup& h);
/// G/N with the projection; cosets are ordered by smallest representative.
std::pair<Group, GroupHom> quotient(const Subgroup& n);

/// Image of a subgroup of the source.
Subgroup image(const GroupHom& f, const Subgroup& h);
/// Preimage of a subgroup of the target.
Subgroup preimage(const GroupHom& f, const Subgroup& h);

std::string describe(const Subgroup& h);
std::string describe_set(const std::vector<int>& members);

}  // namespace arcond
