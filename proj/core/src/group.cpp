#include "arcond/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "arcond/errors.hpp"
#include "arcond/rational.hpp"

namespace arcond {

namespace {

std::vector<std::string> table_violations(const FiniteGroup::Table& t) {
  std::vector<std::string> errs;
  const std::size_t n = t.size();
  if (n == 0) {
    errs.emplace_back("group table is empty");
    return errs;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (t[i].size() != n) {
      errs.push_back("row " + std::to_string(i) + " has length " + std::to_string(t[i].size()) + ", expected " +
                     std::to_string(n));
      return errs;
    }
    for (int x : t[i])
      if (x < 0 || static_cast<std::size_t>(x) >= n) {
        errs.push_back("row " + std::to_string(i) + " contains out-of-range entry " + std::to_string(x));
        return errs;
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (t[0][i] != static_cast<int>(i) || t[i][0] != static_cast<int>(i)) {
      errs.emplace_back("element 0 is not the identity");
      return errs;
    }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(t[i][j])] = true;
      col[static_cast<std::size_t>(t[j][i])] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end() ||
        std::find(col.begin(), col.end(), false) != col.end()) {
      errs.push_back("element " + std::to_string(i) + " has no inverse (table is not a Latin square)");
      return errs;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (t[static_cast<std::size_t>(t[a][b])][c] != t[a][static_cast<std::size_t>(t[b][c])]) {
          errs.push_back("associativity fails for (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
          return errs;
        }
  return errs;
}

}  // namespace

FiniteGroup::FiniteGroup(Table table) : table_(std::move(table)) {
  const int n = order();
  inverse_.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inverse_[a] = b;
  class_of_.assign(static_cast<std::size_t>(n), -1);
  for (int g = 0; g < n; ++g) {
    if (class_of_[g] >= 0) continue;
    std::set<int> cls;
    for (int x = 0; x < n; ++x) cls.insert(conj(g, x));
    const int id = static_cast<int>(classes_.size());
    for (int h : cls) class_of_[h] = id;
    classes_.emplace_back(cls.begin(), cls.end());
  }
}

Group FiniteGroup::from_table(Table table) {
  auto errs = table_violations(table);
  if (!errs.empty()) throw ValidationError(std::move(errs));
  return Group(new FiniteGroup(std::move(table)));
}

Group FiniteGroup::cyclic(int n) {
  if (n < 1) throw ValidationError({"cyclic group order must be positive"});
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Group(new FiniteGroup(std::move(t)));
}

Group FiniteGroup::abelian(const std::vector<int>& invariants) {
  long n = 1;
  for (int m : invariants) {
    if (m < 1) throw ValidationError({"abelian invariants must be positive"});
    n *= m;
    if (n > 100000) throw ValidationError({"abelian group too large"});
  }
  auto digits = [&](int x) {
    std::vector<int> d;
    for (int m : invariants) {
      d.push_back(x % m);
      x /= m;
    }
    return d;
  };
  Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < n; ++b) {
      const auto db = digits(b);
      int code = 0, radix = 1;
      for (std::size_t i = 0; i < invariants.size(); ++i) {
        code += ((da[i] + db[i]) % invariants[i]) * radix;
        radix *= invariants[i];
      }
      t[a][b] = code;
    }
  }
  return Group(new FiniteGroup(std::move(t)));
}

Group FiniteGroup::permutations(const std::vector<std::vector<std::vector<int>>>& generators) {
  int degree = 0;
  for (const auto& gen : generators)
    for (const auto& cyc : gen)
      for (int pt : cyc) {
        if (pt < 1) throw ValidationError({"permutation points are 1-based positive integers"});
        degree = std::max(degree, pt);
      }
  std::vector<std::vector<int>> gens;
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) img[i] = i;
    std::vector<bool> seen(static_cast<std::size_t>(degree), false);
    for (const auto& cyc : generators[gi]) {
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int a = cyc[k] - 1;
        if (seen[a])
          throw ValidationError({"generator " + std::to_string(gi) + " moves point " + std::to_string(cyc[k]) +
                                 " in two cycles"});
        seen[a] = true;
        img[a] = cyc[(k + 1) % cyc.size()] - 1;
      }
    }
    gens.push_back(std::move(img));
  }
  std::vector<int> id(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) id[i] = i;
  // (s t)(x) = s(t(x))
  auto compose_perm = [&](const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> r(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) r[x] = s[static_cast<std::size_t>(t[x])];
    return r;
  };
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto prod = compose_perm(elems[head], g);
      if (!index.count(prod)) {
        index.emplace(prod, static_cast<int>(elems.size()));
        elems.push_back(std::move(prod));
        if (elems.size() > 5000) throw ValidationError({"permutation group too large"});
      }
    }
  }
  const std::size_t n = elems.size();
  Table t(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = index.at(compose_perm(elems[a], elems[b]));
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup(std::move(t)));
  g->perms_ = std::move(elems);
  return g;
}

int FiniteGroup::pow(int a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int r = 0;
  for (long i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int x = a, k = 1;
  while (x != 0) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool same_group(const Group& a, const Group& b) {
  return a == b || (a && b && a->table() == b->table());
}

Subgroup::Subgroup(Group parent, std::vector<int> members) : parent_(std::move(parent)) {
  const int n = parent_->order();
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  in_.assign(static_cast<std::size_t>(n), false);
  for (int x : members) {
    if (x < 0 || x >= n)
      throw ValidationError({"subgroup member " + std::to_string(x) + " out of range 0.." + std::to_string(n - 1)});
    in_[x] = true;
  }
  if (members.empty() || members.front() != 0) throw ValidationError({"subgroup must contain the identity 0"});
  for (int a : members)
    for (int b : members)
      if (!in_[parent_->mul(a, b)])
        throw ValidationError({"members " + describe_set(members) + " are not closed under the group law"});
  members_ = std::move(members);
}

namespace {
std::vector<int> closure(const Group& g, std::vector<int> seed) {
  std::vector<bool> in(static_cast<std::size_t>(g->order()), false);
  std::vector<int> out{0};
  in[0] = true;
  for (std::size_t head = 0; head < out.size(); ++head)
    for (int s : seed) {
      const int x = g->mul(out[head], s);
      if (!in[x]) {
        in[x] = true;
        out.push_back(x);
      }
    }
  return out;
}
}  // namespace

Subgroup Subgroup::whole(const Group& g) {
  std::vector<int> all(static_cast<std::size_t>(g->order()));
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup(g, std::move(all));
}

Subgroup Subgroup::trivial(const Group& g) { return Subgroup(g, {0}); }

Subgroup Subgroup::generated(const Group& g, const std::vector<int>& gens) { return Subgroup(g, closure(g, gens)); }

bool Subgroup::is_normal() const {
  for (int h : members_)
    for (int x = 0; x < parent_->order(); ++x)
      if (!in_[parent_->conj(h, x)]) return false;
  return true;
}

bool Subgroup::contains(const Subgroup& h) const {
  for (int x : h.members())
    if (!in_[x]) return false;
  return true;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> m;
  for (int x : a.members())
    if (b.contains(x)) m.push_back(x);
  return Subgroup(a.parent(), std::move(m));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<int> seed = a.members();
  seed.insert(seed.end(), b.members().begin(), b.members().end());
  return Subgroup::generated(a.parent(), seed);
}

int order_modulo(const Subgroup& h, int g) {
  const auto& G = *h.parent();
  int x = g, r = 1;
  while (!h.contains(x)) {
    x = G.mul(x, g);
    ++r;
  }
  return r;
}

bool is_p_group(const Subgroup& h, long p) { return nt::is_power_of(h.order(), p); }

std::vector<Subgroup> all_subgroups(const Group& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup s) {
    if (seen.insert(s.members()).second) {
      subs.push_back(std::move(s));
      return true;
    }
    return false;
  };
  for (int x = 0; x < g->order(); ++x) add(Subgroup::generated(g, {x}));
  const std::size_t cyclic_count = subs.size();
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < cyclic_count; ++j)
      if (!subs[i].contains(subs[j])) add(join(subs[i], subs[j]));
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return subs;
}

std::vector<Subgroup> normal_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  for (auto& s : all_subgroups(g))
    if (s.is_normal()) out.push_back(std::move(s));
  return out;
}

GroupHom::GroupHom(Group source, Group target, std::vector<int> map, Unchecked)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

GroupHom::GroupHom(Group source, Group target, std::vector<int> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const int n = source_->order();
  const int m = target_->order();
  if (static_cast<int>(map_.size()) != n)
    throw ValidationError({"homomorphism map has " + std::to_string(map_.size()) + " entries, source has order " +
                           std::to_string(n)});
  for (int x : map_)
    if (x < 0 || x >= m) throw ValidationError({"homomorphism image " + std::to_string(x) + " out of range"});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map_[source_->mul(a, b)] != target_->mul(map_[a], map_[b]))
        throw ValidationError({"map is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")"});
}

GroupHom GroupHom::identity(const Group& g) {
  std::vector<int> m(static_cast<std::size_t>(g->order()));
  for (int i = 0; i < g->order(); ++i) m[i] = i;
  return GroupHom(g, g, std::move(m), Unchecked{});
}

bool GroupHom::injective() const { return kernel().is_trivial(); }

bool GroupHom::surjective() const { return image().order() == target_->order(); }

Subgroup GroupHom::kernel() const {
  std::vector<int> k;
  for (int x = 0; x < source_->order(); ++x)
    if (map_[x] == 0) k.push_back(x);
  return Subgroup(source_, std::move(k));
}

Subgroup GroupHom::image() const { return arcond::image(*this, Subgroup::whole(source_)); }

GroupHom compose(const GroupHom& second, const GroupHom& first) {
  if (!same_group(first.target(), second.source()))
    throw ValidationError({"composition of homomorphisms with mismatched groups"});
  std::vector<int> m(first.map().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = second(first(static_cast<int>(i)));
  return GroupHom(first.source(), second.target(), std::move(m), GroupHom::Unchecked{});
}

std::pair<Group, GroupHom> embed(const Subgroup& h) {
  const auto& G = *h.parent();
  const auto& mem = h.members();
  std::vector<int> pos(static_cast<std::size_t>(G.order()), -1);
  for (std::size_t i = 0; i < mem.size(); ++i) pos[mem[i]] = static_cast<int>(i);
  FiniteGroup::Table t(mem.size(), std::vector<int>(mem.size()));
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j < mem.size(); ++j) t[i][j] = pos[G.mul(mem[i], mem[j])];
  Group sub(new FiniteGroup(std::move(t)));
  return {sub, GroupHom(sub, h.parent(), mem, GroupHom::Unchecked{})};
}

std::pair<Group, GroupHom> quotient(const Subgroup& n) {
  if (!n.is_normal()) throw ValidationError({"subgroup " + describe(n) + " is not normal"});
  const auto& G = *n.parent();
  std::vector<int> coset(static_cast<std::size_t>(G.order()), -1);
  std::vector<int> reps;
  for (int g = 0; g < G.order(); ++g) {
    if (coset[g] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int x : n.members()) coset[G.mul(g, x)] = id;
  }
  FiniteGroup::Table t(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) t[i][j] = coset[G.mul(reps[i], reps[j])];
  Group q(new FiniteGroup(std::move(t)));
  return {q, GroupHom(n.parent(), q, std::move(coset), GroupHom::Unchecked{})};
}

Subgroup image(const GroupHom& f, const Subgroup& h) {
  std::vector<int> m;
  for (int x : h.members()) m.push_back(f(x));
  return Subgroup(f.target(), std::move(m));
}

Subgroup preimage(const GroupHom& f, const Subgroup& h) {
  std::vector<int> m;
  for (int x = 0; x < f.source()->order(); ++x)
    if (h.contains(f(x))) m.push_back(x);
  return Subgroup(f.source(), std::move(m));
}

std::string describe_set(const std::vector<int>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) s += (i ? "," : "") + std::to_string(members[i]);
  return s + "}";
}

std::string describe(const Subgroup& h) { return describe_set(h.members()); }

}  // namespace arcond
