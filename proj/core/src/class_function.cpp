#include "arcond/class_function.hpp"

#include "arcond/errors.hpp"

namespace arcond {

namespace {

void require_same(const Group& a, const Group& b, const char* what) {
  if (!same_group(a, b)) throw ValidationError({std::string(what) + ": class functions live on different groups"});
}

}  // namespace

ClassFunction::ClassFunction(Group g, std::vector<Cyclotomic> class_values)
    : g_(std::move(g)), v_(std::move(class_values)) {
  if (static_cast<int>(v_.size()) != g_->num_classes())
    throw ValidationError({"class function has " + std::to_string(v_.size()) + " values, group has " +
                           std::to_string(g_->num_classes()) + " classes"});
}

ClassFunction ClassFunction::zero(const Group& g) {
  return ClassFunction(g, std::vector<Cyclotomic>(static_cast<std::size_t>(g->num_classes())));
}

ClassFunction ClassFunction::from_elements(const Group& g, const std::function<Cyclotomic(int)>& f) {
  std::vector<Cyclotomic> v;
  for (const auto& cls : g->classes()) {
    Cyclotomic x = f(cls.front());
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (!(f(cls[i]) == x))
        throw ValidationError({"function is not constant on the class of element " + std::to_string(cls.front())});
    v.push_back(std::move(x));
  }
  return ClassFunction(g, std::move(v));
}

ClassFunction ClassFunction::conjugate() const {
  std::vector<Cyclotomic> v(v_.size());
  for (int c = 0; c < g_->num_classes(); ++c) v[c] = (*this)(g_->inv(g_->classes()[c].front()));
  return ClassFunction(g_, std::move(v));
}

ClassFunction ClassFunction::galois(long k) const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(x.galois(k));
  return ClassFunction(g_, std::move(v));
}

bool ClassFunction::is_rational() const {
  for (const auto& x : v_)
    if (!x.is_rational()) return false;
  return true;
}

long ClassFunction::value_conductor() const {
  long m = 1;
  for (const auto& x : v_) m = nt::lcm(m, x.conductor());
  return m;
}

ClassFunction ClassFunction::operator-() const {
  std::vector<Cyclotomic> v;
  for (const auto& x : v_) v.push_back(-x);
  return ClassFunction(g_, std::move(v));
}

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.g_, b.g_, "sum");
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.v_.size(); ++i) v.push_back(a.v_[i] + b.v_[i]);
  return ClassFunction(a.g_, std::move(v));
}

ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) { return a + (-b); }

ClassFunction operator*(const Cyclotomic& s, const ClassFunction& a) {
  std::vector<Cyclotomic> v;
  for (const auto& x : a.v_) v.push_back(s * x);
  return ClassFunction(a.g_, std::move(v));
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.g_, b.g_, "product");
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.v_.size(); ++i) v.push_back(a.v_[i] * b.v_[i]);
  return ClassFunction(a.g_, std::move(v));
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return same_group(a.g_, b.g_) && a.v_ == b.v_;
}

std::string ClassFunction::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? ", " : "") + v_[i].str();
  return s + "]";
}

Cyclotomic pair(const ClassFunction& a, const ClassFunction& b) {
  require_same(a.group(), b.group(), "pair");
  const auto& G = *a.group();
  Cyclotomic acc;
  for (int c = 0; c < G.num_classes(); ++c) {
    const int g = G.classes()[c].front();
    const Cyclotomic term = a.on_class(c) * b(G.inv(g));
    acc += Rational(G.class_size(c)) * term;
  }
  return frac(1, G.order()) * acc;
}

ClassFunction regular_character(const Group& g) {
  auto chi = ClassFunction::zero(g);
  std::vector<Cyclotomic> v = chi.values();
  v[0] = Cyclotomic(static_cast<long>(g->order()));
  return ClassFunction(g, std::move(v));
}

ClassFunction trivial_character(const Group& g) {
  return ClassFunction(g, std::vector<Cyclotomic>(static_cast<std::size_t>(g->num_classes()), Cyclotomic(1)));
}

ClassFunction augmentation_character(const Group& g) { return regular_character(g) - trivial_character(g); }

StandardCharacters standard_characters(const Group& g) {
  return {regular_character(g), trivial_character(g), augmentation_character(g)};
}

ClassFunction pullback(const GroupHom& alpha, const ClassFunction& chi) {
  require_same(alpha.target(), chi.group(), "pullback");
  const auto& G = *alpha.source();
  std::vector<Cyclotomic> v;
  for (const auto& cls : G.classes()) v.push_back(chi(alpha(cls.front())));
  return ClassFunction(alpha.source(), std::move(v));
}

ClassFunction restrict(const GroupHom& alpha, const ClassFunction& chi) {
  if (!alpha.injective()) throw ValidationError({"restriction needs an injective homomorphism"});
  return pullback(alpha, chi);
}

ClassFunction inflate(const GroupHom& alpha, const ClassFunction& chi) {
  if (!alpha.surjective()) throw ValidationError({"inflation needs a surjective homomorphism"});
  return pullback(alpha, chi);
}

ClassFunction pushforward(const GroupHom& alpha, const ClassFunction& chi) {
  require_same(alpha.source(), chi.group(), "pushforward");
  const auto& G = *alpha.source();
  const auto& T = *alpha.target();
  std::vector<Cyclotomic> sums(static_cast<std::size_t>(T.num_classes()));
  for (int c = 0; c < G.num_classes(); ++c) {
    const int tc = T.class_of(alpha(G.classes()[c].front()));
    sums[tc] += Rational(G.class_size(c)) * chi.on_class(c);
  }
  for (int tc = 0; tc < T.num_classes(); ++tc)
    if (!sums[tc].is_zero()) sums[tc] = frac(T.order(), static_cast<long>(G.order()) * T.class_size(tc)) * sums[tc];
  return ClassFunction(alpha.target(), std::move(sums));
}

ClassFunction induce(const Subgroup& h, const ClassFunction& chi) {
  auto [sub, incl] = embed(h);
  return pushforward(incl, ClassFunction(sub, chi.values()));
}

ClassFunction permutation_character(const Subgroup& h) {
  const auto& G = *h.parent();
  std::vector<Cyclotomic> v;
  for (int c = 0; c < G.num_classes(); ++c) {
    long inside = 0;
    for (int x : G.classes()[c])
      if (h.contains(x)) ++inside;
    // |C_G(g)| |class(g) cap H| / |H|
    const long centralizer = G.order() / G.class_size(c);
    v.emplace_back(frac(centralizer * inside, h.order()));
  }
  return ClassFunction(h.parent(), std::move(v));
}

ClassFunction induced_augmentation(const Subgroup& h) {
  return regular_character(h.parent()) - permutation_character(h);
}

std::vector<ClassFunction> abelian_irreducibles(const Group& g) {
  const auto& G = *g;
  if (!G.is_abelian()) throw ValidationError({"abelian_irreducibles needs an abelian group"});
  long e = 1;
  for (int x = 0; x < G.order(); ++x) e = nt::lcm(e, G.element_order(x));
  // characters as exponent vectors mod e, -1 outside the current subgroup
  std::vector<int> members{0};
  std::vector<bool> in(static_cast<std::size_t>(G.order()), false);
  in[0] = true;
  std::vector<std::vector<long>> chars{std::vector<long>(static_cast<std::size_t>(G.order()), -1)};
  chars[0][0] = 0;
  for (int s = 1; s < G.order(); ++s) {
    if (in[s]) continue;
    int m = 1;
    int sm = s;
    while (!in[sm]) {
      sm = G.mul(sm, s);
      ++m;
    }
    std::vector<int> next;
    std::vector<int> base_of(static_cast<std::size_t>(G.order()), -1), power_of(static_cast<std::size_t>(G.order()), -1);
    int sj = 0;
    for (int j = 0; j < m; ++j) {
      for (int h : members) {
        const int x = G.mul(h, sj);
        base_of[x] = h;
        power_of[x] = j;
        next.push_back(x);
      }
      sj = G.mul(sj, s);
    }
    std::vector<std::vector<long>> extended;
    for (const auto& chi : chars) {
      const long a = chi[sm];
      for (long k = 0; k < m; ++k) {
        const long t = nt::mod(a / m + k * (e / m), e);
        std::vector<long> ext(static_cast<std::size_t>(G.order()), -1);
        for (int x : next) ext[x] = nt::mod(chi[base_of[x]] + t * power_of[x], e);
        extended.push_back(std::move(ext));
      }
    }
    chars = std::move(extended);
    members = std::move(next);
    for (int x : members) in[x] = true;
  }
  std::vector<ClassFunction> out;
  for (const auto& chi : chars) {
    std::vector<Cyclotomic> v;
    for (int x = 0; x < G.order(); ++x) v.push_back(Cyclotomic::root(e, chi[x]));
    out.emplace_back(g, std::move(v));
  }
  return out;
}

}  // namespace arcond
