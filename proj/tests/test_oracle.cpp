#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "arcond/errors.hpp"
#include "arcond/lattice.hpp"
#include "arcond/oracle.hpp"
#include "support.hpp"

using namespace arcond;
using arcond::test::linear_cyclic;
using arcond::test::load_oracle;
using arcond::test::Q;

namespace {

// Leibniz expansion over all permutations.
Rational det_leibniz(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Sylvester matrix determinant.
Rational resultant_sylvester(const QPoly& f, const QPoly& g) {
  const long m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix<Rational> s(size, size);
  for (long i = 0; i < n; ++i)
    for (long k = 0; k <= m; ++k) s(i, i + k) = f.coeff(static_cast<std::size_t>(m - k));
  for (long i = 0; i < m; ++i)
    for (long k = 0; k <= n; ++k) s(n + i, i + k) = g.coeff(static_cast<std::size_t>(n - k));
  return det_leibniz(s);
}

QPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return QPoly(v);
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

// x is an integer combination of the columns of k: solve over Q and check integrality.
bool in_integer_span(const IntMatrix& k, const std::vector<Integer>& x) {
  const std::size_t n = k.rows(), r = k.cols();
  Matrix<Rational> aug(n, r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < r; ++j) aug(i, j) = Rational(k(i, j));
    aug(i, r) = Rational(x[i]);
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < r && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && is_zero(aug(piv, col))) ++piv;
    if (piv == n) continue;
    aug.swap_rows(row, piv);
    const Rational inv = 1 / aug(row, col);
    for (std::size_t j = 0; j <= r; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < n; ++i)
      if (i != row && !is_zero(aug(i, col))) {
        const Rational f = aug(i, col);
        for (std::size_t j = 0; j <= r; ++j) aug(i, j) -= f * aug(row, j);
      }
    ++row;
  }
  for (std::size_t i = row; i < n; ++i)
    if (!is_zero(aug(i, r))) return false;
  for (std::size_t i = 0; i < row; ++i)
    if (!is_integer(aug(i, r))) return false;
  return true;
}

}  // namespace

TEST(Poly, ResultantMatchesSylvester) {
  std::mt19937 rng(4);
  for (int t = 0; t < 60; ++t) {
    std::vector<Rational> a, b;
    const int da = std::uniform_int_distribution<int>(1, 4)(rng), db = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i <= da; ++i) a.emplace_back(std::uniform_int_distribution<long>(-5, 5)(rng));
    for (int i = 0; i <= db; ++i) b.emplace_back(std::uniform_int_distribution<long>(-5, 5)(rng));
    a.back() = a.back() == 0 ? Rational(1) : a.back();
    b.back() = b.back() == 0 ? Rational(2) : b.back();
    const QPoly f(a), g(b);
    EXPECT_EQ(resultant(f, g), resultant_sylvester(f, g));
  }
}

TEST(Poly, DivisionAndXgcd) {
  const QPoly f = poly({-2, 0, 1}), g = poly({1, 1});
  const auto [q, r] = divmod(f, g);
  EXPECT_EQ(q * g + r, f);
  EXPECT_LT(r.degree(), g.degree());
  const auto [d, s, t] = xgcd(f, g);
  EXPECT_EQ(s * f + t * g, d);
  EXPECT_EQ(d.degree(), 0);
}

TEST(Lattice, DeterminantsAgree) {
  std::mt19937 rng(9);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    Matrix<Rational> a(n, n);
    Matrix<Integer> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const long v = std::uniform_int_distribution<long>(-4, 4)(rng);
        a(i, j) = v;
        b(i, j) = v;
      }
    const Rational expect = det_leibniz(a);
    EXPECT_EQ(det_field(a), expect);
    const Integer via_bareiss = det_bareiss<Integer>(b, [](const Integer& x, const Integer& y) { return Integer(x / y); });
    EXPECT_EQ(Rational(via_bareiss), expect);
  }
}

TEST(Lattice, IntegerKernelIsSaturatedBasis) {
  std::mt19937 rng(10);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    IntMatrix a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = std::uniform_int_distribution<long>(-3, 3)(rng);
    const IntMatrix k = integer_kernel(a);
    ASSERT_EQ(k.rows(), cols);
    const IntMatrix zero = a * k;
    for (std::size_t i = 0; i < zero.rows(); ++i)
      for (std::size_t j = 0; j < zero.cols(); ++j) EXPECT_EQ(zero(i, j), 0);
    // Every integer kernel vector in a box is an integer combination of the basis.
    std::vector<Integer> x(cols);
    std::vector<long> idx(cols, -3);
    for (;;) {
      for (std::size_t j = 0; j < cols; ++j) x[j] = idx[j];
      bool in_kernel = true;
      for (std::size_t i = 0; i < rows && in_kernel; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += a(i, j) * x[j];
        in_kernel = s == 0;
      }
      if (in_kernel) EXPECT_TRUE(in_integer_span(k, x));
      std::size_t j = 0;
      while (j < cols && ++idx[j] == 4) idx[j++] = -3;
      if (j == cols) break;
    }
  }
}

TEST(Lattice, KroneckerShape) {
  const IntMatrix a = int_matrix({{1, 2}, {3, 4}});
  const IntMatrix i2 = IntMatrix::identity(2);
  const IntMatrix k = kronecker(a, i2);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k(2, 0), 3);
  EXPECT_EQ(k(3, 1), 3);
  EXPECT_EQ(k(0, 1), 0);
}

TEST(OracleTame, Examples) {
  for (long n = 1; n <= 12; ++n) {
    EXPECT_EQ(oracle_tame_clin(n, {0}), Rational(0));
    for (long i = 1; i < n; ++i) EXPECT_EQ(oracle_tame_clin(n, {i}), frac(n - i, n)) << n << " " << i;
  }
}

TEST(OracleTame, AdditiveOverDirectSums) {
  for (long n : {2L, 3L, 5L, 6L})
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        EXPECT_EQ(oracle_tame_clin(n, {i, j}), oracle_tame_clin(n, {i}) + oracle_tame_clin(n, {j}));
  EXPECT_EQ(oracle_tame_clin(4, {1, 2, 3}), frac(3, 4) + frac(2, 4) + frac(1, 4));
}

TEST(MonogenicOrder, Valuation) {
  const auto quad = load_oracle("quad_oracle.json").order;
  EXPECT_EQ(quad.valuation(poly({0, 1})), 1);
  EXPECT_EQ(quad.valuation(poly({2})), 2);
  EXPECT_EQ(quad.valuation(poly({1, 1})), 0);
  EXPECT_EQ(quad.norm(poly({1, 1})), Rational(-1));
  EXPECT_FALSE(quad.valuation(poly({0})).has_value());
  EXPECT_EQ(quad.valuation(poly({0, -2})), 3);
}

TEST(MonogenicOrder, RejectsBadInput) {
  EXPECT_THROW(MonogenicOrder(5, {-2, 0, 0, 1}, {{0, 1}}), ValidationError);
  EXPECT_THROW(MonogenicOrder(2, {-4, 0, 1}, {{0, 1}, {0, -1}}), ValidationError);
  EXPECT_THROW(load_oracle("notgalois_oracle.json"), ValidationError);
  // Wrong automorphism: x -> x + 1 is not a root of x^2 - 2.
  EXPECT_THROW(MonogenicOrder(2, {-2, 0, 1}, {{0, 1}, {1, 1}}), ValidationError);
  // Identity must come first.
  EXPECT_THROW(MonogenicOrder(2, {-2, 0, 1}, {{0, -1}, {0, 1}}), ValidationError);
}

TEST(MonogenicOrder, GroupIsClosedAndActionIsARepresentation) {
  for (const auto& name : {"quad_oracle.json", "zeta4_oracle.json", "zeta8_oracle.json", "zeta3_oracle.json",
                           "zeta9_oracle.json", "cubic7_oracle.json", "sqrt3_oracle.json"}) {
    const auto o = load_oracle(name).order;
    const Group& g = o.group();
    EXPECT_EQ(g->order(), o.degree()) << name;
    for (int s = 0; s < g->order(); ++s)
      for (int t = 0; t < g->order(); ++t) {
        // sigma_t(sigma_s(y)) for y = x + 1 agrees with the product element.
        const QPoly y = poly({1, 1});
        EXPECT_EQ(o.act(t, o.act(s, y)), o.act(g->mul(s, t), y)) << name;
      }
  }
}

TEST(OracleMonogenic, QuadraticExample) {
  const auto fx = load_oracle("quad_oracle.json");
  ASSERT_TRUE(fx.module.has_value());
  EXPECT_EQ(oracle_monogenic_clin(fx.order, *fx.module), frac(1, 2));
  EXPECT_EQ(oracle_monogenic_clin(fx.order, fx.order.regular_module()), frac(3, 2));
  EXPECT_EQ(oracle_monogenic_clin(fx.order, fx.order.trivial_module()), Rational(0));
  const RamificationData r = filtration_from_monogenic(fx.order);
  EXPECT_EQ(conductor(r, regular_character(r.gamma())), frac(3, 2));
  EXPECT_NE(oracle_monogenic_clin(fx.order, *fx.module), oracle_monogenic_clin(fx.order, fx.order.regular_module()));
}

TEST(OracleMonogenic, TrivialModuleVanishesEverywhere) {
  for (const auto& name : {"zeta4_oracle.json", "zeta3_oracle.json", "zeta9_oracle.json", "sqrt3_oracle.json"})
    EXPECT_EQ(oracle_monogenic_clin(load_oracle(name).order, load_oracle(name).order.trivial_module()), Rational(0));
}

TEST(OracleMonogenic, RegularModuleTripleAgreement) {
  for (const auto& name : {"quad_oracle.json", "zeta4_oracle.json", "zeta8_oracle.json", "zeta3_oracle.json",
                           "zeta9_oracle.json", "sqrt3_oracle.json", "cubic7_oracle.json"}) {
    const auto o = load_oracle(name).order;
    const RamificationData r = filtration_from_monogenic(o);
    const Rational lattice = oracle_monogenic_clin(o, o.regular_module());
    long half_sum = 0;
    for (const auto& gi : r.filtration()) half_sum += gi.order() - 1;
    EXPECT_EQ(lattice, conductor(r, regular_character(r.gamma()))) << name;
    EXPECT_EQ(lattice, frac(half_sum, 2)) << name;
  }
}

TEST(OracleMonogenic, TameSignCharacterMatchesConductor) {
  // Q_3(sqrt 3): the sign character pairs to 1/2 with the refined Artin character.
  const auto o = load_oracle("sqrt3_oracle.json").order;
  const RamificationData r = filtration_from_monogenic(o);
  std::vector<IntMatrix> sign;
  for (int s = 0; s < o.group()->order(); ++s) sign.push_back(int_matrix({{s == 0 ? 1 : -1}}));
  const ClassFunction chi(r.gamma(), {Q(1), Q(-1)});
  EXPECT_EQ(oracle_monogenic_clin(o, sign), conductor(r, chi));
}

TEST(LowerFiltration, Examples) {
  const auto quad = load_oracle("quad_oracle.json").order;
  const auto filt = lower_filtration_from_monogenic(quad);
  ASSERT_EQ(filt.size(), 3u);
  for (const auto& g : filt) EXPECT_EQ(g.order(), 2);

  const RamificationData z9 = filtration_from_monogenic(load_oracle("zeta9_oracle.json").order);
  for (const auto& v : upper_jumps(z9)) EXPECT_TRUE(is_integer(v));
  EXPECT_EQ(upper_jumps(z9), (std::vector<Rational>{Rational(0), Rational(1)}));
  const RamificationData z8 = filtration_from_monogenic(load_oracle("zeta8_oracle.json").order);
  EXPECT_EQ(upper_jumps(z8), (std::vector<Rational>{Rational(1), Rational(2)}));

  const auto cubic = load_oracle("cubic7_oracle.json").order;
  const auto fc = lower_filtration_from_monogenic(cubic);
  ASSERT_EQ(fc.size(), 1u);
  EXPECT_EQ(fc[0].order(), 3);
}

TEST(TameCharacter, Examples) {
  const auto sqrt3 = load_oracle("sqrt3_oracle.json").order;
  for (long k = 0; k < prime_choice_count(2, 3); ++k) {
    const RamificationData r = filtration_from_monogenic(sqrt3, k);
    EXPECT_EQ(r.psi(r.tame().generator), Q(-1));
  }
  const auto cubic = load_oracle("cubic7_oracle.json").order;
  ASSERT_EQ(prime_choice_count(3, 7), 2);
  const RamificationData a = filtration_from_monogenic(cubic, 0);
  const RamificationData b = filtration_from_monogenic(cubic, 1);
  EXPECT_EQ(a.psi(1), make_root(3, 2));
  EXPECT_EQ(b.psi(1), make_root(3, 1));
  EXPECT_EQ(a.psi(1), conjugate(b.psi(1)));
  EXPECT_THROW(tame_character_from_monogenic(load_oracle("quad_oracle.json").order, 0), ComputationError);
}

TEST(TameCharacter, PrimeChoiceIndependenceForRationalCharacters) {
  const auto cubic = load_oracle("cubic7_oracle.json").order;
  const RamificationData base = filtration_from_monogenic(cubic, 0);
  for (long k = 0; k < prime_choice_count(3, 7); ++k) {
    const RamificationData r = filtration_from_monogenic(cubic, k);
    for (const auto& chi : qp_irreducibles(r.gamma(), 0)) EXPECT_EQ(conductor(r, chi), conductor(base, chi));
    // Psi_k = Psi_0^j, so linear characters move by the inverse power.
    long j = 1;
    while (base.psi(1).galois(j) != r.psi(1)) ++j;
    const long jinv = nt::inverse_mod(j, 3);
    for (const auto& chi : abelian_irreducibles(r.gamma()))
      EXPECT_EQ(conductor(r, chi), conductor(base, chi.galois(jinv)));
  }
}

TEST(OracleVsConductor, TameCyclic) {
  for (long n = 1; n <= 12; ++n)
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      if (n % p == 0) continue;
      const RamificationData t = arcond::test::tame_cyclic(n, p);
      for (long i = 0; i < n; ++i) {
        const ClassFunction chi = linear_cyclic(t.gamma(), (n - i) % n);
        EXPECT_EQ(conductor_pairing(t, chi).value, Cyclotomic(oracle_tame_clin(n, {i}))) << n << " " << p << " " << i;
      }
    }
}
