#include "arcond/lattice.hpp"

namespace arcond {

namespace {

void xgcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// (col_c, col_j) <- (s col_c + t col_j, u col_c + v col_j)
void mix_columns(IntMatrix& m, std::size_t c, std::size_t j, const Integer& s, const Integer& t, const Integer& u,
                 const Integer& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Integer x = m(i, c), y = m(i, j);
    m(i, c) = s * x + t * y;
    m(i, j) = u * x + v * y;
  }
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& a) {
  IntMatrix h = a;
  const std::size_t n = a.cols();
  IntMatrix u = IntMatrix::identity(n);
  std::size_t c = 0;
  for (std::size_t i = 0; i < h.rows() && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (h(i, j) == 0) continue;
      if (h(i, c) == 0) {
        mix_columns(h, c, j, 0, 1, 1, 0);
        mix_columns(u, c, j, 0, 1, 1, 0);
        continue;
      }
      Integer g, s, t;
      xgcd(h(i, c), h(i, j), g, s, t);
      const Integer p = -h(i, j) / g, q = h(i, c) / g;
      mix_columns(h, c, j, s, t, p, q);
      mix_columns(u, c, j, s, t, p, q);
    }
    if (h(i, c) != 0) ++c;
  }
  IntMatrix basis(n, n - c);
  for (std::size_t k = c; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) basis(r, k - c) = u(r, k);
  return basis;
}

}  // namespace arcond
