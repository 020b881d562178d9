#include "hyperspec/charpoly.hpp"

#include "hyperspec/error.hpp"
#include "hyperspec/roots.hpp"

namespace hyperspec {

RegularCoefficients regular_coefficient_formula(int n, int k, int d, int t) {
  if (k < 2 || n < 1 || d < 0) throw PreconditionError("need k >= 2, n >= 1, d >= 0");
  if (t < 1 || t > k) throw PreconditionError("coefficient formula holds for 1 <= t <= k");
  BigInt big_n = BigInt(n) * rational_pow(Rational(k - 1), n - 1).get_num();
  const Rational base = rational_pow(Rational(-d), t) * Rational(binomial(big_n, static_cast<unsigned long>(t)));
  if (t < k) return {base, base};
  const Rational edge = rational_pow(Rational(k), k - 3) * rational_pow(Rational(k - 1), n - k) *
                        Rational(static_cast<long>(n) * d);
  const Rational lap = (k % 2 == 0 ? -edge : edge) + base;
  return {lap, base - edge};
}

Polynomial<Rational> polynomial_determinant(std::vector<std::vector<Polynomial<Rational>>> m) {
  using P = Polynomial<Rational>;
  const std::size_t n = m.size();
  if (n == 0) return P::constant(1);
  for (const auto& row : m) {
    if (row.size() != n) throw PreconditionError("determinant needs a square matrix");
  }
  int sign = 1;
  P prev = P::constant(1);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m[p][p].is_zero()) {
      std::size_t r = p + 1;
      while (r < n && m[r][p].is_zero()) ++r;
      if (r == n) return {};
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m[i][j] = exact_quotient(m[i][j] * m[p][p] - m[i][p] * m[p][j], prev);
      }
      m[i][p] = P();
    }
    prev = m[p][p];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Polynomial<Rational> charpoly_n2(const Tensor<Rational>& t) {
  using P = Polynomial<Rational>;
  if (t.dim() != 2) throw PreconditionError("charpoly_n2 needs dimension 2");
  if (t.order() < 2) throw PreconditionError("charpoly_n2 needs order at least 2");
  const int m = t.order() - 1;

  // coeff[i][j]: coefficient of x1^(m-j) x2^j in lambda x_i^m - (T x^(m))_i.
  std::vector<std::vector<P>> coeff(2, std::vector<P>(m + 1));
  for (std::size_t flat : t.nonzeros()) {
    const auto idx = t.indices(flat);
    int j = 0;
    for (std::size_t s = 1; s < idx.size(); ++s) j += idx[s];
    coeff[idx[0]][j] -= P::constant(t[flat]);
  }
  coeff[0][0] += P::monomial(1);
  coeff[1][m] += P::monomial(1);

  std::vector<std::vector<P>> syl(2 * m, std::vector<P>(2 * m));
  for (int i = 0; i < 2; ++i) {
    for (int r = 0; r < m; ++r) {
      for (int j = 0; j <= m; ++j) syl[i * m + r][r + j] = coeff[i][j];
    }
  }
  return polynomial_determinant(std::move(syl));
}

std::vector<Complex> spectrum_n2(const Tensor<Rational>& t) { return poly_roots(charpoly_n2(t)); }

}  // namespace hyperspec
