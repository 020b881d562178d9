#include <random>

#include "doctest.h"
#include "hyperspec/error.hpp"
#include "hyperspec/modular.hpp"
#include "hyperspec/polynomial.hpp"
#include "hyperspec/roots.hpp"
#include "hyperspec/scalar.hpp"

using namespace hyperspec;

TEST_CASE("rational and complex formatting") {
  CHECK(format_rational(Rational(12)) == "12");
  CHECK(format_rational(parse_rational("-3/6")) == "-1/2");
  CHECK(parse_rational("-217") == Rational(-217));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), PreconditionError);
  CHECK_THROWS_AS(parse_rational("abc"), PreconditionError);
  CHECK(format_complex({1.5, -0.25}) == "1.5-0.25i");
  CHECK(format_complex({-0.0, 0.0}) == "0+0i");
  const Complex z(0.123456789012345, -7.5);
  CHECK(std::abs(parse_complex(format_complex(z)) - z) < 1e-11);
}

TEST_CASE("exact helpers") {
  CHECK(rational_pow(Rational(2), -3) == Rational(1, 8));
  CHECK(rational_pow(Rational(-3, 2), 3) == Rational(-27, 8));
  CHECK(factorial(6) == 720);
  CHECK(binomial(12, 3) == 220);
}

TEST_CASE("polynomial arithmetic and division") {
  using P = Polynomial<Rational>;
  const P a({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  const P b = P::linear_factor(1);
  CHECK(exact_quotient(a, b) == P::linear_factor(-1));
  CHECK(divmod(a, P::linear_factor(2)).second == P::constant(3));
  CHECK_THROWS(exact_quotient(a, P::linear_factor(2)));
  CHECK(gcd(a, b * b) == b);
  CHECK(a.derivative() == P({Rational(0), Rational(2)}));
  CHECK(P::linear_factor(1).pow(3).coefficients() ==
        std::vector<Rational>{Rational(-1), Rational(3), Rational(-3), Rational(1)});
}

TEST_CASE("square-free decomposition") {
  using P = Polynomial<Rational>;
  const P p = P::linear_factor(1).pow(3) * P::linear_factor(2);
  const auto parts = squarefree_decomposition(p);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == P::linear_factor(2));
  CHECK(parts[1] == P::constant(1));
  CHECK(parts[2] == P::linear_factor(1));
}

TEST_CASE("root finding") {
  using P = Polynomial<Rational>;
  auto near = [](const std::vector<Complex>& got, const std::vector<Complex>& want, double tol) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i) {
      if (std::abs(got[i] - want[i]) > tol) return false;
    }
    return true;
  };
  CHECK(near(poly_roots(P({Rational(0), Rational(-3), Rational(1)})), {{0, 0}, {3, 0}}, 1e-12));
  CHECK(near(poly_roots(P({Rational(-1), Rational(0), Rational(1)})), {{-1, 0}, {1, 0}}, 1e-12));
  CHECK(near(poly_roots(P::linear_factor(1).pow(4)), {{1, 0}, {1, 0}, {1, 0}, {1, 0}}, 1e-6));
  CHECK(near(poly_roots(to_complex(P::linear_factor(1).pow(4))), {{1, 0}, {1, 0}, {1, 0}, {1, 0}}, 1e-3));
  const auto cplx = poly_roots(P({Rational(3), Rational(-3), Rational(1)}));
  CHECK(near(cplx, {{1.5, -std::sqrt(0.75)}, {1.5, std::sqrt(0.75)}}, 1e-12));
  CHECK_THROWS_AS(poly_roots(P()), PreconditionError);
  CHECK(poly_roots(P::constant(2)).empty());
  CHECK(largest_real_root({{0, 0}, {3, 0}, {5, 1}}) == doctest::Approx(3.0));
  CHECK_FALSE(largest_real_root({{5, 1}}).has_value());
}

TEST_CASE("roots of random integer polynomials satisfy the residual bound") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> coeffs;
    const int deg = 2 + trial % 7;
    for (int i = 0; i < deg; ++i) coeffs.push_back(c(rng));
    coeffs.push_back(1 + trial % 3);
    const Polynomial<Rational> p(coeffs);
    const auto roots = poly_roots(p);
    REQUIRE(static_cast<int>(roots.size()) == deg);
    const auto pc = to_complex(p);
    for (const auto& z : roots) {
      double scale = 0.0;
      for (int i = 0; i <= deg; ++i) scale += std::abs(pc.coefficient(i)) * std::pow(std::abs(z), i);
      CHECK(std::abs(pc(z)) <= 1e-9 * scale);
    }
  }
}

TEST_CASE("GF(2) solver") {
  std::vector<Gf2Row> rows(2, Gf2Row(3));
  rows[0].set(0, true);
  rows[0].set(1, true);
  rows[1].set(1, true);
  rows[1].set(2, true);
  const auto s = solve_gf2(rows, {true, true}, 3);
  REQUIRE(s.has_value());
  CHECK(s->nullspace.size() == 1);
  CHECK(s->particular.get(0) != s->particular.get(1));
  CHECK(s->particular.get(1) != s->particular.get(2));

  std::vector<Gf2Row> odd(3, Gf2Row(3));
  odd[0].set(0, true), odd[0].set(1, true);
  odd[1].set(1, true), odd[1].set(2, true);
  odd[2].set(0, true), odd[2].set(2, true);
  CHECK_FALSE(solve_gf2(odd, {true, true, true}, 3).has_value());
}

TEST_CASE("modular solver agrees with brute force") {
  std::mt19937_64 rng(5);
  for (int modulus : {2, 4, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      const int nvars = 1 + static_cast<int>(rng() % 4);
      const int neq = 1 + static_cast<int>(rng() % 4);
      std::vector<std::vector<int>> a(neq, std::vector<int>(nvars));
      std::vector<int> b(neq);
      for (auto& row : a) {
        for (int& x : row) x = static_cast<int>(rng() % modulus);
      }
      for (int& x : b) x = static_cast<int>(rng() % modulus);
      bool exists = false;
      std::vector<int> x(nvars, 0);
      for (long code = 0; !exists && code < static_cast<long>(std::pow(modulus, nvars)); ++code) {
        long c = code;
        for (int& v : x) {
          v = static_cast<int>(c % modulus);
          c /= modulus;
        }
        bool ok = true;
        for (int i = 0; i < neq && ok; ++i) {
          long s = 0;
          for (int j = 0; j < nvars; ++j) s += static_cast<long>(a[i][j]) * x[j];
          ok = ((s - b[i]) % modulus + modulus) % modulus == 0;
        }
        exists = ok;
      }
      const auto got = solve_mod(a, b, nvars, modulus);
      CHECK(got.has_value() == exists);
      if (got) {
        for (int i = 0; i < neq; ++i) {
          long s = 0;
          for (int j = 0; j < nvars; ++j) s += static_cast<long>(a[i][j]) * (*got)[j];
          CHECK(((s - b[i]) % modulus + modulus) % modulus == 0);
        }
      }
    }
  }
}
