#include <random>

#include "doctest.h"
#include "hyperspec/charpoly.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/trace.hpp"
#include "support.hpp"

using namespace hyperspec;

TEST_CASE("Newton recurrence") {
  const std::vector<Rational> traces{Rational(12), Rational(12), Rational(3)};
  CHECK(charpoly_coefficients(traces) == std::vector<Rational>{Rational(-12), Rational(66), Rational(-217)});
  const std::vector<Rational> other{Rational(12), Rational(72), Rational(3)};
  CHECK(charpoly_coefficients(other) == std::vector<Rational>{Rational(-12), Rational(36), Rational(143)});
  // Power sums of the roots 1, 2, 3.
  const std::vector<Rational> roots{Rational(6), Rational(14), Rational(36)};
  CHECK(charpoly_coefficients(roots) == std::vector<Rational>{Rational(-6), Rational(11), Rational(-6)});
}

TEST_CASE("complete 3-graph on four vertices") {
  const auto h = testsupport::complete(3, 4);
  const auto l = laplacian_tensor(h);
  std::vector<Rational> traces;
  for (int t = 1; t <= 3; ++t) traces.push_back(trace_d(l, t));
  CHECK(traces == std::vector<Rational>{Rational(96), Rational(288), Rational(792)});
  const auto p = charpoly_coefficients(traces);
  CHECK(p == std::vector<Rational>{Rational(-96), Rational(4464), Rational(-133896)});
  CHECK(regular_coefficient_formula(4, 3, 3, 1).laplacian == -96);
  CHECK(regular_coefficient_formula(4, 3, 3, 3).laplacian == -133896);
}

TEST_CASE("regular coefficients match the trace route") {
  struct Case {
    Hypergraph h;
    int d;
  };
  std::vector<Case> cases{{testsupport::complete(3, 4), 3},
                          {Hypergraph(3, 3, {{0, 1, 2}}), 1},
                          {Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}), 1},
                          {testsupport::cycle(5), 2},
                          {testsupport::complete(2, 4), 3},
                          {Hypergraph(4, 4, {{0, 1, 2, 3}}), 1},
                          {testsupport::complete(4, 5), 4}};
  for (const auto& [h, d] : cases) {
    const auto l = laplacian_tensor(h);
    const auto q = signless_laplacian_tensor(h);
    std::vector<Rational> tl, tq;
    for (int t = 1; t <= h.k(); ++t) {
      tl.push_back(trace_d(l, t));
      tq.push_back(trace_d(q, t));
    }
    const auto pl = charpoly_coefficients(tl);
    const auto pq = charpoly_coefficients(tq);
    for (int t = 1; t <= h.k(); ++t) {
      const auto f = regular_coefficient_formula(h.n(), h.k(), d, t);
      CHECK(f.laplacian == pl[t - 1]);
      CHECK(f.signless == pq[t - 1]);
    }
  }
  CHECK_THROWS_AS(regular_coefficient_formula(4, 3, 3, 4), PreconditionError);
}

TEST_CASE("regular graphs: second coefficient is a sum of minors") {
  for (int n = 3; n <= 7; ++n) {
    const Rational expect = Rational(4 * n * (n - 1) / 2) - Rational(n);
    CHECK(regular_coefficient_formula(n, 2, 2, 2).laplacian == expect);
  }
}

TEST_CASE("polynomial determinant") {
  using P = Polynomial<Rational>;
  auto c = [](int v) { return P::constant(Rational(v)); };
  CHECK(polynomial_determinant({{c(2), c(1)}, {c(7), c(4)}}) == c(1));
  CHECK(polynomial_determinant({{c(0), c(1)}, {c(1), c(0)}}) == c(-1));
  const P x = P::monomial(1);
  CHECK(polynomial_determinant({{x, c(1)}, {c(1), x}}) == x * x - c(1));
  CHECK(polynomial_determinant({{c(1), c(2)}, {c(2), c(4)}}).is_zero());
}

TEST_CASE("dimension-2 characteristic polynomial") {
  using P = Polynomial<Rational>;
  CHECK(charpoly_n2(unit_tensor(3, 2)) == P::linear_factor(1).pow(4));
  CHECK(charpoly_n2(unit_tensor(4, 2)) == P::linear_factor(1).pow(6));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = testsupport::random_tensor(rng, 2, 2, -4, 4);
    const auto p = charpoly_n2(a);
    const Rational tr = a.at({0, 0}) + a.at({1, 1});
    const Rational det = a.at({0, 0}) * a.at({1, 1}) - a.at({0, 1}) * a.at({1, 0});
    CHECK(p == P({det, -tr, Rational(1)}));
  }
}

TEST_CASE("dimension-2 polynomial agrees with the trace route") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 6; ++trial) {
    const int k = 3 + trial % 2;
    const auto t = testsupport::random_tensor(rng, k, 2, -2, 2, 1 + trial % 3);
    const int deg = 2 * (k - 1);
    std::vector<Rational> traces;
    for (int d = 1; d <= deg; ++d) traces.push_back(trace_d(t, d));
    const auto p = charpoly_coefficients(traces);
    const auto poly = charpoly_n2(t);
    REQUIRE(poly.degree() == deg);
    CHECK(poly.leading() == 1);
    for (int j = 1; j <= deg; ++j) CHECK(poly.coefficient(deg - j) == p[j - 1]);
  }
}

TEST_CASE("dimension-2 spectrum") {
  const auto roots = spectrum_n2(unit_tensor(3, 2));
  REQUIRE(roots.size() == 4);
  for (const auto& z : roots) CHECK(std::abs(z - Complex(1, 0)) < 1e-6);
  CHECK_THROWS_AS(charpoly_n2(unit_tensor(3, 3)), PreconditionError);
}
