#pragma once

#include <span>
#include <vector>

#include "hyperspec/polynomial.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

// Codegree coefficients p_1..p_m from power sums Tr_1..Tr_m by forward
// substitution in  t p_t + sum_{j<t} Tr_j p_{t-j} = -Tr_t.
template <class S>
std::vector<S> charpoly_coefficients(std::span<const S> traces) {
  std::vector<S> p(traces.size(), S(0));
  for (std::size_t t = 1; t <= traces.size(); ++t) {
    S acc = traces[t - 1];
    for (std::size_t j = 1; j < t; ++j) acc += traces[j - 1] * p[t - j - 1];
    p[t - 1] = -acc / S(static_cast<int>(t));
  }
  return p;
}

template <class S>
std::vector<S> charpoly_coefficients(const std::vector<S>& traces) {
  return charpoly_coefficients(std::span<const S>(traces));
}

struct RegularCoefficients {
  Rational laplacian;
  Rational signless;
};

// Codegree-t coefficients of the Laplacian and signless Laplacian
// polynomials of a d-regular k-uniform hypergraph on n vertices, t <= k.
RegularCoefficients regular_coefficient_formula(int n, int k, int d, int t);

// Characteristic polynomial of a dimension-2 tensor as the Sylvester
// resultant of the two binary forms (lambda I - T) x, expanded exactly by
// fraction-free elimination over Q[lambda]. Monic of degree 2(k-1).
Polynomial<Rational> charpoly_n2(const Tensor<Rational>& t);

// Roots of charpoly_n2 with multiplicity.
std::vector<Complex> spectrum_n2(const Tensor<Rational>& t);

// Determinant of a square matrix over Q[lambda] (Bareiss).
Polynomial<Rational> polynomial_determinant(std::vector<std::vector<Polynomial<Rational>>> m);

}  // namespace hyperspec
