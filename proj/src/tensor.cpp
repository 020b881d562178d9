#include "hyperspec/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace hyperspec {

const char* to_string(TensorKind kind) {
  switch (kind) {
    case TensorKind::Adjacency: return "adjacency";
    case TensorKind::Laplacian: return "laplacian";
    case TensorKind::SignlessLaplacian: return "signless";
  }
  return "?";
}

Tensor<Rational> unit_tensor(int k, int n) {
  if (k < 2) throw PreconditionError("unit tensor needs order at least 2");
  Tensor<Rational> t(k, n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> idx(k, i);
    t.set(idx, Rational(1));
  }
  return t;
}

namespace {

void add_edge_entries(Tensor<Rational>& t, const Edge& e, const Rational& value) {
  std::vector<int> idx(e.begin(), e.end());  // sorted, so this starts a full permutation cycle
  do {
    t[t.flat_index(idx)] += value;
  } while (std::next_permutation(idx.begin(), idx.end()));
}

Tensor<Rational> build(const Hypergraph& h, int degree_sign, int edge_sign) {
  if (h.n() < 1) throw PreconditionError("hypergraph tensors need at least one vertex");
  Tensor<Rational> t(h.k(), h.n());
  const Rational weight(BigInt(edge_sign), factorial(static_cast<unsigned long>(h.k() - 1)));
  for (const Edge& e : h.edges()) add_edge_entries(t, e, weight);
  if (degree_sign != 0) {
    for (Vertex v = 0; v < h.n(); ++v) {
      std::vector<int> idx(h.k(), v);
      t.set(idx, Rational(degree_sign * static_cast<long>(h.incident(v).size())));
    }
  }
  return t;
}

}  // namespace

Tensor<Rational> adjacency_tensor(const Hypergraph& h) { return build(h, 0, 1); }
Tensor<Rational> laplacian_tensor(const Hypergraph& h) { return build(h, 1, -1); }
Tensor<Rational> signless_laplacian_tensor(const Hypergraph& h) { return build(h, 1, 1); }

Tensor<Rational> hypergraph_tensor(const Hypergraph& h, TensorKind kind) {
  switch (kind) {
    case TensorKind::Adjacency: return adjacency_tensor(h);
    case TensorKind::Laplacian: return laplacian_tensor(h);
    case TensorKind::SignlessLaplacian: return signless_laplacian_tensor(h);
  }
  throw PreconditionError("unknown tensor kind");
}

Tensor<Complex> to_complex(const Tensor<Rational>& t) {
  Tensor<Complex> out(t.order(), t.dim());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_zero(t[i])) out[i] = to_complex(t[i]);
  }
  return out;
}

PhaseSimilarity check_phase_similarity(const Tensor<Complex>& t, std::span<const Complex> u,
                                       double theta, double tol) {
  if (static_cast<int>(u.size()) != t.dim()) throw PreconditionError("U has the wrong dimension");
  for (const Complex& ui : u) {
    if (std::abs(std::abs(ui) - 1.0) > 1e-12) {
      throw PreconditionError("U must have unit-modulus diagonal entries");
    }
  }
  std::vector<Complex> left(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) left[i] = std::pow(u[i], -(t.order() - 1));
  const Tensor<Complex> similar = matrix_sandwich(diagonal_matrix<Complex>(left), t,
                                                  diagonal_matrix<Complex>(u));
  const Complex phase = std::exp(Complex(0.0, -theta));
  double worst = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    worst = std::max(worst, std::abs(t[i] - phase * similar[i]));
  }
  return {worst <= tol, worst};
}

}  // namespace hyperspec
