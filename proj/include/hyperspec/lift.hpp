#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/polynomial.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

inline constexpr double kEigenTol = 1e-8;
inline constexpr double kInputTol = 1e-10;

struct LiftReport {
  Complex source;
  TensorKind kind = TensorKind::Adjacency;
  std::vector<Complex> lifted;
  std::vector<EigenPair> witnesses;
  // Largest real root when the source is the Perron value d.
  std::optional<double> perron;
};

// Eigenpair (alpha, x) of the adjacency matrix of G lifted to A of G^k.
// With s_u = x_u^(1/k) (principal) and m = alpha^(-1/k) (principal):
//   y_u = s_u^2 on V(G),  y = m s_i s_j on the cores of edge {i,j},
// and the eigenvalue is m^-2, the principal alpha^(2/k).
EigenPair lift_adjacency_eigenpair(const Hypergraph& g, Complex alpha, std::span<const Complex> x, int k);

// (l - d)(l - 1)^((k-2)/2) - alpha  and  (d - l)(1 - l)^((k-2)/2) - alpha.
Polynomial<Complex> lift_polynomial(int d, Complex alpha, int k, TensorKind kind);

// Every root l of the signless polynomial is a Q eigenvalue of G^k:
// y_u = s_u^2 on V(G), y = w s_i s_j on cores with w^2 = 1/(l - 1).
LiftReport lift_regular_slap(int d, Complex alpha, std::span<const Complex> x, const Hypergraph& g, int k);

// Laplacian analogue with w^2 = 1/(1 - l).
LiftReport lift_regular_lap(int d, Complex alpha, std::span<const Complex> x, const Hypergraph& g, int k);

// Adjacency eigenpair of H - e extended by zeros on the deleted cores of e.
EigenPair extend_eigenvector_zero(const Hypergraph& h, const Edge& e, const EigenPair& pair,
                                  TensorKind kind = TensorKind::Adjacency);

struct GraphEigenpair {
  double value;
  std::vector<double> vector;
};

// Full spectrum of the adjacency matrix of a graph, ascending.
std::vector<GraphEigenpair> graph_adjacency_eigenpairs(const Hypergraph& g);

}  // namespace hyperspec
