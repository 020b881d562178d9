#include "hyperspec/lift.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "hyperspec/error.hpp"
#include "hyperspec/roots.hpp"

namespace hyperspec {

namespace {

void require_graph(const Hypergraph& g) {
  if (g.k() != 2) throw PreconditionError("lift source must be a 2-uniform graph");
}

void check_source_pair(const Hypergraph& g, Complex alpha, std::span<const Complex> x) {
  if (alpha == Complex(0.0, 0.0)) throw PreconditionError("source eigenvalue must be nonzero");
  if (static_cast<int>(x.size()) != g.n()) throw PreconditionError("source eigenvector has wrong length");
  const double r = residual(HypergraphTensor(g, TensorKind::Adjacency), alpha, x);
  if (r > kInputTol) {
    throw PreconditionError("source pair residual " + std::to_string(r) + " exceeds " + std::to_string(kInputTol));
  }
}

std::vector<Complex> kth_roots(std::span<const Complex> x, int k) {
  std::vector<Complex> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    s[i] = x[i] == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : std::pow(x[i], 1.0 / k);
  }
  return s;
}

// y on V(G) is s^2; cores of edge {i,j} get w s_i s_j.
std::vector<Complex> power_vector_from_roots(const Hypergraph& g, int k, std::span<const Complex> s, Complex w) {
  const Hypergraph gk = power_hypergraph(g, k);
  std::vector<Complex> y(gk.n(), Complex(0.0, 0.0));
  for (int u = 0; u < g.n(); ++u) y[u] = s[u] * s[u];
  for (std::size_t e = 0; e < g.m(); ++e) {
    const Complex core = w * s[g.edge(e)[0]] * s[g.edge(e)[1]];
    for (Vertex c : power_core_vertices(g, k, e)) y[c] = core;
  }
  return y;
}

void verify(const EigenPair& p, double tol, const char* what) {
  if (p.residual > tol) {
    throw VerificationError(std::string(what) + ": residual " + std::to_string(p.residual) + " for eigenvalue " +
                            format_complex(p.lambda));
  }
}

LiftReport lift_regular(int d, Complex alpha, std::span<const Complex> x, const Hypergraph& g, int k,
                        TensorKind kind) {
  require_graph(g);
  if (k < 4 || k % 2 != 0) throw PreconditionError("regular lifts need even k >= 4");
  const auto reg = degrees(g).regular_degree();
  if (!reg || *reg != d) throw PreconditionError("graph is not " + std::to_string(d) + "-regular");
  check_source_pair(g, alpha, x);

  LiftReport report;
  report.source = alpha;
  report.kind = kind;
  report.lifted = poly_roots(lift_polynomial(d, alpha, k, kind));
  const HypergraphTensor op(power_hypergraph(g, k), kind);
  const auto s = kth_roots(x, k);
  for (const Complex& l : report.lifted) {
    const Complex gap = kind == TensorKind::SignlessLaplacian ? l - 1.0 : 1.0 - l;
    if (std::abs(gap) < 1e-12) throw VerificationError("lift root equals 1");
    const Complex w = std::sqrt(1.0 / gap);
    auto pair = make_eigenpair(op, l, power_vector_from_roots(g, k, s, w));
    verify(pair, kEigenTol, "lifted eigenpair");
    report.witnesses.push_back(std::move(pair));
  }
  if (kind == TensorKind::SignlessLaplacian && std::abs(alpha - Complex(d, 0.0)) < 1e-9) report.perron = largest_real_root(report.lifted);
  return report;
}

}  // namespace

EigenPair lift_adjacency_eigenpair(const Hypergraph& g, Complex alpha, std::span<const Complex> x, int k) {
  require_graph(g);
  if (k < 3) throw PreconditionError("power hypergraph needs k >= 3");
  check_source_pair(g, alpha, x);
  const Complex m = std::pow(alpha, -1.0 / k);
  const auto s = kth_roots(x, k);
  auto pair = make_eigenpair(HypergraphTensor(power_hypergraph(g, k), TensorKind::Adjacency), 1.0 / (m * m),
                             power_vector_from_roots(g, k, s, m));
  verify(pair, kEigenTol, "lifted adjacency eigenpair");
  return pair;
}

Polynomial<Complex> lift_polynomial(int d, Complex alpha, int k, TensorKind kind) {
  if (k < 2 || k % 2 != 0) throw PreconditionError("lift polynomial needs even k");
  using P = Polynomial<Complex>;
  const int h = (k - 2) / 2;
  P out;
  if (kind == TensorKind::SignlessLaplacian) {
    out = P::linear_factor(Complex(d, 0.0)) * P::linear_factor(Complex(1.0, 0.0)).pow(h);
  } else if (kind == TensorKind::Laplacian) {
    const P a(std::vector<Complex>{Complex(d, 0.0), Complex(-1.0, 0.0)});
    const P b(std::vector<Complex>{Complex(1.0, 0.0), Complex(-1.0, 0.0)});
    out = a * b.pow(h);
  } else {
    throw PreconditionError("lift polynomial is defined for Laplacian kinds only");
  }
  return out - P::constant(alpha);
}

LiftReport lift_regular_slap(int d, Complex alpha, std::span<const Complex> x, const Hypergraph& g, int k) {
  return lift_regular(d, alpha, x, g, k, TensorKind::SignlessLaplacian);
}

LiftReport lift_regular_lap(int d, Complex alpha, std::span<const Complex> x, const Hypergraph& g, int k) {
  return lift_regular(d, alpha, x, g, k, TensorKind::Laplacian);
}

EigenPair extend_eigenvector_zero(const Hypergraph& h, const Edge& e, const EigenPair& pair, TensorKind kind) {
  if (kind != TensorKind::Adjacency) throw PreconditionError("zero extension holds for adjacency eigenpairs only");
  if (!h.has_edge(e)) throw PreconditionError("edge is not in the hypergraph");
  const auto deg = degrees(h);
  int cores = 0;
  for (Vertex v : e) cores += deg[v] == 1 ? 1 : 0;
  if (cores < 2) throw PreconditionError("edge needs at least two core vertices");

  const Relabeled sub = remove_edge_with_cores(h, e);
  if (static_cast<int>(pair.x.size()) != sub.graph.n()) throw PreconditionError("eigenvector has wrong length");
  const double r = residual(HypergraphTensor(sub.graph, TensorKind::Adjacency), pair.lambda, pair.x);
  if (r > kInputTol) throw PreconditionError("input pair residual " + std::to_string(r) + " too large");

  std::vector<Complex> y(h.n(), Complex(0.0, 0.0));
  for (int v = 0; v < h.n(); ++v) {
    if (sub.image[v]) y[v] = pair.x[*sub.image[v]];
  }
  auto out = make_eigenpair(HypergraphTensor(h, TensorKind::Adjacency), pair.lambda, std::move(y));
  verify(out, kInputTol, "zero extension");
  return out;
}

std::vector<GraphEigenpair> graph_adjacency_eigenpairs(const Hypergraph& g) {
  require_graph(g);
  const int n = g.n();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    a(e[0], e[1]) = 1.0;
    a(e[1], e[0]) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw ConvergenceError("symmetric eigensolver failed");
  std::vector<GraphEigenpair> out;
  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd v = solver.eigenvectors().col(i);
    out.push_back({solver.eigenvalues()(i), std::vector<double>(v.data(), v.data() + n)});
  }
  return out;
}

}  // namespace hyperspec
