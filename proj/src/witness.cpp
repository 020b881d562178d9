#include "hyperspec/witness.hpp"

#include <cmath>
#include <numbers>

#include "hyperspec/error.hpp"
#include "hyperspec/lift.hpp"

namespace hyperspec {

namespace {

Complex phase(int f, int k) {
  if ((4 * f) % k == 0) {
    static const Complex quarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    return quarter[(4 * f / k) % 4];
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * f / k);
}

void require_half_sum(const Hypergraph& h, const Labeling& f) {
  if (f.kind != LabelingKind::HalfSum || !is_valid_labeling(h, f)) {
    throw PreconditionError("expected a valid half-sum labeling");
  }
}

}  // namespace

ExactEigenPair slap_null_witness(const Hypergraph& h, std::span<const Vertex> v1) {
  ExactEigenPair p{0, bipartition_sign_vector(h, v1), 0};
  p.residual = exact_residual(HypergraphTensor(h, TensorKind::SignlessLaplacian), p.lambda, p.x);
  return p;
}

EigenPair neg_rho_witness(const Hypergraph& h, const Labeling& f, const PowerOptions& opts) {
  require_half_sum(h, f);
  const HypergraphTensor a(h, TensorKind::Adjacency);
  const auto perron = spectral_radius_power(a, opts);
  std::vector<Complex> y(h.n());
  for (int i = 0; i < h.n(); ++i) y[i] = phase(f.values[i], h.k()) * perron.pair.x[i];
  auto pair = make_eigenpair(a, -perron.pair.lambda, std::move(y));
  if (pair.residual > kEigenTol) {
    throw VerificationError("negative Perron witness residual " + std::to_string(pair.residual));
  }
  return pair;
}

EigenPair phase_null_witness(const Hypergraph& h, const Labeling& f) {
  require_half_sum(h, f);
  std::vector<Complex> x(h.n());
  for (int i = 0; i < h.n(); ++i) x[i] = phase(f.values[i], h.k());
  return make_eigenpair(HypergraphTensor(h, TensorKind::SignlessLaplacian), 0.0, std::move(x));
}

ProbeReport conjecture_probe(const Hypergraph& h, const PowerOptions& opts) {
  if (!is_connected(h)) throw PreconditionError("conjecture probe needs a connected hypergraph");
  ProbeReport r;
  const int k = h.k();
  if (k % 2 == 0) {
    r.bipartition = find_odd_bipartition(h);
    r.odd_bipartite = r.bipartition.has_value();
  }
  r.labeling = find_half_sum_labeling(h);
  r.half_sum = r.labeling.has_value();
  if (!r.half_sum) return r;

  r.null_witness = phase_null_witness(h, *r.labeling);
  r.null_verified = r.null_witness->residual <= kEigenTol;
  bool signs = true;
  for (int v : r.labeling->values) signs = signs && (v == 0 || 2 * v == k);
  if (signs) {
    std::vector<Rational> x(h.n());
    for (int i = 0; i < h.n(); ++i) x[i] = r.labeling->values[i] == 0 ? 1 : -1;
    r.null_exact = is_zero(exact_residual(HypergraphTensor(h, TensorKind::SignlessLaplacian), 0, x));
  }
  r.neg_rho = neg_rho_witness(h, *r.labeling, opts);
  r.neg_rho_verified = r.neg_rho->residual <= kEigenTol;
  return r;
}

}  // namespace hyperspec
