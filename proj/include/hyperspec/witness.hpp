#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperspec/labeling.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

// Exact zero eigenpair of Q_H from an odd bipartition (even k).
struct ExactEigenPair {
  Rational lambda;
  std::vector<Rational> x;
  Rational residual;
};

ExactEigenPair slap_null_witness(const Hypergraph& h, std::span<const Vertex> v1);

// (-rho, y) with y_i = exp(2 pi i f(i)/k) v_i, v the Perron vector of A_H.
EigenPair neg_rho_witness(const Hypergraph& h, const Labeling& f, const PowerOptions& opts = {});

// (0, x) for Q_H with x_i = exp(2 pi i f(i)/k).
EigenPair phase_null_witness(const Hypergraph& h, const Labeling& f);

struct ProbeReport {
  bool odd_bipartite = false;          // condition (1)
  bool half_sum = false;               // condition (4)
  std::optional<Labeling> bipartition;
  std::optional<Labeling> labeling;
  std::optional<EigenPair> null_witness;     // condition (2)
  std::optional<EigenPair> neg_rho;          // condition (3)
  bool null_verified = false;
  bool neg_rho_verified = false;
  bool null_exact = false;  // phases were all +-1 and the residual is exactly 0

  // (4) holds but (1) does not.
  bool specimen() const { return half_sum && !odd_bipartite; }
};

// Constructive evidence for the four conditions on a connected H.
ProbeReport conjecture_probe(const Hypergraph& h, const PowerOptions& opts = {});

}  // namespace hyperspec
