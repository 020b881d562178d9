#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/scalar.hpp"

namespace hyperspec {

enum class LabelingKind { HalfSum, OddBipartition };

// Vertex -> residue in {0..k-1}.
//   HalfSum:        every edge sum is congruent to k/2 mod k.
//   OddBipartition: 0/1 values, every edge holds an odd number of ones.
struct Labeling {
  LabelingKind kind;
  std::vector<int> values;

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

bool is_valid_labeling(const Hypergraph& h, const Labeling& f);

// Vertices labelled 1 in an odd bipartition.
std::vector<Vertex> odd_part(const Labeling& f);

Labeling bipartition_from_set(const Hypergraph& h, std::span<const Vertex> v1);

// A proper nonempty V1 meeting every edge oddly, via GF(2) elimination.
std::optional<Labeling> find_odd_bipartition(const Hypergraph& h);

// A labeling with all edge sums = k/2 (mod k); nullopt for odd k.
std::optional<Labeling> find_half_sum_labeling(const Hypergraph& h);

// Exhaustive search over all k^n labelings. Test oracle for small n.
std::optional<Labeling> brute_force_half_sum_labeling(const Hypergraph& h);

// f = k/2 on V1, 0 elsewhere.
Labeling half_sum_from_bipartition(const Hypergraph& h, const Labeling& bipartition);

// x_i = -1 on V1 and +1 elsewhere; satisfies Q_H x = 0 for even k.
std::vector<Rational> bipartition_sign_vector(const Hypergraph& h, std::span<const Vertex> v1);

}  // namespace hyperspec
