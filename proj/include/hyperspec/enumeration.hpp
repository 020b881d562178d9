#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/scalar.hpp"
#include "hyperspec/spectra.hpp"

namespace hyperspec {

// The C(n,k) possible edges of a k-uniform hypergraph on n vertices, in
// lexicographic order; a hypergraph is a bit mask over these slots.
class EdgeSlots {
 public:
  EdgeSlots(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(vertex_masks_.size()); }
  std::uint32_t vertex_mask(int slot) const { return vertex_masks_[slot]; }
  int slot_of(std::uint32_t vertex_mask) const { return slot_of_[vertex_mask]; }
  std::uint64_t full_mask() const;

  Hypergraph to_hypergraph(std::uint64_t mask) const;
  std::uint64_t to_mask(const Hypergraph& h) const;
  // Image of mask under the vertex map v -> perm[v].
  std::uint64_t permute(std::uint64_t mask, std::span<const int> perm) const;
  std::uint64_t permute_bits(std::span<const std::uint32_t> edges, std::span<const int> perm) const;

 private:
  int k_, n_;
  std::vector<std::uint32_t> vertex_masks_;
  std::vector<int> slot_of_;
};

struct CanonicalForm {
  std::uint64_t mask = 0;
  std::uint64_t automorphisms = 0;
};

// Largest image of mask over the leaves of an individualization-refinement
// tree; the number of leaves reaching it is the automorphism group order.
CanonicalForm canonical_form(const EdgeSlots& slots, std::uint64_t mask);

struct EnumerationBudget {
  int max_k = 6;
  int max_n = 9;
  int max_slots = 35;
};

void check_enumeration_budget(int k, int n, const EnumerationBudget& budget);

struct EnumerationStats {
  std::vector<std::uint64_t> classes_per_level;  // index = edge count
  std::uint64_t classes = 0;
  BigInt orbit_sum;  // sum of n!/|Aut|, equals 2^slots when exhaustive
};

// One representative of every isomorphism class of k-uniform hypergraphs on
// n vertices (isolated vertices allowed), grown level by level in the edge
// count with canonical-form rejection. Levels past half the slots are the
// complements of earlier levels.
EnumerationStats enumerate_classes(int k, int n,
                                   const std::function<void(std::uint64_t mask, std::uint64_t automorphisms)>& visit,
                                   const EnumerationBudget& budget = {});

// Number of classes by Burnside's lemma over the symmetric group.
BigInt burnside_class_count(int k, int n);

struct ConjectureSurvey {
  EnumerationStats stats;
  BigInt expected_classes;
  bool exhaustive = false;  // class count and orbit sum both check out
  std::map<int, std::uint64_t> instances_by_order;
  std::uint64_t instances = 0;
  std::uint64_t cond1 = 0;            // odd-bipartite
  std::uint64_t cond4 = 0;            // half-sum labeling
  std::uint64_t cond2_witnessed = 0;  // verified Q null vector
  std::uint64_t cond3_witnessed = 0;  // verified -rho eigenpair
  std::uint64_t one_not_four = 0;
  std::vector<Hypergraph> specimens;  // (4) without (1)
};

// Probes every connected class with at least one edge and no isolated
// vertex on at most nmax vertices.
ConjectureSurvey conjecture_survey(int k, int nmax, const PowerOptions& opts = {},
                                   const EnumerationBudget& budget = {});

}  // namespace hyperspec
