#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/scalar.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

// Directed arc (tail, head) between tensor indices.
using Arc = std::pair<int, int>;
using ArcMultiset = std::map<Arc, int>;

// Size limits for trace enumeration. The number of index families grows
// super-exponentially, so requests beyond these are refused outright.
struct TraceBudget {
  int max_arcs = 20;  // d * (k - 1)
  int max_dim = 8;
};

// One k-valent index family F = (i_1 a_1, ..., i_d a_d) with its weights.
struct TraceTerm {
  std::vector<std::vector<int>> factors;  // each is (i_j, a_j) as a k-tuple, 0-based
  ArcMultiset arcs;
  BigInt b;  // product of factorials of arc multiplicities
  BigInt c;  // product of factorials of out-degrees
  Rational pi;
  std::uint64_t walks = 0;

  // b/c * pi * |W|
  Rational contribution() const;
};

void check_trace_budget(const Tensor<Rational>& t, int d, const TraceBudget& budget);

// Visits every k-valent F of length d with nonzero pi_F(T), in
// lexicographic order of (i_1, a_1, ..., i_d, a_d).
void enumerate_trace_terms(const Tensor<Rational>& t, int d,
                           const std::function<void(const TraceTerm&)>& visit,
                           const TraceBudget& budget = {});

std::vector<TraceTerm> collect_trace_terms(const Tensor<Rational>& t, int d,
                                           const TraceBudget& budget = {});

ArcMultiset arc_multiset(std::span<const std::vector<int>> factors);

// Closed walks using every arc of the multiset exactly as often as its
// multiplicity, counted as distinct arc sequences with a designated first
// arc (rotations count separately, equal arcs are indistinguishable).
std::uint64_t count_closed_walks(const ArcMultiset& arcs);

// Tr_d(T) = (k-1)^(n-1) * sum over k-valent F of b(F)/c(F) pi_F(T) |W(F)|.
// Index families are grouped by the sorted tail multiset of each factor,
// which fixes the arc multiset, before walks are counted.
Rational trace_d(const Tensor<Rational>& t, int d, const TraceBudget& budget = {});

// Closed forms for Tr_t of the Laplacian (or signless Laplacian), t <= k.
Rational laplacian_trace_formula(const Hypergraph& h, int t, bool signless);

}  // namespace hyperspec
