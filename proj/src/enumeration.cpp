#include "hyperspec/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <unordered_map>

#include "hyperspec/error.hpp"
#include "hyperspec/witness.hpp"

namespace hyperspec {

namespace {

constexpr int kMaxVertices = 16;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Colors = std::array<int, kMaxVertices>;

class Canonizer {
 public:
  Canonizer(const EdgeSlots& slots, std::uint64_t mask) : slots_(slots), n_(slots.n()) {
    for (std::uint64_t m = mask; m != 0; m &= m - 1) edges_.push_back(slots.vertex_mask(std::countr_zero(m)));
    Colors col{};
    std::array<std::uint64_t, kMaxVertices> deg{};
    for (std::uint32_t e : edges_) {
      for (std::uint32_t b = e; b != 0; b &= b - 1) ++deg[std::countr_zero(b)];
    }
    rank(col, [&](int v) { return std::pair<int, std::uint64_t>(0, deg[v]); });
    search(col);
  }

  CanonicalForm result() const { return {best_, count_}; }

 private:
  template <class Key>
  int rank(Colors& col, Key key) const {
    std::array<int, kMaxVertices> order{};
    std::iota(order.begin(), order.begin() + n_, 0);
    std::array<std::pair<int, std::uint64_t>, kMaxVertices> keys{};
    for (int v = 0; v < n_; ++v) keys[v] = key(v);
    std::sort(order.begin(), order.begin() + n_, [&](int a, int b) { return keys[a] < keys[b]; });
    int distinct = 0;
    for (int i = 0; i < n_; ++i) {
      if (i == 0 || keys[order[i]] != keys[order[i - 1]]) {
        ++distinct;
        col[order[i]] = i;
      } else {
        col[order[i]] = col[order[i - 1]];
      }
    }
    return distinct;
  }

  int refine(Colors& col) const {
    int cells = rank(col, [&](int v) { return std::pair<int, std::uint64_t>(col[v], 0); });
    while (cells < n_) {
      std::array<std::uint64_t, kMaxVertices> h{};
      for (std::uint32_t e : edges_) {
        std::uint64_t total = 0;
        for (std::uint32_t b = e; b != 0; b &= b - 1) total += mix(static_cast<std::uint64_t>(col[std::countr_zero(b)]));
        for (std::uint32_t b = e; b != 0; b &= b - 1) {
          const int v = std::countr_zero(b);
          h[v] += mix(total - mix(static_cast<std::uint64_t>(col[v])));
        }
      }
      const Colors old = col;
      const int next = rank(col, [&](int v) { return std::pair<int, std::uint64_t>(old[v], h[v]); });
      if (next == cells) break;
      cells = next;
    }
    return cells;
  }

  void search(Colors col) {
    if (refine(col) == n_) {
      const std::uint64_t img = slots_.permute_bits(edges_, col);
      if (count_ == 0 || img > best_) {
        best_ = img;
        count_ = 1;
      } else if (img == best_) {
        ++count_;
      }
      return;
    }
    // Smallest nontrivial cell, lowest color first.
    std::array<int, kMaxVertices> size{};
    for (int v = 0; v < n_; ++v) ++size[col[v]];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    }
    for (int v = 0; v < n_; ++v) {
      if (col[v] != target) continue;
      Colors next = col;
      for (int u = 0; u < n_; ++u) {
        if (u != v && col[u] == target) next[u] = target + 1;
      }
      search(next);
    }
  }

  const EdgeSlots& slots_;
  int n_;
  std::vector<std::uint32_t> edges_;
  std::uint64_t best_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace

EdgeSlots::EdgeSlots(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n < 0 || n > kMaxVertices) throw PreconditionError("edge slots need 1 <= k and n <= 16");
  slot_of_.assign(std::size_t{1} << n, -1);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) == k) vertex_masks_.push_back(m);
  }
  // Lexicographic order of sorted vertex tuples.
  auto tuple = [](std::uint32_t m) {
    std::vector<int> t;
    for (; m != 0; m &= m - 1) t.push_back(std::countr_zero(m));
    return t;
  };
  std::sort(vertex_masks_.begin(), vertex_masks_.end(),
            [&](std::uint32_t a, std::uint32_t b) { return tuple(a) < tuple(b); });
  if (vertex_masks_.size() > 64) throw BudgetExceeded("more than 64 edge slots");
  for (std::size_t s = 0; s < vertex_masks_.size(); ++s) slot_of_[vertex_masks_[s]] = static_cast<int>(s);
}

std::uint64_t EdgeSlots::full_mask() const {
  return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

Hypergraph EdgeSlots::to_hypergraph(std::uint64_t mask) const {
  std::vector<Edge> edges;
  for (; mask != 0; mask &= mask - 1) {
    Edge e;
    for (std::uint32_t b = vertex_masks_[std::countr_zero(mask)]; b != 0; b &= b - 1) e.push_back(std::countr_zero(b));
    edges.push_back(std::move(e));
  }
  return Hypergraph(k_, n_, std::move(edges));
}

std::uint64_t EdgeSlots::to_mask(const Hypergraph& h) const {
  if (h.k() != k_ || h.n() != n_) throw PreconditionError("hypergraph does not match the slot space");
  std::uint64_t mask = 0;
  for (const Edge& e : h.edges()) {
    std::uint32_t m = 0;
    for (Vertex v : e) m |= std::uint32_t{1} << v;
    mask |= std::uint64_t{1} << slot_of_[m];
  }
  return mask;
}

std::uint64_t EdgeSlots::permute(std::uint64_t mask, std::span<const int> perm) const {
  std::vector<std::uint32_t> edges;
  for (; mask != 0; mask &= mask - 1) edges.push_back(vertex_masks_[std::countr_zero(mask)]);
  return permute_bits(edges, perm);
}

std::uint64_t EdgeSlots::permute_bits(std::span<const std::uint32_t> edges, std::span<const int> perm) const {
  std::uint64_t out = 0;
  for (std::uint32_t e : edges) {
    std::uint32_t img = 0;
    for (; e != 0; e &= e - 1) img |= std::uint32_t{1} << perm[std::countr_zero(e)];
    out |= std::uint64_t{1} << slot_of_[img];
  }
  return out;
}

CanonicalForm canonical_form(const EdgeSlots& slots, std::uint64_t mask) {
  return Canonizer(slots, mask).result();
}

void check_enumeration_budget(int k, int n, const EnumerationBudget& budget) {
  if (k < 2) throw PreconditionError("enumeration needs k >= 2");
  if (n < 1) throw PreconditionError("enumeration needs at least one vertex");
  if (k > budget.max_k || n > budget.max_n) {
    throw BudgetExceeded("enumeration limited to k <= " + std::to_string(budget.max_k) + " and n <= " +
                         std::to_string(budget.max_n));
  }
  if (binomial(n, static_cast<unsigned long>(k)) > budget.max_slots) {
    throw BudgetExceeded("enumeration limited to C(n,k) <= " + std::to_string(budget.max_slots) + " edge slots");
  }
}

EnumerationStats enumerate_classes(int k, int n,
                                   const std::function<void(std::uint64_t, std::uint64_t)>& visit,
                                   const EnumerationBudget& budget) {
  check_enumeration_budget(k, n, budget);
  const EdgeSlots slots(k, n);
  const int total = slots.size();
  const int half = total / 2;

  using Level = std::vector<std::pair<std::uint64_t, std::uint64_t>>;  // (canonical mask, |Aut|)
  std::vector<Level> levels(half + 1);
  levels[0].push_back({0, canonical_form(slots, 0).automorphisms});
  for (int m = 1; m <= half; ++m) {
    std::unordered_map<std::uint64_t, std::uint64_t> seen;
    seen.reserve(levels[m - 1].size() * 4);
    for (const auto& [rep, aut] : levels[m - 1]) {
      for (std::uint64_t free = slots.full_mask() & ~rep; free != 0; free &= free - 1) {
        const auto cf = canonical_form(slots, rep | (free & -free));
        seen.emplace(cf.mask, cf.automorphisms);
      }
    }
    levels[m].assign(seen.begin(), seen.end());
    std::sort(levels[m].begin(), levels[m].end());
  }

  EnumerationStats stats;
  stats.classes_per_level.assign(total + 1, 0);
  stats.orbit_sum = 0;
  const BigInt group = factorial(static_cast<unsigned long>(n));
  for (int m = 0; m <= total; ++m) {
    const bool mirrored = m > half;
    for (const auto& [rep, aut] : levels[mirrored ? total - m : m]) {
      const std::uint64_t mask = mirrored ? slots.full_mask() & ~rep : rep;
      ++stats.classes_per_level[m];
      ++stats.classes;
      stats.orbit_sum += group / BigInt(static_cast<unsigned long>(aut));
      visit(mask, aut);
    }
  }
  return stats;
}

BigInt burnside_class_count(int k, int n) {
  const EdgeSlots slots(k, n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt sum = 0;
  std::vector<char> seen(slots.size());
  do {
    std::fill(seen.begin(), seen.end(), 0);
    unsigned long cycles = 0;
    for (int s = 0; s < slots.size(); ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (int t = s; !seen[t];) {
        seen[t] = 1;
        std::uint32_t img = 0;
        for (std::uint32_t b = slots.vertex_mask(t); b != 0; b &= b - 1) img |= std::uint32_t{1} << perm[std::countr_zero(b)];
        t = slots.slot_of(img);
      }
    }
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), 2, cycles);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / factorial(static_cast<unsigned long>(n));
}

ConjectureSurvey conjecture_survey(int k, int nmax, const PowerOptions& opts, const EnumerationBudget& budget) {
  check_enumeration_budget(k, nmax, budget);
  const EdgeSlots slots(k, nmax);
  ConjectureSurvey survey;
  survey.stats = enumerate_classes(
      k, nmax,
      [&](std::uint64_t mask, std::uint64_t) {
        if (mask == 0) return;
        std::uint32_t covered = 0;
        for (std::uint64_t m = mask; m != 0; m &= m - 1) covered |= slots.vertex_mask(std::countr_zero(m));
        std::vector<Vertex> vs;
        for (std::uint32_t b = covered; b != 0; b &= b - 1) vs.push_back(std::countr_zero(b));
        const Hypergraph h = induced_subhypergraph(slots.to_hypergraph(mask), vs).graph;
        if (!is_connected(h)) return;
        const ProbeReport p = conjecture_probe(h, opts);
        ++survey.instances;
        ++survey.instances_by_order[h.n()];
        survey.cond1 += p.odd_bipartite ? 1 : 0;
        survey.cond4 += p.half_sum ? 1 : 0;
        survey.cond2_witnessed += p.null_verified ? 1 : 0;
        survey.cond3_witnessed += p.neg_rho_verified ? 1 : 0;
        survey.one_not_four += p.odd_bipartite && !p.half_sum ? 1 : 0;
        if (p.specimen()) survey.specimens.push_back(h);
      },
      budget);
  survey.expected_classes = burnside_class_count(k, nmax);
  BigInt all;
  mpz_ui_pow_ui(all.get_mpz_t(), 2, static_cast<unsigned long>(slots.size()));
  survey.exhaustive = BigInt(static_cast<unsigned long>(survey.stats.classes)) == survey.expected_classes &&
                      survey.stats.orbit_sum == all;
  return survey;
}

}  // namespace hyperspec
