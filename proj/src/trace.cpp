#include "hyperspec/trace.hpp"

#include <algorithm>
#include <unordered_map>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

struct WalkCounter {
  std::vector<int> tail, head, mult;
  std::vector<std::vector<int>> out;  // arc types leaving each vertex
  std::vector<std::uint64_t> radix;
  int nv = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;

  std::uint64_t encode(const std::vector<int>& rem) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < rem.size(); ++i) key += radix[i] * static_cast<std::uint64_t>(rem[i]);
    return key;
  }

  std::uint64_t run(int v, std::vector<int>& rem, int left) {
    if (left == 0) return 1;
    const std::uint64_t key = encode(rem) * static_cast<std::uint64_t>(nv) + static_cast<std::uint64_t>(v);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int a : out[v]) {
      if (rem[a] == 0) continue;
      --rem[a];
      total += run(head[a], rem, left - 1);
      ++rem[a];
    }
    memo.emplace(key, total);
    return total;
  }
};

bool balanced_and_connected(const ArcMultiset& arcs, const std::map<int, int>& ids) {
  const int nv = static_cast<int>(ids.size());
  std::vector<int> balance(nv, 0);
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [arc, mult] : arcs) {
    const int a = ids.at(arc.first), b = ids.at(arc.second);
    balance[a] += mult;
    balance[b] -= mult;
    parent[find(a)] = find(b);
  }
  for (int i = 0; i < nv; ++i) {
    if (balance[i] != 0 || find(i) != find(0)) return false;
  }
  return true;
}

BigInt arc_factorials(const ArcMultiset& arcs) {
  BigInt b = 1;
  for (const auto& [arc, mult] : arcs) b *= factorial(static_cast<unsigned long>(mult));
  return b;
}

BigInt outdegree_factorials(const ArcMultiset& arcs) {
  std::map<int, int> outdeg;
  for (const auto& [arc, mult] : arcs) outdeg[arc.first] += mult;
  BigInt c = 1;
  for (const auto& [v, d] : outdeg) c *= factorial(static_cast<unsigned long>(d));
  return c;
}

}  // namespace

Rational TraceTerm::contribution() const {
  Rational r(b, c);
  r.canonicalize();
  return r * pi * Rational(BigInt(static_cast<unsigned long>(walks)));
}

void check_trace_budget(const Tensor<Rational>& t, int d, const TraceBudget& budget) {
  if (d < 1) throw PreconditionError("trace order must be at least 1");
  if (t.order() < 2) throw PreconditionError("trace needs tensor order at least 2");
  if (t.dim() > budget.max_dim) {
    throw BudgetExceeded("trace enumeration limited to dimension " + std::to_string(budget.max_dim));
  }
  if (static_cast<long>(d) * (t.order() - 1) > budget.max_arcs) {
    throw BudgetExceeded("trace enumeration limited to d(k-1) <= " + std::to_string(budget.max_arcs));
  }
}

ArcMultiset arc_multiset(std::span<const std::vector<int>> factors) {
  ArcMultiset arcs;
  for (const auto& f : factors) {
    for (std::size_t j = 1; j < f.size(); ++j) ++arcs[{f[0], f[j]}];
  }
  return arcs;
}

std::uint64_t count_closed_walks(const ArcMultiset& arcs) {
  if (arcs.empty()) throw PreconditionError("arc multiset is empty");
  std::map<int, int> ids;
  for (const auto& [arc, mult] : arcs) {
    if (mult < 1) throw PreconditionError("arc multiplicity must be positive");
    ids.emplace(arc.first, 0);
    ids.emplace(arc.second, 0);
  }
  int next = 0;
  for (auto& [v, id] : ids) id = next++;
  if (!balanced_and_connected(arcs, ids)) return 0;

  WalkCounter w;
  w.nv = next;
  w.out.resize(next);
  std::uint64_t r = 1;
  int total = 0;
  for (const auto& [arc, mult] : arcs) {
    const int a = static_cast<int>(w.tail.size());
    w.tail.push_back(ids[arc.first]);
    w.head.push_back(ids[arc.second]);
    w.mult.push_back(mult);
    w.out[ids[arc.first]].push_back(a);
    w.radix.push_back(r);
    r *= static_cast<std::uint64_t>(mult + 1);
    total += mult;
  }
  // Ending vertex is forced once every arc is used, so only the first
  // arc has to be fixed.
  std::vector<int> rem = w.mult;
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < rem.size(); ++a) {
    --rem[a];
    count += w.run(w.head[a], rem, total - 1);
    ++rem[a];
  }
  return count;
}

void enumerate_trace_terms(const Tensor<Rational>& t, int d,
                           const std::function<void(const TraceTerm&)>& visit,
                           const TraceBudget& budget) {
  check_trace_budget(t, d, budget);
  const int n = t.dim(), k = t.order();
  std::vector<std::vector<std::size_t>> rows(n);
  for (std::size_t flat : t.nonzeros()) rows[flat / t.row_size()].push_back(flat);

  std::vector<std::size_t> chosen;
  std::vector<int> occ(n, 0);
  auto deficit = [&] {
    int s = 0;
    for (int c : occ) s += (k - c % k) % k;
    return s;
  };

  std::function<void(int)> rec = [&](int row_min) {
    const int left = d - static_cast<int>(chosen.size());
    if (deficit() > k * left) return;
    if (left == 0) {
      TraceTerm term;
      term.pi = 1;
      for (std::size_t flat : chosen) {
        term.factors.push_back(t.indices(flat));
        term.pi *= t[flat];
      }
      term.arcs = arc_multiset(term.factors);
      term.b = arc_factorials(term.arcs);
      term.c = outdegree_factorials(term.arcs);
      term.walks = count_closed_walks(term.arcs);
      visit(term);
      return;
    }
    for (int r = row_min; r < n; ++r) {
      for (std::size_t flat : rows[r]) {
        const auto idx = t.indices(flat);
        for (int v : idx) ++occ[v];
        chosen.push_back(flat);
        rec(r);
        chosen.pop_back();
        for (int v : idx) --occ[v];
      }
    }
  };
  rec(0);
}

std::vector<TraceTerm> collect_trace_terms(const Tensor<Rational>& t, int d, const TraceBudget& budget) {
  std::vector<TraceTerm> out;
  enumerate_trace_terms(t, d, [&](const TraceTerm& term) { out.push_back(term); }, budget);
  return out;
}

Rational trace_d(const Tensor<Rational>& t, int d, const TraceBudget& budget) {
  check_trace_budget(t, d, budget);
  const int n = t.dim(), k = t.order();

  // Entry classes: (row, sorted tail multiset) with summed weight.
  struct EntryClass {
    int row;
    std::vector<int> tails;
    Rational weight;
  };
  std::vector<EntryClass> classes;
  {
    std::vector<std::map<std::vector<int>, Rational>> grouped(n);
    for (std::size_t flat : t.nonzeros()) {
      auto idx = t.indices(flat);
      std::vector<int> tails(idx.begin() + 1, idx.end());
      std::sort(tails.begin(), tails.end());
      grouped[idx[0]][tails] += t[flat];
    }
    for (int i = 0; i < n; ++i) {
      for (auto& [tails, w] : grouped[i]) {
        if (!is_zero(w)) classes.push_back({i, tails, w});
      }
    }
  }

  std::vector<int> occ(n, 0), bal(n, 0);
  std::vector<int> picks;  // class indices, nondecreasing
  Rational sum = 0;

  auto finish = [&] {
    // Orderings of the picks within each row block that give distinct F.
    BigInt orderings = 1;
    Rational weight = 1;
    std::size_t i = 0;
    while (i < picks.size()) {
      const int row = classes[picks[i]].row;
      std::size_t j = i;
      int block = 0;
      BigInt denom = 1;
      while (j < picks.size() && classes[picks[j]].row == row) {
        std::size_t l = j;
        while (l < picks.size() && picks[l] == picks[j]) ++l;
        denom *= factorial(static_cast<unsigned long>(l - j));
        block += static_cast<int>(l - j);
        j = l;
      }
      orderings *= factorial(static_cast<unsigned long>(block)) / denom;
      i = j;
    }
    ArcMultiset arcs;
    for (int p : picks) {
      weight *= classes[p].weight;
      for (int v : classes[p].tails) ++arcs[{classes[p].row, v}];
    }
    const std::uint64_t walks = count_closed_walks(arcs);
    if (walks == 0) return;
    Rational bc(arc_factorials(arcs), outdegree_factorials(arcs));
    bc.canonicalize();
    sum += bc * weight * Rational(orderings) * Rational(BigInt(static_cast<unsigned long>(walks)));
  };

  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    const int left = d - static_cast<int>(picks.size());
    int def = 0, imb = 0;
    for (int v = 0; v < n; ++v) {
      def += (k - occ[v] % k) % k;
      imb += std::abs(bal[v]);
    }
    if (def > k * left || imb > 2 * (k - 1) * left) return;
    if (left == 0) {
      finish();
      return;
    }
    for (std::size_t c = from; c < classes.size(); ++c) {
      const auto& cl = classes[c];
      ++occ[cl.row];
      bal[cl.row] += k - 1;
      for (int v : cl.tails) {
        ++occ[v];
        --bal[v];
      }
      picks.push_back(static_cast<int>(c));
      rec(c);
      picks.pop_back();
      for (int v : cl.tails) {
        --occ[v];
        ++bal[v];
      }
      bal[cl.row] -= k - 1;
      --occ[cl.row];
    }
  };
  rec(0);
  return rational_pow(Rational(k - 1), n - 1) * sum;
}

Rational laplacian_trace_formula(const Hypergraph& h, int t, bool signless) {
  const int k = h.k(), n = h.n();
  if (t < 1 || t > k) throw PreconditionError("trace formula holds for 1 <= t <= k");
  Rational out = rational_pow(Rational(k - 1), n - 1) * Rational(degree_power_sum(h, t));
  if (t == k) {
    Rational edge_term = rational_pow(Rational(k), k - 1) * rational_pow(Rational(k - 1), n - k) *
                         Rational(static_cast<long>(h.m()));
    if (!signless && k % 2 == 1) edge_term = -edge_term;
    out += edge_term;
  }
  return out;
}

}  // namespace hyperspec
