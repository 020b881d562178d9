#include "hyperspec/modular.hpp"

#include <algorithm>
#include <utility>

#include "hyperspec/error.hpp"

namespace hyperspec {

bool Gf2Row::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::optional<Gf2Solution> solve_gf2(std::vector<Gf2Row> rows, std::vector<bool> rhs, int nvars) {
  if (rows.size() != rhs.size()) throw PreconditionError("row and right-hand side counts differ");
  const int m = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < nvars && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (rows[r].get(col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(rhs[rank], rhs[pivot]);
    for (int r = 0; r < m; ++r) {
      if (r != rank && rows[r].get(col)) {
        rows[r] ^= rows[rank];
        rhs[r] = rhs[r] != rhs[rank];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < m; ++r) {
    if (rhs[r]) return std::nullopt;
  }

  Gf2Solution out{Gf2Row(nvars), {}};
  std::vector<bool> is_pivot(nvars, false);
  for (int r = 0; r < rank; ++r) {
    is_pivot[pivot_col[r]] = true;
    out.particular.set(pivot_col[r], rhs[r]);
  }
  for (int free = 0; free < nvars; ++free) {
    if (is_pivot[free]) continue;
    Gf2Row v(nvars);
    v.set(free, true);
    for (int r = 0; r < rank; ++r) {
      if (rows[r].get(free)) v.set(pivot_col[r], true);
    }
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

namespace {

using Int = long long;

Int mod(Int x, Int q) {
  x %= q;
  return x < 0 ? x + q : x;
}

Int inverse_mod(Int a, Int q) {
  Int g = q, x = 0, x1 = 1, a1 = mod(a, q);
  while (a1 != 0) {
    const Int t = g / a1;
    std::swap(g, a1);
    a1 -= t * g;
    std::swap(x, x1);
    x1 -= t * x;
  }
  if (g != 1) throw PreconditionError("element is not invertible");
  return mod(x, q);
}

struct PrimePower {
  Int p;
  int a;
  Int q;
};

std::vector<PrimePower> factor(Int modulus) {
  std::vector<PrimePower> out;
  for (Int p = 2; p * p <= modulus; ++p) {
    if (modulus % p) continue;
    PrimePower pp{p, 0, 1};
    while (modulus % p == 0) {
      modulus /= p;
      ++pp.a;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (modulus > 1) out.push_back({modulus, 1, modulus});
  return out;
}

int valuation(Int x, const PrimePower& pp) {
  if (x == 0) return pp.a;
  int v = 0;
  while (x % pp.p == 0) {
    x /= pp.p;
    ++v;
  }
  return v;
}

Int ipow(Int base, int e) {
  Int out = 1;
  while (e-- > 0) out *= base;
  return out;
}

// Solves over Z/p^a. Every element is a unit times a power of p, so the entry
// of least valuation divides its whole row and column.
std::optional<std::vector<Int>> solve_local(std::vector<std::vector<Int>> a, std::vector<Int> b,
                                            int nvars, const PrimePower& pp) {
  const Int q = pp.q;
  const int m = static_cast<int>(a.size());
  for (auto& row : a) {
    for (Int& x : row) x = mod(x, q);
  }
  for (Int& x : b) x = mod(x, q);
  std::vector<std::vector<Int>> basis(nvars, std::vector<Int>(nvars, 0));
  for (int i = 0; i < nvars; ++i) basis[i][i] = 1;

  int rank = 0;
  while (rank < m && rank < nvars) {
    int best_v = pp.a, bi = -1, bj = -1;
    for (int i = rank; i < m && best_v > 0; ++i) {
      for (int j = rank; j < nvars; ++j) {
        if (a[i][j] == 0) continue;
        const int v = valuation(a[i][j], pp);
        if (v < best_v) {
          best_v = v;
          bi = i;
          bj = j;
          if (v == 0) break;
        }
      }
    }
    if (bi < 0) break;
    std::swap(a[rank], a[bi]);
    std::swap(b[rank], b[bi]);
    if (bj != rank) {
      for (auto& row : a) std::swap(row[rank], row[bj]);
      for (auto& row : basis) std::swap(row[rank], row[bj]);
    }
    const Int scale = ipow(pp.p, best_v);
    const Int unit_inv = inverse_mod(a[rank][rank] / scale, q);
    for (int i = rank + 1; i < m; ++i) {
      if (a[i][rank] == 0) continue;
      const Int t = mod((a[i][rank] / scale) * unit_inv, q);
      for (int j = rank; j < nvars; ++j) a[i][j] = mod(a[i][j] - t * a[rank][j], q);
      b[i] = mod(b[i] - t * b[rank], q);
    }
    for (int j = rank + 1; j < nvars; ++j) {
      if (a[rank][j] == 0) continue;
      const Int t = mod((a[rank][j] / scale) * unit_inv, q);
      for (int i = 0; i < m; ++i) a[i][j] = mod(a[i][j] - t * a[i][rank], q);
      for (int i = 0; i < nvars; ++i) basis[i][j] = mod(basis[i][j] - t * basis[i][rank], q);
    }
    ++rank;
  }

  std::vector<Int> y(nvars, 0);
  for (int i = 0; i < rank; ++i) {
    const int v = valuation(a[i][i], pp);
    if (b[i] != 0 && valuation(b[i], pp) < v) return std::nullopt;
    const Int scale = ipow(pp.p, v);
    y[i] = mod((b[i] / scale) * inverse_mod(a[i][i] / scale, q), q);
  }
  for (int i = rank; i < m; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Int> x(nvars, 0);
  for (int i = 0; i < nvars; ++i) {
    Int s = 0;
    for (int j = 0; j < nvars; ++j) s = mod(s + basis[i][j] * y[j], q);
    x[i] = s;
  }
  return x;
}

}  // namespace

std::optional<std::vector<int>> solve_mod(const std::vector<std::vector<int>>& a,
                                          const std::vector<int>& b, int nvars, int modulus) {
  if (modulus < 2) throw PreconditionError("modulus must be at least 2");
  if (a.size() != b.size()) throw PreconditionError("row and right-hand side counts differ");
  std::vector<std::vector<Int>> wide(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (static_cast<int>(a[i].size()) != nvars) throw PreconditionError("row length mismatch");
    wide[i].assign(a[i].begin(), a[i].end());
  }
  std::vector<Int> rhs(b.begin(), b.end());

  std::vector<Int> x(nvars, 0);
  Int combined_mod = 1;
  for (const PrimePower& pp : factor(modulus)) {
    auto local = solve_local(wide, rhs, nvars, pp);
    if (!local) return std::nullopt;
    // x = x mod M, local mod q  ->  x mod M*q
    const Int inv = inverse_mod(combined_mod % pp.q, pp.q);
    for (int i = 0; i < nvars; ++i) {
      const Int t = mod(((*local)[i] - x[i]) * inv, pp.q);
      x[i] += combined_mod * t;
    }
    combined_mod *= pp.q;
  }
  return std::vector<int>(x.begin(), x.end());
}

}  // namespace hyperspec
