#include "hyperspec/labeling.hpp"

#include <algorithm>

#include "hyperspec/error.hpp"
#include "hyperspec/modular.hpp"

namespace hyperspec {

bool is_valid_labeling(const Hypergraph& h, const Labeling& f) {
  if (static_cast<int>(f.values.size()) != h.n()) return false;
  const int k = h.k();
  if (f.kind == LabelingKind::HalfSum) {
    if (k % 2 != 0) return false;
    for (int v : f.values) {
      if (v < 0 || v >= k) return false;
    }
    for (const Edge& e : h.edges()) {
      long long sum = 0;
      for (Vertex v : e) sum += f.values[v];
      if (sum % k != k / 2) return false;
    }
    return true;
  }
  int ones = 0;
  for (int v : f.values) {
    if (v != 0 && v != 1) return false;
    ones += v;
  }
  if (ones == 0 || ones == h.n()) return false;
  for (const Edge& e : h.edges()) {
    int hits = 0;
    for (Vertex v : e) hits += f.values[v];
    if (hits % 2 == 0) return false;
  }
  return true;
}

std::vector<Vertex> odd_part(const Labeling& f) {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] == 1) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

Labeling bipartition_from_set(const Hypergraph& h, std::span<const Vertex> v1) {
  Labeling f{LabelingKind::OddBipartition, std::vector<int>(h.n(), 0)};
  for (Vertex v : v1) {
    if (v < 0 || v >= h.n()) throw PreconditionError("vertex out of range in V1");
    f.values[v] = 1;
  }
  return f;
}

std::optional<Labeling> find_odd_bipartition(const Hypergraph& h) {
  const int n = h.n();
  if (n < 2) return std::nullopt;
  std::vector<Gf2Row> rows;
  rows.reserve(h.m());
  for (const Edge& e : h.edges()) {
    Gf2Row row(n);
    for (Vertex v : e) row.set(v, true);
    rows.push_back(std::move(row));
  }
  auto solution = solve_gf2(std::move(rows), std::vector<bool>(h.m(), true), n);
  if (!solution) return std::nullopt;

  auto proper = [n](const Gf2Row& x) {
    Gf2Row complement = x;
    for (int i = 0; i < n; ++i) complement.flip(i);
    return x.any() && complement.any();
  };
  auto to_labeling = [n](const Gf2Row& x) {
    Labeling f{LabelingKind::OddBipartition, std::vector<int>(n, 0)};
    for (int i = 0; i < n; ++i) f.values[i] = x.get(i) ? 1 : 0;
    return f;
  };
  // At most two points of the affine solution space are improper, so the
  // particular solution or one basis shift of it is always proper if any is.
  if (proper(solution->particular)) return to_labeling(solution->particular);
  for (const Gf2Row& dir : solution->nullspace) {
    Gf2Row x = solution->particular;
    x ^= dir;
    if (proper(x)) return to_labeling(x);
  }
  return std::nullopt;
}

std::optional<Labeling> find_half_sum_labeling(const Hypergraph& h) {
  const int k = h.k();
  if (k % 2 != 0) return std::nullopt;
  std::vector<std::vector<int>> a;
  a.reserve(h.m());
  for (const Edge& e : h.edges()) {
    std::vector<int> row(h.n(), 0);
    for (Vertex v : e) row[v] = 1;
    a.push_back(std::move(row));
  }
  auto x = solve_mod(a, std::vector<int>(h.m(), k / 2), h.n(), k);
  if (!x) return std::nullopt;
  return Labeling{LabelingKind::HalfSum, std::move(*x)};
}

std::optional<Labeling> brute_force_half_sum_labeling(const Hypergraph& h) {
  const int k = h.k();
  if (k % 2 != 0) return std::nullopt;
  Labeling f{LabelingKind::HalfSum, std::vector<int>(h.n(), 0)};
  while (true) {
    if (is_valid_labeling(h, f)) return f;
    int i = 0;
    while (i < h.n() && ++f.values[i] == k) f.values[i++] = 0;
    if (i == h.n()) return std::nullopt;
  }
}

Labeling half_sum_from_bipartition(const Hypergraph& h, const Labeling& bipartition) {
  if (h.k() % 2 != 0) throw PreconditionError("half-sum labelings need even k");
  if (!is_valid_labeling(h, bipartition) || bipartition.kind != LabelingKind::OddBipartition) {
    throw PreconditionError("not an odd bipartition");
  }
  Labeling f{LabelingKind::HalfSum, bipartition.values};
  for (int& v : f.values) v *= h.k() / 2;
  return f;
}

std::vector<Rational> bipartition_sign_vector(const Hypergraph& h, std::span<const Vertex> v1) {
  if (h.k() % 2 != 0) throw PreconditionError("sign vector witness requires even k");
  const Labeling f = bipartition_from_set(h, v1);
  if (!is_valid_labeling(h, f)) throw PreconditionError("V1 is not an odd bipartition of H");
  std::vector<Rational> x(h.n(), Rational(1));
  for (Vertex v : v1) x[v] = -1;
  return x;
}

}  // namespace hyperspec
