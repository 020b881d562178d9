#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor.hpp"

namespace testsupport {

using hyperspec::Edge;
using hyperspec::Hypergraph;
using hyperspec::Rational;

inline Hypergraph graph(int n, std::vector<Edge> edges) { return Hypergraph(2, n, std::move(edges)); }

inline Hypergraph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return graph(n, e);
}

inline Hypergraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return graph(n, e);
}

inline Hypergraph star(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return graph(n, e);
}

inline Hypergraph complete(int k, int n) {
  std::vector<Edge> edges;
  std::vector<int> pick(n, 0);
  std::fill(pick.end() - k, pick.end(), 1);
  do {
    Edge e;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) e.push_back(i);
    }
    edges.push_back(e);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return Hypergraph(k, n, edges);
}

// Tree from a Pruefer sequence over n >= 2 vertices.
inline Hypergraph pruefer_tree(int n, const std::vector<int>& seq) {
  std::vector<int> deg(n, 1);
  for (int v : seq) ++deg[v];
  std::vector<Edge> edges;
  for (int v : seq) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    edges.push_back({leaf, v});
    --deg[leaf];
    --deg[v];
  }
  std::vector<int> rest;
  for (int u = 0; u < n; ++u) {
    if (deg[u] == 1) rest.push_back(u);
  }
  edges.push_back({rest[0], rest[1]});
  return graph(n, edges);
}

// m distinct random k-subsets of [n].
inline Hypergraph random_hypergraph(std::mt19937_64& rng, int k, int n, int m) {
  std::set<Edge> edges;
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  int guard = 0;
  while (static_cast<int>(edges.size()) < m && guard++ < 10000) {
    std::shuffle(verts.begin(), verts.end(), rng);
    Edge e(verts.begin(), verts.begin() + k);
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  return Hypergraph(k, n, std::vector<Edge>(edges.begin(), edges.end()));
}

inline hyperspec::Tensor<Rational> random_tensor(std::mt19937_64& rng, int k, int n, int lo, int hi, int den = 1) {
  std::uniform_int_distribution<int> dist(lo, hi);
  hyperspec::Tensor<Rational> t(k, n);
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = Rational(dist(rng), den);
    t[i].canonicalize();
  }
  return t;
}

}  // namespace testsupport
