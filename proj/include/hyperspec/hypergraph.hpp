#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperspec/scalar.hpp"

namespace hyperspec {

// Vertices are 0-based in memory. The HGF text format and every
// human-facing report use 1-based labels.
using Vertex = int;
using Edge = std::vector<Vertex>;

// A simple k-uniform hypergraph in canonical form: every edge holds k
// distinct vertices sorted ascending, and the edge list is sorted
// lexicographically with no duplicates.
class Hypergraph {
 public:
  Hypergraph(int k, int n, std::vector<Edge> edges);

  static Hypergraph edgeless(int k, int n) { return Hypergraph(k, n, {}); }

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // Indices into edges() of the edges containing v, ascending.
  const std::vector<std::size_t>& incident(Vertex v) const { return incidence_[v]; }

  std::optional<std::size_t> find_edge(Edge e) const;
  bool has_edge(const Edge& e) const { return find_edge(e).has_value(); }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
};

class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees) : d_(std::move(degrees)) {}

  std::size_t size() const { return d_.size(); }
  int operator[](std::size_t i) const { return d_[i]; }
  auto begin() const { return d_.begin(); }
  auto end() const { return d_.end(); }
  const std::vector<int>& values() const { return d_; }

  long long sum() const;
  int max() const;
  // Common degree when every vertex has the same degree.
  std::optional<int> regular_degree() const;

 private:
  std::vector<int> d_;
};

// HGF: "k n m" header, then m lines of k 1-based vertices. Lines starting
// with '#' and blank lines are skipped; CRLF is accepted.
Hypergraph parse_hgf(std::istream& in);
Hypergraph parse_hgf(std::string_view text);
std::string to_hgf(const Hypergraph& h);

DegreeSequence degrees(const Hypergraph& h);

// Sum over vertices of d_i^s.
BigInt degree_power_sum(const Hypergraph& h, int s);

// Connectivity of the vertex-edge incidence graph over all n vertices.
bool is_connected(const Hypergraph& h);

// Vertex sets of the connected components, each ascending; isolated
// vertices form singleton components.
std::vector<std::vector<Vertex>> connected_components(const Hypergraph& h);

// Vertices of degree one.
std::vector<Vertex> core_vertices(const Hypergraph& h);

// A hypergraph on a vertex subset, renumbered consecutively.
struct Relabeled {
  Hypergraph graph;
  std::vector<Vertex> original;             // new -> old
  std::vector<std::optional<Vertex>> image;  // old -> new
};

// Keeps the edges lying entirely inside `vertices`.
Relabeled induced_subhypergraph(const Hypergraph& h, std::span<const Vertex> vertices);

// H - e: drops e and the core vertices of e, renumbering the survivors.
Relabeled remove_edge_with_cores(const Hypergraph& h, const Edge& e);

// The k-th power of a graph: each edge {i,j} gains k-2 fresh core vertices,
// numbered from n upward in lexicographic edge order.
Hypergraph power_hypergraph(const Hypergraph& g, int k);

// Core vertices that power_hypergraph attached to edge `edge_index` of g.
std::vector<Vertex> power_core_vertices(const Hypergraph& g, int k, std::size_t edge_index);

}  // namespace hyperspec
