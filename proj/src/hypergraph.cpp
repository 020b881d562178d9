#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

std::string describe_edge(const Edge& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i] + 1);
  }
  return out + "}";
}

// Returns an error message or an empty string.
std::string check_edge(const Edge& sorted, int k, int n) {
  if (static_cast<int>(sorted.size()) != k) {
    return "edge " + describe_edge(sorted) + " has " + std::to_string(sorted.size()) +
           " vertices, expected " + std::to_string(k);
  }
  for (Vertex v : sorted) {
    if (v < 0 || v >= n) {
      return "vertex " + std::to_string(v + 1) + " out of range [1, " + std::to_string(n) + "]";
    }
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "duplicate vertex in edge " + describe_edge(sorted);
  }
  return {};
}

}  // namespace

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges)
    : k_(k), n_(n), edges_(std::move(edges)), incidence_(n > 0 ? n : 0) {
  if (k < 2) throw PreconditionError("edge size k must be at least 2");
  if (n < 0) throw PreconditionError("vertex count must be nonnegative");
  for (Edge& e : edges_) {
    std::sort(e.begin(), e.end());
    if (auto err = check_edge(e, k, n); !err.empty()) throw PreconditionError(err);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw PreconditionError("duplicate edge " + describe_edge(*dup));
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
  }
}

std::optional<std::size_t> Hypergraph::find_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

long long DegreeSequence::sum() const {
  return std::accumulate(d_.begin(), d_.end(), 0LL);
}

int DegreeSequence::max() const {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

std::optional<int> DegreeSequence::regular_degree() const {
  if (d_.empty()) return std::nullopt;
  if (std::all_of(d_.begin(), d_.end(), [&](int x) { return x == d_.front(); })) return d_.front();
  return std::nullopt;
}

Hypergraph parse_hgf(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      auto first = out.find_first_not_of(" \t");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto read_ints = [&](const std::string& text) {
    std::istringstream ss(text);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
      std::size_t pos = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size()) throw ParseError("expected an integer, got '" + tok + "'", line_no);
      out.push_back(value);
    }
    return out;
  };

  if (!next_line(line)) throw ParseError("missing header 'k n m'", line_no + 1);
  const auto header = read_ints(line);
  if (header.size() != 3) throw ParseError("header must be 'k n m'", line_no);
  const long long k = header[0], n = header[1], m = header[2];
  if (k < 2) throw ParseError("k must be at least 2", line_no);
  if (n < 0 || m < 0) throw ParseError("n and m must be nonnegative", line_no);

  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line)) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                       line_no + 1);
    }
    const auto values = read_ints(line);
    if (static_cast<long long>(values.size()) != k) {
      throw ParseError("edge has " + std::to_string(values.size()) + " vertices, expected " +
                           std::to_string(k),
                       line_no);
    }
    Edge e;
    for (long long v : values) {
      if (v < 1 || v > n) {
        throw ParseError("vertex " + std::to_string(v) + " out of range [1, " + std::to_string(n) +
                             "]",
                         line_no);
      }
      e.push_back(static_cast<Vertex>(v - 1));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError("duplicate vertex in edge " + describe_edge(e), line_no);
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (edges[j] == e) {
        throw ParseError("duplicate edge " + describe_edge(e) + " (first on line " +
                             std::to_string(edge_lines[j]) + ")",
                         line_no);
      }
    }
    edges.push_back(std::move(e));
    edge_lines.push_back(line_no);
  }
  if (next_line(line)) throw ParseError("unexpected content after the last edge", line_no);
  return Hypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

Hypergraph parse_hgf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hgf(in);
}

std::string to_hgf(const Hypergraph& h) {
  std::ostringstream out;
  out << h.k() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i] + 1;
    out << '\n';
  }
  return out.str();
}

DegreeSequence degrees(const Hypergraph& h) {
  std::vector<int> d(h.n());
  for (Vertex v = 0; v < h.n(); ++v) d[v] = static_cast<int>(h.incident(v).size());
  return DegreeSequence(std::move(d));
}

BigInt degree_power_sum(const Hypergraph& h, int s) {
  if (s < 1) throw PreconditionError("degree power must be at least 1");
  BigInt total = 0;
  for (int d : degrees(h)) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(s));
    total += term;
  }
  return total;
}

std::vector<std::vector<Vertex>> connected_components(const Hypergraph& h) {
  std::vector<int> comp(h.n(), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < h.n(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (std::size_t ei : h.incident(v)) {
        for (Vertex u : h.edge(ei)) {
          if (comp[u] < 0) {
            comp[u] = id;
            stack.push_back(u);
          }
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Hypergraph& h) { return connected_components(h).size() <= 1; }

std::vector<Vertex> core_vertices(const Hypergraph& h) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (h.incident(v).size() == 1) out.push_back(v);
  }
  return out;
}

Relabeled induced_subhypergraph(const Hypergraph& h, std::span<const Vertex> vertices) {
  std::vector<std::optional<Vertex>> image(h.n());
  std::vector<Vertex> original(vertices.begin(), vertices.end());
  std::sort(original.begin(), original.end());
  original.erase(std::unique(original.begin(), original.end()), original.end());
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i] < 0 || original[i] >= h.n()) throw PreconditionError("vertex out of range");
    image[original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return image[v].has_value(); })) {
      Edge mapped;
      for (Vertex v : e) mapped.push_back(*image[v]);
      edges.push_back(std::move(mapped));
    }
  }
  Hypergraph sub(h.k(), static_cast<int>(original.size()), std::move(edges));
  return {std::move(sub), std::move(original), std::move(image)};
}

Relabeled remove_edge_with_cores(const Hypergraph& h, const Edge& e) {
  const auto index = h.find_edge(e);
  if (!index) throw PreconditionError("edge " + describe_edge(e) + " is not an edge of H");
  std::vector<bool> drop(h.n(), false);
  for (Vertex v : h.edge(*index)) drop[v] = h.incident(v).size() == 1;

  std::vector<std::optional<Vertex>> image(h.n());
  std::vector<Vertex> original;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (!drop[v]) {
      image[v] = static_cast<Vertex>(original.size());
      original.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < h.m(); ++i) {
    if (i == *index) continue;
    Edge mapped;
    for (Vertex v : h.edge(i)) mapped.push_back(*image[v]);
    edges.push_back(std::move(mapped));
  }
  Hypergraph rest(h.k(), static_cast<int>(original.size()), std::move(edges));
  return {std::move(rest), std::move(original), std::move(image)};
}

Hypergraph power_hypergraph(const Hypergraph& g, int k) {
  if (g.k() != 2) throw PreconditionError("power hypergraph requires a 2-uniform input");
  if (k < 3) throw PreconditionError("power order must be at least 3");
  const int extra = k - 2;
  const int n = g.n() + extra * static_cast<int>(g.m());
  std::vector<Edge> edges;
  edges.reserve(g.m());
  for (std::size_t i = 0; i < g.m(); ++i) {
    Edge e = g.edge(i);
    for (int j = 0; j < extra; ++j) e.push_back(g.n() + extra * static_cast<int>(i) + j);
    edges.push_back(std::move(e));
  }
  return Hypergraph(k, n, std::move(edges));
}

std::vector<Vertex> power_core_vertices(const Hypergraph& g, int k, std::size_t edge_index) {
  if (edge_index >= g.m()) throw PreconditionError("edge index out of range");
  std::vector<Vertex> out;
  for (int j = 0; j < k - 2; ++j) {
    out.push_back(g.n() + (k - 2) * static_cast<int>(edge_index) + j);
  }
  return out;
}

}  // namespace hyperspec
