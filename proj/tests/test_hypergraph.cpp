#include <random>

#include "doctest.h"
#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"
#include "support.hpp"

using namespace hyperspec;

TEST_CASE("parse single edge and triangle") {
  const auto h = parse_hgf("3 3 1\n1 2 3");
  CHECK(h.k() == 3);
  CHECK(h.n() == 3);
  CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}});

  const auto c3 = parse_hgf("2 3 3\n1 2\n2 3\n1 3");
  CHECK(c3 == testsupport::cycle(3));
}

TEST_CASE("parse rejects malformed input with a line number") {
  auto line_of = [](const char* text) {
    try {
      parse_hgf(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 3 1\n1 2 2") == 2);
  CHECK(line_of("3 3 1\n1 2 4") == 2);
  CHECK(line_of("3 3 1\n1 2") == 2);
  CHECK(line_of("3 4 2\n1 2 3\n3 2 1") == 3);
  CHECK(line_of("3 3") == 1);
  CHECK(line_of("3 3 2\n1 2 3") == 3);
  CHECK_THROWS_AS(parse_hgf("3 3 1\n1 2 x"), ParseError);
}

TEST_CASE("parse ignores comments and accepts CRLF") {
  const auto h = parse_hgf("# header\r\n3 5 2\r\n# edge one\r\n1 2 3\r\n1 4 5\r\n");
  CHECK(h.m() == 2);
  CHECK(h.edge(1) == Edge{0, 3, 4});
}

TEST_CASE("edges are stored canonically") {
  const Hypergraph h(3, 5, {{4, 0, 3}, {2, 1, 0}});
  CHECK(h.edges() == std::vector<Edge>{{0, 1, 2}, {0, 3, 4}});
  CHECK_THROWS_AS(Hypergraph(3, 3, {{0, 1, 2}, {2, 1, 0}}), PreconditionError);
  CHECK_THROWS_AS(Hypergraph(1, 3, {}), PreconditionError);
}

TEST_CASE("degrees and power sums") {
  const Hypergraph one(3, 3, {{0, 1, 2}});
  const Hypergraph two(3, 5, {{0, 1, 2}, {0, 3, 4}});
  CHECK(degrees(one).values() == std::vector<int>{1, 1, 1});
  CHECK(degrees(two).values() == std::vector<int>{2, 1, 1, 1, 1});
  CHECK(degrees(Hypergraph::edgeless(3, 4)).values() == std::vector<int>{0, 0, 0, 0});
  CHECK(degree_power_sum(two, 2) == 8);
  CHECK(degree_power_sum(one, 3) == 3);
  const auto k43 = testsupport::complete(3, 4);
  CHECK(degrees(k43).regular_degree() == 3);
  CHECK(degree_power_sum(k43, 4) == 4 * 81);
  CHECK_FALSE(degrees(two).regular_degree().has_value());
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Hypergraph(3, 3, {{0, 1, 2}})));
  CHECK_FALSE(is_connected(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}})));
  CHECK(is_connected(Hypergraph::edgeless(2, 1)));
  CHECK(connected_components(Hypergraph(3, 7, {{0, 1, 2}, {3, 4, 5}})).size() == 3);
}

TEST_CASE("core vertices") {
  CHECK(core_vertices(Hypergraph(3, 3, {{0, 1, 2}})) == std::vector<Vertex>{0, 1, 2});
  CHECK(core_vertices(Hypergraph(3, 5, {{0, 1, 2}, {0, 3, 4}})) == std::vector<Vertex>{1, 2, 3, 4});
  CHECK(core_vertices(testsupport::cycle(3)).empty());
}

TEST_CASE("remove edge with cores") {
  const Hypergraph two(3, 5, {{0, 1, 2}, {0, 3, 4}});
  const auto r = remove_edge_with_cores(two, {0, 3, 4});
  CHECK(r.graph == Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(r.original == std::vector<Vertex>{0, 1, 2});
  CHECK_FALSE(r.image[3].has_value());

  const auto empty = remove_edge_with_cores(Hypergraph(3, 3, {{0, 1, 2}}), {0, 1, 2});
  CHECK(empty.graph.n() == 0);
  CHECK(empty.graph.m() == 0);

  const auto p = remove_edge_with_cores(testsupport::path(3), {1, 2});
  CHECK(p.graph == testsupport::path(2));
  CHECK_THROWS_AS(remove_edge_with_cores(two, {1, 2, 3}), PreconditionError);
}

TEST_CASE("power hypergraphs") {
  CHECK(power_hypergraph(testsupport::path(2), 3) == Hypergraph(3, 3, {{0, 1, 2}}));
  const auto c34 = power_hypergraph(testsupport::cycle(3), 4);
  CHECK(c34.n() == 9);
  CHECK(c34.m() == 3);
  CHECK(degrees(c34).values() == std::vector<int>{2, 2, 2, 1, 1, 1, 1, 1, 1});
  CHECK(power_hypergraph(testsupport::path(3), 3) == Hypergraph(3, 5, {{0, 1, 3}, {1, 2, 4}}));
  CHECK_THROWS_AS(power_hypergraph(Hypergraph(3, 3, {{0, 1, 2}}), 4), PreconditionError);
}

TEST_CASE("property: handshake, round trip, power degrees") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + trial % 4;
    const int n = k + static_cast<int>(rng() % 5);
    const int m = static_cast<int>(rng() % 7);
    const auto h = testsupport::random_hypergraph(rng, k, n, m);
    CHECK(degrees(h).sum() == static_cast<long long>(k) * static_cast<long long>(h.m()));
    CHECK(parse_hgf(to_hgf(h)) == h);
    if (k == 2) {
      for (int kk = 3; kk <= 5; ++kk) {
        const auto p = power_hypergraph(h, kk);
        const auto dp = degrees(p), dg = degrees(h);
        CHECK(p.n() == h.n() + (kk - 2) * static_cast<int>(h.m()));
        for (int v = 0; v < p.n(); ++v) CHECK(dp[v] == (v < h.n() ? dg[v] : 1));
      }
    }
  }
}
