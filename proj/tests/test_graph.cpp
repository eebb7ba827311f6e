#include <doctest.h>

#include <random>
#include <sstream>

#include "aalpha/graph.hpp"
#include "aalpha/spectra.hpp"
#include "oracles.hpp"

using namespace aalpha;

namespace {

void check_simple(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (int v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
  }
}

bool same_graph(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < a.order(); ++v)
      if (a.adjacent(u, v) != b.adjacent(u, v)) return false;
  return true;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("basic builders") {
  Graph k3 = complete_graph(3);
  CHECK(k3.edge_count() == 3);
  CHECK(k3.degrees() == std::vector<int>{2, 2, 2});

  Graph star = star_graph(4);  // K_{1,3}
  CHECK(star.edge_count() == 3);
  CHECK(star.degree(0) == 3);

  Graph c4 = cycle_graph(4);
  CHECK(c4.edge_count() == 4);
  Spectrum s = eig_symmetric(adjacency_matrix(c4));
  CHECK(spectra_match(s, Spectrum({2, 0, 0, -2}), 1e-10).matched);

  CHECK(path_graph(5).edge_count() == 4);
  CHECK(empty_graph(6).edge_count() == 0);
  CHECK(complete_graph(7).edge_count() == 21);

  for (BasicKind kind : {BasicKind::complete, BasicKind::empty, BasicKind::cycle,
                         BasicKind::path, BasicKind::star})
    CHECK_THROWS_AS(build_basic(kind, 0), std::invalid_argument);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), std::invalid_argument);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {}, {"only-one"}), std::invalid_argument);
}

TEST_CASE("disjoint union") {
  Graph g = disjoint_union(complete_graph(2), complete_graph(1));
  CHECK(g.order() == 3);
  CHECK(g.edge_count() == 1);

  Graph h = disjoint_union(empty_graph(2), empty_graph(3));
  CHECK(same_graph(h, empty_graph(5)));

  Graph folded = disjoint_union(
      disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2));
  CHECK(folded.order() == 6);
  CHECK(folded.edge_count() == 3);
}

TEST_CASE("join") {
  Graph k23 = join(empty_graph(2), empty_graph(3));
  CHECK(k23.order() == 5);
  CHECK(k23.edge_count() == 6);
  for (int u = 0; u < 2; ++u)
    for (int v = 2; v < 5; ++v) CHECK(k23.adjacent(u, v));
  CHECK_FALSE(k23.adjacent(0, 1));

  // K_1 joined to C_4 is the wheel W_5: every rim vertex sees the hub.
  Graph w5 = join(complete_graph(1), cycle_graph(4));
  CHECK(w5.order() == 5);
  CHECK(w5.degree(0) == 4);
  CHECK(w5.edge_count() == 8);

  CHECK(same_graph(join(complete_graph(1), complete_graph(1)), complete_graph(2)));
}

TEST_CASE("joined union") {
  CHECK(same_graph(
      joined_union({complete_graph(2), {complete_graph(1), complete_graph(1)}}),
      complete_graph(2)));

  Graph pineapple = joined_union(
      {path_graph(3), {complete_graph(2), complete_graph(1), empty_graph(3)}});
  CHECK(pineapple.order() == 6);
  CHECK(pineapple.edge_count() == 6);

  Graph f2 = joined_union(
      {star_graph(3), {complete_graph(1), complete_graph(2), complete_graph(2)}});
  CHECK(f2.order() == 5);
  CHECK(f2.edge_count() == 6);

  CHECK_THROWS_AS(joined_union({path_graph(3), {complete_graph(1)}}),
                  std::invalid_argument);
}

TEST_CASE("joined union over K_2 equals join, vertex by vertex") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const int na = 1 + static_cast<int>(rng() % 4);
    const int nb = 1 + static_cast<int>(rng() % 4);
    std::vector<Edge> ea, eb;
    for (int u = 0; u < na; ++u)
      for (int v = u + 1; v < na; ++v)
        if (rng() % 2) ea.emplace_back(u, v);
    for (int u = 0; u < nb; ++u)
      for (int v = u + 1; v < nb; ++v)
        if (rng() % 2) eb.emplace_back(u, v);
    Graph a(na, ea), b(nb, eb);
    CHECK(same_graph(join(a, b), joined_union({complete_graph(2), {a, b}})));
  }
}

TEST_CASE("joined union edge count formula") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    std::vector<Edge> base_edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) base_edges.emplace_back(u, v);
    Graph base(n, base_edges);
    std::vector<Graph> parts;
    int expected = 0;
    for (int i = 0; i < n; ++i) {
      const int t = 1 + static_cast<int>(rng() % 4);
      parts.push_back(rng() % 2 ? complete_graph(t) : empty_graph(t));
      expected += parts.back().edge_count();
    }
    for (const auto& [u, v] : base.edges())
      expected += parts[u].order() * parts[v].order();
    Graph h = joined_union({base, parts});
    check_simple(h);
    CHECK(h.edge_count() == expected);
  }
}

TEST_CASE("degree info") {
  DegreeInfo k4 = degree_info(complete_graph(4));
  CHECK(k4.degrees == std::vector<int>{3, 3, 3, 3});
  CHECK(k4.regular_degree == 3);
  CHECK(k4.edge_count == 6);
  CHECK(k4.diameter == 1);

  DegreeInfo e3 = degree_info(empty_graph(3));
  CHECK_FALSE(e3.diameter.has_value());
  CHECK(e3.regular_degree == 0);

  Graph pineapple = joined_union(
      {path_graph(3), {complete_graph(2), complete_graph(1), empty_graph(3)}});
  CHECK(degree_info(pineapple).diameter == 2);
  CHECK_FALSE(degree_info(pineapple).regular_degree.has_value());
}

TEST_CASE("diameter of a joined union equals the base diameter") {
  // Connected parts over a connected, non-complete base of order >= 3.
  std::mt19937_64 rng(13);
  const Graph bases[] = {path_graph(3), path_graph(4), cycle_graph(4),
                         cycle_graph(5), star_graph(4)};
  for (const Graph& base : bases) {
    std::vector<Graph> parts;
    for (int i = 0; i < base.order(); ++i) {
      switch (rng() % 3) {
        case 0: parts.push_back(complete_graph(1 + rng() % 3)); break;
        case 1: parts.push_back(path_graph(2 + rng() % 2)); break;
        default: parts.push_back(cycle_graph(3)); break;
      }
    }
    Graph h = joined_union({base, parts});
    auto base_info = degree_info(base);
    auto h_info = degree_info(h);
    // BFS oracle double-check on the result.
    int oracle_diam = 0;
    for (int s = 0; s < h.order(); ++s)
      for (int dist : oracle::bfs_distances(h, s)) {
        REQUIRE(dist >= 0);
        oracle_diam = std::max(oracle_diam, dist);
      }
    REQUIRE(h_info.diameter.has_value());
    CHECK(*h_info.diameter == oracle_diam);
    CHECK(*h_info.diameter == *base_info.diameter);
  }
}

TEST_CASE("all operators keep graphs simple") {
  Graph a = cycle_graph(5), b = star_graph(4);
  check_simple(disjoint_union(a, b));
  check_simple(join(a, b));
  check_simple(joined_union({path_graph(3), {a, b, complete_graph(2)}}));
}

TEST_CASE("labels propagate by concatenation") {
  Graph a(2, {{0, 1}}, {"x", "y"});
  Graph b(1, {}, {"z"});
  Graph u = disjoint_union(a, b);
  REQUIRE(u.has_labels());
  CHECK(u.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK_FALSE(disjoint_union(complete_graph(2), complete_graph(2)).has_labels());
}

TEST_CASE("edge list round trip and validation") {
  Graph g = joined_union({path_graph(3), {complete_graph(2), complete_graph(1),
                                          empty_graph(3)}});
  std::stringstream buffer;
  write_edge_list(g, buffer);
  Graph back = read_edge_list(buffer);
  CHECK(same_graph(g, back));

  auto reject = [](const std::string& text) {
    std::stringstream in(text);
    CHECK_THROWS(read_edge_list(in));
  };
  reject("2 1\n0 0\n");      // loop
  reject("2 2\n0 1\n0 1\n"); // duplicate
  reject("2 2\n0 1\n1 0\n"); // duplicate, reversed
  reject("2 1\n0 5\n");      // out of range
  reject("2 2\n0 1\n");      // truncated
}

}  // TEST_SUITE
