#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "holecomp/generators.hpp"
#include "holecomp/graph.hpp"

using namespace holecomp;

TEST_CASE("parse edge-list format") {
  Graph c4 = Graph::parse("4 4\n0 1\n1 2\n2 3\n3 0\n");
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.has_edge(0, 1));
  CHECK(c4.has_edge(3, 0));
  CHECK_FALSE(c4.has_edge(0, 2));

  Graph k1 = Graph::parse("1 0\n");
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);

  Graph tri = Graph::parse("3 3\n0 1\n1 2\n0 2\n");
  CHECK(tri.is_clique({0, 1, 2}));

  SECTION("comments and blank lines are skipped") {
    Graph g = Graph::parse("# header comment\n\n3 1\n# edge next\n0 2\n");
    CHECK(g.has_edge(0, 2));
  }
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      Graph::parse(text);
    } catch (const parse_error& e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("junk\n") == 1);
  CHECK(line_of("2 1\n0 5\n") == 2);        // out of range
  CHECK(line_of("2 1\n1 1\n") == 2);        // self-loop
  CHECK(line_of("3 2\n0 1\n1 0\n") == 3);   // duplicate (reversed)
  CHECK(line_of("3 1\n") == 2);             // missing edges (at EOF)
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);   // too many edges
  CHECK(line_of("3 1\n0 1 9\n") == 2);      // trailing junk
}

TEST_CASE("induced subgraph relabels and keeps exactly inner edges") {
  Graph k222 = gen_k2m(3);
  // one hole's vertex set: parts {0,1} and {2,3} -> 4-cycle
  auto [sub, map] = induced_subgraph(k222, {0, 1, 2, 3});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edge_count() == 4);
  CHECK(map == std::vector<int>{0, 1, 2, 3});

  auto [empty, em] = induced_subgraph(k222, {});
  CHECK(empty.vertex_count() == 0);
  CHECK(em.empty());

  Graph prism = gen_ktbox(3);  // x_i = 0,1,2
  auto [tri, tm] = induced_subgraph(prism, {0, 1, 2});
  CHECK(tri.edge_count() == 3);
  CHECK(tri.is_clique({0, 1, 2}));

  SECTION("identity on the full vertex set") {
    auto [same, sm] = induced_subgraph(prism, prism.vertices());
    CHECK(same == prism);
  }

  CHECK_THROWS_AS(induced_subgraph(prism, {99}), precondition_error);
}

TEST_CASE("clique and vertex-cut predicates") {
  Graph c4 = gen_cycle(4);
  CHECK(is_clique(c4, {0, 1}));
  CHECK_FALSE(is_clique(c4, {0, 2}));
  CHECK(is_clique(c4, {}));
  CHECK(is_clique(c4, {2}));
  Graph k222 = gen_k2m(3);
  CHECK_FALSE(is_clique(k222, {4, 5}));  // a part is non-adjacent

  Graph path = gen_path(3);
  CHECK(is_vertex_cut(path, {1}));
  CHECK_FALSE(is_vertex_cut(gen_cycle(4), {0}));
  CHECK_FALSE(is_vertex_cut(path, {0}));
}

TEST_CASE("edge surgeries are single-edge copies") {
  Graph c4 = gen_cycle(4);
  Graph p = c4.delete_edge(0, 1);
  CHECK(p.edge_count() == 3);
  CHECK_FALSE(p.has_edge(0, 1));
  Graph chorded = c4.add_edge(0, 2);
  CHECK(chorded.edge_count() == 5);
  CHECK(chorded.has_edge(0, 2));
  CHECK(c4.delete_edge(0, 1).add_edge(0, 1) == c4);
  CHECK_THROWS_AS(c4.delete_edge(0, 2), precondition_error);
  CHECK_THROWS_AS(c4.add_edge(0, 1), precondition_error);
  CHECK_THROWS_AS(c4.add_edge(1, 1), precondition_error);
}

TEST_CASE("acyclicity and topological order") {
  Digraph d = Digraph::from_arcs(3, {{0, 1}, {1, 2}});
  auto order = topological_order(d);
  REQUIRE(order.has_value());
  CHECK(*order == std::vector<int>{0, 1, 2});

  Digraph cyc = Digraph::from_arcs(2, {{0, 1}, {1, 0}});
  CHECK_FALSE(topological_order(cyc).has_value());
  auto found = find_directed_cycle(cyc);
  REQUIRE(found.has_value());
  CHECK(found->size() == 2);

  SECTION("orders put every arc forward") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      int n = 2 + static_cast<int>(rng() % 7);
      std::vector<Arc> arcs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 3 == 0) arcs.push_back({i, j});  // forward arcs only: acyclic
      Digraph g = Digraph::from_arcs(n, arcs);
      auto ord = topological_order(g);
      REQUIRE(ord.has_value());
      std::vector<int> pos(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>((*ord)[i])] = i;
      for (const auto& [u, v] : g.arcs()) CHECK(pos[u] < pos[v]);
    }
  }
}

TEST_CASE("dot export") {
  CHECK(Graph::parse("1 0\n").to_dot() == "graph {\n  0;\n}\n");
  std::string dot = gen_cycle(4).to_dot();
  CHECK(dot.find("graph {") == 0);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  std::string ddot = Digraph::from_arcs(2, {{1, 0}}).to_dot();
  CHECK(ddot.find("digraph {") == 0);
  CHECK(ddot.find("1 -> 0;") != std::string::npos);
}

TEST_CASE("parse of serialize is the identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = gen_random(static_cast<int>(rng() % 10), 0.4, rng());
    CHECK(Graph::parse(g.to_edge_list()) == g);
  }
}

TEST_CASE("surgeries change exactly one pair") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = gen_random(3 + static_cast<int>(rng() % 8), 0.5, rng());
    int n = g.vertex_count();
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v) continue;
    if (g.has_edge(u, v)) {
      Graph d = g.delete_edge(u, v);
      CHECK(d.edge_count() == g.edge_count() - 1);
      for (const auto& [a, b] : d.edges()) CHECK(g.has_edge(a, b));
    } else {
      Graph a2 = g.add_edge(u, v);
      CHECK(a2.edge_count() == g.edge_count() + 1);
      for (const auto& [a, b] : g.edges()) CHECK(a2.has_edge(a, b));
    }
  }
}
