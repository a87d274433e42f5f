#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace chordmat;
using namespace fixtures;

namespace {

const std::vector<int> kIdentity5{0, 1, 2, 3, 4};

LabeledGraph triangle() { return catalog::complete_graph(3); }

}  // namespace

TEST_CASE("cycle matroids") {
  CHECK(circuits(cycle_matroid(triangle())).circuits() == sets({{1, 2, 3}}));
  const LabeledGraph tree = LabeledGraph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  const BinaryMatroid t = cycle_matroid(tree);
  CHECK(circuits(t).empty());
  CHECK(t.rank() == 4);
  CHECK(g0().rank() == 4);
}

TEST_CASE("cycle matroid circuits are the graph cycles") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    const int m = 1 + static_cast<int>(rng() % 9);
    for (int i = 0; i < m; ++i) {
      int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % n);
      if (u == v) v = (u + 1) % n;  // parallel edges allowed, loops not
      edges.emplace_back(u, v);
    }
    const BinaryMatroid cm = cycle_matroid(LabeledGraph::from_edges(n, edges));
    CHECK(masks(circuits(cm)) == oracle::graph_cycles(n, edges));
  }
}

TEST_CASE("cocycle matroids") {
  const BinaryMatroid t = cocycle_matroid(triangle());
  CHECK(circuits(t).circuits() == sets({{1, 2}, {1, 3}, {2, 3}}));
  CHECK(k33_dual().rank() == 4);
  CHECK(k33_dual().size() == 9);
  const BinaryMatroid k5 = cocycle_matroid(catalog::complete_graph(5));
  CHECK(k5.rank() == 6);
  CHECK(is_simple(k5));
  try {
    cocycle_matroid(LabeledGraph::from_edges(4, {{0, 1}, {2, 3}}));
    FAIL("expected NotConnected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnected);
  }
}

TEST_CASE("the fan graph G0") {
  const LabeledGraph g = catalog::fan_g0();
  CHECK(g.order() == 5);
  CHECK(g.size() == 7);
  const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {0, 3}, {3, 4}, {0, 4}};
  for (int e = 0; e < 7; ++e) {
    CHECK(g.edge(e).u == expected[e].first);
    CHECK(g.edge(e).v == expected[e].second);
  }
  CHECK(g.name(0) == "v1");
}

TEST_CASE("chordal graph recognition") {
  const auto g = is_chordal_graph(catalog::fan_g0());
  REQUIRE(g.has_value());
  CHECK(*g == kIdentity5);
  CHECK(is_slabeling(catalog::fan_g0().to_simple(), kIdentity5));
  CHECK_FALSE(is_chordal_graph(catalog::cycle_graph(4)).has_value());
  const auto tree = is_chordal_graph(catalog::path_graph(6));
  REQUIRE(tree.has_value());
  CHECK(is_slabeling(catalog::path_graph(6).to_simple(), *tree));

  const LabeledGraph multi = LabeledGraph::from_edges(2, {{0, 1}, {0, 1}});
  try {
    is_chordal_graph(multi);
    FAIL("expected NotSimpleGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimpleGraph);
  }
}

TEST_CASE("maximum-cardinality search matches the induced-cycle oracle") {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t code = 0; code < (1U << pairs); ++code) {
      const oracle::Graph og = oracle::from_code(n, code);
      const auto order = is_chordal_graph(labeled(og).to_simple());
      CHECK(order.has_value() == oracle::chordal(og));
      if (order) CHECK(oracle::slabeling(og, *order));
    }
  }
}

TEST_CASE("S-labelings") {
  CHECK(s_labelings(catalog::complete_graph(4)).size() == 24);
  CHECK(s_labelings(catalog::cycle_graph(4)).empty());

  const LabeledGraph p3 = catalog::path_graph(3);
  const auto all = s_labelings(p3);
  std::vector<std::vector<int>> expected;
  std::vector<int> p{0, 1, 2};
  oracle::Graph op(3);
  op.add(0, 1);
  op.add(1, 2);
  do {
    if (oracle::slabeling(op, p)) expected.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(all == expected);
  CHECK(all.size() == 4);

  Limits tight;
  tight.max_graph_vertices = 4;
  CHECK_THROWS_AS(s_labelings(catalog::complete_graph(5), tight), Error);
}

TEST_CASE("S-labeling counts match the permutation oracle") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& og : oracle::connected_classes(n)) {
      CHECK(count_s_labelings(labeled(og).to_simple()) == oracle::count_slabelings(og));
    }
  }
}

TEST_CASE("S-labelings give M-chains") {
  const MChain g = slabel_to_mchain(catalog::fan_g0(), kIdentity5);
  CHECK(g == chain({{}, {1}, {1, 2, 3}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6, 7}}));

  for (const auto& order : s_labelings(triangle())) {
    const MChain c = slabel_to_mchain(triangle(), order);
    REQUIRE(c.flats.size() == 3);
    CHECK(c.flats[1].size() == 1);
    CHECK(c.flats[2] == S({1, 2, 3}));
  }

  const MPartition k4 = mpartition(slabel_to_mchain(catalog::complete_graph(4), {0, 1, 2, 3}));
  CHECK(k4.blocks.size() == 3);
  CHECK(k4.blocks[0].size() == 1);
  CHECK(k4.blocks[1].size() == 2);
  CHECK(k4.blocks[2].size() == 3);

  try {
    slabel_to_mchain(catalog::cycle_graph(4), {0, 1, 2, 3});
    FAIL("expected InvalidSLabel");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSLabel);
  }
  CHECK_THROWS_AS(slabel_to_mchain(catalog::fan_g0(), {1, 3, 0, 2, 4}), Error);
}

TEST_CASE("S-graphs of M(G0)") {
  const BinaryMatroid m = g0();
  const SGraph path = sgraph_of(m, MPartition{sets({{1}, {2, 3}, {4, 5}, {6, 7}})});
  CHECK(path.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

  const SGraph star = sgraph_of(m, MPartition{sets({{4}, {3, 5}, {1, 2}, {6, 7}})});
  CHECK(star.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {1, 3}});
  CHECK(star.graph().degree(1) == 3);

  try {
    sgraph_of(m, MPartition{sets({{4}, {1, 2}, {3, 5}, {6, 7}})});  // {1,2,4} is not a flat
    FAIL("expected InvalidPartition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPartition);
  }
}

TEST_CASE("S-graphs of complete graphs are complete") {
  for (int l = 3; l <= 5; ++l) {
    const BinaryMatroid m = kn(l);
    for (const MChain& c : all_mchains(m)) {
      const SimpleGraph sg = sgraph_of(m, mpartition(c)).graph();
      CHECK(sg.order() == l - 1);
      CHECK(sg.edge_count() == (l - 1) * (l - 2) / 2);
    }
  }
}

TEST_CASE("derived S-graphs") {
  const SGraph g = derived_sgraph(catalog::fan_g0(), kIdentity5);
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(subgraph_embedding_check(catalog::fan_g0(), kIdentity5, g));

  const SGraph t = derived_sgraph(triangle(), {0, 1, 2});
  CHECK(t.blocks.size() == 2);
  CHECK(t.edges == std::vector<std::pair<int, int>>{{0, 1}});

  const SGraph k4 = derived_sgraph(catalog::complete_graph(4), {0, 1, 2, 3});
  CHECK(graphs_isomorphic(k4.graph(), catalog::complete_graph(3).to_simple()));
  CHECK(subgraph_embedding_check(catalog::complete_graph(4), {0, 1, 2, 3}, k4));
}

TEST_CASE("DOT and edge-list output") {
  const SGraph g = derived_sgraph(catalog::fan_g0(), kIdentity5);
  const std::string dot = g.to_dot();
  CHECK(dot.find("P2 [label=\"P2 {2,3}\"];") != std::string::npos);
  CHECK(dot.find("P1 -- P2;") != std::string::npos);
  CHECK(dot.rfind("graph S {", 0) == 0);
  CHECK(g.edge_list() == "P1 -- P2\nP2 -- P3\nP3 -- P4\n");
}

TEST_CASE("cones") {
  const LabeledGraph one = LabeledGraph::from_edges(1, {});
  CHECK(cone(one).size() == 1);
  CHECK(graphs_isomorphic(cone(triangle()).to_simple(), catalog::complete_graph(4).to_simple()));
  const LabeledGraph c = cone(catalog::fan_g0());
  CHECK(c.order() == 6);
  CHECK(c.size() == 12);
  CHECK(c.edge(7).u == 0);
  CHECK(c.edge(7).v == 5);

  std::vector<int> order{5, 0, 1, 2, 3, 4};
  const SGraph d = derived_sgraph(c, order);
  CHECK(graphs_isomorphic(d.graph(), catalog::fan_g0().to_simple()));
}

TEST_CASE("isomorphism") {
  const SimpleGraph g = catalog::fan_g0().to_simple();
  CHECK(graphs_isomorphic(g, g));
  CHECK_FALSE(graphs_isomorphic(catalog::path_graph(3).to_simple(), triangle().to_simple()));
  for (int n = 1; n <= 5; ++n) {
    const auto classes = oracle::connected_classes(n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = 0; j < classes.size(); ++j) {
        CHECK(graphs_isomorphic(labeled(classes[i]).to_simple(), labeled(classes[j]).to_simple()) == (i == j));
      }
    }
  }
}

TEST_CASE("connectivity") {
  CHECK(catalog::cycle_graph(4).to_simple().is_two_connected());
  CHECK_FALSE(catalog::path_graph(4).to_simple().is_two_connected());
  CHECK_FALSE(catalog::complete_graph(2).to_simple().is_two_connected());
  CHECK(catalog::fan_g0().to_simple().is_two_connected());
}
