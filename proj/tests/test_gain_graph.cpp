#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "refrig/io.hpp"

using namespace refrig;

namespace {

ColoredGraph g_rc() { return parse_graph("n 3\n0 1 0\n0 1 1\n1 2 0\n1 2 1\n2 0 0\n"); }

}  // namespace

TEST_CASE("lift of a loop and of single edges") {
  const auto loop = lift(ColoredGraph(1, {{0, 0, Color::reflection}}));
  CHECK(loop.vertex_count() == 2);
  REQUIRE(loop.edge_count() == 2);
  for (const auto& e : loop.edges()) CHECK(((e.u == 0 && e.v == 1) || (e.u == 1 && e.v == 0)));

  const auto ab0 = lift(ColoredGraph(2, {{0, 1, Color::identity}}));
  REQUIRE(ab0.edge_count() == 2);
  CHECK(ab0.edges()[0].u == LiftGraph::vertex(0, Color::identity));
  CHECK(ab0.edges()[0].v == LiftGraph::vertex(1, Color::identity));
  CHECK(ab0.edges()[1].u == LiftGraph::vertex(0, Color::reflection));
  CHECK(ab0.edges()[1].v == LiftGraph::vertex(1, Color::reflection));
  CHECK(ab0.component_count() == 2);
}

TEST_CASE("lift of G_RC is connected with 6 vertices and 10 edges") {
  const auto l = lift(g_rc());
  CHECK(l.vertex_count() == 6);
  CHECK(l.edge_count() == 10);
  CHECK(l.component_count() == 1);
}

TEST_CASE("sheet swap is a free involution and quotient inverts lift") {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto l = lift(g);
    for (std::size_t k = 0; k < l.edge_count(); ++k) {
      const auto& e = l.edges()[k];
      const auto& s = l.edges()[l.swapped_edge(k)];
      CHECK(LiftGraph::swap_sheet(e.u) == s.u);
      CHECK(LiftGraph::swap_sheet(e.v) == s.v);
      CHECK(LiftGraph::swap_sheet(e.u) != e.u);
    }
    CHECK(quotient(l) == g);
  }
}

TEST_CASE("rho examples") {
  const auto tri = parse_graph("n 3\n0 1 0\n1 2 0\n2 0 0\n");
  CHECK(rho(tri, EdgeSubset::all(3)) == Color::identity);
  const auto two = parse_graph("n 2\n0 1 0\n0 1 1\n");
  CHECK(rho(two, EdgeSubset::all(2)) == Color::reflection);
  const auto g = g_rc();
  CHECK(rho(g, EdgeSubset(5, {1, 3, 4})) == Color::identity);
  CHECK_THROWS_AS(rho(g, EdgeSubset(5, {0, 2})), NotACycle);
  CHECK_THROWS_AS(rho(g, EdgeSubset(5, {})), NotACycle);
}

TEST_CASE("rho is a homomorphism on symmetric differences of cycles") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 10) continue;
    const auto cycles = oracle::simple_cycles(g);
    for (auto c : cycles) CHECK(to_int(rho(g, EdgeSubset::from_mask(g.edge_count(), c))) == oracle::xor_gains(g, c));
    for (auto a : cycles)
      for (auto b : cycles) {
        const auto d = a ^ b;
        if (std::find(cycles.begin(), cycles.end(), d) == cycles.end()) continue;
        CHECK(to_int(rho(g, EdgeSubset::from_mask(g.edge_count(), d))) ==
              (to_int(rho(g, EdgeSubset::from_mask(g.edge_count(), a))) ^
               to_int(rho(g, EdgeSubset::from_mask(g.edge_count(), b)))));
      }
  }
}

TEST_CASE("classify_components examples") {
  const auto g = g_rc();
  auto c = classify_components(parse_graph("n 2\n0 1 0\n"), EdgeSubset::all(1));
  REQUIRE(c.size() == 1);
  CHECK(c[0].rho_trivial);
  CHECK(c[0].vertices.size() == 2);

  c = classify_components(ColoredGraph(1, {{0, 0, Color::reflection}}), EdgeSubset::all(1));
  REQUIRE(c.size() == 1);
  CHECK_FALSE(c[0].rho_trivial);

  c = classify_components(g, EdgeSubset::all(5));
  REQUIRE(c.size() == 1);
  CHECK_FALSE(c[0].rho_trivial);
  CHECK(c[0].vertices.size() == 3);
}

TEST_CASE("component totals match the BFS oracle on every subset") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 9) continue;
    for (std::uint64_t s = 1; s <= oracle::full(g); ++s) {
      const auto comps = classify_components(g, EdgeSubset::from_mask(g.edge_count(), s));
      const auto expect = oracle::counts(g, oracle::ids_of(s));
      long vertices = 0, nontrivial = 0;
      for (const auto& c : comps) {
        vertices += static_cast<long>(c.vertices.size());
        nontrivial += c.rho_trivial ? 0 : 1;
      }
      CHECK(vertices == expect.vertices);
      CHECK(nontrivial == expect.nontrivial_components);
      CHECK(static_cast<long>(comps.size()) == expect.nontrivial_components + expect.trivial_components);
    }
  }
}

TEST_CASE("recolor_tree_identity examples") {
  const auto one = recolor_tree_identity(parse_graph("n 2\n0 1 1\n"), EdgeSubset(1, {0}));
  CHECK(one.edge(0).gain == Color::identity);

  const auto two = recolor_tree_identity(parse_graph("n 2\n0 1 1\n0 1 0\n"), EdgeSubset(2, {0}));
  CHECK(two.edge(0).gain == Color::identity);
  CHECK(two.edge(1).gain == Color::reflection);

  // Tree {ab:0, ca:0} has zero potential everywhere, so nothing changes.
  const auto g = g_rc();
  CHECK(recolor_tree_identity(g, EdgeSubset(5, {0, 4})) == g);

  CHECK_THROWS_AS(recolor_tree_identity(g, EdgeSubset(5, {0, 1})), NotASpanningTree);
  CHECK_THROWS_AS(recolor_tree_identity(g, EdgeSubset(5, {0})), NotASpanningTree);
}

TEST_CASE("recoloring preserves rho on every simple cycle for every spanning tree") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 10) continue;
    const auto cycles = oracle::simple_cycles(g);
    for (std::uint64_t t = 1; t <= oracle::full(g); ++t) {
      const auto tree = EdgeSubset::from_mask(g.edge_count(), t);
      if (!is_spanning_tree(g, tree)) continue;
      const auto r = recolor_tree_identity(g, tree);
      for (auto k : tree.ids()) CHECK(r.edge(k).gain == Color::identity);
      for (auto c : cycles) CHECK(oracle::xor_gains(r, c) == oracle::xor_gains(g, c));
    }
  }
}

TEST_CASE("graph construction validates endpoints") {
  CHECK_THROWS_AS(ColoredGraph(2, {{0, 2, Color::identity}}), GraphError);
  const auto g = g_rc();
  CHECK(g.without_edge(4).edge_count() == 4);
  CHECK(g.with_edge({2, 2, Color::reflection}).edge_count() == 6);
  const auto sub = extract_subgraph(g, EdgeSubset(5, {2, 3}));
  CHECK(sub.graph.vertex_count() == 2);
  CHECK(sub.vertex_map == std::vector<VertexId>{1, 2});
  CHECK(sub.edge_map == std::vector<EdgeId>{2, 3});
}
