#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "refrig/decomposition.hpp"
#include "refrig/io.hpp"

#include <set>

using namespace refrig;

namespace {

const ColoredGraph loop = parse_graph("n 1\n0 0 1\n");
const ColoredGraph g2 = parse_graph("n 2\n0 1 0\n0 1 1\n0 0 1\n");
const ColoredGraph g_rc = parse_graph("n 3\n0 1 0\n0 1 1\n1 2 0\n1 2 1\n2 0 0\n");
const ColoredGraph g_rc_pendant = parse_graph("n 4\n0 1 0\n0 1 1\n1 2 0\n1 2 1\n2 0 0\n3 2 0\n3 0 0\n");

void check_valid(const ColoredGraph& g, const TreeMapDecomposition& d) {
  CHECK(is_spanning_tree(g, d.tree));
  CHECK(d.map_part == d.tree.complement());
  std::vector<Edge> rest;
  for (auto k : d.map_part.ids()) rest.push_back(g.edge(k));
  CHECK(is_member(ColoredGraph(g.vertex_count(), rest), Family::reflection_11));
  for (auto k : d.tree.ids()) CHECK(d.recolored.edge(k).gain == Color::identity);
  CHECK(lift_structure_check(d));
}

}  // namespace

TEST_CASE("tree plus reflection-(1,1) examples") {
  auto d = decompose_tree_ref11(g2);
  CHECK(d.tree.ids() == std::vector<EdgeId>{0});
  CHECK(d.map_part.ids() == std::vector<EdgeId>{1, 2});
  check_valid(g2, d);

  d = decompose_tree_ref11(loop);
  CHECK(d.tree.empty());
  CHECK(d.map_part.ids() == std::vector<EdgeId>{0});
  check_valid(loop, d);

  d = decompose_tree_ref11(g_rc);
  CHECK(d.tree.ids() == std::vector<EdgeId>{0, 3});
  check_valid(g_rc, d);

  // the alternative tree {ab:0, ca:0} is valid too
  TreeMapDecomposition alt{EdgeSubset(5, {0, 4}), EdgeSubset(5, {1, 2, 3}), recolor_tree_identity(g_rc, EdgeSubset(5, {0, 4}))};
  check_valid(g_rc, alt);
}

TEST_CASE("decomposition preconditions") {
  CHECK_THROWS_AS(decompose_tree_ref11(parse_graph("n 2\n0 1 0\n0 1 1\n")), PreconditionError);
  CHECK_FALSE(find_tree_ref11(parse_graph("n 2\n0 1 0\n0 1 1\n")).has_value());
}

TEST_CASE("lift_structure_check rejects a reflection tree edge") {
  auto d = decompose_tree_ref11(g2);
  d.recolored = g2;
  std::vector<Edge> edges(g2.edges().begin(), g2.edges().end());
  edges[0].gain = Color::reflection;
  edges[1].gain = Color::identity;
  d.recolored = ColoredGraph(2, edges);
  CHECK_FALSE(lift_structure_check(d));
}

TEST_CASE("every corpus reflection-(2,2) graph decomposes") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (!is_member(g, Family::reflection_22)) continue;
    INFO(name);
    const auto d = decompose_tree_ref11(g);
    check_valid(g, d);
    if (g.edge_count() <= 10)
      for (auto c : oracle::simple_cycles(g)) CHECK(oracle::xor_gains(d.recolored, c) == oracle::xor_gains(g, c));
  }
}

TEST_CASE("ross_basis examples") {
  const auto ross = parse_graph("n 2\n0 1 0\n0 1 1\n");
  CHECK(ross_basis(ross) == EdgeSubset::all(2));
  CHECK(ross_basis(g_rc).ids() == std::vector<EdgeId>{0, 1, 2, 3});
  const auto k4 = parse_graph("n 4\n0 1 0\n0 2 0\n0 3 0\n1 2 0\n1 3 0\n2 3 0\n");
  CHECK(ross_basis(k4).size() == 5);
}

TEST_CASE("ross bases are Ross-sparse and maximal") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 12) continue;
    const auto b = ross_basis(g);
    CHECK(oracle::sparse(g, Family::ross, b.mask()));
    for (auto e : b.complement().ids()) CHECK_FALSE(oracle::sparse(g, Family::ross, b.mask() | (1ULL << e)));
  }
}

TEST_CASE("Ross-circuits of G_RC plus a pendant vertex") {
  const auto c = find_ross_circuits(g_rc_pendant);
  REQUIRE(c.circuits.size() == 1);
  CHECK(c.circuits[0].ids() == std::vector<EdgeId>{0, 1, 2, 3, 4});
  CHECK(c.reduced == parse_graph("n 2\n1 0 0\n1 0 0\n0 0 1\n"));
  CHECK(c.contraction_map == std::vector<VertexId>{0, 0, 0, 1});
  CHECK(is_member(c.reduced, Family::reflection_22));
}

TEST_CASE("a lone loop circuit is left as it is") {
  auto c = find_ross_circuits(loop);
  REQUIRE(c.circuits.size() == 1);
  CHECK(c.reduced == loop);

  c = find_ross_circuits(g2);
  REQUIRE(c.circuits.size() == 1);
  CHECK(c.circuits[0].ids() == std::vector<EdgeId>{2});
  CHECK(c.reduced == g2);
  CHECK(is_member(c.reduced, Family::reflection_22));
}

TEST_CASE("find_ross_circuits requires reflection-Laman") {
  CHECK_THROWS_AS(find_ross_circuits(parse_graph("n 2\n0 1 0\n0 1 1\n")), PreconditionError);
}

TEST_CASE("circuits match the brute-force scan, are disjoint, and the reduced graph is reflection-(2,2)") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (!is_member(g, Family::reflection_laman) || g.edge_count() > 12) continue;
    INFO(name);
    const auto c = find_ross_circuits(g);
    std::set<std::uint64_t> found;
    for (const auto& s : c.circuits) {
      CHECK(is_ross_circuit(extract_subgraph(g, s).graph));
      found.insert(s.mask());
    }
    const auto brute = oracle::ross_circuits(g);
    CHECK(found == std::set<std::uint64_t>(brute.begin(), brute.end()));
    for (std::size_t a = 0; a < c.circuits.size(); ++a)
      for (std::size_t b = a + 1; b < c.circuits.size(); ++b) {
        const auto va = extract_subgraph(g, c.circuits[a]).vertex_map;
        const auto vb = extract_subgraph(g, c.circuits[b]).vertex_map;
        for (auto v : va) CHECK(std::find(vb.begin(), vb.end(), v) == vb.end());
      }
    CHECK(is_member(c.reduced, Family::reflection_22));
  }
}

TEST_CASE("reduce drops contracted edges and adds one loop per contracted circuit") {
  const auto r = reduce(g_rc_pendant, {EdgeSubset(7, {0, 1, 2, 3, 4})});
  CHECK(r.graph.vertex_count() == 2);
  REQUIRE(r.edge_map.size() == 3);
  CHECK(r.edge_map[0] == std::optional<EdgeId>(5));
  CHECK(r.edge_map[1] == std::optional<EdgeId>(6));
  CHECK_FALSE(r.edge_map[2].has_value());
  CHECK(r.graph.edge(2).is_loop());
  CHECK(r.graph.edge(2).gain == Color::reflection);
}
