#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "refrig/io.hpp"

using namespace refrig;

namespace {

const ColoredGraph loop = parse_graph("n 1\n0 0 1\n");
const ColoredGraph g_rc = parse_graph("n 3\n0 1 0\n0 1 1\n1 2 0\n1 2 1\n2 0 0\n");
const ColoredGraph k4 = parse_graph("n 4\n0 1 0\n0 2 0\n0 3 0\n1 2 0\n1 3 0\n2 3 0\n");

}  // namespace

TEST_CASE("family names round trip") {
  for (Family f : all_families) CHECK(parse_family(family_name(f)) == f);
  CHECK_FALSE(parse_family("laman").has_value());
}

TEST_CASE("check_counts examples") {
  auto r = check_counts(k4, Family::reflection_laman);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.witness->size() == 6);
  CHECK(r.counts.vertices == 4);
  CHECK(r.counts.edges == 6);
  CHECK(r.counts.trivial_components == 1);
  CHECK(r.bound == 5);

  r = check_counts(loop, Family::ross);
  CHECK_FALSE(r.pass);
  CHECK(r.counts.vertices == 1);
  CHECK(r.counts.nontrivial_components == 1);
  CHECK(r.bound == 0);

  CHECK(check_counts(g_rc, Family::reflection_laman).pass);
}

TEST_CASE("is_member examples") {
  CHECK(is_member(loop, Family::reflection_laman));
  CHECK(is_member(parse_graph("n 2\n0 1 0\n0 1 1\n"), Family::ross));
  CHECK_FALSE(is_member(parse_graph("n 3\n0 1 0\n1 2 0\n2 0 0\n"), Family::reflection_11));
  CHECK(is_member(parse_graph("n 3\n0 1 0\n1 2 0\n2 0 1\n"), Family::reflection_11));
  // isolated vertex: not a map-graph on all vertices
  CHECK_FALSE(is_member(parse_graph("n 2\n0 0 1\n0 0 1\n"), Family::reflection_11));
}

TEST_CASE("is_ross_circuit examples") {
  CHECK(is_ross_circuit(g_rc));
  CHECK_FALSE(is_ross_circuit(k4));
  // brute-force definition decides the loop graph
  const bool expected = oracle::ross_circuits(loop).size() == 1 && oracle::ross_circuits(loop)[0] == 1;
  CHECK(expected);
  CHECK(is_ross_circuit(loop) == expected);
}

TEST_CASE("connected_subgraph_check examples") {
  CHECK(connected_subgraph_check(g_rc, Family::reflection_laman).pass);
  const auto r = connected_subgraph_check(k4, Family::reflection_laman);
  CHECK_FALSE(r.pass);
  REQUIRE(r.witness);
  CHECK(r.counts.edges - r.bound >= 1);
  for (Family f : all_families) CHECK(connected_subgraph_check(ColoredGraph(3), f).pass);
}

TEST_CASE("witnesses violate their bound under recomputation and are inclusion-minimal for check_counts") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 12) continue;
    for (Family f : all_families) {
      for (const auto& r : {check_counts(g, f), connected_subgraph_check(g, f)}) {
        if (r.pass) continue;
        REQUIRE(r.witness);
        const auto c = oracle::counts(g, r.witness->ids());
        CHECK(c == r.counts);
        CHECK(c.edges > oracle::bound(f, c));
      }
      const auto r = check_counts(g, f);
      if (!r.pass) {
        const std::uint64_t w = r.witness->mask();
        for (std::uint64_t s = (w - 1) & w; s; s = (s - 1) & w) {
          const auto c = oracle::counts(g, oracle::ids_of(s));
          CHECK(c.edges <= oracle::bound(f, c));
        }
      }
    }
  }
}

TEST_CASE("membership agrees with the all-subsets oracle on exhaustive small graphs") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 0; m <= 2 * n; ++m)
      for (const auto& g : enumerate_graphs(n, m))
        for (Family f : all_families) {
          const bool literal = oracle::sparse(g, f, oracle::full(g));
          CHECK(check_counts(g, f).pass == literal);
          CHECK(connected_subgraph_check(g, f).pass == literal);
          CHECK(is_member(g, f) == oracle::member(g, f));
        }
}

TEST_CASE("every Ross-circuit in the corpus is reflection-Laman") {
  for (const auto& [name, g] : oracle::corpus())
    if (is_ross_circuit(g)) CHECK(is_member(g, Family::reflection_laman));
}

TEST_CASE("adding an edge or a gain-1 loop to a Ross graph gives a reflection-(2,2) graph") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (!is_member(g, Family::ross)) continue;
    for (VertexId i = 0; i < g.vertex_count(); ++i) {
      CHECK(is_member(g.with_edge({i, i, Color::reflection}), Family::reflection_22));
      for (VertexId j = 0; j < g.vertex_count(); ++j)
        if (i != j)
          for (Color c : {Color::identity, Color::reflection}) CHECK(is_member(g.with_edge({i, j, c}), Family::reflection_22));
    }
  }
}

TEST_CASE("reflection-Laman is reflection-(2,2) without trivial (2,2)-blocks") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 12) continue;
    bool block = false;
    for (std::uint64_t s = 1; s <= oracle::full(g); ++s) {
      const auto c = oracle::counts(g, oracle::ids_of(s));
      if (c.trivial_components == 1 && c.nontrivial_components == 0 && c.edges == 2 * c.vertices - 2) block = true;
    }
    CHECK_MESSAGE(is_member(g, Family::reflection_laman) ==
                      (is_member(g, Family::reflection_22) && !block),
                  name);
  }
}

TEST_CASE("reflection-(1,1) membership equals its counts with m = n") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : enumerate_graphs(n, n))
      CHECK(is_member(g, Family::reflection_11) == oracle::member(g, Family::reflection_11));
}

TEST_CASE("count failures persist in supergraphs") {
  for (const auto& [name, g] : oracle::corpus()) {
    if (g.edge_count() > 11) continue;
    for (Family f : all_families) {
      const auto r = check_counts(g, f);
      if (r.pass) continue;
      const auto bigger = g.with_edge({0, 0, Color::reflection});
      CHECK_FALSE(check_counts(bigger, f).pass);
      const auto c = oracle::counts(bigger, r.witness->ids());
      CHECK(c.edges > oracle::bound(f, c));
    }
  }
}

TEST_CASE("gain-0 loops and equal-gain parallel edges always fail reflection-Laman") {
  CHECK_FALSE(check_counts(parse_graph("n 1\n0 0 0\n"), Family::reflection_laman).pass);
  CHECK_FALSE(check_counts(parse_graph("n 2\n0 1 1\n0 1 1\n"), Family::reflection_laman).pass);
}
