#pragma once

// Constructive decompositions: spanning tree + reflection-(1,1) split, Ross bases,
// Ross-circuits and the reduced graph.

#include "refrig/gain_graph.hpp"

#include <optional>
#include <stdexcept>

namespace refrig {

struct TreeMapDecomposition {
  EdgeSubset tree;
  EdgeSubset map_part;
  ColoredGraph recolored;  // tree edges carry the identity
};

class NoDecomposition : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// First spanning tree in lexicographic order of edge indices whose complement is
// reflection-(1,1); nullopt when none exists.
std::optional<TreeMapDecomposition> find_tree_ref11(const ColoredGraph& g);

// Throws PreconditionError unless g is reflection-(2,2), NoDecomposition if the search fails.
TreeMapDecomposition decompose_tree_ref11(const ColoredGraph& g);

bool lift_structure_check(const TreeMapDecomposition& d);

// Greedy in edge order: keeps an edge when the kept set stays Ross-sparse.
EdgeSubset ross_basis(const ColoredGraph& g);

// Smallest-by-inclusion non-Ross-sparse subset of basis + e containing e.
EdgeSubset fundamental_ross_circuit(const ColoredGraph& g, const EdgeSubset& basis, EdgeId e);

struct CircuitDecomposition {
  EdgeSubset basis;
  std::vector<EdgeSubset> circuits;
  std::vector<EdgeId> circuit_omitted_edge;  // the basis-outside edge that induced each circuit
  ColoredGraph reduced;
  std::vector<VertexId> contraction_map;  // quotient vertex -> reduced vertex
};

// Requires a reflection-Laman graph.
CircuitDecomposition find_ross_circuits(const ColoredGraph& g);

struct ReducedGraph {
  ColoredGraph graph;
  std::vector<VertexId> contraction_map;
  std::vector<std::optional<EdgeId>> edge_map;  // reduced edge -> original edge (nullopt for added loops)
};

// Contracts each circuit that is not already a single vertex with a loop, drops the
// loops this creates and adds one gain-1 loop per contracted vertex.
ReducedGraph reduce(const ColoredGraph& g, const std::vector<EdgeSubset>& circuits);

}  // namespace refrig
