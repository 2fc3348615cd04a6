#pragma once

// Counting conditions for the colored sparsity families and their witnesses.

#include "refrig/gain_graph.hpp"

#include <optional>
#include <string_view>

namespace refrig {

enum class Family { reflection_laman, ross, reflection_22, reflection_11, plain_21, plain_22, laman_23 };

inline constexpr Family all_families[] = {Family::reflection_laman, Family::ross,     Family::reflection_22,
                                          Family::reflection_11,    Family::plain_21, Family::plain_22,
                                          Family::laman_23};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// n', m', c' (rho-nontrivial components), c'_0 (rho-trivial components).
struct SubgraphCounts {
  long vertices = 0;
  long edges = 0;
  long nontrivial_components = 0;
  long trivial_components = 0;

  friend bool operator==(const SubgraphCounts&, const SubgraphCounts&) = default;
};

SubgraphCounts count_subgraph(const ColoredGraph& g, const EdgeSubset& s);

// Right-hand side of the family's per-subgraph inequality m' <= bound.
long subgraph_bound(Family f, const SubgraphCounts& c);

// Edge count required of a member on n vertices.
long global_target(Family f, std::size_t n);

struct CountReport {
  bool pass = true;
  std::optional<EdgeSubset> witness;
  SubgraphCounts counts;  // at the witness
  long bound = 0;         // at the witness
};

// Literal definition: every nonempty edge subset of `within` (default: all edges),
// scanned by increasing size so the first violation is inclusion-minimal.
CountReport check_counts(const ColoredGraph& g, Family f);
CountReport check_counts(const ColoredGraph& g, Family f, const EdgeSubset& within);

// Same verdict, searching only connected edge subsets. Valid because every bound is a
// sum of per-component bounds, so a violating subset has a violating component.
CountReport connected_subgraph_check(const ColoredGraph& g, Family f);
CountReport connected_subgraph_check(const ColoredGraph& g, Family f, const EdgeSubset& within);

bool is_sparse(const ColoredGraph& g, Family f, const EdgeSubset& within);
bool is_member(const ColoredGraph& g, Family f);

// Each component of the whole graph (all n vertices) has exactly one cycle.
bool is_map_graph(const ColoredGraph& g);

bool is_ross_circuit(const ColoredGraph& g);

}  // namespace refrig
