#pragma once

// Reflection direction networks: the colored realization system, its solution
// space, faithful/collapsed classification and special-pair constructions.
//
// An edge (i, j, g) with direction d is realized when Phi(g) p_j - p_i is parallel
// to d, i.e. <Phi(g) p_j - p_i, perp(d)> = 0, with Phi the reflection in the y-axis.
// Unknowns are ordered (x_0, y_0, x_1, y_1, ...).

#include "refrig/decomposition.hpp"
#include "refrig/gain_graph.hpp"
#include "refrig/linalg.hpp"
#include "refrig/random.hpp"

#include <optional>
#include <stdexcept>

namespace refrig {

using DirectionAssignment = std::vector<Vec2>;
using Placement = std::vector<Vec2>;

class ZeroDirection : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotReflectionLaman : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class RetriesExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Phi(gain) p_head - p_tail.
Vec2 edge_vector(const Edge& e, const Placement& p);

Placement to_placement(const std::vector<Rational>& coordinates);
std::vector<Rational> to_coordinates(const Placement& p);

DirectionAssignment perp(const DirectionAssignment& d);

Matrix build_system(const ColoredGraph& g, const DirectionAssignment& d);

struct RealizationSpace {
  std::vector<std::vector<Rational>> basis;  // each of length 2n
  std::size_t rank = 0;

  std::size_t dimension() const { return basis.size(); }
};

RealizationSpace realization_space(const ColoredGraph& g, const DirectionAssignment& d);

struct PairClassification {
  std::size_t dimension = 0;
  bool faithful_exists = false;
  bool collapsed_only = false;
  std::vector<bool> never_collapsed;  // per quotient edge
  std::optional<Placement> witness;   // present iff faithful_exists
};

PairClassification classify(const ColoredGraph& g, const DirectionAssignment& d);
PairClassification classify(const ColoredGraph& g, const RealizationSpace& space);

bool is_special_pair(const ColoredGraph& g, const DirectionAssignment& d);

// A combination of the basis vectors with rapidly growing integer weights.
Placement generic_point(const RealizationSpace& space, std::size_t vertex_count);

// Point of the space with no two of the 2n lifted vertices coincident, if one exists.
std::optional<Placement> strongly_faithful_point(const ColoredGraph& g, const RealizationSpace& space);

// Uniform integer directions, none zero.
DirectionAssignment random_directions(const ColoredGraph& g, std::uint64_t seed, unsigned bits = 20);

// Tree edges share an oblique direction (mirrored across switched vertices), the
// reflection-(1,1) part is vertical; only collapsed realizations remain.
DirectionAssignment collapse_directions(const ColoredGraph& g, const RunConfig& config);

struct CircuitDirections {
  EdgeId special_edge;
  DirectionAssignment directions;
  TreeMapDecomposition decomposition;
  unsigned attempts = 0;
};

// Requires a Ross-circuit. Builds the horizontal-gadget directions, perturbs them on
// g - special_edge and induces the special edge's direction from the solution space.
CircuitDirections circuit_special_directions(const ColoredGraph& g, const RunConfig& config);

struct SpecialPair {
  DirectionAssignment directions;
  EdgeSubset basis;                  // Ross-basis after edge swaps
  std::vector<EdgeId> omitted_edges; // one special edge per Ross-circuit
  std::vector<EdgeSubset> circuits;
  unsigned attempts = 0;
};

// Requires a reflection-Laman graph; throws NotReflectionLaman or RetriesExhausted.
SpecialPair construct_special_pair(const ColoredGraph& g, const RunConfig& config);

inline DirectionAssignment special_pair(const ColoredGraph& g, const RunConfig& config) {
  return construct_special_pair(g, config).directions;
}

}  // namespace refrig
