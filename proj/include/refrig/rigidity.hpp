#pragma once

// Infinitesimal rigidity of frameworks symmetric under reflection in the y-axis.
// Velocities are symmetric too, so the unknowns are (v_0, ..., v_{n-1}) ordered
// (vx_0, vy_0, vx_1, ...).

#include "refrig/direction_network.hpp"
#include "refrig/sparsity.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace refrig {

// Squared length of Phi(gain) p_head - p_tail per quotient edge.
std::vector<Rational> edge_lengths(const ColoredGraph& g, const Placement& p);

// Row per edge: <Phi(gain) p_j - p_i, Phi(gain) v_j - v_i>.
Matrix rigidity_matrix(const ColoredGraph& g, const Placement& p);

// Same rows with v_j left untransformed. Agrees with rigidity_matrix on identity edges
// and differs on reflection edges; kept for comparison only.
Matrix untransformed_rigidity_matrix(const ColoredGraph& g, const Placement& p);

enum class RigidityVerdict { rigid, flexible, not_applicable };

std::string_view verdict_name(RigidityVerdict v);

struct RigidityCertificate {
  RigidityVerdict verdict = RigidityVerdict::not_applicable;
  std::size_t rank = 0;
  std::size_t target = 0;  // 2n - 1
  std::size_t trivial_kernel_dim = 1;
  Placement placement;
  std::vector<std::uint64_t> seeds;
};

RigidityCertificate is_infinitesimally_rigid(const ColoredGraph& g, const Placement& p);

// Rigid, and deleting any single edge leaves rank 2n - 2.
bool is_minimally_rigid(const ColoredGraph& g, const Placement& p);

Placement random_placement(std::size_t n, std::uint64_t seed, unsigned bits = 20);

struct GenericRank {
  std::size_t rank = 0;
  Placement placement;  // first sample reaching the maximum
  std::vector<std::uint64_t> seeds;
};

// Maximum exact rank over `trials` integer placements.
GenericRank generic_rank_sample(const ColoredGraph& g, unsigned trials, std::uint64_t seed, unsigned bits = 20);

inline std::size_t generic_rank(const ColoredGraph& g, unsigned trials, std::uint64_t seed) {
  return generic_rank_sample(g, trials, seed).rank;
}

// Generic rank 2n - 1 and every single-edge deletion drops it.
bool is_generically_minimally_rigid(const ColoredGraph& g, unsigned trials, std::uint64_t seed);

class CollapsedEdge : public std::invalid_argument {
 public:
  CollapsedEdge(EdgeId e, const std::string& what) : std::invalid_argument(what), edge(e) {}
  EdgeId edge;
};

// d = Phi(gain) p_j - p_i per edge; throws CollapsedEdge when some d is zero.
DirectionAssignment directions_from_points(const ColoredGraph& g, const Placement& p);

struct CertificationReport {
  bool combinatorial = false;       // reflection-Laman
  std::optional<EdgeSubset> witness; // violating edge set when the counts fail
  std::string reason;               // why the combinatorial test failed, empty otherwise
  std::size_t rank = 0;
  std::size_t target = 0;
  bool minimal = false;             // numeric minimal rigidity
  std::optional<SpecialPair> special;
  std::optional<Placement> realization;
  bool agreement = false;
  std::vector<std::uint64_t> seeds;
  std::string error;                // construction failure, if any
};

CertificationReport certify(const ColoredGraph& g, const RunConfig& config);

}  // namespace refrig
