#pragma once

// Z/2Z-colored multigraphs, their symmetric double covers, and the map rho.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace refrig {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

// Element of Z/2Z: identity or the reflection.
enum class Color : std::uint8_t { identity = 0, reflection = 1 };

constexpr Color operator+(Color a, Color b) {
  return static_cast<Color>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Color& operator+=(Color& a, Color b) { return a = a + b; }
constexpr int to_int(Color c) { return static_cast<int>(c); }
constexpr Color color_from_bit(unsigned bit) { return (bit & 1u) ? Color::reflection : Color::identity; }

struct Edge {
  VertexId tail;
  VertexId head;
  Color gain;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(std::size_t vertex_count, std::vector<Edge> edges = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  ColoredGraph with_edge(Edge e) const;
  ColoredGraph without_edge(EdgeId e) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// A set of edges of a fixed graph, stored as a membership vector over the edge list.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  explicit EdgeSubset(std::size_t edge_count) : in_(edge_count, false) {}
  EdgeSubset(std::size_t edge_count, std::initializer_list<EdgeId> ids);
  EdgeSubset(std::size_t edge_count, std::span<const EdgeId> ids);

  static EdgeSubset all(std::size_t edge_count);
  static EdgeSubset from_mask(std::size_t edge_count, std::uint64_t mask);

  std::size_t universe() const { return in_.size(); }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(EdgeId e) const { return e < in_.size() && in_[e]; }
  void insert(EdgeId e) { in_.at(e) = true; }
  void erase(EdgeId e) { in_.at(e) = false; }

  std::vector<EdgeId> ids() const;
  EdgeSubset complement() const;
  std::uint64_t mask() const;

  friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

 private:
  std::vector<bool> in_;
};

// Vertex i_g of the lift has index 2*i + g.
struct LiftedEdge {
  std::uint32_t u;
  std::uint32_t v;
  EdgeId quotient_edge;
  std::uint8_t sheet;  // sheet of the tail endpoint
};

class LiftGraph {
 public:
  LiftGraph(std::size_t quotient_vertices, std::vector<LiftedEdge> edges)
      : quotient_n_(quotient_vertices), edges_(std::move(edges)) {}

  std::size_t vertex_count() const { return 2 * quotient_n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const LiftedEdge> edges() const { return edges_; }

  static std::uint32_t vertex(VertexId i, Color sheet) { return 2 * i + static_cast<std::uint32_t>(sheet); }
  static VertexId quotient_vertex(std::uint32_t v) { return v / 2; }
  static Color sheet(std::uint32_t v) { return color_from_bit(v & 1u); }
  static std::uint32_t swap_sheet(std::uint32_t v) { return v ^ 1u; }

  // Index of the image of lifted edge k under the sheet swap.
  std::size_t swapped_edge(std::size_t k) const { return k ^ 1u; }

  // Number of connected components, optionally restricted to the lifts of `subset`.
  std::size_t component_count() const;
  bool connects(std::span<const std::uint32_t> vertices, const std::vector<bool>& edge_mask) const;

 private:
  std::size_t quotient_n_;
  std::vector<LiftedEdge> edges_;
};

// For each quotient edge k, lifted edges 2k = (i_0, j_gain) and 2k+1 = (i_1, j_{gain+1}).
LiftGraph lift(const ColoredGraph& g);

// Recovers the colored quotient of a lift produced by `lift`.
ColoredGraph quotient(const LiftGraph& l);

class NotACycle : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sum of gains over an edge set whose support is a single closed walk (even degrees, connected).
Color rho(const ColoredGraph& g, const EdgeSubset& cycle);

struct Component {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool rho_trivial;
};

// Components of the edge-induced subgraph on `s`, ordered by smallest vertex.
std::vector<Component> classify_components(const ColoredGraph& g, const EdgeSubset& s);

class NotASpanningTree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sheet label per vertex with s(root)=0 and s(j) = s(i) + gain along tree edges.
std::vector<Color> switching_potential(const ColoredGraph& g, const EdgeSubset& tree);

// Recolors so that tree edges carry the identity and every non-tree edge carries
// the rho-image of its fundamental cycle.
ColoredGraph recolor_tree_identity(const ColoredGraph& g, const EdgeSubset& tree);

bool is_spanning_tree(const ColoredGraph& g, const EdgeSubset& tree);

struct Subgraph {
  ColoredGraph graph;
  std::vector<VertexId> vertex_map;  // local -> original
  std::vector<EdgeId> edge_map;      // local -> original
};

// Edge-induced subgraph relabelled densely in increasing original vertex order.
Subgraph extract_subgraph(const ColoredGraph& g, const EdgeSubset& s);

}  // namespace refrig
