#include "refrig/gain_graph.hpp"

#include "union_find.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace refrig {

ColoredGraph::ColoredGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto& e = edges_[k];
    if (e.tail >= n_ || e.head >= n_)
      throw GraphError("edge " + std::to_string(k) + " has an endpoint outside [0, " + std::to_string(n_) + ")");
  }
}

ColoredGraph ColoredGraph::with_edge(Edge e) const {
  auto edges = edges_;
  edges.push_back(e);
  return ColoredGraph(n_, std::move(edges));
}

ColoredGraph ColoredGraph::without_edge(EdgeId e) const {
  auto edges = edges_;
  edges.erase(edges.begin() + e);
  return ColoredGraph(n_, std::move(edges));
}

EdgeSubset::EdgeSubset(std::size_t edge_count, std::initializer_list<EdgeId> ids) : in_(edge_count, false) {
  for (auto e : ids) insert(e);
}

EdgeSubset::EdgeSubset(std::size_t edge_count, std::span<const EdgeId> ids) : in_(edge_count, false) {
  for (auto e : ids) insert(e);
}

EdgeSubset EdgeSubset::all(std::size_t edge_count) {
  EdgeSubset s(edge_count);
  s.in_.assign(edge_count, true);
  return s;
}

EdgeSubset EdgeSubset::from_mask(std::size_t edge_count, std::uint64_t mask) {
  EdgeSubset s(edge_count);
  for (std::size_t k = 0; k < edge_count && k < 64; ++k)
    if (mask >> k & 1u) s.in_[k] = true;
  return s;
}

std::size_t EdgeSubset::size() const { return static_cast<std::size_t>(std::count(in_.begin(), in_.end(), true)); }

std::vector<EdgeId> EdgeSubset::ids() const {
  std::vector<EdgeId> out;
  for (std::size_t k = 0; k < in_.size(); ++k)
    if (in_[k]) out.push_back(static_cast<EdgeId>(k));
  return out;
}

EdgeSubset EdgeSubset::complement() const {
  EdgeSubset s(in_.size());
  for (std::size_t k = 0; k < in_.size(); ++k) s.in_[k] = !in_[k];
  return s;
}

std::uint64_t EdgeSubset::mask() const {
  if (in_.size() > 64) throw std::length_error("edge subset does not fit a 64-bit mask");
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < in_.size(); ++k)
    if (in_[k]) m |= std::uint64_t{1} << k;
  return m;
}

LiftGraph lift(const ColoredGraph& g) {
  std::vector<LiftedEdge> edges;
  edges.reserve(2 * g.edge_count());
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edge(k);
    for (std::uint8_t s = 0; s < 2; ++s) {
      const Color sheet = color_from_bit(s);
      edges.push_back({LiftGraph::vertex(e.tail, sheet), LiftGraph::vertex(e.head, sheet + e.gain), k, s});
    }
  }
  return LiftGraph(g.vertex_count(), std::move(edges));
}

ColoredGraph quotient(const LiftGraph& l) {
  std::vector<Edge> edges;
  for (const auto& le : l.edges()) {
    if (le.sheet != 0) continue;
    edges.push_back({LiftGraph::quotient_vertex(le.u), LiftGraph::quotient_vertex(le.v), LiftGraph::sheet(le.v)});
  }
  return ColoredGraph(l.vertex_count() / 2, std::move(edges));
}

std::size_t LiftGraph::component_count() const {
  detail::ParityUnionFind uf(vertex_count());
  std::size_t c = vertex_count();
  for (const auto& e : edges_)
    if (uf.unite(e.u, e.v, 0)) --c;
  return c;
}

bool LiftGraph::connects(std::span<const std::uint32_t> vertices, const std::vector<bool>& edge_mask) const {
  detail::ParityUnionFind uf(vertex_count());
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if (edge_mask[k]) uf.unite(edges_[k].u, edges_[k].v, 0);
  for (auto v : vertices)
    if (uf.find(v) != uf.find(vertices.front())) return false;
  return true;
}

Color rho(const ColoredGraph& g, const EdgeSubset& cycle) {
  if (cycle.empty()) throw NotACycle("empty edge set is not a cycle");
  std::vector<int> degree(g.vertex_count(), 0);
  detail::ParityUnionFind uf(g.vertex_count());
  Color sum = Color::identity;
  const auto ids = cycle.ids();
  for (auto k : ids) {
    const auto& e = g.edge(k);
    degree[e.tail] += 1;
    degree[e.head] += 1;
    uf.unite(e.tail, e.head, 0);
    sum += e.gain;
  }
  for (std::size_t v = 0; v < degree.size(); ++v)
    if (degree[v] % 2 != 0) throw NotACycle("vertex " + std::to_string(v) + " has odd degree in the cycle");
  const auto root = uf.find(g.edge(ids.front()).tail);
  for (auto k : ids)
    if (uf.find(g.edge(k).tail) != root) throw NotACycle("edge set is not connected");
  return sum;
}

std::vector<Component> classify_components(const ColoredGraph& g, const EdgeSubset& s) {
  detail::ParityUnionFind uf(g.vertex_count());
  std::vector<bool> spanned(g.vertex_count(), false);
  const auto ids = s.ids();
  for (auto k : ids) {
    const auto& e = g.edge(k);
    spanned[e.tail] = spanned[e.head] = true;
    uf.unite(e.tail, e.head, static_cast<std::uint8_t>(e.gain));
  }
  std::map<std::uint32_t, std::size_t> index_of_root;
  std::vector<Component> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!spanned[v]) continue;
    const auto r = uf.find(v);
    auto [it, fresh] = index_of_root.try_emplace(r, out.size());
    if (fresh) out.push_back({{}, {}, !uf.nontrivial(v)});
    out[it->second].vertices.push_back(v);
  }
  for (auto k : ids) out[index_of_root.at(uf.find(g.edge(k).tail))].edges.push_back(k);
  return out;
}

bool is_spanning_tree(const ColoredGraph& g, const EdgeSubset& tree) {
  if (tree.universe() != g.edge_count()) return false;
  const auto ids = tree.ids();
  if (ids.size() + 1 != std::max<std::size_t>(g.vertex_count(), 1)) return false;
  detail::ParityUnionFind uf(g.vertex_count());
  for (auto k : ids) {
    const auto& e = g.edge(k);
    if (e.is_loop() || !uf.unite(e.tail, e.head, 0)) return false;
  }
  return true;
}

std::vector<Color> switching_potential(const ColoredGraph& g, const EdgeSubset& tree) {
  if (!is_spanning_tree(g, tree)) throw NotASpanningTree("edge set is not a spanning tree");
  std::vector<std::vector<std::pair<VertexId, Color>>> adj(g.vertex_count());
  for (auto k : tree.ids()) {
    const auto& e = g.edge(k);
    adj[e.tail].push_back({e.head, e.gain});
    adj[e.head].push_back({e.tail, e.gain});
  }
  std::vector<Color> s(g.vertex_count(), Color::identity);
  std::vector<bool> seen(g.vertex_count(), false);
  if (g.vertex_count() == 0) return s;
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    const auto v = q.front();
    q.pop();
    for (auto [w, gain] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      s[w] = s[v] + gain;
      q.push(w);
    }
  }
  return s;
}

ColoredGraph recolor_tree_identity(const ColoredGraph& g, const EdgeSubset& tree) {
  const auto s = switching_potential(g, tree);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.gain = e.gain + s[e.tail] + s[e.head];
  return ColoredGraph(g.vertex_count(), std::move(edges));
}

Subgraph extract_subgraph(const ColoredGraph& g, const EdgeSubset& s) {
  std::vector<VertexId> local(g.vertex_count(), UINT32_MAX);
  const auto ids = s.ids();
  for (auto k : ids) {
    local[g.edge(k).tail] = 0;
    local[g.edge(k).head] = 0;
  }
  Subgraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (local[v] == UINT32_MAX) continue;
    local[v] = static_cast<VertexId>(out.vertex_map.size());
    out.vertex_map.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto k : ids) {
    const auto& e = g.edge(k);
    edges.push_back({local[e.tail], local[e.head], e.gain});
    out.edge_map.push_back(k);
  }
  out.graph = ColoredGraph(out.vertex_map.size(), std::move(edges));
  return out;
}

}  // namespace refrig
