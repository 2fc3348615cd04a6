#include "refrig/decomposition.hpp"

#include "refrig/sparsity.hpp"

#include <algorithm>
#include <functional>

namespace refrig {

namespace {

// Parity union-find with undo; no path compression so every step can be reverted.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n)
      : parent_(n), parity_(n, 0), size_(n, 1), edges_(n, 0), odd_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<VertexId>(i);
  }

  VertexId find(VertexId x, std::uint8_t& p) const {
    p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return x;
  }

  VertexId root(VertexId x) const {
    std::uint8_t p;
    return find(x, p);
  }

  // Adds an edge; records enough to undo it.
  void add(VertexId a, VertexId b, std::uint8_t gain) {
    std::uint8_t pa, pb;
    VertexId ra = find(a, pa), rb = find(b, pb);
    if (ra == rb) {
      history_.push_back({UINT32_MAX, ra, odd_[ra]});
      ++edges_[ra];
      if ((pa ^ pb) != gain) odd_[ra] = 1;
      return;
    }
    if (size_[ra] < size_[rb]) std::swap(ra, rb);
    history_.push_back({rb, ra, odd_[ra]});
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ gain;
    size_[ra] += size_[rb];
    edges_[ra] += edges_[rb] + 1;
    odd_[ra] |= odd_[rb];
  }

  void undo() {
    const auto h = history_.back();
    history_.pop_back();
    if (h.child == UINT32_MAX) {
      --edges_[h.root];
      odd_[h.root] = h.root_odd;
      return;
    }
    parent_[h.child] = h.child;
    parity_[h.child] = 0;
    size_[h.root] -= size_[h.child];
    edges_[h.root] -= edges_[h.child] + 1;
    odd_[h.root] = h.root_odd;
  }

  std::size_t component_vertices(VertexId r) const { return size_[r]; }
  std::size_t component_edges(VertexId r) const { return edges_[r]; }
  bool nontrivial(VertexId r) const { return odd_[r] != 0; }
  std::size_t vertex_count() const { return parent_.size(); }

 private:
  struct Step {
    VertexId child;
    VertexId root;
    std::uint8_t root_odd;
  };
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> edges_;
  std::vector<std::uint8_t> odd_;
  std::vector<Step> history_;
};

}  // namespace

std::optional<TreeMapDecomposition> find_tree_ref11(const ColoredGraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  if (n == 0 || m + 1 < n) return std::nullopt;
  const std::size_t tree_target = n - 1;
  if (m - tree_target != n) return std::nullopt;  // a map-graph on n vertices has n edges

  RollbackUnionFind tree(n), map(n);
  std::vector<bool> in_tree(m, false);
  std::size_t tree_edges = 0;

  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (tree_edges + (m - k) < tree_target) return false;
    if (k - tree_edges > n) return false;
    if (k == m) {
      for (VertexId v = 0; v < n; ++v) {
        if (map.root(v) != v) continue;
        if (map.component_edges(v) != map.component_vertices(v) || !map.nontrivial(v)) return false;
      }
      return true;
    }
    const auto& e = g.edge(static_cast<EdgeId>(k));
    if (tree_edges < tree_target && !e.is_loop() && tree.root(e.tail) != tree.root(e.head)) {
      tree.add(e.tail, e.head, 0);
      in_tree[k] = true;
      ++tree_edges;
      if (search(k + 1)) return true;
      --tree_edges;
      in_tree[k] = false;
      tree.undo();
    }
    map.add(e.tail, e.head, static_cast<std::uint8_t>(e.gain));
    const auto r = map.root(e.tail);
    if (map.component_edges(r) <= map.component_vertices(r) && search(k + 1)) return true;
    map.undo();
    return false;
  };

  if (!search(0)) return std::nullopt;
  TreeMapDecomposition d{EdgeSubset(m), EdgeSubset(m), {}};
  for (EdgeId k = 0; k < m; ++k) {
    if (in_tree[k]) d.tree.insert(k);
    else d.map_part.insert(k);
  }
  d.recolored = recolor_tree_identity(g, d.tree);
  return d;
}

TreeMapDecomposition decompose_tree_ref11(const ColoredGraph& g) {
  if (!is_member(g, Family::reflection_22)) throw PreconditionError("graph is not reflection-(2,2)");
  auto d = find_tree_ref11(g);
  if (!d) throw NoDecomposition("no spanning tree with reflection-(1,1) complement in a reflection-(2,2) graph");
  return std::move(*d);
}

bool lift_structure_check(const TreeMapDecomposition& d) {
  const auto& g = d.recolored;
  const std::size_t m = g.edge_count();
  if (d.tree.universe() != m || d.map_part.universe() != m) return false;
  for (EdgeId k = 0; k < m; ++k)
    if (d.tree.contains(k) == d.map_part.contains(k)) return false;
  if (!is_spanning_tree(g, d.tree)) return false;

  const LiftGraph l = lift(g);
  for (auto k : d.tree.ids()) {
    for (std::size_t s = 0; s < 2; ++s) {
      const auto& le = l.edges()[2 * k + s];
      if (LiftGraph::sheet(le.u) != LiftGraph::sheet(le.v)) return false;
    }
  }
  for (const auto& comp : classify_components(g, d.map_part)) {
    std::vector<bool> mask(l.edge_count(), false);
    for (auto k : comp.edges) mask[2 * k] = mask[2 * k + 1] = true;
    std::vector<std::uint32_t> fibre;
    for (auto v : comp.vertices) {
      fibre.push_back(LiftGraph::vertex(v, Color::identity));
      fibre.push_back(LiftGraph::vertex(v, Color::reflection));
    }
    if (!l.connects(fibre, mask)) return false;
  }
  return true;
}

EdgeSubset ross_basis(const ColoredGraph& g) {
  EdgeSubset basis(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    basis.insert(e);
    if (!is_sparse(g, Family::ross, basis)) basis.erase(e);
  }
  return basis;
}

EdgeSubset fundamental_ross_circuit(const ColoredGraph& g, const EdgeSubset& basis, EdgeId e) {
  EdgeSubset s = basis;
  s.insert(e);
  if (is_sparse(g, Family::ross, s)) throw PreconditionError("basis plus edge is still Ross-sparse");
  for (auto f : s.ids()) {
    if (f == e) continue;
    s.erase(f);
    if (is_sparse(g, Family::ross, s)) s.insert(f);
  }
  return s;
}

ReducedGraph reduce(const ColoredGraph& g, const std::vector<EdgeSubset>& circuits) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t none = SIZE_MAX;
  std::vector<std::size_t> owner(n, none);
  std::vector<bool> contract(circuits.size(), false);
  for (std::size_t c = 0; c < circuits.size(); ++c) {
    const auto ids = circuits[c].ids();
    contract[c] = !(ids.size() == 1 && g.edge(ids[0]).is_loop());
    for (auto k : ids) {
      for (auto v : {g.edge(k).tail, g.edge(k).head}) {
        if (owner[v] != none && owner[v] != c) throw std::logic_error("Ross-circuits share a vertex");
        owner[v] = c;
      }
    }
  }

  ReducedGraph out;
  out.contraction_map.assign(n, 0);
  std::vector<VertexId> circuit_vertex(circuits.size(), UINT32_MAX);
  std::vector<std::size_t> loop_order;
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    const auto c = owner[v];
    if (c != none && contract[c]) {
      if (circuit_vertex[c] == UINT32_MAX) {
        circuit_vertex[c] = next++;
        loop_order.push_back(c);
      }
      out.contraction_map[v] = circuit_vertex[c];
    } else {
      out.contraction_map[v] = next++;
    }
  }

  std::vector<Edge> edges;
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edge(k);
    const auto ct = owner[e.tail], ch = owner[e.head];
    if (ct != none && ct == ch && contract[ct]) continue;
    edges.push_back({out.contraction_map[e.tail], out.contraction_map[e.head], e.gain});
    out.edge_map.emplace_back(k);
  }
  for (auto c : loop_order) {
    edges.push_back({circuit_vertex[c], circuit_vertex[c], Color::reflection});
    out.edge_map.emplace_back(std::nullopt);
  }
  out.graph = ColoredGraph(next, std::move(edges));
  return out;
}

CircuitDecomposition find_ross_circuits(const ColoredGraph& g) {
  if (!is_member(g, Family::reflection_laman)) throw PreconditionError("graph is not reflection-Laman");
  CircuitDecomposition d;
  d.basis = ross_basis(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (d.basis.contains(e)) continue;
    auto c = fundamental_ross_circuit(g, d.basis, e);
    if (std::find(d.circuits.begin(), d.circuits.end(), c) != d.circuits.end()) continue;
    if (!is_ross_circuit(extract_subgraph(g, c).graph))
      throw std::logic_error("fundamental circuit is not a Ross-circuit");
    d.circuits.push_back(std::move(c));
    d.circuit_omitted_edge.push_back(e);
  }
  auto r = reduce(g, d.circuits);
  d.reduced = std::move(r.graph);
  d.contraction_map = std::move(r.contraction_map);
  return d;
}

}  // namespace refrig
