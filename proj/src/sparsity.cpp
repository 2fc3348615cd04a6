#include "refrig/sparsity.hpp"

#include "union_find.hpp"

#include <bit>
#include <stdexcept>

namespace refrig {

namespace {

// Evaluates counts for edge masks of one graph without reallocating.
class MaskCounter {
 public:
  explicit MaskCounter(const ColoredGraph& g) : g_(g) {
    if (g.edge_count() > 63) throw std::length_error("subset enumeration supports at most 63 edges");
    touched_.reserve(g.vertex_count());
    parent_.resize(g.vertex_count());
    parity_.resize(g.vertex_count());
    odd_.resize(g.vertex_count());
    mark_.assign(g.vertex_count(), 0);
  }

  SubgraphCounts operator()(std::uint64_t mask) {
    ++stamp_;
    touched_.clear();
    long m = 0;
    for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
      const auto k = static_cast<EdgeId>(std::countr_zero(rest));
      const auto& e = g_.edge(k);
      touch(e.tail);
      touch(e.head);
      unite(e.tail, e.head, static_cast<std::uint8_t>(e.gain));
      ++m;
    }
    SubgraphCounts c;
    c.vertices = static_cast<long>(touched_.size());
    c.edges = m;
    for (auto v : touched_) {
      if (parent_[v] != v) continue;
      if (odd_[v]) ++c.nontrivial_components;
      else ++c.trivial_components;
    }
    return c;
  }

 private:
  void touch(VertexId v) {
    if (mark_[v] == stamp_) return;
    mark_[v] = stamp_;
    parent_[v] = v;
    parity_[v] = 0;
    odd_[v] = 0;
    touched_.push_back(v);
  }

  VertexId find(VertexId x, std::uint8_t& p) {
    p = 0;
    while (parent_[x] != x) {
      p ^= parity_[x];
      x = parent_[x];
    }
    return x;
  }

  void unite(VertexId a, VertexId b, std::uint8_t gain) {
    std::uint8_t pa, pb;
    const auto ra = find(a, pa), rb = find(b, pb);
    if (ra == rb) {
      if ((pa ^ pb) != gain) odd_[ra] = 1;
      return;
    }
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ gain;
    odd_[ra] |= odd_[rb];
  }

  const ColoredGraph& g_;
  std::vector<VertexId> touched_;
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint8_t> odd_;
  std::vector<std::uint64_t> mark_;
  std::uint64_t stamp_ = 0;
};

CountReport failure(std::size_t m, std::uint64_t mask, const SubgraphCounts& c, long bound) {
  return {false, EdgeSubset::from_mask(m, mask), c, bound};
}

std::uint64_t within_mask(const ColoredGraph& g, const EdgeSubset& within) {
  if (within.universe() != g.edge_count()) throw std::invalid_argument("edge subset belongs to another graph");
  return within.mask();
}

// Drops edges (in order) while the subset keeps violating the bound.
std::uint64_t shrink_witness(MaskCounter& count, Family f, std::uint64_t mask) {
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    const std::uint64_t bit = rest & (~rest + 1);
    const std::uint64_t smaller = mask & ~bit;
    if (smaller == 0) continue;
    const auto c = count(smaller);
    if (c.edges > subgraph_bound(f, c)) mask = smaller;
  }
  return mask;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::reflection_laman: return "reflection-laman";
    case Family::ross: return "ross";
    case Family::reflection_22: return "reflection-22";
    case Family::reflection_11: return "reflection-11";
    case Family::plain_21: return "plain-21";
    case Family::plain_22: return "plain-22";
    case Family::laman_23: return "laman-23";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : all_families)
    if (family_name(f) == name) return f;
  return std::nullopt;
}

SubgraphCounts count_subgraph(const ColoredGraph& g, const EdgeSubset& s) {
  SubgraphCounts c;
  for (const auto& comp : classify_components(g, s)) {
    c.vertices += static_cast<long>(comp.vertices.size());
    c.edges += static_cast<long>(comp.edges.size());
    if (comp.rho_trivial) ++c.trivial_components;
    else ++c.nontrivial_components;
  }
  return c;
}

long subgraph_bound(Family f, const SubgraphCounts& c) {
  const long n = c.vertices, c1 = c.nontrivial_components, c0 = c.trivial_components;
  switch (f) {
    case Family::reflection_laman: return 2 * n - c1 - 3 * c0;
    case Family::ross: return 2 * n - 2 * c1 - 3 * c0;
    case Family::reflection_22: return 2 * n - c1 - 2 * c0;
    case Family::reflection_11: return n - c0;
    case Family::plain_21: return 2 * n - 1;
    case Family::plain_22: return 2 * n - 2;
    case Family::laman_23: return 2 * n - 3;
  }
  return 0;
}

long global_target(Family f, std::size_t n_) {
  const long n = static_cast<long>(n_);
  switch (f) {
    case Family::reflection_laman:
    case Family::reflection_22:
    case Family::plain_21: return 2 * n - 1;
    case Family::ross:
    case Family::plain_22: return 2 * n - 2;
    case Family::reflection_11: return n;
    case Family::laman_23: return 2 * n - 3;
  }
  return 0;
}

CountReport check_counts(const ColoredGraph& g, Family f) {
  return check_counts(g, f, EdgeSubset::all(g.edge_count()));
}

CountReport check_counts(const ColoredGraph& g, Family f, const EdgeSubset& within) {
  const std::uint64_t allowed = within_mask(g, within);
  MaskCounter count(g);
  std::vector<std::uint64_t> bits;
  for (std::uint64_t rest = allowed; rest; rest &= rest - 1) bits.push_back(rest & (~rest + 1));
  const std::size_t w = bits.size();
  if (w > 30) throw std::length_error("exhaustive subset scan limited to 30 edges");
  for (std::size_t k = 1; k <= w; ++k) {
    // Gosper's hack over w-bit selections of exactly k positions.
    std::uint64_t sel = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << w;
    while (sel < limit) {
      std::uint64_t mask = 0;
      for (std::uint64_t r = sel; r; r &= r - 1) mask |= bits[static_cast<std::size_t>(std::countr_zero(r))];
      const auto c = count(mask);
      const long b = subgraph_bound(f, c);
      if (c.edges > b) return failure(g.edge_count(), mask, c, b);
      const std::uint64_t lo = sel & (~sel + 1);
      const std::uint64_t hi = sel + lo;
      sel = (((hi ^ sel) >> 2) / lo) | hi;
    }
  }
  return {};
}

CountReport connected_subgraph_check(const ColoredGraph& g, Family f) {
  return connected_subgraph_check(g, f, EdgeSubset::all(g.edge_count()));
}

CountReport connected_subgraph_check(const ColoredGraph& g, Family f, const EdgeSubset& within) {
  const std::uint64_t allowed = within_mask(g, within);
  const std::size_t m = g.edge_count();
  MaskCounter count(g);

  // Edge adjacency (sharing an endpoint) restricted to `allowed`.
  std::vector<std::uint64_t> adj(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    if (!(allowed >> a & 1u)) continue;
    const auto& ea = g.edge(static_cast<EdgeId>(a));
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !(allowed >> b & 1u)) continue;
      const auto& eb = g.edge(static_cast<EdgeId>(b));
      if (ea.tail == eb.tail || ea.tail == eb.head || ea.head == eb.tail || ea.head == eb.head)
        adj[a] |= std::uint64_t{1} << b;
    }
  }

  std::optional<std::uint64_t> found;
  // Enumerates each connected edge set once, rooted at its smallest edge.
  auto extend = [&](auto&& self, std::uint64_t subset, std::uint64_t ext, std::uint64_t closed,
                    std::uint64_t above) -> void {
    const auto c = count(subset);
    if (c.edges > subgraph_bound(f, c)) {
      found = subset;
      return;
    }
    while (ext && !found) {
      const std::uint64_t wbit = ext & (~ext + 1);
      ext &= ~wbit;
      const auto w = static_cast<std::size_t>(std::countr_zero(wbit));
      const std::uint64_t exclusive = adj[w] & ~closed & above;
      self(self, subset | wbit, ext | exclusive, closed | adj[w] | wbit, above);
    }
  };

  for (std::size_t v = 0; v < m && !found; ++v) {
    if (!(allowed >> v & 1u)) continue;
    const std::uint64_t vbit = std::uint64_t{1} << v;
    const std::uint64_t above = allowed & ~((vbit << 1) - 1);
    extend(extend, vbit, adj[v] & above, adj[v] | vbit, above);
  }
  if (!found) return {};
  const std::uint64_t w = shrink_witness(count, f, *found);
  const auto c = count(w);
  return failure(m, w, c, subgraph_bound(f, c));
}

bool is_sparse(const ColoredGraph& g, Family f, const EdgeSubset& within) {
  return connected_subgraph_check(g, f, within).pass;
}

bool is_map_graph(const ColoredGraph& g) {
  detail::ParityUnionFind uf(g.vertex_count());
  for (const auto& e : g.edges()) uf.unite(e.tail, e.head, 0);
  std::vector<long> edges_in(g.vertex_count(), 0), vertices_in(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) ++vertices_in[uf.find(v)];
  for (const auto& e : g.edges()) ++edges_in[uf.find(e.tail)];
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (uf.find(v) == v && edges_in[v] != vertices_in[v]) return false;
  return true;
}

bool is_member(const ColoredGraph& g, Family f) {
  if (f == Family::reflection_11) {
    if (!is_map_graph(g)) return false;
    for (const auto& comp : classify_components(g, EdgeSubset::all(g.edge_count())))
      if (comp.rho_trivial) return false;
    return true;
  }
  if (static_cast<long>(g.edge_count()) != global_target(f, g.vertex_count())) return false;
  return connected_subgraph_check(g, f).pass;
}

bool is_ross_circuit(const ColoredGraph& g) {
  if (static_cast<long>(g.edge_count()) != global_target(Family::reflection_laman, g.vertex_count())) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!is_member(g.without_edge(e), Family::ross)) return false;
  return true;
}

}  // namespace refrig
