#include "refrig/direction_network.hpp"

#include "refrig/sparsity.hpp"

#include <algorithm>

namespace refrig {

namespace {

struct Term {
  std::size_t index;
  Rational coeff;
};
using Functional = std::vector<Term>;

std::size_t x_of(VertexId v) { return 2 * static_cast<std::size_t>(v); }
std::size_t y_of(VertexId v) { return 2 * static_cast<std::size_t>(v) + 1; }

void add_term(Functional& f, std::size_t index, const Rational& c) {
  for (auto& t : f)
    if (t.index == index) {
      t.coeff += c;
      return;
    }
  f.push_back({index, c});
}

// x- and y-coordinate of Phi(gain) p_head - p_tail as functionals of the unknowns.
std::pair<Functional, Functional> edge_functionals(const Edge& e) {
  Functional fx, fy;
  add_term(fx, x_of(e.head), e.gain == Color::reflection ? -1 : 1);
  add_term(fx, x_of(e.tail), -1);
  add_term(fy, y_of(e.head), 1);
  add_term(fy, y_of(e.tail), -1);
  std::erase_if(fx, [](const Term& t) { return sgn(t.coeff) == 0; });
  std::erase_if(fy, [](const Term& t) { return sgn(t.coeff) == 0; });
  return {fx, fy};
}

Rational evaluate(const Functional& f, const std::vector<Rational>& x) {
  Rational s = 0;
  for (const auto& t : f) s += t.coeff * x[t.index];
  return s;
}

// Functionals of which at least one must be nonzero at the chosen point.
using Constraint = std::vector<Functional>;

// sum_k M^k b_k for the first M >= 2^16 that keeps every constraint alive.
std::optional<std::vector<Rational>> avoid_subspaces(const std::vector<std::vector<Rational>>& basis,
                                                     const std::vector<Constraint>& constraints,
                                                     std::size_t coordinates) {
  std::vector<std::vector<Rational>> values;
  for (const auto& c : constraints) {
    bool live = false;
    for (const auto& f : c) {
      std::vector<Rational> v;
      bool nonzero = false;
      for (const auto& b : basis) {
        v.push_back(evaluate(f, b));
        nonzero |= sgn(v.back()) != 0;
      }
      if (nonzero) {
        values.push_back(std::move(v));
        live = true;
        break;
      }
    }
    if (!live) return std::nullopt;
  }
  const std::size_t tries = values.size() * std::max<std::size_t>(basis.size(), 1) + 1;
  Integer M = Integer(1) << 16;
  for (std::size_t t = 0; t < tries; ++t, ++M) {
    std::vector<Rational> powers;
    Rational pw = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      powers.push_back(pw);
      pw *= M;
    }
    bool ok = true;
    for (const auto& v : values) {
      Rational s = 0;
      for (std::size_t k = 0; k < v.size(); ++k) s += powers[k] * v[k];
      if (sgn(s) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Rational> point(coordinates, 0);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t i = 0; i < coordinates; ++i) point[i] += powers[k] * basis[k][i];
    return point;
  }
  return std::nullopt;
}

Vec2 primitive(const Vec2& v) {
  const auto row = primitive_integer_row({v.x, v.y});
  return {Rational(row[0]), Rational(row[1])};
}

Rational max_abs(const Vec2& v) {
  const Rational ax = abs(v.x), ay = abs(v.y);
  return ax > ay ? ax : ay;
}

// Edges of the unique cycle of a connected map-graph component (leaf stripping).
std::vector<EdgeId> cycle_edges(const ColoredGraph& g, const Component& comp) {
  std::vector<int> degree(g.vertex_count(), 0);
  std::vector<bool> alive(g.edge_count(), false);
  for (auto k : comp.edges) {
    alive[k] = true;
    degree[g.edge(k).tail] += 1;
    degree[g.edge(k).head] += 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto k : comp.edges) {
      if (!alive[k]) continue;
      const auto& e = g.edge(k);
      if (e.is_loop()) continue;
      if (degree[e.tail] == 1 || degree[e.head] == 1) {
        alive[k] = false;
        degree[e.tail] -= 1;
        degree[e.head] -= 1;
        changed = true;
      }
    }
  }
  std::vector<EdgeId> out;
  for (auto k : comp.edges)
    if (alive[k]) out.push_back(k);
  return out;
}

ColoredGraph restrict_edges(const ColoredGraph& g, const EdgeSubset& keep) {
  std::vector<Edge> edges;
  for (auto k : keep.ids()) edges.push_back(g.edge(k));
  return ColoredGraph(g.vertex_count(), std::move(edges));
}

DirectionAssignment restrict_directions(const DirectionAssignment& d, const EdgeSubset& keep) {
  DirectionAssignment out;
  for (auto k : keep.ids()) out.push_back(d[k]);
  return out;
}

}  // namespace

Vec2 edge_vector(const Edge& e, const Placement& p) {
  const Vec2& head = p[e.head];
  const Vec2 moved = e.gain == Color::reflection ? mirror(head) : head;
  return moved - p[e.tail];
}

Placement to_placement(const std::vector<Rational>& coordinates) {
  Placement p;
  for (std::size_t i = 0; i + 1 < coordinates.size(); i += 2) p.push_back({coordinates[i], coordinates[i + 1]});
  return p;
}

std::vector<Rational> to_coordinates(const Placement& p) {
  std::vector<Rational> out;
  for (const auto& v : p) {
    out.push_back(v.x);
    out.push_back(v.y);
  }
  return out;
}

DirectionAssignment perp(const DirectionAssignment& d) {
  DirectionAssignment out;
  out.reserve(d.size());
  for (const auto& v : d) out.push_back(refrig::perp(v));
  return out;
}

Matrix build_system(const ColoredGraph& g, const DirectionAssignment& d) {
  if (d.size() != g.edge_count())
    throw std::invalid_argument("direction assignment has " + std::to_string(d.size()) + " entries for " +
                                std::to_string(g.edge_count()) + " edges");
  Matrix a(g.edge_count(), 2 * g.vertex_count());
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    if (d[k].is_zero()) throw ZeroDirection("edge " + std::to_string(k) + " has the zero direction");
    const Vec2 normal = refrig::perp(d[k]);
    const auto [fx, fy] = edge_functionals(g.edge(k));
    for (const auto& t : fx) a(k, t.index) += normal.x * t.coeff;
    for (const auto& t : fy) a(k, t.index) += normal.y * t.coeff;
  }
  return a;
}

RealizationSpace realization_space(const ColoredGraph& g, const DirectionAssignment& d) {
  const Matrix a = build_system(g, d);
  RealizationSpace s;
  for (auto& v : nullspace(a)) {
    std::vector<Rational> q;
    q.reserve(v.size());
    for (auto& x : v) q.emplace_back(x);
    s.basis.push_back(std::move(q));
  }
  s.rank = a.cols() - s.basis.size();
  return s;
}

PairClassification classify(const ColoredGraph& g, const RealizationSpace& space) {
  PairClassification c;
  c.dimension = space.dimension();
  c.collapsed_only = c.dimension == 1;
  c.never_collapsed.assign(g.edge_count(), false);
  std::vector<Constraint> constraints;
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    auto [fx, fy] = edge_functionals(g.edge(k));
    for (const auto& b : space.basis)
      if (sgn(evaluate(fx, b)) != 0 || sgn(evaluate(fy, b)) != 0) c.never_collapsed[k] = true;
    constraints.push_back({std::move(fx), std::move(fy)});
  }
  c.faithful_exists = std::all_of(c.never_collapsed.begin(), c.never_collapsed.end(), [](bool b) { return b; });
  if (c.faithful_exists) {
    auto point = avoid_subspaces(space.basis, constraints, 2 * g.vertex_count());
    if (!point) throw std::logic_error("no faithful point found although every edge is somewhere uncollapsed");
    c.witness = to_placement(*point);
  }
  return c;
}

PairClassification classify(const ColoredGraph& g, const DirectionAssignment& d) {
  return classify(g, realization_space(g, d));
}

bool is_special_pair(const ColoredGraph& g, const DirectionAssignment& d) {
  if (!classify(g, d).faithful_exists) return false;
  return realization_space(g, perp(d)).dimension() == 1;
}

Placement generic_point(const RealizationSpace& space, std::size_t vertex_count) {
  return to_placement(*avoid_subspaces(space.basis, {}, 2 * vertex_count));
}

std::optional<Placement> strongly_faithful_point(const ColoredGraph& g, const RealizationSpace& space) {
  std::vector<Constraint> constraints;
  const std::size_t n = g.vertex_count();
  for (VertexId i = 0; i < n; ++i) {
    // i_0 versus i_1
    constraints.push_back({Functional{{x_of(i), Rational(2)}}});
    for (VertexId j = i + 1; j < n; ++j) {
      // i_0 versus j_0 (and i_1 versus j_1), then i_0 versus j_1
      constraints.push_back({Functional{{x_of(j), 1}, {x_of(i), -1}}, Functional{{y_of(j), 1}, {y_of(i), -1}}});
      constraints.push_back({Functional{{x_of(j), -1}, {x_of(i), -1}}, Functional{{y_of(j), 1}, {y_of(i), -1}}});
    }
  }
  auto point = avoid_subspaces(space.basis, constraints, 2 * n);
  if (!point) return std::nullopt;
  return to_placement(*point);
}

DirectionAssignment random_directions(const ColoredGraph& g, std::uint64_t seed, unsigned bits) {
  Sampler s(seed, bits);
  DirectionAssignment d;
  for (std::size_t k = 0; k < g.edge_count(); ++k) d.push_back(s.nonzero_vector());
  return d;
}

DirectionAssignment collapse_directions(const ColoredGraph& g, const RunConfig& config) {
  const auto dec = decompose_tree_ref11(g);
  const auto potential = switching_potential(g, dec.tree);
  Sampler sampler(mix_seed(config.seed, 0xC011A95E), config.sample_bits);
  for (unsigned attempt = 0; attempt < config.retries; ++attempt) {
    const Vec2 v = sampler.oblique_vector();
    DirectionAssignment d(g.edge_count());
    for (EdgeId k = 0; k < g.edge_count(); ++k) {
      if (dec.tree.contains(k)) {
        d[k] = potential[g.edge(k).tail] == Color::reflection ? mirror(v) : v;
      } else {
        d[k] = Vec2(0, 1);
      }
    }
    if (classify(g, d).collapsed_only) return d;
  }
  throw RetriesExhausted("collapse directions failed verification");
}

CircuitDirections circuit_special_directions(const ColoredGraph& g, const RunConfig& config) {
  if (!is_ross_circuit(g)) throw PreconditionError("graph is not a Ross-circuit");
  auto dec = decompose_tree_ref11(g);
  const auto potential = switching_potential(g, dec.tree);
  const auto& recolored = dec.recolored;

  // One special edge per component of the reflection-(1,1) part: the first edge on its
  // cycle carrying the reflection after recoloring.
  const auto components = classify_components(recolored, dec.map_part);
  std::vector<EdgeId> special;
  for (const auto& comp : components) {
    std::optional<EdgeId> pick;
    for (auto k : cycle_edges(recolored, comp))
      if (recolored.edge(k).gain == Color::reflection) {
        pick = k;
        break;
      }
    if (!pick) throw std::logic_error("reflection-(1,1) component without a reflection edge on its cycle");
    special.push_back(*pick);
  }
  const EdgeId removed = special.front();

  Sampler sampler(mix_seed(config.seed, 0xC1AC017), config.sample_bits);
  const Rational unit_perturbation = Rational(1, Integer(1) << (config.epsilon_bits + config.sample_bits));

  // Gadget directions in switched coordinates, mapped back through the potential.
  const Vec2 v = sampler.oblique_vector();
  DirectionAssignment base(g.edge_count());
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    Vec2 dir;
    if (dec.tree.contains(k)) {
      dir = v;
    } else if (k != removed && std::find(special.begin(), special.end(), k) != special.end()) {
      dir = Vec2(Rational(1), Rational(sampler.nonzero_integer()) * unit_perturbation);
    } else {
      dir = Vec2(1, 0);
    }
    base[k] = potential[g.edge(k).tail] == Color::reflection ? mirror(dir) : dir;
  }

  const EdgeSubset rest = EdgeSubset(g.edge_count(), {removed}).complement();
  const ColoredGraph reduced = restrict_edges(g, rest);
  const Edge& removed_edge = g.edge(removed);

  Rational scale = Rational(1, Integer(1) << (config.epsilon_bits + config.sample_bits));
  const Rational shrink = Rational(1, Integer(1) << config.epsilon_shrink_bits);
  for (unsigned attempt = 0; attempt < config.retries; ++attempt, scale *= shrink) {
    DirectionAssignment d = base;
    for (EdgeId k = 0; k < g.edge_count(); ++k) {
      if (k == removed) continue;
      const Rational size = max_abs(base[k]) * scale;
      d[k] = base[k] + Vec2(size * sampler.integer(), size * sampler.integer());
      if (d[k].is_zero()) d[k] = base[k];
    }

    // (a) two-dimensional space on g - removed inducing a single direction
    const auto space = realization_space(reduced, restrict_directions(d, rest));
    if (space.dimension() != 2) continue;
    std::optional<Vec2> induced;
    bool well_defined = true;
    for (const auto& b : space.basis) {
      const Vec2 w = edge_vector(removed_edge, to_placement(b));
      if (w.is_zero()) continue;
      if (!induced) induced = w;
      else if (!parallel(*induced, w)) well_defined = false;
    }
    if (!induced || !well_defined) continue;
    d[removed] = primitive(*induced);

    // (b) faithful, (c) perpendicular network collapses
    if (!classify(g, d).faithful_exists) continue;
    if (realization_space(g, perp(d)).dimension() != 1) continue;
    return {removed, std::move(d), std::move(dec), attempt + 1};
  }
  throw RetriesExhausted("circuit special directions failed verification after " +
                         std::to_string(config.retries) + " attempts");
}

SpecialPair construct_special_pair(const ColoredGraph& g, const RunConfig& config) {
  if (!is_member(g, Family::reflection_laman)) throw NotReflectionLaman("graph is not reflection-Laman");
  const auto circuits = find_ross_circuits(g);
  const std::size_t m = g.edge_count();

  std::vector<Subgraph> pieces;
  for (const auto& c : circuits.circuits) pieces.push_back(extract_subgraph(g, c));

  for (unsigned attempt = 0; attempt < config.retries; ++attempt) {
    RunConfig local = config;
    local.seed = mix_seed(config.seed, attempt);
    Sampler sampler(mix_seed(local.seed, 0x5BEC1A1), config.sample_bits);

    DirectionAssignment d(m);
    std::vector<bool> assigned(m, false);
    SpecialPair out{{}, EdgeSubset::all(m), {}, circuits.circuits, attempt + 1};

    bool circuits_ok = true;
    for (std::size_t c = 0; c < pieces.size(); ++c) {
      RunConfig per_circuit = local;
      per_circuit.seed = mix_seed(local.seed, 1000 + c);
      CircuitDirections cd;
      try {
        cd = circuit_special_directions(pieces[c].graph, per_circuit);
      } catch (const RetriesExhausted&) {
        circuits_ok = false;
        break;
      }
      // Swap: the circuit's special edge leaves the basis, its inducing edge enters.
      const EdgeId special = pieces[c].edge_map[cd.special_edge];
      out.basis.erase(special);
      out.omitted_edges.push_back(special);
      for (std::size_t k = 0; k < pieces[c].edge_map.size(); ++k) {
        d[pieces[c].edge_map[k]] = cd.directions[k];
        assigned[pieces[c].edge_map[k]] = true;
      }
    }
    if (!circuits_ok) continue;
    if (!is_sparse(g, Family::ross, out.basis))
      throw std::logic_error("edge-swapped basis is not Ross-sparse");
    for (EdgeId k = 0; k < m; ++k)
      if (!assigned[k]) d[k] = sampler.nonzero_vector();

    // Reduced graph: perpendicular directions on surviving edges must collapse it.
    const auto reduced = reduce(g, circuits.circuits);
    DirectionAssignment star;
    for (const auto& src : reduced.edge_map) star.push_back(src ? refrig::perp(d[*src]) : Vec2(0, 1));
    if (!classify(reduced.graph, star).collapsed_only) continue;

    // Basis directions independent with faithful realizations.
    const ColoredGraph basis_graph = restrict_edges(g, out.basis);
    const auto basis_dirs = restrict_directions(d, out.basis);
    const auto basis_space = realization_space(basis_graph, basis_dirs);
    if (basis_space.rank != out.basis.size()) continue;
    if (!classify(basis_graph, basis_space).faithful_exists) continue;

    if (!is_special_pair(g, d)) continue;
    out.directions = std::move(d);
    return out;
  }
  throw RetriesExhausted("special pair construction failed verification after " +
                         std::to_string(config.retries) + " attempts");
}

}  // namespace refrig
