#include "refrig/rigidity.hpp"

namespace refrig {

namespace {

Matrix velocity_rows(const ColoredGraph& g, const Placement& p, bool transform_head) {
  Matrix r(g.edge_count(), 2 * g.vertex_count());
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const Vec2 w = edge_vector(e, p);
    const bool flip = transform_head && e.gain == Color::reflection;
    r(k, 2 * e.head) += flip ? -w.x : w.x;
    r(k, 2 * e.head + 1) += w.y;
    r(k, 2 * e.tail) -= w.x;
    r(k, 2 * e.tail + 1) -= w.y;
  }
  return r;
}

std::size_t rigid_target(const ColoredGraph& g) { return g.vertex_count() == 0 ? 0 : 2 * g.vertex_count() - 1; }

}  // namespace

std::vector<Rational> edge_lengths(const ColoredGraph& g, const Placement& p) {
  std::vector<Rational> out;
  for (const auto& e : g.edges()) {
    const Vec2 w = edge_vector(e, p);
    out.push_back(dot(w, w));
  }
  return out;
}

Matrix rigidity_matrix(const ColoredGraph& g, const Placement& p) { return velocity_rows(g, p, true); }

Matrix untransformed_rigidity_matrix(const ColoredGraph& g, const Placement& p) {
  return velocity_rows(g, p, false);
}

std::string_view verdict_name(RigidityVerdict v) {
  switch (v) {
    case RigidityVerdict::rigid: return "rigid";
    case RigidityVerdict::flexible: return "flexible";
    case RigidityVerdict::not_applicable: return "not-applicable";
  }
  return "?";
}

RigidityCertificate is_infinitesimally_rigid(const ColoredGraph& g, const Placement& p) {
  RigidityCertificate c;
  c.placement = p;
  c.target = rigid_target(g);
  if (g.vertex_count() == 0) return c;
  const Matrix r = rigidity_matrix(g, p);
  std::vector<Rational> vertical(2 * g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) vertical[2 * i + 1] = 1;
  for (std::size_t k = 0; k < r.rows(); ++k)
    if (sgn(apply_row(r, k, vertical)) != 0) throw std::logic_error("vertical translation is not in the kernel");
  c.rank = rank(r);
  c.verdict = c.rank == c.target ? RigidityVerdict::rigid : RigidityVerdict::flexible;
  return c;
}

bool is_minimally_rigid(const ColoredGraph& g, const Placement& p) {
  if (is_infinitesimally_rigid(g, p).verdict != RigidityVerdict::rigid) return false;
  const Matrix r = rigidity_matrix(g, p);
  for (std::size_t k = 0; k < r.rows(); ++k)
    if (rank(r.without_row(k)) + 1 != rigid_target(g)) return false;
  return true;
}

Placement random_placement(std::size_t n, std::uint64_t seed, unsigned bits) {
  Sampler s(seed, bits);
  Placement p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(s.vector());
  return p;
}

GenericRank generic_rank_sample(const ColoredGraph& g, unsigned trials, std::uint64_t seed, unsigned bits) {
  if (trials == 0) throw std::invalid_argument("generic rank needs at least one trial");
  GenericRank out;
  for (unsigned t = 0; t < trials; ++t) {
    const std::uint64_t s = mix_seed(seed, t);
    out.seeds.push_back(s);
    Placement p = random_placement(g.vertex_count(), s, bits);
    const std::size_t r = rank(rigidity_matrix(g, p));
    if (t == 0 || r > out.rank) {
      out.rank = r;
      out.placement = std::move(p);
    }
  }
  return out;
}

bool is_generically_minimally_rigid(const ColoredGraph& g, unsigned trials, std::uint64_t seed) {
  const auto sample = generic_rank_sample(g, trials, seed);
  return sample.rank == rigid_target(g) && is_minimally_rigid(g, sample.placement);
}

DirectionAssignment directions_from_points(const ColoredGraph& g, const Placement& p) {
  DirectionAssignment d;
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    Vec2 w = edge_vector(g.edge(k), p);
    if (w.is_zero())
      throw CollapsedEdge(k, "edge " + std::to_string(k) + " is collapsed: its endpoints coincide in the lift");
    d.push_back(std::move(w));
  }
  return d;
}

CertificationReport certify(const ColoredGraph& g, const RunConfig& config) {
  CertificationReport rep;
  rep.target = rigid_target(g);
  rep.seeds.push_back(config.seed);

  const auto counts = connected_subgraph_check(g, Family::reflection_laman);
  const long target_edges = global_target(Family::reflection_laman, g.vertex_count());
  if (!counts.pass) {
    rep.witness = counts.witness;
    rep.reason = "count violation";
  } else if (static_cast<long>(g.edge_count()) != target_edges) {
    rep.reason = "edge count " + std::to_string(g.edge_count()) + " differs from 2n-1 = " + std::to_string(target_edges);
  } else {
    rep.combinatorial = true;
  }

  if (rep.combinatorial) {
    try {
      auto sp = construct_special_pair(g, config);
      rep.seeds.push_back(mix_seed(config.seed, sp.attempts - 1));
      const auto cls = classify(g, sp.directions);
      if (!cls.witness) throw std::logic_error("special pair without a faithful realization");
      rep.realization = cls.witness;
      rep.rank = is_infinitesimally_rigid(g, *cls.witness).rank;
      rep.minimal = is_minimally_rigid(g, *cls.witness);
      rep.special = std::move(sp);
    } catch (const RetriesExhausted& e) {
      rep.error = e.what();
    }
  } else {
    const auto sample = generic_rank_sample(g, config.rank_trials, config.seed, config.sample_bits);
    rep.seeds.insert(rep.seeds.end(), sample.seeds.begin(), sample.seeds.end());
    rep.rank = sample.rank;
    rep.minimal = rep.rank == rep.target && is_minimally_rigid(g, sample.placement);
    rep.realization = sample.placement;
  }
  rep.agreement = rep.error.empty() && rep.combinatorial == rep.minimal;
  return rep;
}

}  // namespace refrig
