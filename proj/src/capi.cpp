#include "refrig/refrig.h"

#include "refrig/corpus.hpp"
#include "refrig/decomposition.hpp"
#include "refrig/io.hpp"
#include "refrig/rigidity.hpp"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

struct refrig_graph {
  refrig::ColoredGraph graph;
};

namespace {

thread_local std::string last_error;

refrig_status fail(refrig_status s, const std::string& message) {
  last_error = message;
  return s;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
refrig_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const refrig::ParseError& e) {
    return fail(REFRIG_ERR_PARSE, e.what());
  } catch (const refrig::RetriesExhausted& e) {
    return fail(REFRIG_ERR_RETRIES_EXHAUSTED, e.what());
  } catch (const refrig::GenerationFailed& e) {
    return fail(REFRIG_ERR_GENERATION_FAILED, e.what());
  } catch (const refrig::PreconditionError& e) {
    return fail(REFRIG_ERR_PRECONDITION, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(REFRIG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const refrig::IoError& e) {
    return fail(REFRIG_ERR_IO, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(REFRIG_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(REFRIG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(REFRIG_ERR_INTERNAL, "unknown error");
  }
}

refrig::Family to_family(refrig_family f) {
  const int i = static_cast<int>(f);
  if (i < 0 || i >= static_cast<int>(std::size(refrig::all_families)))
    throw std::invalid_argument("unknown family " + std::to_string(i));
  return refrig::all_families[i];
}

refrig::RunConfig config_for(std::uint64_t seed) {
  refrig::RunConfig c;
  c.seed = seed;
  return c;
}

#define REFRIG_REQUIRE(cond)                                                        \
  do {                                                                              \
    if (!(cond)) return fail(REFRIG_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* refrig_last_error(void) { return last_error.c_str(); }

void refrig_string_free(char* s) { std::free(s); }

refrig_status refrig_family_from_name(const char* name, refrig_family* out) {
  REFRIG_REQUIRE(name && out);
  return guarded([&] {
    auto f = refrig::parse_family(name);
    if (!f) return fail(REFRIG_ERR_INVALID_ARGUMENT, std::string("unknown family '") + name + "'");
    for (std::size_t i = 0; i < std::size(refrig::all_families); ++i)
      if (refrig::all_families[i] == *f) *out = static_cast<refrig_family>(i);
    return REFRIG_OK;
  });
}

refrig_status refrig_graph_parse(const char* text, refrig_graph** out) {
  REFRIG_REQUIRE(text && out);
  return guarded([&] {
    *out = new refrig_graph{refrig::parse_graph(text)};
    return REFRIG_OK;
  });
}

refrig_status refrig_graph_load(const char* path, refrig_graph** out) {
  REFRIG_REQUIRE(path && out);
  return guarded([&] {
    *out = new refrig_graph{refrig::parse_graph(refrig::read_text_file(path))};
    return REFRIG_OK;
  });
}

void refrig_graph_free(refrig_graph* g) { delete g; }

size_t refrig_graph_vertex_count(const refrig_graph* g) { return g ? g->graph.vertex_count() : 0; }

size_t refrig_graph_edge_count(const refrig_graph* g) { return g ? g->graph.edge_count() : 0; }

refrig_status refrig_graph_to_text(const refrig_graph* g, char** out) {
  REFRIG_REQUIRE(g && out);
  return guarded([&] {
    *out = copy_out(refrig::format_graph(g->graph));
    return REFRIG_OK;
  });
}

refrig_status refrig_check(const refrig_graph* g, refrig_family family, int* pass, char** witness) {
  REFRIG_REQUIRE(g && pass);
  return guarded([&] {
    const auto f = to_family(family);
    *pass = refrig::is_member(g->graph, f) ? 1 : 0;
    if (witness) {
      std::string w;
      if (!*pass) {
        const auto report = refrig::connected_subgraph_check(g->graph, f);
        if (report.witness) w = refrig::format_edge_list(*report.witness);
      }
      *witness = copy_out(w);
    }
    return REFRIG_OK;
  });
}

refrig_status refrig_decompose(const refrig_graph* g, char** out) {
  REFRIG_REQUIRE(g && out);
  return guarded([&] {
    const auto d = refrig::decompose_tree_ref11(g->graph);
    std::string s = "tree: " + refrig::format_edge_list(d.tree) + "\n";
    s += "map: " + refrig::format_edge_list(d.map_part) + "\n";
    s += "recolored:\n" + refrig::format_graph(d.recolored);
    *out = copy_out(s);
    return REFRIG_OK;
  });
}

refrig_status refrig_reduce(const refrig_graph* g, char** out) {
  REFRIG_REQUIRE(g && out);
  return guarded([&] {
    const auto c = refrig::find_ross_circuits(g->graph);
    const auto r = refrig::reduce(g->graph, c.circuits);
    std::string s;
    for (const auto& circuit : c.circuits) s += "# circuit: " + refrig::format_edge_list(circuit) + "\n";
    for (std::size_t v = 0; v < r.contraction_map.size(); ++v)
      s += "# vertex " + std::to_string(v) + " -> " + std::to_string(r.contraction_map[v]) + "\n";
    s += refrig::format_graph(r.graph);
    *out = copy_out(s);
    return REFRIG_OK;
  });
}

refrig_status refrig_directions(const refrig_graph* g, refrig_direction_mode mode, uint64_t seed, char** out) {
  REFRIG_REQUIRE(g && out);
  return guarded([&] {
    refrig::DirectionAssignment d;
    switch (mode) {
      case REFRIG_DIRECTIONS_RANDOM: d = refrig::random_directions(g->graph, seed); break;
      case REFRIG_DIRECTIONS_COLLAPSE: d = refrig::collapse_directions(g->graph, config_for(seed)); break;
      case REFRIG_DIRECTIONS_SPECIAL: d = refrig::special_pair(g->graph, config_for(seed)); break;
      default: return fail(REFRIG_ERR_INVALID_ARGUMENT, "unknown direction mode");
    }
    *out = copy_out(refrig::format_directions(d));
    return REFRIG_OK;
  });
}

refrig_status refrig_solve(const refrig_graph* g, const char* directions, char** report, char** svg) {
  REFRIG_REQUIRE(g && directions && report);
  return guarded([&] {
    const auto& graph = g->graph;
    const auto d = refrig::parse_directions(directions, graph.edge_count());
    const auto space = refrig::realization_space(graph, d);
    const auto c = refrig::classify(graph, space);
    std::string s = "rank " + std::to_string(space.rank) + "\n";
    s += "nullity " + std::to_string(space.dimension()) + "\n";
    s += std::string("classification ") +
         (c.faithful_exists ? "faithful" : c.collapsed_only ? "collapsed-only" : "partially-collapsed") + "\n";
    refrig::EdgeSubset collapsed(graph.edge_count());
    for (refrig::EdgeId k = 0; k < graph.edge_count(); ++k)
      if (!c.never_collapsed[k]) collapsed.insert(k);
    s += "always-collapsed: " + refrig::format_edge_list(collapsed) + "\n";
    s += "special-pair " + std::string(refrig::is_special_pair(graph, d) ? "yes" : "no") + "\n";
    const auto point = c.witness ? *c.witness : refrig::generic_point(space, graph.vertex_count());
    if (svg) *svg = copy_out(refrig::render_svg(graph, point));
    *report = copy_out(s);
    return REFRIG_OK;
  });
}

refrig_status refrig_generic_rank(const refrig_graph* g, unsigned trials, uint64_t seed, size_t* rank) {
  REFRIG_REQUIRE(g && rank);
  return guarded([&] {
    *rank = refrig::generic_rank(g->graph, trials, seed);
    return REFRIG_OK;
  });
}

refrig_status refrig_certify(const refrig_graph* g, uint64_t seed, char** json, char** svg, int* agreement) {
  REFRIG_REQUIRE(g && json && agreement);
  return guarded([&] {
    const auto r = refrig::certify(g->graph, config_for(seed));
    *agreement = r.agreement ? 1 : 0;
    if (svg) {
      const refrig::Placement empty(g->graph.vertex_count(), refrig::Vec2(0, 0));
      *svg = copy_out(refrig::render_svg(g->graph, r.realization ? *r.realization : empty));
    }
    *json = copy_out(refrig::report_json(r));
    return REFRIG_OK;
  });
}

refrig_status refrig_generate(size_t n, uint64_t seed, refrig_family family, refrig_graph** out) {
  REFRIG_REQUIRE(out);
  return guarded([&] {
    *out = new refrig_graph{refrig::generate(n, seed, to_family(family))};
    return REFRIG_OK;
  });
}

refrig_status refrig_oracle(const char* directory, uint64_t seed, char** json) {
  REFRIG_REQUIRE(directory && json);
  return guarded([&] {
    *json = copy_out(refrig::oracle_json(refrig::load_corpus(directory), seed));
    return REFRIG_OK;
  });
}

}  // extern "C"
