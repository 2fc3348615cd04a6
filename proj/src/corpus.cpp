#include "refrig/corpus.hpp"

#include "refrig/io.hpp"
#include "refrig/random.hpp"
#include "refrig/rigidity.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>

namespace refrig {

namespace {

ColoredGraph make(std::size_t n, std::initializer_list<std::array<unsigned, 3>> edges) {
  std::vector<Edge> out;
  for (const auto& [t, h, c] : edges) out.push_back({t, h, color_from_bit(c)});
  return ColoredGraph(n, std::move(out));
}

using Key = std::vector<std::array<unsigned, 3>>;

Key key_under(const ColoredGraph& g, const std::vector<unsigned>& perm) {
  Key k;
  for (const auto& e : g.edges()) {
    unsigned a = perm[e.tail], b = perm[e.head];
    if (a > b) std::swap(a, b);
    k.push_back({a, b, static_cast<unsigned>(to_int(e.gain))});
  }
  std::sort(k.begin(), k.end());
  return k;
}

// Per unordered pair: which of {0, 1, 00, 01, 11} (or nothing) is present.
constexpr std::array<std::array<int, 2>, 6> pair_options{{{-1, -1}, {0, -1}, {1, -1}, {0, 0}, {0, 1}, {1, 1}}};

template <class F>
void for_each_labeled(std::size_t n, std::size_t m, F&& f) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<Edge> edges;
  // slots: pairs first, then one loop slot per vertex with options {none, 0, 1}
  auto rec = [&](auto&& self, std::size_t slot) -> void {
    if (edges.size() > m) return;
    if (slot == pairs.size() + n) {
      if (edges.size() == m) f(edges);
      return;
    }
    if (slot < pairs.size()) {
      const auto [i, j] = pairs[slot];
      for (const auto& opt : pair_options) {
        const std::size_t before = edges.size();
        for (int c : opt)
          if (c >= 0) edges.push_back({i, j, color_from_bit(static_cast<unsigned>(c))});
        self(self, slot + 1);
        edges.resize(before);
      }
    } else {
      const auto v = static_cast<VertexId>(slot - pairs.size());
      self(self, slot + 1);
      for (unsigned c : {0u, 1u}) {
        edges.push_back({v, v, color_from_bit(c)});
        self(self, slot + 1);
        edges.pop_back();
      }
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<NamedGraph> named_graphs() {
  return {
      {"loop", make(1, {{0, 0, 1}})},
      {"g2", make(2, {{0, 1, 0}, {0, 1, 1}, {0, 0, 1}})},
      {"g_rc", make(3, {{0, 1, 0}, {0, 1, 1}, {1, 2, 0}, {1, 2, 1}, {2, 0, 0}})},
      {"g_rc_pendant", make(4, {{0, 1, 0}, {0, 1, 1}, {1, 2, 0}, {1, 2, 1}, {2, 0, 0}, {3, 2, 0}, {3, 0, 0}})},
      {"ross_pair", make(2, {{0, 1, 0}, {0, 1, 1}})},
      {"triangle0", make(3, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}})},
      {"k4_zero", make(4, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}})},
      {"k4_negative",
       make(5, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}, {1, 2, 0}, {1, 3, 0}, {2, 3, 0}, {0, 4, 1}, {1, 4, 1}, {4, 4, 1}})},
  };
}

ColoredGraph generate(std::size_t n, std::uint64_t seed, Family target, unsigned attempts) {
  if (n == 0) throw std::invalid_argument("generate needs n >= 1");
  const long want = global_target(target, n);
  if (want < 0) throw GenerationFailed("no " + std::string(family_name(target)) + " graph on " + std::to_string(n) + " vertices");

  std::vector<Edge> pool;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      pool.push_back({i, j, Color::identity});
      pool.push_back({i, j, Color::reflection});
    }
    pool.push_back({i, i, Color::reflection});
  }

  std::mt19937_64 engine(mix_seed(seed, 0x6E4E));
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    std::shuffle(pool.begin(), pool.end(), engine);
    std::vector<Edge> edges;
    for (const auto& e : pool) {
      if (static_cast<long>(edges.size()) == want) break;
      edges.push_back(e);
      const ColoredGraph trial(n, edges);
      if (!connected_subgraph_check(trial, target).pass) edges.pop_back();
    }
    ColoredGraph g(n, std::move(edges));
    if (is_member(g, target)) return g;
  }
  throw GenerationFailed("no " + std::string(family_name(target)) + " graph on " + std::to_string(n) +
                         " vertices after " + std::to_string(attempts) + " attempts");
}

ColoredGraph canonical_form(const ColoredGraph& g) {
  std::vector<unsigned> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0u);
  std::optional<Key> best;
  do {
    Key k = key_under(g, perm);
    if (!best || k < *best) best = std::move(k);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Edge> edges;
  for (const auto& [a, b, c] : *best) edges.push_back({a, b, color_from_bit(c)});
  return ColoredGraph(g.vertex_count(), std::move(edges));
}

std::vector<ColoredGraph> enumerate_graphs(std::size_t n, std::size_t m) {
  std::set<Key> seen;
  std::vector<unsigned> identity(n);
  std::iota(identity.begin(), identity.end(), 0u);
  std::vector<ColoredGraph> out;
  for_each_labeled(n, m, [&](const std::vector<Edge>& edges) {
    ColoredGraph c = canonical_form(ColoredGraph(n, edges));
    if (seen.insert(key_under(c, identity)).second) out.push_back(std::move(c));
  });
  return out;
}

std::size_t count_labeled_graphs(std::size_t n, std::size_t m) {
  std::size_t count = 0;
  for_each_labeled(n, m, [&](const std::vector<Edge>&) { ++count; });
  return count;
}

std::vector<NamedGraph> load_corpus(const std::string& directory) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(directory))
    if (entry.is_regular_file() && entry.path().extension() == ".graph") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<NamedGraph> out;
  for (const auto& f : files) out.push_back({f.stem().string(), parse_graph(read_text_file(f.string()))});
  return out;
}

std::string oracle_json(const std::vector<NamedGraph>& graphs, std::uint64_t seed) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [name, g] : graphs) {
    nlohmann::ordered_json entry;
    entry["n"] = g.vertex_count();
    entry["m"] = g.edge_count();
    nlohmann::ordered_json members = nlohmann::ordered_json::object();
    for (Family f : all_families) {
      bool member = static_cast<long>(g.edge_count()) == global_target(f, g.vertex_count());
      if (member) member = check_counts(g, f).pass;
      members[std::string(family_name(f))] = member;
    }
    entry["members"] = members;
    bool circuit = static_cast<long>(g.edge_count()) == global_target(Family::reflection_laman, g.vertex_count());
    for (EdgeId e = 0; circuit && e < g.edge_count(); ++e) {
      const auto h = g.without_edge(e);
      circuit = check_counts(h, Family::ross).pass;
    }
    entry["ross_circuit"] = circuit;
    entry["generic_rank"] = generic_rank(g, 5, seed);
    out[name] = entry;
  }
  return out.dump(2) + "\n";
}

}  // namespace refrig
