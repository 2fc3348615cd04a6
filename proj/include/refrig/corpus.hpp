#pragma once

// Named and generated test graphs, exhaustive small enumeration and oracle values.

#include "refrig/sparsity.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace refrig {

struct NamedGraph {
  std::string name;
  ColoredGraph graph;
};

// loop, g2, g_rc, g_rc_pendant, ross_pair, triangle0, k4_zero, k4_negative
std::vector<NamedGraph> named_graphs();

class GenerationFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Random greedy edge addition from all colored pairs (each at most once) and gain-1
// loops, keeping the family's counts, until a member appears.
ColoredGraph generate(std::size_t n, std::uint64_t seed, Family target, unsigned attempts = 500);

// Smallest sorted edge list over all vertex relabelings; endpoints stored tail <= head.
ColoredGraph canonical_form(const ColoredGraph& g);

// All colored graphs with n vertices and m edges, parallel multiplicity <= 2, at most
// one loop per vertex, one representative per relabeling class.
std::vector<ColoredGraph> enumerate_graphs(std::size_t n, std::size_t m);

// Same without deduplication.
std::size_t count_labeled_graphs(std::size_t n, std::size_t m);

// *.graph files sorted by file name; name is the stem.
std::vector<NamedGraph> load_corpus(const std::string& directory);

// Expected values from the all-subsets definitions, keyed by graph name.
std::string oracle_json(const std::vector<NamedGraph>& graphs, std::uint64_t seed);

}  // namespace refrig
