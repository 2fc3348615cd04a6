#include "refrig/refrig.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

namespace {

enum Exit { ok = 0, semantic_fail = 1, usage = 2, disagreement = 3 };

struct GraphDeleter {
  void operator()(refrig_graph* g) const { refrig_graph_free(g); }
};
using Graph = std::unique_ptr<refrig_graph, GraphDeleter>;

struct Owned {
  char* p = nullptr;
  ~Owned() { refrig_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

int status_exit(refrig_status s) {
  std::cerr << "refrig: " << refrig_last_error() << "\n";
  switch (s) {
    case REFRIG_ERR_PARSE:
    case REFRIG_ERR_INVALID_ARGUMENT:
    case REFRIG_ERR_IO: return usage;
    case REFRIG_ERR_PRECONDITION:
    case REFRIG_ERR_RETRIES_EXHAUSTED:
    case REFRIG_ERR_GENERATION_FAILED: return semantic_fail;
    default: return disagreement;
  }
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "refrig: cannot write " << path << "\n";
    return false;
  }
  return true;
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "refrig: cannot open " << path << "\n";
    return false;
  }
  std::ostringstream s;
  s << in.rdbuf();
  text = s.str();
  return true;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) std::cout << text;
  else write_file(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generic minimal rigidity of reflection-symmetric frameworks"};
  app.require_subcommand(1);

  std::string graph_path, directions_path, family_name = "reflection-laman", json_path, svg_path, out_path;
  std::string mode = "special", corpus_dir = REFRIG_DEFAULT_CORPUS, write_path;
  std::uint64_t seed = 1;
  std::size_t n = 0;
  bool witness = false;

  auto* check = app.add_subcommand("check", "Test a sparsity family");
  check->add_option("file", graph_path, "graph file")->required();
  check->add_option("--family", family_name, "family name");
  check->add_flag("--witness", witness, "print the violating edge list");

  auto* decompose = app.add_subcommand("decompose", "Spanning tree plus reflection-(1,1) split");
  decompose->add_option("file", graph_path, "graph file")->required();

  auto* reduce = app.add_subcommand("reduce", "Contract Ross-circuits");
  reduce->add_option("file", graph_path, "graph file")->required();

  auto* directions = app.add_subcommand("directions", "Emit a direction assignment");
  directions->add_option("file", graph_path, "graph file")->required();
  directions->add_option("--mode", mode, "random, collapse or special")
      ->check(CLI::IsMember({"random", "collapse", "special"}));
  directions->add_option("--seed", seed, "random seed");
  directions->add_option("-o,--output", out_path, "output file");

  auto* solve = app.add_subcommand("solve", "Solve a direction network");
  solve->add_option("graph", graph_path, "graph file")->required();
  solve->add_option("directions", directions_path, "directions file")->required();
  solve->add_option("--svg", svg_path, "draw a realization");

  auto* certify = app.add_subcommand("certify", "Combinatorial and numeric verdicts");
  certify->add_option("file", graph_path, "graph file")->required();
  certify->add_option("--seed", seed, "random seed");
  certify->add_option("--json", json_path, "report file");
  certify->add_option("--svg", svg_path, "draw the certifying realization");

  auto* generate = app.add_subcommand("generate", "Random member of a family");
  generate->add_option("n", n, "vertex count")->required();
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--family", family_name, "family name");
  generate->add_option("-o,--output", out_path, "output file");

  auto* oracle = app.add_subcommand("oracle", "Expected values for a corpus directory");
  oracle->add_option("--dir", corpus_dir, "corpus directory");
  oracle->add_option("--seed", seed, "random seed");
  oracle->add_option("--write", write_path, "write the JSON to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  refrig_family family{};
  if (auto s = refrig_family_from_name(family_name.c_str(), &family); s != REFRIG_OK) return status_exit(s);

  if (*generate) {
    refrig_graph* raw = nullptr;
    if (auto s = refrig_generate(n, seed, family, &raw); s != REFRIG_OK) return status_exit(s);
    Graph g(raw);
    Owned text;
    if (auto s = refrig_graph_to_text(g.get(), &text.p); s != REFRIG_OK) return status_exit(s);
    emit(text.str(), out_path);
    return ok;
  }

  if (*oracle) {
    Owned json;
    if (auto s = refrig_oracle(corpus_dir.c_str(), seed, &json.p); s != REFRIG_OK) return status_exit(s);
    if (write_path.empty()) std::cout << json.str();
    else if (!write_file(write_path, json.str())) return usage;
    return ok;
  }

  refrig_graph* raw = nullptr;
  if (auto s = refrig_graph_load(graph_path.c_str(), &raw); s != REFRIG_OK) return status_exit(s);
  Graph g(raw);

  if (*check) {
    int pass = 0;
    Owned w;
    if (auto s = refrig_check(g.get(), family, &pass, witness ? &w.p : nullptr); s != REFRIG_OK) return status_exit(s);
    std::cout << (pass ? "pass" : "fail") << "\n";
    if (witness && !pass) std::cout << "witness: " << w.str() << "\n";
    return pass ? ok : semantic_fail;
  }

  if (*decompose || *reduce) {
    Owned text;
    auto s = *decompose ? refrig_decompose(g.get(), &text.p) : refrig_reduce(g.get(), &text.p);
    if (s != REFRIG_OK) return status_exit(s);
    std::cout << text.str();
    return ok;
  }

  if (*directions) {
    static const std::map<std::string, refrig_direction_mode> modes{
        {"random", REFRIG_DIRECTIONS_RANDOM}, {"collapse", REFRIG_DIRECTIONS_COLLAPSE}, {"special", REFRIG_DIRECTIONS_SPECIAL}};
    Owned text;
    if (auto s = refrig_directions(g.get(), modes.at(mode), seed, &text.p); s != REFRIG_OK) return status_exit(s);
    emit(text.str(), out_path);
    return ok;
  }

  if (*solve) {
    std::string dirs;
    if (!read_file(directions_path, dirs)) return usage;
    Owned report, svg;
    if (auto s = refrig_solve(g.get(), dirs.c_str(), &report.p, svg_path.empty() ? nullptr : &svg.p); s != REFRIG_OK)
      return status_exit(s);
    std::cout << report.str();
    if (!svg_path.empty() && !write_file(svg_path, svg.str())) return usage;
    return ok;
  }

  Owned json, svg;
  int agreement = 0;
  if (auto s = refrig_certify(g.get(), seed, &json.p, svg_path.empty() ? nullptr : &svg.p, &agreement); s != REFRIG_OK)
    return status_exit(s);
  emit(json.str(), json_path);
  if (!svg_path.empty() && !write_file(svg_path, svg.str())) return usage;
  return agreement ? ok : disagreement;
}
