#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "refrig/corpus.hpp"
#include "refrig/io.hpp"

#include <json.hpp>

#include <regex>

using namespace refrig;

TEST_CASE("parse examples") {
  CHECK(parse_graph("n 1\n0 0 1") == ColoredGraph(1, {{0, 0, Color::reflection}}));
  const auto g = parse_graph("n 3\n0 1 0\n0 1 1\n1 2 0\n1 2 1\n2 0 0");
  CHECK(g.edge_count() == 5);
  CHECK(g.edge(4) == Edge{2, 0, Color::identity});
  CHECK(parse_graph("# header\n\nn 2  # two\n0 1 1 # edge\n").edge_count() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  auto message = [](std::string_view text) {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("n 2\n0 1 2") == "gain out of range at line 2");
  CHECK(message("n 2\n0 2 0") == "vertex index out of range at line 2");
  CHECK(message("n 2\n\n0 1") == "malformed edge line at line 3");
  CHECK(message("0 1 0") == "expected header 'n <count>' at line 1");
  CHECK(message("") == "missing header 'n <count>'");
  CHECK(message("n -1") == "bad vertex count at line 1");
}

TEST_CASE("format and parse round trip") {
  for (const auto& [name, g] : oracle::corpus()) {
    const auto text = format_graph(g);
    CHECK(parse_graph(text) == g);
    CHECK(format_graph(parse_graph(text)) == text);
  }
}

TEST_CASE("directions round trip") {
  const DirectionAssignment d{Vec2(Rational(1, 2), Rational(-3)), Vec2(0, 1)};
  const auto text = format_directions(d);
  CHECK(text == "0 1/2 -3/1\n1 0/1 1/1\n");
  CHECK(parse_directions(text, 2) == d);
  CHECK_THROWS_AS(parse_directions("0 1 1\n", 2), ParseError);
  CHECK_THROWS_AS(parse_directions("0 1 1\n0 1 1\n", 1), ParseError);
  CHECK_THROWS_AS(parse_directions("3 1 1\n", 1), ParseError);
  CHECK_THROWS_AS(parse_directions("0 1/0 1\n", 1), ParseError);
}

TEST_CASE("reports are byte-identical for the same seed") {
  RunConfig c;
  c.seed = 17;
  for (const auto& [name, g] : oracle::corpus()) {
    const auto a = report_json(certify(g, c));
    CHECK(a == report_json(certify(g, c)));
    const auto j = nlohmann::json::parse(a);
    CHECK(j.contains("combinatorial"));
    CHECK(j["numeric"].contains("rank"));
    CHECK(j["agreement"].get<bool>());
  }
}

namespace {

struct Circle {
  std::string id;
  double x, y;
};

std::vector<Circle> circles(const std::string& svg) {
  std::vector<Circle> out;
  const std::regex re("data-vertex=\"([0-9_]+)\" cx=\"([^\"]+)\" cy=\"([^\"]+)\"");
  for (std::sregex_iterator it(svg.begin(), svg.end(), re), end; it != end; ++it)
    out.push_back({(*it)[1], std::stod((*it)[2]), std::stod((*it)[3])});
  return out;
}

}  // namespace

TEST_CASE("svg drawings are mirror symmetric") {
  const auto loop = parse_graph("n 1\n0 0 1\n");
  auto svg = render_svg(loop, {Vec2(1, 0)});
  auto c = circles(svg);
  REQUIRE(c.size() == 2);
  CHECK(c[0].x == -c[1].x);
  CHECK(c[0].x == 1.0);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
  CHECK(svg.find(">0</text>") != std::string::npos);

  RunConfig cfg;
  const auto g_rc = parse_graph("n 3\n0 1 0\n0 1 1\n1 2 0\n1 2 1\n2 0 0\n");
  const auto r = certify(g_rc, cfg);
  svg = render_svg(g_rc, *r.realization);
  c = circles(svg);
  REQUIRE(c.size() == 6);
  for (std::size_t i = 0; i < 6; i += 2) {
    CHECK(c[i].x == -c[i + 1].x);
    CHECK(c[i].y == c[i + 1].y);
  }
  std::size_t segments = 0;
  for (auto pos = svg.find("class=\"edge\""); pos != std::string::npos; pos = svg.find("class=\"edge\"", pos + 1)) ++segments;
  CHECK(segments == 10);

  // collapsed realization: every point on the axis
  for (const auto& p : circles(render_svg(g_rc, {Vec2(0, 1), Vec2(0, 1), Vec2(0, 1)}))) CHECK(p.x == 0.0);
}

TEST_CASE("generate examples") {
  for (std::uint64_t seed = 0; seed < 4; ++seed)
    CHECK(generate(1, seed, Family::reflection_laman) == parse_graph("n 1\n0 0 1\n"));
  const auto g = generate(3, 7, Family::reflection_laman);
  CHECK(g.edge_count() == 5);
  CHECK(is_member(g, Family::reflection_laman));
  const auto r = generate(2, 1, Family::ross);
  CHECK(canonical_form(r) == parse_graph("n 2\n0 1 0\n0 1 1\n"));
  CHECK_THROWS_AS(generate(1, 1, Family::laman_23), GenerationFailed);
  for (Family f : all_families)
    for (std::size_t n = 2; n <= 5; ++n) CHECK(is_member(generate(n, 3, f), f));
}

TEST_CASE("exhaustive enumeration counts") {
  CHECK(count_labeled_graphs(1, 1) == 2);
  CHECK(count_labeled_graphs(2, 3) == 20);
  CHECK(count_labeled_graphs(3, 5) == 1128);
  CHECK(count_labeled_graphs(2, 2) == 15);
  // n = 2, m = 3 by hand: {ab:0,ab:1} or a single ab edge, plus loops
  const auto classes = enumerate_graphs(2, 3);
  for (const auto& g : classes) CHECK(canonical_form(g) == g);
  auto normalized = [](const ColoredGraph& g, bool swap) {
    std::vector<std::array<unsigned, 3>> e;
    for (const auto& x : g.edges()) {
      unsigned t = swap ? 1 - x.tail : x.tail, h = swap ? 1 - x.head : x.head;
      e.push_back({std::min(t, h), std::max(t, h), static_cast<unsigned>(to_int(x.gain))});
    }
    std::sort(e.begin(), e.end());
    return e;
  };
  std::size_t covered = 0;
  for (const auto& g : classes) covered += normalized(g, true) == normalized(g, false) ? 1 : 2;
  CHECK(covered == 20);
}

TEST_CASE("corpus expected values match the oracles") {
  const auto expected = nlohmann::json::parse(read_text_file(std::string(REFRIG_CORPUS_DIR) + "/expected.json"));
  const auto corpus = oracle::corpus();
  CHECK(expected.size() == corpus.size());
  for (const auto& [name, g] : corpus) {
    INFO(name);
    REQUIRE(expected.contains(name));
    const auto& e = expected[name];
    CHECK(e["n"].get<std::size_t>() == g.vertex_count());
    CHECK(e["m"].get<std::size_t>() == g.edge_count());
    for (Family f : all_families) {
      CHECK(e["members"][std::string(family_name(f))].get<bool>() == oracle::member(g, f));
      CHECK(e["members"][std::string(family_name(f))].get<bool>() == is_member(g, f));
    }
    const auto circuits = oracle::ross_circuits(g);
    const bool whole = std::find(circuits.begin(), circuits.end(), oracle::full(g)) != circuits.end();
    CHECK(e["ross_circuit"].get<bool>() == whole);
    CHECK(e["ross_circuit"].get<bool>() == is_ross_circuit(g));
  }
}
