#include "refrig/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace refrig {

namespace {

std::vector<std::string> tokens_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::optional<long long> to_integer(const std::string& t) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) return std::nullopt;
  return v;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(line, number);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace

ColoredGraph parse_graph(std::string_view text) {
  std::optional<long long> n;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::string_view line, std::size_t number) {
    const auto t = tokens_of(line);
    if (t.empty()) return;
    if (!n) {
      if (t.size() != 2 || t[0] != "n") throw ParseError("expected header 'n <count>'", number);
      n = to_integer(t[1]);
      if (!n || *n < 0) throw ParseError("bad vertex count", number);
      return;
    }
    if (t.size() != 3) throw ParseError("malformed edge line", number);
    const auto tail = to_integer(t[0]), head = to_integer(t[1]), gain = to_integer(t[2]);
    if (!tail || !head || !gain) throw ParseError("malformed edge line", number);
    if (*tail < 0 || *tail >= *n || *head < 0 || *head >= *n) throw ParseError("vertex index out of range", number);
    if (*gain != 0 && *gain != 1) throw ParseError("gain out of range", number);
    edges.push_back({static_cast<VertexId>(*tail), static_cast<VertexId>(*head), color_from_bit(static_cast<unsigned>(*gain))});
  });
  if (!n) throw ParseError("missing header 'n <count>'", 0);
  return ColoredGraph(static_cast<std::size_t>(*n), std::move(edges));
}

std::string format_graph(const ColoredGraph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges())
    out += std::to_string(e.tail) + " " + std::to_string(e.head) + " " + std::to_string(to_int(e.gain)) + "\n";
  return out;
}

DirectionAssignment parse_directions(std::string_view text, std::size_t edge_count) {
  std::vector<std::optional<Vec2>> seen(edge_count);
  for_each_line(text, [&](std::string_view line, std::size_t number) {
    const auto t = tokens_of(line);
    if (t.empty()) return;
    if (t.size() != 3) throw ParseError("malformed direction line", number);
    const auto k = to_integer(t[0]);
    if (!k || *k < 0 || static_cast<std::size_t>(*k) >= edge_count) throw ParseError("edge index out of range", number);
    if (seen[*k]) throw ParseError("duplicate edge index", number);
    try {
      seen[*k] = Vec2(parse_rational(t[1]), parse_rational(t[2]));
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed rational", number);
    }
  });
  DirectionAssignment d;
  for (std::size_t k = 0; k < edge_count; ++k) {
    if (!seen[k]) throw ParseError("no direction for edge " + std::to_string(k), 0);
    d.push_back(*seen[k]);
  }
  return d;
}

std::string format_directions(const DirectionAssignment& d) {
  std::string out;
  for (std::size_t k = 0; k < d.size(); ++k)
    out += std::to_string(k) + " " + to_fraction_string(d[k].x) + " " + to_fraction_string(d[k].y) + "\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

std::string format_edge_list(const EdgeSubset& s) {
  std::string out;
  for (auto k : s.ids()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k);
  }
  return out;
}

std::string report_json(const CertificationReport& r) {
  using json = nlohmann::ordered_json;
  auto vec = [](const Vec2& v) { return json::array({to_fraction_string(v.x), to_fraction_string(v.y)}); };

  json combinatorial;
  combinatorial["verdict"] = r.combinatorial ? "reflection-laman" : "not-reflection-laman";
  if (r.witness) combinatorial["witness"] = r.witness->ids();
  if (!r.reason.empty()) combinatorial["reason"] = r.reason;

  json numeric;
  numeric["rank"] = r.rank;
  numeric["target"] = r.target;
  numeric["minimal"] = r.minimal;

  json special = nullptr;
  if (r.special) {
    special = json::object();
    special["directions"] = json::array();
    for (const auto& d : r.special->directions) special["directions"].push_back(vec(d));
    special["omitted_edges"] = r.special->omitted_edges;
    special["realization"] = json::array();
    if (r.realization)
      for (const auto& p : *r.realization) special["realization"].push_back(vec(p));
  }

  json out;
  out["combinatorial"] = combinatorial;
  out["numeric"] = numeric;
  out["special_pair"] = special;
  out["agreement"] = r.agreement;
  out["seeds"] = r.seeds;
  if (!r.error.empty()) out["error"] = r.error;
  return out.dump(2) + "\n";
}

std::string render_svg(const ColoredGraph& g, const Placement& p) {
  double reach = 0;
  for (const auto& v : p) reach = std::max({reach, std::abs(to_double(v.x)), std::abs(to_double(v.y))});
  if (reach == 0) reach = 1;
  const double half = 200, margin = 30, scale = half / reach;
  const double size = 2 * (half + margin);

  auto sheet_point = [&](VertexId i, Color sheet) {
    const double x = to_double(p[i].x), y = to_double(p[i].y);
    return std::pair{sheet == Color::reflection ? -x : x, y};
  };
  auto fmt = [](double v) {
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << " " << size << "\">\n";
  svg << "<line class=\"axis\" x1=\"" << size / 2 << "\" y1=\"0\" x2=\"" << size / 2 << "\" y2=\"" << size
      << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";
  svg << "<g transform=\"translate(" << size / 2 << " " << size / 2 << ") scale(" << fmt(scale) << " " << fmt(-scale)
      << ")\">\n";
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    for (Color s : {Color::identity, Color::reflection}) {
      const auto [x1, y1] = sheet_point(e.tail, s);
      const auto [x2, y2] = sheet_point(e.head, s + e.gain);
      svg << "<line class=\"edge\" data-edge=\"" << k << "\" x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\""
          << fmt(x2) << "\" y2=\"" << fmt(y2) << "\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
  }
  for (VertexId i = 0; i < g.vertex_count(); ++i)
    for (Color s : {Color::identity, Color::reflection}) {
      const auto [x, y] = sheet_point(i, s);
      svg << "<circle class=\"vertex\" data-vertex=\"" << i << "_" << to_int(s) << "\" cx=\"" << fmt(x) << "\" cy=\""
          << fmt(y) << "\" r=\"" << fmt(4 / scale) << "\" fill=\"" << (s == Color::identity ? "black" : "white")
          << "\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
  svg << "</g>\n";
  for (EdgeId k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    const auto [x1, y1] = sheet_point(e.tail, Color::identity);
    const auto [x2, y2] = sheet_point(e.head, e.gain);
    svg << "<text class=\"label\" x=\"" << fmt(size / 2 + scale * (x1 + x2) / 2) << "\" y=\""
        << fmt(size / 2 - scale * (y1 + y2) / 2) << "\" font-size=\"12\" fill=\"blue\">" << k << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace refrig
