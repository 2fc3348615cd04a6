#pragma once

// Text formats for graphs and directions, JSON reports and SVG drawings.

#include "refrig/rigidity.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace refrig {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? what + " at line " + std::to_string(line) : what), line(line) {}
  std::size_t line;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n <count>" then "<tail> <head> <gain>" per edge; '#' starts a comment.
ColoredGraph parse_graph(std::string_view text);
std::string format_graph(const ColoredGraph& g);

// "<edge-index> <dx> <dy>" per edge, coordinates as p/q.
DirectionAssignment parse_directions(std::string_view text, std::size_t edge_count);
std::string format_directions(const DirectionAssignment& d);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

std::string format_edge_list(const EdgeSubset& s);

std::string report_json(const CertificationReport& r);

// Both lifted copies, the dashed mirror axis and quotient edge indices.
std::string render_svg(const ColoredGraph& g, const Placement& p);

}  // namespace refrig
