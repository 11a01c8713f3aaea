#ifndef CLIQUECOVER_DIMACS_HPP
#define CLIQUECOVER_DIMACS_HPP

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cliquecover/graph.hpp"

namespace cliquecover::dimacs {

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::size_t parse_count(std::string_view tok, std::size_t line_no, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, std::string("expected a non-negative integer for ") + what +
                                  ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace detail

/// Reads `p edge <n> <m>` followed by `e <u> <v>` lines (1-based). Blank
/// lines and `c` comments are skipped. The edge count must match the header
/// once duplicates are counted as written.
inline Graph read(std::istream& in) {
  bool have_header = false;
  std::size_t n = 0;
  std::size_t declared_edges = 0;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw ParseError(line_no, "expected 'p edge <n> <m>'");
      }
      n = detail::parse_count(tokens[2], line_no, "vertex count");
      declared_edges = detail::parse_count(tokens[3], line_no, "edge count");
      have_header = true;
      edges.reserve(declared_edges);
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      std::size_t u = detail::parse_count(tokens[1], line_no, "endpoint");
      std::size_t v = detail::parse_count(tokens[2], line_no, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "endpoint out of range 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing problem line");
  if (edges.size() != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) +
                                  " edges but " + std::to_string(edges.size()) + " were read");
  }
  return Graph(n, edges);
}

inline Graph read_string(const std::string& text) {
  std::istringstream in(text);
  return read(in);
}

/// Writes edges with u < v in ascending order, one space between tokens, LF
/// line endings. `comments` are emitted as `c` lines before the header.
inline void write(std::ostream& out, const Graph& g,
                  const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p edge " << g.n() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
}

inline std::string write_string(const Graph& g, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  write(out, g, comments);
  return out.str();
}

}  // namespace cliquecover::dimacs

#endif  // CLIQUECOVER_DIMACS_HPP
