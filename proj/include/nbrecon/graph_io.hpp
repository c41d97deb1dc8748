#pragma once

// Text formats.
//
// Graph files:
//   # optional comment lines
//   p graph <n>
//   e <u> <v>        one line per undirected edge, 0-based; "e u u" is a loop
//
// Either orientation of an edge is accepted and repeated edges are harmless.
// The serializer writes edges sorted by (min, max).
//
// Permutations are whitespace-separated image lists: "3 4 5 0 1 2".

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nbrecon/graph.hpp"
#include "nbrecon/permutation.hpp"

namespace nbrecon {

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
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

inline bool parse_int(std::string_view token, int& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  Graph g;
  bool have_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header");
      int n = 0;
      if (tokens.size() != 3 || tokens[1] != "graph" || !detail::parse_int(tokens[2], n)) {
        throw ParseError(line_no, "malformed header, expected 'p graph <n>'");
      }
      if (n < 0 || n > kMaxVertices) {
        throw ParseError(line_no, "vertex count " + std::to_string(n) + " outside 0..64");
      }
      g = Graph(n);
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before header");
      int u = 0;
      int v = 0;
      if (tokens.size() != 3 || !detail::parse_int(tokens[1], u) || !detail::parse_int(tokens[2], v)) {
        throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
      }
      if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) {
        throw ParseError(line_no, "vertex out of range in edge " + std::to_string(u) + " " +
                                      std::to_string(v));
      }
      g.add_edge(u, v);
    } else {
      throw ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing 'p graph <n>' header");
  return g;
}

inline std::string serialize_graph(const Graph& g, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::size_t pos = 0;
    while (pos < comment.size()) {
      std::size_t end = comment.find('\n', pos);
      if (end == std::string_view::npos) end = comment.size();
      out << "# " << comment.substr(pos, end - pos) << '\n';
      pos = end + 1;
    }
  }
  out << "p graph " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  return out.str();
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path);
  }
}

/// Throws UsageError on anything that is not a bijection.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> images;
  for (auto token : detail::split_ws(text)) {
    int v = 0;
    if (!detail::parse_int(token, v)) {
      throw UsageError("permutation token '" + std::string(token) + "' is not an integer");
    }
    images.push_back(v);
  }
  return Permutation::from_images(images);
}

inline std::string format_permutation(const Permutation& p) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(p(i));
  }
  return out;
}

}  // namespace nbrecon
