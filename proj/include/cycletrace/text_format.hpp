// Copyright 2026 The cycletrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CYCLETRACE_TEXT_FORMAT_HPP
#define CYCLETRACE_TEXT_FORMAT_HPP

#include <algorithm>
#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cycletrace/error.hpp"
#include "cycletrace/graph.hpp"
#include "cycletrace/ordering.hpp"
#include "cycletrace/rotation.hpp"

// Line formats:
//   graph      vertex <v>            edge <e> <v> <v>
//   ordering   order <e> <e> ...
//   rotation   rot <v>: <e> <e> ...
//   faces      face <k>: (e,u,v) (e,u,v) ...
// '#' starts a comment that runs to the end of the line.

namespace cycletrace {

namespace text {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

inline std::vector<Line> tokenize(std::string_view input) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= input.size()) {
    std::size_t end = input.find('\n', pos);
    if (end == std::string_view::npos) end = input.size();
    std::string_view raw = input.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == input.size()) break;
    pos = end + 1;
  }
  return lines;
}

inline std::string label_at(const Line& line, const Token& tok) {
  if (!is_valid_label(tok.text))
    throw ParseError(line.number, tok.column, "invalid label '" + std::string(tok.text) + "'");
  return std::string(tok.text);
}

inline void expect_arity(const Line& line, std::size_t count, std::string_view directive) {
  if (line.tokens.size() != count) {
    const std::size_t column = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
    throw ParseError(line.number, column,
                     "'" + std::string(directive) + "' takes " + std::to_string(count - 1) + " argument(s)");
  }
}

}  // namespace text

/// Parses the graph format. Vertices are ordered by first appearance,
/// whether in a `vertex` directive or as an edge endpoint.
inline RawGraph parse_raw_graph(std::string_view input) {
  RawGraph raw;
  std::set<std::string> known;
  std::set<std::string> declared;
  for (const auto& line : text::tokenize(input)) {
    const auto& head = line.tokens.front();
    if (head.text == "vertex") {
      text::expect_arity(line, 2, "vertex");
      std::string v = text::label_at(line, line.tokens[1]);
      // A second explicit declaration is kept so validation reports it.
      if (known.insert(v).second || !declared.insert(v).second) raw.vertices.push_back(v);
      declared.insert(v);
    } else if (head.text == "edge") {
      text::expect_arity(line, 4, "edge");
      RawGraph::RawEdge e{text::label_at(line, line.tokens[1]), text::label_at(line, line.tokens[2]),
                          text::label_at(line, line.tokens[3])};
      for (const auto* end : {&e.first, &e.second})
        if (known.insert(*end).second) raw.vertices.push_back(*end);
      raw.edges.push_back(std::move(e));
    } else {
      throw ParseError(line.number, head.column, "unknown directive '" + std::string(head.text) + "'");
    }
  }
  return raw;
}

inline Multigraph parse_graph(std::string_view input) { return Multigraph::validate(parse_raw_graph(input)); }

inline std::string write_graph(const Multigraph& g) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) out << "vertex " << v << '\n';
  for (const auto& e : g.edges()) out << "edge " << e.label << ' ' << g.vertex_label(e.u) << ' ' << g.vertex_label(e.v) << '\n';
  return out.str();
}

/// Parses a single `order e1 e2 ...` line.
inline EdgeOrdering parse_ordering(std::string_view input) {
  const auto lines = text::tokenize(input);
  if (lines.empty()) throw ParseError(1, 1, "missing 'order' line");
  if (lines.size() > 1) throw ParseError(lines[1].number, lines[1].tokens.front().column, "expected a single 'order' line");
  const auto& line = lines.front();
  if (line.tokens.front().text != "order")
    throw ParseError(line.number, line.tokens.front().column, "expected 'order'");
  EdgeOrdering w;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) w.sequence.push_back(text::label_at(line, line.tokens[i]));
  return w;
}

/// Parses a comma-separated list such as "e1,e2,e3".
inline EdgeOrdering parse_ordering_list(std::string_view input) {
  EdgeOrdering w;
  if (input.empty()) return w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(input.find(',', pos), input.size());
    const std::string_view item = input.substr(pos, comma - pos);
    if (!is_valid_label(item)) throw ParseError(1, pos + 1, "invalid label '" + std::string(item) + "'");
    w.sequence.emplace_back(item);
    if (comma == input.size()) break;
    pos = comma + 1;
  }
  return w;
}

inline std::string write_ordering(const EdgeOrdering& w) {
  std::string out = "order";
  for (const auto& e : w.sequence) out += " " + e;
  return out + "\n";
}

/// Parses `rot <v>: e e ...` lines; any cut of each cyclic order is accepted.
inline RotationSystem parse_rotation(std::string_view input) {
  RotationSystem::Map map;
  for (const auto& line : text::tokenize(input)) {
    const auto& head = line.tokens.front();
    if (head.text != "rot") throw ParseError(line.number, head.column, "expected 'rot'");
    if (line.tokens.size() < 2) throw ParseError(line.number, head.column, "'rot' needs a vertex");
    const auto& vtok = line.tokens[1];
    if (vtok.text.size() < 2 || vtok.text.back() != ':')
      throw ParseError(line.number, vtok.column, "expected '<vertex>:'");
    const std::string vertex = text::label_at(line, {vtok.text.substr(0, vtok.text.size() - 1), vtok.column});
    if (map.count(vertex)) throw ParseError(line.number, vtok.column, "vertex '" + vertex + "' given twice");
    auto& cyclic = map[vertex];
    for (std::size_t i = 2; i < line.tokens.size(); ++i) cyclic.push_back(text::label_at(line, line.tokens[i]));
  }
  return RotationSystem(std::move(map));
}

/// One `rot` line per vertex, in the graph's vertex order.
inline std::string write_rotation(const Multigraph& g, const RotationSystem& rho) {
  std::ostringstream out;
  for (const auto& v : g.vertices()) {
    out << "rot " << v << ':';
    auto it = rho.rotations().find(v);
    if (it != rho.rotations().end())
      for (const auto& e : it->second) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

inline std::string format_dart(const Dart& d) { return "(" + d.edge + "," + d.source + "," + d.target + ")"; }

inline std::string write_faces(const FaceTrace& faces) {
  std::ostringstream out;
  for (std::size_t k = 0; k < faces.faces.size(); ++k) {
    out << "face " << k + 1 << ':';
    for (const auto& d : faces.faces[k]) out << ' ' << format_dart(d);
    out << '\n';
  }
  return out.str();
}

/// Graphviz export; face boundaries are written as comments.
inline std::string write_dot(const Multigraph& g, const FaceTrace& faces) {
  std::ostringstream out;
  out << "graph cycletrace {\n";
  for (const auto& v : g.vertices()) out << "  \"" << v << "\";\n";
  for (const auto& e : g.edges())
    out << "  \"" << g.vertex_label(e.u) << "\" -- \"" << g.vertex_label(e.v) << "\" [label=\"" << e.label << "\"];\n";
  for (std::size_t k = 0; k < faces.faces.size(); ++k) {
    out << "  // face " << k + 1 << ':';
    for (const auto& d : faces.faces[k]) out << ' ' << format_dart(d);
    out << '\n';
  }
  out << "}\n";
  return out.str();
}

}  // namespace cycletrace

#endif  // CYCLETRACE_TEXT_FORMAT_HPP
