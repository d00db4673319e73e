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

#ifndef CYCLETRACE_GRAPH_HPP
#define CYCLETRACE_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cycletrace/error.hpp"

namespace cycletrace {

/// Unchecked graph description, as read from a file or built by hand.
struct RawGraph {
  struct RawEdge {
    std::string label;
    std::string first;
    std::string second;
  };

  std::vector<std::string> vertices;
  std::vector<RawEdge> edges;
};

/// Endpoints are stored as vertex indices; `u` is the endpoint listed first.
struct Edge {
  std::string label;
  std::size_t u;
  std::size_t v;

  std::size_t other(std::size_t w) const { return w == u ? v : u; }
  bool touches(std::size_t w) const { return w == u || w == v; }
};

inline bool is_valid_label(std::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '.';
  });
}

// Small union-find used for connectivity and spanning-tree pruning.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

/// A finite multigraph without loops. Vertices and edges keep the order in
/// which they were declared; that order is the "fixture order" used wherever
/// a deterministic tie-break is needed. Vertex indices run 0..n-1 and are
/// printed 1-based when a permutation is written without labels.
class Multigraph {
 public:
  static Multigraph validate(const RawGraph& raw) {
    Multigraph g;
    if (raw.vertices.empty()) throw Error(ErrorKind::EmptyGraph, "graph has no vertices");
    for (const auto& label : raw.vertices) {
      if (!is_valid_label(label)) throw Error(ErrorKind::InvalidLabel, "bad vertex label '" + label + "'");
      if (!g.vertex_index_.emplace(label, g.vertices_.size()).second)
        throw Error(ErrorKind::DuplicateLabel, "vertex '" + label + "' declared twice");
      g.vertices_.push_back(label);
    }
    g.incident_.resize(g.vertices_.size());
    for (const auto& e : raw.edges) {
      if (!is_valid_label(e.label)) throw Error(ErrorKind::InvalidLabel, "bad edge label '" + e.label + "'");
      auto a = g.vertex_index_.find(e.first);
      auto b = g.vertex_index_.find(e.second);
      if (a == g.vertex_index_.end())
        throw Error(ErrorKind::DanglingEndpoint, "edge '" + e.label + "' uses unknown vertex '" + e.first + "'");
      if (b == g.vertex_index_.end())
        throw Error(ErrorKind::DanglingEndpoint, "edge '" + e.label + "' uses unknown vertex '" + e.second + "'");
      if (a->second == b->second) throw Error(ErrorKind::LoopEdge, "edge '" + e.label + "' is a loop");
      if (!g.edge_index_.emplace(e.label, g.edges_.size()).second)
        throw Error(ErrorKind::DuplicateLabel, "edge '" + e.label + "' declared twice");
      g.incident_[a->second].push_back(g.edges_.size());
      g.incident_[b->second].push_back(g.edges_.size());
      g.edges_.push_back(Edge{e.label, a->second, b->second});
    }
    g.connected_ = g.compute_connected();
    return g;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_label(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// Incident edges of `v` in edge-declaration order.
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_.at(v); }
  std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }

  std::optional<std::size_t> find_vertex(std::string_view label) const {
    auto it = vertex_index_.find(std::string(label));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  std::optional<std::size_t> find_edge(std::string_view label) const {
    auto it = edge_index_.find(std::string(label));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t vertex_index(std::string_view label) const {
    if (auto v = find_vertex(label)) return *v;
    throw Error(ErrorKind::UnknownVertex, "no vertex '" + std::string(label) + "'");
  }
  std::size_t edge_index(std::string_view label) const {
    if (auto e = find_edge(label)) return *e;
    throw Error(ErrorKind::UnknownEdge, "no edge '" + std::string(label) + "'");
  }

  bool connected() const { return connected_; }

  /// No two edges share an endpoint pair.
  bool simple() const {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_) pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(pairs.begin(), pairs.end());
    return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
  }

  void require_connected(std::string_view what) const {
    if (!connected_) throw Error(ErrorKind::Disconnected, std::string(what) + " requires a connected graph");
  }

  RawGraph raw() const {
    RawGraph r;
    r.vertices = vertices_;
    for (const auto& e : edges_) r.edges.push_back({e.label, vertices_[e.u], vertices_[e.v]});
    return r;
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto& x = a.edges_[i];
      const auto& y = b.edges_[i];
      if (x.label != y.label || x.u != y.u || x.v != y.v) return false;
    }
    return true;
  }

 private:
  bool compute_connected() const {
    DisjointSets sets(vertices_.size());
    std::size_t components = vertices_.size();
    for (const auto& e : edges_)
      if (sets.unite(e.u, e.v)) --components;
    return components == 1;
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
  bool connected_ = false;
};

inline Multigraph validate(const RawGraph& raw) { return Multigraph::validate(raw); }

/// Circuit rank |E| - |V| + 1 of a connected graph.
inline std::size_t betti(const Multigraph& g) {
  g.require_connected("betti");
  return g.edge_count() + 1 - g.vertex_count();
}

inline std::string subdivision_label(std::string_view edge, int half) {
  return std::string(edge) + "." + std::to_string(half);
}

inline std::string smoothing_label(std::string_view vertex) { return std::string(vertex) + ".s"; }

/// Replaces `edge` = {u, v} by `edge.1` = {u, w} and `edge.2` = {v, w}, at the
/// position `edge` held in the edge list. `u` is the endpoint listed first.
inline Multigraph subdivide_edge(const Multigraph& g, std::string_view edge, std::string_view fresh_vertex) {
  const std::size_t e = g.edge_index(edge);
  if (g.find_vertex(fresh_vertex))
    throw Error(ErrorKind::VertexLabelCollision, "vertex '" + std::string(fresh_vertex) + "' already exists");
  RawGraph raw = g.raw();
  raw.vertices.emplace_back(fresh_vertex);
  const auto original = raw.edges[e];
  raw.edges[e] = {subdivision_label(edge, 1), original.first, std::string(fresh_vertex)};
  raw.edges.insert(raw.edges.begin() + static_cast<std::ptrdiff_t>(e) + 1,
                   RawGraph::RawEdge{subdivision_label(edge, 2), original.second, std::string(fresh_vertex)});
  return Multigraph::validate(raw);
}

/// The two edges at a degree-2 vertex and its two neighbours.
struct SmoothingSite {
  std::size_t first_edge;
  std::size_t second_edge;
  std::size_t first_neighbor;
  std::size_t second_neighbor;
};

inline SmoothingSite smoothing_site(const Multigraph& g, std::size_t w) {
  if (g.degree(w) != 2)
    throw Error(ErrorKind::DegreeNotTwo, "vertex '" + g.vertex_label(w) + "' has degree " + std::to_string(g.degree(w)));
  const auto& inc = g.incident(w);
  SmoothingSite site{inc[0], inc[1], g.edge(inc[0]).other(w), g.edge(inc[1]).other(w)};
  if (site.first_neighbor == site.second_neighbor)
    throw Error(ErrorKind::WouldCreateLoop, "both edges at '" + g.vertex_label(w) + "' lead to the same vertex");
  return site;
}

/// Removes degree-2 vertex `w` and joins its neighbours by a new edge `w.s`,
/// placed where the earlier of the two removed edges stood.
inline Multigraph smooth_vertex(const Multigraph& g, std::string_view vertex) {
  const std::size_t w = g.vertex_index(vertex);
  const SmoothingSite site = smoothing_site(g, w);
  RawGraph raw;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != w) raw.vertices.push_back(g.vertex_label(v));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e == site.first_edge) {
      raw.edges.push_back({smoothing_label(vertex), g.vertex_label(site.first_neighbor),
                           g.vertex_label(site.second_neighbor)});
    } else if (e != site.second_edge) {
      const auto& ed = g.edge(e);
      raw.edges.push_back({ed.label, g.vertex_label(ed.u), g.vertex_label(ed.v)});
    }
  }
  return Multigraph::validate(raw);
}

}  // namespace cycletrace

#endif  // CYCLETRACE_GRAPH_HPP
