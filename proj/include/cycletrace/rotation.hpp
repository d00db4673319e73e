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

#ifndef CYCLETRACE_ROTATION_HPP
#define CYCLETRACE_ROTATION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "cycletrace/error.hpp"
#include "cycletrace/graph.hpp"
#include "cycletrace/ordering.hpp"
#include "cycletrace/permutation.hpp"

namespace cycletrace {

/// An edge traversed from `source` to `target`.
struct Dart {
  std::string edge;
  std::string source;
  std::string target;

  auto operator<=>(const Dart&) const = default;
};

/// Per-vertex cyclic orders of incident edges, each stored rotated so that
/// its lexicographically least edge label comes first.
class RotationSystem {
 public:
  using Map = std::map<std::string, std::vector<std::string>>;

  RotationSystem() = default;
  explicit RotationSystem(Map rotations) : rotations_(std::move(rotations)) {
    for (auto& [vertex, cyclic] : rotations_) canonicalize(cyclic);
  }

  const Map& rotations() const { return rotations_; }
  const std::vector<std::string>& at(const std::string& vertex) const { return rotations_.at(vertex); }

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;

  static void canonicalize(std::vector<std::string>& cyclic) {
    if (cyclic.empty()) return;
    std::rotate(cyclic.begin(), std::min_element(cyclic.begin(), cyclic.end()), cyclic.end());
  }

 private:
  Map rotations_;
};

/// Rotations by vertex index, each a cyclic list of incident edge indices.
using IndexedRotation = std::vector<std::vector<std::size_t>>;

// Darts are numbered 2e (from the first-listed endpoint of e to the second)
// and 2e + 1 (reverse), so alpha is d ^ 1.
namespace darts_ix {

inline std::size_t out_of(const Multigraph& g, std::size_t e, std::size_t v) {
  return 2 * e + (g.edge(e).u == v ? 0 : 1);
}
inline std::size_t edge_of(std::size_t d) { return d / 2; }
inline std::size_t source(const Multigraph& g, std::size_t d) {
  return d % 2 == 0 ? g.edge(d / 2).u : g.edge(d / 2).v;
}
inline std::size_t target(const Multigraph& g, std::size_t d) {
  return d % 2 == 0 ? g.edge(d / 2).v : g.edge(d / 2).u;
}
inline std::size_t alpha(std::size_t d) { return d ^ 1U; }

inline Dart to_dart(const Multigraph& g, std::size_t d) {
  return Dart{g.edge(edge_of(d)).label, g.vertex_label(source(g, d)), g.vertex_label(target(g, d))};
}

inline std::size_t from_dart(const Multigraph& g, const Dart& d) {
  auto e = g.find_edge(d.edge);
  auto s = g.find_vertex(d.source);
  auto t = g.find_vertex(d.target);
  if (!e || !s || !t || *s == *t || !g.edge(*e).touches(*s) || !g.edge(*e).touches(*t))
    throw Error(ErrorKind::DartNotInGraph, "(" + d.edge + "," + d.source + "," + d.target + ") is not a dart");
  return out_of(g, *e, *s);
}

/// Darts sorted by (edge label, source label, target label).
inline std::vector<std::size_t> lexicographic_order(const Multigraph& g) {
  std::vector<std::size_t> order(2 * g.edge_count());
  for (std::size_t d = 0; d < order.size(); ++d) order[d] = d;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& ea = g.edge(edge_of(a)).label;
    const auto& eb = g.edge(edge_of(b)).label;
    if (ea != eb) return ea < eb;
    const auto& sa = g.vertex_label(source(g, a));
    const auto& sb = g.vertex_label(source(g, b));
    return sa < sb;
  });
  return order;
}

}  // namespace darts_ix

/// All 2|E| darts, in (edge label, source, target) order.
inline std::vector<Dart> darts(const Multigraph& g) {
  std::vector<Dart> out;
  for (std::size_t d : darts_ix::lexicographic_order(g)) out.push_back(darts_ix::to_dart(g, d));
  return out;
}

inline Dart alpha(const Dart& d) { return Dart{d.edge, d.target, d.source}; }

/// Checks `rho` against `g` and converts it to index form.
inline IndexedRotation index_rotation(const Multigraph& g, const RotationSystem& rho) {
  IndexedRotation out(g.vertex_count());
  std::vector<bool> present(g.vertex_count(), false);
  for (const auto& [label, cyclic] : rho.rotations()) {
    auto v = g.find_vertex(label);
    if (!v) throw Error(ErrorKind::InvalidRotation, "rotation given for unknown vertex '" + label + "'");
    present[*v] = true;
    std::vector<std::size_t> expected = g.incident(*v);
    std::vector<std::size_t> given;
    for (const auto& edge : cyclic) {
      auto e = g.find_edge(edge);
      if (!e || !g.edge(*e).touches(*v))
        throw Error(ErrorKind::InvalidRotation, "edge '" + edge + "' is not incident to '" + label + "'");
      given.push_back(*e);
    }
    out[*v] = given;
    std::sort(given.begin(), given.end());
    std::sort(expected.begin(), expected.end());
    if (given != expected)
      throw Error(ErrorKind::InvalidRotation, "rotation at '" + label + "' is not a permutation of its edges");
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!present[v] && g.degree(v) > 0)
      throw Error(ErrorKind::InvalidRotation, "no rotation given for vertex '" + g.vertex_label(v) + "'");
  return out;
}

inline RotationSystem to_rotation_system(const Multigraph& g, const IndexedRotation& rho) {
  RotationSystem::Map map;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    auto& cyclic = map[g.vertex_label(v)];
    for (std::size_t e : rho[v]) cyclic.push_back(g.edge(e).label);
  }
  return RotationSystem(std::move(map));
}

/// sigma as a table on dart indices; only darts leaving the rotation vertex
/// are involved, so the table is total.
inline std::vector<std::size_t> sigma_table(const Multigraph& g, const IndexedRotation& rho) {
  std::vector<std::size_t> sigma(2 * g.edge_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto& cyclic = rho[v];
    for (std::size_t i = 0; i < cyclic.size(); ++i)
      sigma[darts_ix::out_of(g, cyclic[i], v)] = darts_ix::out_of(g, cyclic[(i + 1) % cyclic.size()], v);
  }
  return sigma;
}

/// Orbits of phi = sigma after alpha; an edgeless graph has one face.
inline std::size_t count_faces(const std::vector<std::size_t>& sigma) {
  if (sigma.empty()) return 1;
  std::vector<std::uint8_t> seen(sigma.size(), 0);
  std::size_t faces = 0;
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (seen[start]) continue;
    ++faces;
    for (std::size_t d = start; !seen[d]; d = sigma[d ^ 1U]) seen[d] = 1;
  }
  return faces;
}

inline Dart sigma(const Multigraph& g, const RotationSystem& rho, const Dart& d) {
  const std::size_t ix = darts_ix::from_dart(g, d);
  return darts_ix::to_dart(g, sigma_table(g, index_rotation(g, rho))[ix]);
}

inline Dart phi(const Multigraph& g, const RotationSystem& rho, const Dart& d) {
  return sigma(g, rho, alpha(d));
}

/// Face boundaries as closed dart walks. `repeated_edges[k]` lists the edges
/// whose both darts lie on face k.
struct FaceTrace {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::vector<std::string>> repeated_edges;

  std::size_t face_count() const { return faces.size(); }
};

/// Face index of every dart, faces numbered in the order trace_faces emits them.
struct IndexedFaces {
  std::vector<std::vector<std::size_t>> faces;
  std::vector<std::size_t> face_of;
};

inline IndexedFaces trace_faces_indexed(const Multigraph& g, const IndexedRotation& rho) {
  const auto sigma = sigma_table(g, rho);
  IndexedFaces out;
  out.face_of.assign(sigma.size(), sigma.size());
  if (sigma.empty()) {
    out.faces.emplace_back();
    return out;
  }
  for (std::size_t start : darts_ix::lexicographic_order(g)) {
    if (out.face_of[start] != sigma.size()) continue;
    const std::size_t id = out.faces.size();
    auto& face = out.faces.emplace_back();
    for (std::size_t d = start; out.face_of[d] == sigma.size(); d = sigma[darts_ix::alpha(d)]) {
      out.face_of[d] = id;
      face.push_back(d);
    }
  }
  return out;
}

/// Each new face starts from the least untraced dart in (edge, source,
/// target) order. An edgeless graph has a single face with an empty boundary.
inline FaceTrace trace_faces(const Multigraph& g, const RotationSystem& rho) {
  const auto indexed = trace_faces_indexed(g, index_rotation(g, rho));
  FaceTrace out;
  for (const auto& face : indexed.faces) {
    auto& walk = out.faces.emplace_back();
    auto& repeated = out.repeated_edges.emplace_back();
    for (std::size_t d : face) {
      walk.push_back(darts_ix::to_dart(g, d));
      if (d % 2 == 0 && indexed.face_of[d ^ 1U] == indexed.face_of[d]) repeated.push_back(g.edge(d / 2).label);
    }
  }
  return out;
}

inline std::size_t genus_from_faces(const Multigraph& g, std::size_t faces) {
  const auto twice = 2 + static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) -
                     static_cast<std::int64_t>(faces);
  if (twice % 2 != 0) throw Error(ErrorKind::NonIntegerGenus, "Euler characteristic is odd");
  if (twice < 0) throw Error(ErrorKind::NegativeGenus, "Euler characteristic exceeds 2");
  return static_cast<std::size_t>(twice / 2);
}

/// Genus of the orientable surface carrying the embedding given by `rho`.
inline std::size_t genus_of(const Multigraph& g, const RotationSystem& rho) {
  g.require_connected("genus_of");
  return genus_from_faces(g, count_faces(sigma_table(g, index_rotation(g, rho))));
}

/// Cyclic closure of the order `order` induces on each vertex's edges.
inline IndexedRotation rotation_from_order_indices(const Multigraph& g, const std::vector<std::size_t>& order) {
  IndexedRotation rho(g.vertex_count());
  for (std::size_t e : order) {
    rho[g.edge(e).u].push_back(e);
    rho[g.edge(e).v].push_back(e);
  }
  return rho;
}

inline RotationSystem rotation_from_ordering(const Multigraph& g, const EdgeOrdering& w) {
  return to_rotation_system(g, rotation_from_order_indices(g, resolve_ordering(g, w)));
}

/// The correspondence between vertex orbits of the product and faces of the
/// induced rotation system. Orbit k (canonical cycle order) maps to face
/// `face_of_orbit[k]`, indexed as in trace_faces.
struct OrbitFaceMap {
  std::vector<std::vector<std::string>> vertex_orbits;
  std::vector<std::size_t> face_of_orbit;
  FaceTrace faces;
};

inline OrbitFaceMap orbit_face_bijection(const Multigraph& g, const EdgeOrdering& w) {
  g.require_connected("orbit_face_bijection");
  const auto order = resolve_ordering(g, w);
  const Permutation pi = product_of_transpositions(g, order);
  const IndexedRotation rho = rotation_from_order_indices(g, order);
  const auto indexed = trace_faces_indexed(g, rho);

  // Face of the dart leaving v along its earliest edge.
  auto face_of_vertex = [&](std::size_t v) -> std::size_t {
    if (rho[v].empty()) return 0;
    return indexed.face_of[darts_ix::out_of(g, rho[v].front(), v)];
  };

  OrbitFaceMap out;
  std::vector<bool> hit(indexed.faces.size(), false);
  for (const auto& cycle : pi.cycles()) {
    const std::size_t face = face_of_vertex(cycle.front());
    for (std::size_t v : cycle)
      if (face_of_vertex(v) != face)
        throw Error(ErrorKind::InternalVerificationFailure, "orbit of '" + g.vertex_label(cycle.front()) +
                                                                "' meets two faces");
    if (hit[face])
      throw Error(ErrorKind::InternalVerificationFailure, "two vertex orbits share a face");
    hit[face] = true;
    auto& labels = out.vertex_orbits.emplace_back();
    for (std::size_t v : cycle) labels.push_back(g.vertex_label(v));
    out.face_of_orbit.push_back(face);
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    throw Error(ErrorKind::InternalVerificationFailure, "some face is not reached by a vertex orbit");
  out.faces = trace_faces(g, to_rotation_system(g, rho));
  return out;
}

namespace detail {

// Precedence constraints between edges, kept acyclic while arcs are added.
class PrecedenceGraph {
 public:
  explicit PrecedenceGraph(std::size_t n) : succ_(n), seen_(n, 0) {}

  bool reaches(std::size_t from, std::size_t to) {
    ++stamp_;
    std::vector<std::size_t> stack{from};
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      if (x == to) return true;
      if (seen_[x] == stamp_) continue;
      seen_[x] = stamp_;
      for (std::size_t y : succ_[x]) stack.push_back(y);
    }
    return false;
  }

  bool add(std::size_t a, std::size_t b) {
    if (reaches(b, a)) return false;
    succ_[a].push_back(b);
    return true;
  }

  void remove_last(std::size_t a) { succ_[a].pop_back(); }

  std::vector<std::size_t> topological_order() const {
    std::vector<std::size_t> indegree(succ_.size(), 0);
    for (const auto& out : succ_)
      for (std::size_t y : out) ++indegree[y];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t x = 0; x < succ_.size(); ++x)
      if (indegree[x] == 0) ready.push(x);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
      const std::size_t x = ready.top();
      ready.pop();
      order.push_back(x);
      for (std::size_t y : succ_[x])
        if (--indegree[y] == 0) ready.push(y);
    }
    return order;
  }

 private:
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::size_t> seen_;
  std::size_t stamp_ = 0;
};

inline bool choose_cuts(const Multigraph& g, const IndexedRotation& rho, const std::vector<std::size_t>& vertices,
                        std::size_t depth, PrecedenceGraph& prec) {
  if (depth == vertices.size()) return true;
  const auto& cyclic = rho[vertices[depth]];
  const std::size_t d = cyclic.size();
  for (std::size_t cut = 0; cut < d; ++cut) {
    std::vector<std::size_t> added;
    bool ok = true;
    for (std::size_t k = 0; k + 1 < d; ++k) {
      const std::size_t a = cyclic[(cut + k) % d];
      const std::size_t b = cyclic[(cut + k + 1) % d];
      if (!prec.add(a, b)) {
        ok = false;
        break;
      }
      added.push_back(a);
    }
    if (ok && choose_cuts(g, rho, vertices, depth + 1, prec)) return true;
    for (auto it = added.rbegin(); it != added.rend(); ++it) prec.remove_last(*it);
  }
  return false;
}

}  // namespace detail

/// An ordering whose induced rotation system is `rho`, if one exists. Only
/// vertices of degree at least 3 constrain the answer; for each, one edge is
/// chosen to come first, which fixes a chain on its edges. Choices are
/// explored depth first, abandoning a prefix as soon as its chains close a
/// cycle. Among realizing orders the smallest-index-first topological sort
/// is returned.
inline std::optional<std::vector<std::size_t>> orderable_indices(const Multigraph& g, const IndexedRotation& rho) {
  std::vector<std::size_t> vertices;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (rho[v].size() >= 3) vertices.push_back(v);
  std::stable_sort(vertices.begin(), vertices.end(),
                   [&](std::size_t a, std::size_t b) { return rho[a].size() > rho[b].size(); });
  detail::PrecedenceGraph prec(g.edge_count());
  if (!detail::choose_cuts(g, rho, vertices, 0, prec)) return std::nullopt;
  return prec.topological_order();
}

inline std::optional<EdgeOrdering> orderable(const Multigraph& g, const RotationSystem& rho) {
  auto order = orderable_indices(g, index_rotation(g, rho));
  if (!order) return std::nullopt;
  return ordering_from_indices(g, *order);
}

}  // namespace cycletrace

#endif  // CYCLETRACE_ROTATION_HPP
