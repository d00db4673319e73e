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

#ifndef CYCLETRACE_ORDERING_HPP
#define CYCLETRACE_ORDERING_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cycletrace/error.hpp"
#include "cycletrace/graph.hpp"
#include "cycletrace/permutation.hpp"

namespace cycletrace {

/// A linear order on the edges of a graph, earliest edge first.
struct EdgeOrdering {
  std::vector<std::string> sequence;

  friend bool operator==(const EdgeOrdering&, const EdgeOrdering&) = default;
};

/// The edges in declaration order.
inline EdgeOrdering declaration_order(const Multigraph& g) {
  EdgeOrdering w;
  for (const auto& e : g.edges()) w.sequence.push_back(e.label);
  return w;
}

inline EdgeOrdering ordering_from_indices(const Multigraph& g, const std::vector<std::size_t>& order) {
  EdgeOrdering w;
  w.sequence.reserve(order.size());
  for (std::size_t e : order) w.sequence.push_back(g.edge(e).label);
  return w;
}

/// Edge indices of `w`, checking that it lists every edge of `g` exactly once.
inline std::vector<std::size_t> resolve_ordering(const Multigraph& g, const EdgeOrdering& w) {
  if (w.sequence.size() != g.edge_count())
    throw Error(ErrorKind::InvalidOrdering, "ordering has " + std::to_string(w.sequence.size()) +
                                                " entries but the graph has " + std::to_string(g.edge_count()) +
                                                " edges");
  std::vector<std::size_t> out;
  out.reserve(w.sequence.size());
  std::vector<bool> used(g.edge_count(), false);
  for (const auto& label : w.sequence) {
    auto e = g.find_edge(label);
    if (!e) throw Error(ErrorKind::InvalidOrdering, "ordering names unknown edge '" + label + "'");
    if (used[*e]) throw Error(ErrorKind::InvalidOrdering, "ordering repeats edge '" + label + "'");
    used[*e] = true;
    out.push_back(*e);
  }
  return out;
}

inline Permutation transposition_of_edge(const Multigraph& g, std::string_view edge) {
  const Edge& e = g.edge(g.edge_index(edge));
  return Permutation::transposition(g.vertex_count(), e.u, e.v);
}

/// tau_{e_m} ... tau_{e_1} for index orderings; the first edge acts first.
inline Permutation product_of_transpositions(const Multigraph& g, const std::vector<std::size_t>& order) {
  Permutation p(g.vertex_count());
  for (std::size_t e : order) p.swap_values(g.edge(e).u, g.edge(e).v);
  return p;
}

inline Permutation permutation_of_ordering(const Multigraph& g, const EdgeOrdering& w) {
  return product_of_transpositions(g, resolve_ordering(g, w));
}

/// Number of orbits of `p` on the vertex set, fixed points counted.
inline std::size_t orbit_count(const Multigraph& g, const Permutation& p) {
  if (p.size() != g.vertex_count())
    throw Error(ErrorKind::InvalidArgument, "permutation does not act on the vertex set");
  return p.orbit_count();
}

inline bool is_full_cyclic_ordering(const Multigraph& g, const EdgeOrdering& w) {
  return permutation_of_ordering(g, w).is_full_cycle();
}

/// Cycle notation using vertex labels, e.g. "(1 3 2 5 4)".
inline std::string format_permutation(const Multigraph& g, const Permutation& p) {
  return p.to_string([&](std::size_t v) { return g.vertex_label(v); });
}

/// (e_1, ..., e_m) -> (e_2, ..., e_m, e_1).
inline EdgeOrdering circular_shift(const EdgeOrdering& w) {
  if (w.sequence.empty()) throw Error(ErrorKind::EmptyOrdering, "cannot shift an empty ordering");
  EdgeOrdering out = w;
  std::rotate(out.sequence.begin(), out.sequence.begin() + 1, out.sequence.end());
  return out;
}

/// Rotates `w` so that `edge` comes first.
inline EdgeOrdering rotate_to_front(const EdgeOrdering& w, std::string_view edge) {
  auto it = std::find(w.sequence.begin(), w.sequence.end(), edge);
  if (it == w.sequence.end())
    throw Error(ErrorKind::InvalidOrdering, "edge '" + std::string(edge) + "' is not in the ordering");
  EdgeOrdering out = w;
  std::rotate(out.sequence.begin(), out.sequence.begin() + (it - w.sequence.begin()), out.sequence.end());
  return out;
}

struct GraphWithOrdering {
  Multigraph graph;
  EdgeOrdering ordering;
};

/// Subdivides `edge` with a new vertex and orders the new graph as
/// (edge.1, edge.2, rest of w read cyclically after edge). The orbit count of
/// the product is unchanged.
inline GraphWithOrdering subdivide_ordering(const Multigraph& g, const EdgeOrdering& w, std::string_view edge,
                                            std::string_view fresh_vertex) {
  g.edge_index(edge);
  resolve_ordering(g, w);
  Multigraph sub = subdivide_edge(g, edge, fresh_vertex);
  EdgeOrdering shifted = rotate_to_front(w, edge);
  EdgeOrdering out;
  out.sequence.reserve(shifted.sequence.size() + 1);
  out.sequence.push_back(subdivision_label(edge, 1));
  out.sequence.push_back(subdivision_label(edge, 2));
  out.sequence.insert(out.sequence.end(), shifted.sequence.begin() + 1, shifted.sequence.end());
  return {std::move(sub), std::move(out)};
}

/// Smooths the degree-2 vertex `vertex`, whose product must be fixed-point
/// free. The ordering is rotated so that whichever of the two edges at the
/// vertex comes first in `w` leads; that edge is replaced by the merged edge
/// and the other one is dropped. The orbit count of the product is unchanged.
/// Smooths `vertex` away. The ordering is cut so that whichever of the two
/// edges at `vertex` comes first leads, the other is dropped, and the merged
/// edge takes the leading edge's place. That placement can change the orbit
/// count; when it does, the merged edge is moved to where the dropped edge
/// was, and failing that to the first position that keeps the count. For
/// orbit counts above one no such position need exist, and the first
/// placement is returned as is.
inline GraphWithOrdering smooth_ordering(const Multigraph& g, const EdgeOrdering& w, std::string_view vertex) {
  const std::size_t v = g.vertex_index(vertex);
  const SmoothingSite site = smoothing_site(g, v);
  const auto order = resolve_ordering(g, w);
  const Permutation before = product_of_transpositions(g, order);
  if (before.has_fixed_point())
    throw Error(ErrorKind::FixedPointPrecondition, "product of the ordering has a fixed point");

  Multigraph smoothed = smooth_vertex(g, vertex);
  const std::string merged = smoothing_label(vertex);
  const auto first_at = std::find_if(order.begin(), order.end(), [&](std::size_t e) {
    return e == site.first_edge || e == site.second_edge;
  });
  const std::size_t leading = *first_at;
  const std::size_t trailing = leading == site.first_edge ? site.second_edge : site.first_edge;

  // Remaining edges after the cut, and the slot the dropped edge occupied.
  std::vector<std::string> rest;
  rest.reserve(order.size() - 2);
  std::size_t trailing_slot = 0;
  const std::size_t start = static_cast<std::size_t>(first_at - order.begin());
  for (std::size_t k = 1; k < order.size(); ++k) {
    const std::size_t e = order[(start + k) % order.size()];
    if (e == trailing) {
      trailing_slot = rest.size();
    } else {
      rest.push_back(g.edge(e).label);
    }
  }

  auto placed_at = [&](std::size_t slot) {
    EdgeOrdering out;
    out.sequence.reserve(rest.size() + 1);
    out.sequence.insert(out.sequence.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(slot));
    out.sequence.push_back(merged);
    out.sequence.insert(out.sequence.end(), rest.begin() + static_cast<std::ptrdiff_t>(slot), rest.end());
    return out;
  };
  const std::size_t target = before.orbit_count();
  auto keeps_count = [&](const EdgeOrdering& candidate) {
    return permutation_of_ordering(smoothed, candidate).orbit_count() == target;
  };

  EdgeOrdering chosen = placed_at(0);
  if (!keeps_count(chosen)) {
    std::vector<std::size_t> slots{trailing_slot};
    for (std::size_t slot = 1; slot <= rest.size(); ++slot)
      if (slot != trailing_slot) slots.push_back(slot);
    for (std::size_t slot : slots) {
      EdgeOrdering candidate = placed_at(slot);
      if (keeps_count(candidate)) {
        chosen = std::move(candidate);
        break;
      }
    }
  }
  return {std::move(smoothed), std::move(chosen)};
}

}  // namespace cycletrace

#endif  // CYCLETRACE_ORDERING_HPP
