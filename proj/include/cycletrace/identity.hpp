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

#ifndef CYCLETRACE_IDENTITY_HPP
#define CYCLETRACE_IDENTITY_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cycletrace/error.hpp"
#include "cycletrace/genus_search.hpp"
#include "cycletrace/graph.hpp"
#include "cycletrace/ordering.hpp"
#include "cycletrace/rotation.hpp"

namespace cycletrace {

/// A closed walk assigned to `owner`: `walk` lists vertices with the start
/// repeated at the end, `edges[i]` joins walk[i] and walk[i + 1].
struct Trail {
  std::size_t owner;
  std::vector<std::size_t> walk;
  std::vector<std::size_t> edges;
};

/// Outcome of checking a trail assignment against the four conditions
/// (bijective, owner on its trail, 2m edge slots, every edge on exactly two
/// trails), plus the edge-count parity and the Euler bound m >= 2n - 2.
struct EdenReport {
  bool m_even = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> trail_map;
  bool closed_trails = false;
  bool bijective = false;
  bool owner_on_trail = false;
  bool total_is_2m = false;
  bool each_edge_twice = false;
  bool euler_feasible = false;

  bool conditions_hold() const {
    return m_even && closed_trails && bijective && owner_on_trail && total_is_2m && each_edge_twice;
  }
};

/// m even and m >= 2n - 2; an identity ordering gives n faces, so a smaller
/// m would force negative genus.
inline bool identity_ordering_feasible(const Multigraph& g) {
  g.require_connected("identity_ordering_feasible");
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  return m % 2 == 0 && m + 2 >= 2 * n;
}

inline EdenReport check_trail_system(const Multigraph& g, const std::vector<Trail>& trails) {
  EdenReport r;
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  r.m_even = m % 2 == 0;
  r.euler_feasible = m + 2 >= 2 * n;

  r.closed_trails = true;
  r.owner_on_trail = true;
  std::size_t total = 0;
  std::vector<std::size_t> membership(m, 0);
  for (const auto& t : trails) {
    auto& entry = r.trail_map.emplace_back(g.vertex_label(t.owner), std::vector<std::string>{});
    for (std::size_t e : t.edges) entry.second.push_back(g.edge(e).label);
    total += t.edges.size();

    bool closed = !t.edges.empty() && t.walk.size() == t.edges.size() + 1 && t.walk.front() == t.walk.back();
    for (std::size_t i = 0; closed && i < t.edges.size(); ++i) {
      const Edge& e = g.edge(t.edges[i]);
      closed = e.touches(t.walk[i]) && e.other(t.walk[i]) == t.walk[i + 1];
    }
    std::vector<std::size_t> sorted = t.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) closed = false;
    r.closed_trails = r.closed_trails && closed;
    for (std::size_t e : std::set<std::size_t>(sorted.begin(), sorted.end())) ++membership[e];

    if (std::find(t.walk.begin(), t.walk.end(), t.owner) == t.walk.end()) r.owner_on_trail = false;
  }
  r.total_is_2m = total == 2 * m;
  r.each_edge_twice = std::all_of(membership.begin(), membership.end(), [](std::size_t c) { return c == 2; });

  std::vector<bool> owned(n, false);
  std::set<std::vector<std::size_t>> edge_sets;
  r.bijective = trails.size() == n;
  for (const auto& t : trails) {
    if (owned[t.owner]) r.bijective = false;
    owned[t.owner] = true;
    std::vector<std::size_t> key = t.edges;
    std::sort(key.begin(), key.end());
    if (!edge_sets.insert(std::move(key)).second) r.bijective = false;
  }
  return r;
}

/// For an identity ordering of a simple connected graph, reads off each
/// vertex's trail from the face its earliest dart lies on (directions
/// forgotten) and checks the trail conditions.
inline EdenReport check_eden_conditions(const Multigraph& g, const EdgeOrdering& w) {
  g.require_connected("check_eden_conditions");
  if (!g.simple()) throw Error(ErrorKind::NotSimple, "graph has parallel edges");
  const auto order = resolve_ordering(g, w);
  if (!product_of_transpositions(g, order).is_identity())
    throw Error(ErrorKind::NotIdentityOrdering, "product of the ordering is not the identity");

  const IndexedRotation rho = rotation_from_order_indices(g, order);
  const auto sigma = sigma_table(g, rho);
  std::vector<Trail> trails;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    Trail t{v, {v}, {}};
    if (!rho[v].empty()) {
      const std::size_t start = darts_ix::out_of(g, rho[v].front(), v);
      std::size_t d = start;
      do {
        t.edges.push_back(darts_ix::edge_of(d));
        t.walk.push_back(darts_ix::target(g, d));
        d = sigma[darts_ix::alpha(d)];
      } while (d != start);
    }
    trails.push_back(std::move(t));
  }
  return check_trail_system(g, trails);
}

/// Searches for an ordering whose product is the identity: rotation systems
/// with exactly n faces are tried in enumeration order, and the first one that
/// some ordering induces wins. Returns none when the necessary conditions
/// fail or the whole space was searched; BudgetExceeded otherwise.
inline std::optional<EdgeOrdering> find_identity_ordering(const Multigraph& g, const SearchOptions& options = {}) {
  if (!identity_ordering_feasible(g)) return std::nullopt;
  std::optional<std::vector<std::size_t>> found;
  search_rotations(g, options.budget, [&](const IndexedRotation& rho, std::size_t faces) {
    if (faces != g.vertex_count()) return true;
    found = orderable_indices(g, rho);
    return !found.has_value();
  });
  if (!found) return std::nullopt;
  if (!product_of_transpositions(g, *found).is_identity())
    throw Error(ErrorKind::InternalVerificationFailure, "realized n-face rotation is not an identity ordering");
  return ordering_from_indices(g, *found);
}

}  // namespace cycletrace

#endif  // CYCLETRACE_IDENTITY_HPP
