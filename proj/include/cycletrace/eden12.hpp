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

#ifndef CYCLETRACE_EDEN12_HPP
#define CYCLETRACE_EDEN12_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cycletrace/fixtures.hpp"
#include "cycletrace/graph.hpp"
#include "cycletrace/identity.hpp"
#include "cycletrace/text_format.hpp"

namespace cycletrace {

struct Eden12Check {
  std::string name;
  bool passed;
};

/// The trail conditions hold on the twelve-vertex fixture, yet the Euler
/// bound rules out any identity ordering.
struct Eden12Report {
  std::vector<Eden12Check> checks;
  EdenReport trails;
  bool identity_ordering_feasible = true;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Eden12Check& c) { return c.passed; });
  }
};

inline std::optional<std::size_t> edge_between(const Multigraph& g, std::size_t a, std::size_t b) {
  for (std::size_t e : g.incident(a))
    if (g.edge(e).other(a) == b) return e;
  return std::nullopt;
}

inline Eden12Report verify_eden12_fixture() {
  const Multigraph g = parse_graph(fixtures::kEden12);
  std::vector<Trail> trails;
  bool walks_follow_edges = true;
  for (const auto& [owner, walk] : fixtures::eden12_trails()) {
    Trail t{g.vertex_index(owner), {}, {}};
    for (const auto& v : walk) t.walk.push_back(g.vertex_index(v));
    for (std::size_t i = 0; i + 1 < t.walk.size(); ++i) {
      auto e = edge_between(g, t.walk[i], t.walk[i + 1]);
      if (!e) {
        walks_follow_edges = false;
        break;
      }
      t.edges.push_back(*e);
    }
    trails.push_back(std::move(t));
  }

  Eden12Report r;
  r.trails = check_trail_system(g, trails);
  r.identity_ordering_feasible = identity_ordering_feasible(g);
  const std::size_t m = g.edge_count();
  const std::size_t n = g.vertex_count();
  r.checks = {
      {"graph_has_12_vertices_20_edges", n == 12 && m == 20},
      {"simple_connected", g.simple() && g.connected()},
      {"walks_follow_edges", walks_follow_edges},
      {"closed_trails", walks_follow_edges && r.trails.closed_trails},
      {"m_even", r.trails.m_even},
      {"bijective", r.trails.bijective},
      {"owner_on_trail", r.trails.owner_on_trail},
      {"total_is_2m", r.trails.total_is_2m},
      {"each_edge_twice", r.trails.each_edge_twice},
      {"euler_bound_violated", m + 2 < 2 * n},
      {"identity_ordering_infeasible", !r.identity_ordering_feasible},
  };
  return r;
}

}  // namespace cycletrace

#endif  // CYCLETRACE_EDEN12_HPP
