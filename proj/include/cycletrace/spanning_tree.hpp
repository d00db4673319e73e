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

#ifndef CYCLETRACE_SPANNING_TREE_HPP
#define CYCLETRACE_SPANNING_TREE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cycletrace/error.hpp"
#include "cycletrace/graph.hpp"

namespace cycletrace {

/// Edge labels of a spanning tree, listed in host edge order.
struct SpanningTree {
  std::vector<std::string> edges;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// A set of edge labels, listed in host edge order.
using EdgeSubset = std::vector<std::string>;

namespace detail {

inline SpanningTree tree_from_indices(const Multigraph& g, const std::vector<std::size_t>& chosen) {
  SpanningTree t;
  t.edges.reserve(chosen.size());
  for (std::size_t e : chosen) t.edges.push_back(g.edge(e).label);
  return t;
}

// Include/exclude backtracking over edges in declaration order. An edge can
// only be included if it joins two different components; a branch is cut as
// soon as the remaining edges cannot reach rank |V| - 1.
template <typename Visit>
bool enumerate_trees(const Multigraph& g, std::size_t next, std::vector<std::size_t>& chosen,
                     std::vector<std::size_t>& component, Visit& visit) {
  const std::size_t need = g.vertex_count() - 1;
  if (chosen.size() == need) return visit(chosen);
  if (g.edge_count() - next < need - chosen.size()) return true;

  const Edge& e = g.edge(next);
  const std::size_t cu = component[e.u];
  const std::size_t cv = component[e.v];
  if (cu != cv) {
    std::vector<std::size_t> saved = component;
    for (auto& c : component)
      if (c == cv) c = cu;
    chosen.push_back(next);
    const bool keep_going = enumerate_trees(g, next + 1, chosen, component, visit);
    chosen.pop_back();
    component = std::move(saved);
    if (!keep_going) return false;
  }
  return enumerate_trees(g, next + 1, chosen, component, visit);
}

}  // namespace detail

/// Streams every spanning tree exactly once, as sorted edge-index lists, in a
/// fixed order. The visitor returns false to stop early; the function returns
/// false iff it was stopped.
template <typename Visit>
bool for_each_spanning_tree_index(const Multigraph& g, Visit&& visit) {
  g.require_connected("spanning_trees");
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> component(g.vertex_count());
  for (std::size_t v = 0; v < component.size(); ++v) component[v] = v;
  auto wrapped = [&](const std::vector<std::size_t>& tree) -> bool { return visit(tree); };
  return detail::enumerate_trees(g, 0, chosen, component, wrapped);
}

template <typename Visit>
bool for_each_spanning_tree(const Multigraph& g, Visit&& visit) {
  return for_each_spanning_tree_index(
      g, [&](const std::vector<std::size_t>& tree) -> bool { return visit(detail::tree_from_indices(g, tree)); });
}

inline std::vector<SpanningTree> spanning_trees(const Multigraph& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_tree(g, [&](SpanningTree t) {
    out.push_back(std::move(t));
    return true;
  });
  return out;
}

/// Groups co-tree edges into components: two co-tree edges are together iff
/// they are linked through endpoints shared by co-tree edges. Each component
/// is a sorted list of edge indices; components are ordered by first edge.
inline std::vector<std::vector<std::size_t>> cotree_component_indices(const Multigraph& g,
                                                                      const std::vector<bool>& in_tree) {
  DisjointSets sets(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e)
    if (!in_tree[e]) sets.unite(g.edge(e).u, g.edge(e).v);
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> slot(g.vertex_count(), g.edge_count() + 1);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    const std::size_t root = sets.find(g.edge(e).u);
    if (slot[root] > g.edge_count()) {
      slot[root] = components.size();
      components.emplace_back();
    }
    components[slot[root]].push_back(e);
  }
  return components;
}

inline std::vector<bool> tree_membership(const Multigraph& g, const SpanningTree& t) {
  std::vector<bool> in_tree(g.edge_count(), false);
  DisjointSets sets(g.vertex_count());
  for (const auto& label : t.edges) {
    auto e = g.find_edge(label);
    if (!e) throw Error(ErrorKind::NotASpanningTree, "edge '" + label + "' is not in the graph");
    if (in_tree[*e]) throw Error(ErrorKind::NotASpanningTree, "edge '" + label + "' listed twice");
    in_tree[*e] = true;
    if (!sets.unite(g.edge(*e).u, g.edge(*e).v))
      throw Error(ErrorKind::NotASpanningTree, "edge '" + label + "' closes a cycle");
  }
  if (t.edges.size() + 1 != g.vertex_count())
    throw Error(ErrorKind::NotASpanningTree, "a spanning tree needs exactly |V| - 1 edges");
  return in_tree;
}

inline std::vector<EdgeSubset> cotree_components(const Multigraph& g, const SpanningTree& t) {
  const auto in_tree = tree_membership(g, t);
  std::vector<EdgeSubset> out;
  for (const auto& component : cotree_component_indices(g, in_tree)) {
    EdgeSubset subset;
    for (std::size_t e : component) subset.push_back(g.edge(e).label);
    out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace cycletrace

#endif  // CYCLETRACE_SPANNING_TREE_HPP
