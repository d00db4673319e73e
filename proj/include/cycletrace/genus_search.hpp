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

#ifndef CYCLETRACE_GENUS_SEARCH_HPP
#define CYCLETRACE_GENUS_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cycletrace/error.hpp"
#include "cycletrace/graph.hpp"
#include "cycletrace/ordering.hpp"
#include "cycletrace/rotation.hpp"
#include "cycletrace/spanning_tree.hpp"

namespace cycletrace {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct SearchOptions {
  /// Maximum number of rotation systems examined.
  std::uint64_t budget = kDefaultBudget;
  /// Worker threads for exhaustive maximum-genus search.
  unsigned jobs = 1;
};

/// The space of rotation systems of a graph, enumerated as a mixed-radix
/// odometer. At each vertex the first incident edge (declaration order) is
/// pinned and the remaining edges run through their permutations in
/// lexicographic order; the last vertex turns fastest.
class RotationSpace {
 public:
  explicit RotationSpace(const Multigraph& g) : g_(&g) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      std::uint64_t r = 1;
      for (std::size_t k = 2; k < g.degree(v); ++k) r = saturating_mul(r, k);
      radix_.push_back(r);
      size_ = saturating_mul(size_, r);
    }
  }

  /// Number of rotation systems, saturated at the uint64 maximum.
  std::uint64_t size() const { return size_; }
  const Multigraph& graph() const { return *g_; }
  std::uint64_t radix(std::size_t v) const { return radix_[v]; }

  static std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
  }

 private:
  const Multigraph* g_;
  std::vector<std::uint64_t> radix_;
  std::uint64_t size_ = 1;
};

/// Walks a RotationSpace, keeping the sigma table in step with the current
/// rotation so faces can be counted in O(|E|).
class RotationCursor {
 public:
  explicit RotationCursor(const RotationSpace& space) : space_(&space), g_(&space.graph()) {
    const auto& g = *g_;
    rho_.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) rho_[v] = g.incident(v);
    sigma_ = sigma_table(g, rho_);
    seen_.assign(sigma_.size(), 0);
  }

  /// Moves to the rotation system with the given enumeration index.
  void seek(std::uint64_t index) {
    const auto& g = *g_;
    for (std::size_t v = g.vertex_count(); v-- > 0;) {
      const std::uint64_t r = space_->radix(v);
      if (r == 1) continue;
      set_tail_rank(v, index % r);
      index /= r;
    }
  }

  /// Steps to the next rotation system; false once the space is exhausted
  /// (the cursor is then back at index 0).
  bool advance() {
    for (std::size_t v = g_->vertex_count(); v-- > 0;) {
      if (rho_[v].size() < 3) continue;
      const bool carried = !std::next_permutation(rho_[v].begin() + 1, rho_[v].end());
      refresh(v);
      if (!carried) return true;
    }
    return false;
  }

  const IndexedRotation& rotation() const { return rho_; }

  std::size_t faces() {
    if (sigma_.empty()) return 1;
    if (++stamp_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      stamp_ = 1;
    }
    std::size_t count = 0;
    for (std::size_t start = 0; start < sigma_.size(); ++start) {
      if (seen_[start] == stamp_) continue;
      ++count;
      for (std::size_t d = start; seen_[d] != stamp_; d = sigma_[d ^ 1U]) seen_[d] = stamp_;
    }
    return count;
  }

 private:
  void set_tail_rank(std::size_t v, std::uint64_t rank) {
    auto& cyclic = rho_[v];
    std::vector<std::size_t> pool(g_->incident(v).begin() + 1, g_->incident(v).end());
    std::uint64_t block = 1;
    for (std::size_t k = 2; k < pool.size(); ++k) block *= k;
    for (std::size_t i = 1; i < cyclic.size(); ++i) {
      const std::size_t remaining = pool.size();
      const std::size_t pick = remaining > 1 ? static_cast<std::size_t>(rank / block) : 0;
      if (remaining > 1) {
        rank %= block;
        if (remaining - 1 > 1) block /= (remaining - 1);
      }
      cyclic[i] = pool[pick];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    refresh(v);
  }

  void refresh(std::size_t v) {
    const auto& cyclic = rho_[v];
    for (std::size_t i = 0; i < cyclic.size(); ++i)
      sigma_[darts_ix::out_of(*g_, cyclic[i], v)] = darts_ix::out_of(*g_, cyclic[(i + 1) % cyclic.size()], v);
  }

  const RotationSpace* space_;
  const Multigraph* g_;
  IndexedRotation rho_;
  std::vector<std::size_t> sigma_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
};

/// Visits rotation systems in enumeration order until `visit(rho, faces)`
/// returns false. Returns true if it was stopped by the visitor, false if the
/// space was exhausted; throws BudgetExceeded once more than `budget`
/// rotation systems would be needed.
template <typename Visit>
bool search_rotations(const Multigraph& g, std::uint64_t budget, Visit&& visit) {
  RotationSpace space(g);
  RotationCursor cursor(space);
  std::uint64_t visited = 0;
  do {
    if (++visited > budget)
      throw Error(ErrorKind::BudgetExceeded, "more than " + std::to_string(budget) + " rotation systems needed");
    if (!visit(cursor.rotation(), cursor.faces())) return true;
  } while (cursor.advance());
  return false;
}

struct MaxGenusResult {
  std::size_t gamma_max = 0;
  RotationSystem witness;
  std::size_t face_count = 1;
};

/// Exhaustive maximum genus. Every rotation system is examined unless one
/// already reaches the parity lower bound on faces (1 or 2); the witness is
/// the first minimizer in enumeration order regardless of `jobs`.
inline MaxGenusResult max_genus_bruteforce(const Multigraph& g, const SearchOptions& options = {}) {
  g.require_connected("max_genus_bruteforce");
  if (options.budget == 0) throw Error(ErrorKind::InvalidArgument, "budget must be positive");
  const RotationSpace space(g);
  if (space.size() > options.budget)
    throw Error(ErrorKind::BudgetExceeded, "graph has more than " + std::to_string(options.budget) +
                                               " rotation systems");
  const std::size_t beta = betti(g);
  const std::size_t floor_faces = beta % 2 == 0 ? 1 : 2;

  struct Best {
    std::size_t faces = std::numeric_limits<std::size_t>::max();
    std::uint64_t index = 0;
  };
  const std::uint64_t total = space.size();
  const unsigned jobs = static_cast<unsigned>(std::clamp<std::uint64_t>(options.jobs, 1, total));
  std::vector<Best> best(jobs);

  auto work = [&](unsigned job) {
    const std::uint64_t begin = total * job / jobs;
    const std::uint64_t end = total * (job + 1) / jobs;
    RotationCursor cursor(space);
    cursor.seek(begin);
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::size_t f = cursor.faces();
      if (f < best[job].faces) best[job] = {f, i};
      if (f == floor_faces) break;
      cursor.advance();
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j);
    for (auto& t : threads) t.join();
  }

  Best winner;
  for (const auto& b : best)
    if (b.faces < winner.faces || (b.faces == winner.faces && b.index < winner.index)) winner = b;

  RotationCursor cursor(space);
  cursor.seek(winner.index);
  MaxGenusResult result;
  result.face_count = winner.faces;
  result.gamma_max = genus_from_faces(g, winner.faces);
  result.witness = to_rotation_system(g, cursor.rotation());
  if (2 * result.gamma_max + result.face_count != beta + 1 || result.gamma_max > beta / 2)
    throw Error(ErrorKind::InternalVerificationFailure, "maximum genus violates the Euler bound");
  return result;
}

struct UpperEmbeddability {
  bool upper_embeddable = false;
  /// A spanning tree whose co-tree has at most one odd component.
  std::optional<SpanningTree> witness;
  /// Odd co-tree components of the witness, or the least count seen.
  std::size_t odd_components = 0;
};

/// Spanning-tree criterion: G is upper embeddable iff some spanning tree
/// leaves at most one co-tree component with an odd number of edges. For
/// even Betti number that means every component is even.
inline UpperEmbeddability is_upper_embeddable(const Multigraph& g) {
  g.require_connected("is_upper_embeddable");
  UpperEmbeddability out;
  out.odd_components = std::numeric_limits<std::size_t>::max();
  std::vector<bool> in_tree(g.edge_count());
  for_each_spanning_tree_index(g, [&](const std::vector<std::size_t>& tree) {
    std::fill(in_tree.begin(), in_tree.end(), false);
    for (std::size_t e : tree) in_tree[e] = true;
    std::size_t odd = 0;
    for (const auto& c : cotree_component_indices(g, in_tree)) odd += c.size() % 2;
    if (odd < out.odd_components) out.odd_components = odd;
    if (odd <= 1) {
      out.upper_embeddable = true;
      out.witness = detail::tree_from_indices(g, tree);
      return false;
    }
    return true;
  });
  return out;
}

enum class FcpReason { UpperEmbeddable, OddBetti, NoEvenCotreeSpanningTree };

inline std::string_view fcp_reason_name(FcpReason r) {
  switch (r) {
    case FcpReason::UpperEmbeddable: return "even_cotree_spanning_tree";
    case FcpReason::OddBetti: return "odd_betti";
    case FcpReason::NoEvenCotreeSpanningTree: return "no_even_cotree_spanning_tree";
  }
  return "unknown";
}

struct FcpDecision {
  bool has_ordering = false;
  FcpReason reason = FcpReason::OddBetti;
  std::optional<SpanningTree> witness;
};

inline FcpDecision decide_fcp(const Multigraph& g) {
  g.require_connected("has_fcp_ordering");
  if (betti(g) % 2 != 0) return {false, FcpReason::OddBetti, std::nullopt};
  auto ue = is_upper_embeddable(g);
  if (!ue.upper_embeddable) return {false, FcpReason::NoEvenCotreeSpanningTree, std::nullopt};
  return {true, FcpReason::UpperEmbeddable, std::move(ue.witness)};
}

/// Even Betti number and upper embeddable.
inline bool has_fcp_ordering(const Multigraph& g) { return decide_fcp(g).has_ordering; }

/// Everything the constructive pipeline produced on the way to its answer.
struct FcpConstruction {
  EdgeOrdering ordering;
  RotationSystem one_face_rotation;
  Multigraph subdivided;
  EdgeOrdering subdivided_ordering;
  /// Orbit count after each smoothing step, in the order the steps ran.
  std::vector<std::size_t> smoothing_orbit_counts;
};

namespace detail {

inline void verify(bool condition, const std::string& what) {
  if (!condition) throw Error(ErrorKind::InternalVerificationFailure, what);
}

inline std::string fresh_vertex_label(const Multigraph& g, const std::string& edge) {
  std::string label = edge + ".w";
  while (g.find_vertex(label)) label += "w";
  return label;
}

}  // namespace detail

/// Builds a full cyclic permutation ordering when one exists:
///  1. find a one-face rotation system of g,
///  2. subdivide every edge,
///  3. carry the rotation over to the subdivision,
///  4. list each branch vertex's edges in rotation order (their edge sets are
///     now disjoint), then the rest in declaration order,
///  5. check the product is a single cycle,
///  6. smooth the subdivision vertices away in ascending label order.
inline std::optional<FcpConstruction> construct_fcp(const Multigraph& g, const SearchOptions& options = {}) {
  g.require_connected("construct_fcp_ordering");
  if (!has_fcp_ordering(g)) return std::nullopt;

  FcpConstruction out;
  if (g.edge_count() == 0) {
    out.one_face_rotation = to_rotation_system(g, IndexedRotation(g.vertex_count()));
    out.subdivided = g;
    return out;
  }

  std::optional<IndexedRotation> one_face;
  search_rotations(g, options.budget, [&](const IndexedRotation& rho, std::size_t faces) {
    if (faces != 1) return true;
    one_face = rho;
    return false;
  });
  detail::verify(one_face.has_value(), "upper embeddable graph without a one-face rotation system");
  out.one_face_rotation = to_rotation_system(g, *one_face);

  RawGraph raw;
  raw.vertices = g.vertices();
  std::vector<std::string> middle(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) middle[e] = detail::fresh_vertex_label(g, g.edge(e).label);
  raw.vertices.insert(raw.vertices.end(), middle.begin(), middle.end());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    raw.edges.push_back({subdivision_label(ed.label, 1), g.vertex_label(ed.u), middle[e]});
    raw.edges.push_back({subdivision_label(ed.label, 2), g.vertex_label(ed.v), middle[e]});
  }
  out.subdivided = Multigraph::validate(raw);
  const Multigraph& sub = out.subdivided;

  // Half of edge e at its endpoint v is edge 2e (at e.u) or 2e + 1 (at e.v).
  IndexedRotation lifted(sub.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    for (std::size_t e : (*one_face)[v]) lifted[v].push_back(2 * e + (g.edge(e).u == v ? 0 : 1));
  for (std::size_t e = 0; e < g.edge_count(); ++e) lifted[g.vertex_count() + e] = {2 * e, 2 * e + 1};
  const RotationSystem lifted_rotation = to_rotation_system(sub, lifted);

  std::vector<std::size_t> order;
  std::vector<bool> placed(sub.edge_count(), false);
  for (std::size_t v = 0; v < sub.vertex_count(); ++v) {
    if (sub.degree(v) < 3) continue;
    for (const auto& label : lifted_rotation.at(sub.vertex_label(v))) {
      const std::size_t e = sub.edge_index(label);
      detail::verify(!placed[e], "branch vertices share an edge after subdivision");
      placed[e] = true;
      order.push_back(e);
    }
  }
  for (std::size_t e = 0; e < sub.edge_count(); ++e)
    if (!placed[e]) order.push_back(e);
  out.subdivided_ordering = ordering_from_indices(sub, order);

  detail::verify(to_rotation_system(sub, rotation_from_order_indices(sub, order)) == lifted_rotation,
                 "ordering does not induce the lifted rotation system");
  detail::verify(product_of_transpositions(sub, order).orbit_count() == 1,
                 "ordering of the subdivision is not full cyclic");

  std::vector<std::size_t> smoothing_order(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) smoothing_order[e] = e;
  std::sort(smoothing_order.begin(), smoothing_order.end(),
            [&](std::size_t a, std::size_t b) { return middle[a] < middle[b]; });

  GraphWithOrdering current{sub, out.subdivided_ordering};
  for (std::size_t e : smoothing_order) {
    current = smooth_ordering(current.graph, current.ordering, middle[e]);
    const std::size_t orbits = permutation_of_ordering(current.graph, current.ordering).orbit_count();
    out.smoothing_orbit_counts.push_back(orbits);
    detail::verify(orbits == 1, "smoothing '" + middle[e] + "' changed the orbit count");
  }

  for (const auto& label : current.ordering.sequence) {
    const std::size_t merged = current.graph.edge_index(label);
    const std::string vertex = label.substr(0, label.size() - 2);
    const std::size_t e = static_cast<std::size_t>(std::find(middle.begin(), middle.end(), vertex) - middle.begin());
    detail::verify(e < g.edge_count(), "unexpected edge '" + label + "' after smoothing");
    const Edge& back = current.graph.edge(merged);
    const Edge& original = g.edge(e);
    const std::size_t a = g.vertex_index(current.graph.vertex_label(back.u));
    const std::size_t b = g.vertex_index(current.graph.vertex_label(back.v));
    detail::verify(std::minmax(a, b) == std::minmax(original.u, original.v), "smoothed edge has wrong endpoints");
    out.ordering.sequence.push_back(original.label);
  }
  detail::verify(is_full_cyclic_ordering(g, out.ordering), "constructed ordering is not full cyclic");
  return out;
}

inline std::optional<EdgeOrdering> construct_fcp_ordering(const Multigraph& g, const SearchOptions& options = {}) {
  auto built = construct_fcp(g, options);
  if (!built) return std::nullopt;
  return std::move(built->ordering);
}

}  // namespace cycletrace

#endif  // CYCLETRACE_GENUS_SEARCH_HPP
