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

#include "cycletrace/ordering.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace cycletrace {
namespace {

using testing::kind_of;
constexpr auto Fixture = testing::fixture;

EdgeOrdering Order(std::vector<std::string> labels) { return EdgeOrdering{std::move(labels)}; }

std::size_t Orbits(const Multigraph& g, const EdgeOrdering& w) { return permutation_of_ordering(g, w).orbit_count(); }

TEST(Product, ButterflyDeclarationOrder) {
  const Multigraph g = Fixture("butterfly");
  const Permutation pi = permutation_of_ordering(g, declaration_order(g));
  EXPECT_EQ(format_permutation(g, pi), "(1 3 2 5 4)");
  EXPECT_TRUE(pi.is_full_cycle());
  EXPECT_TRUE(is_full_cyclic_ordering(g, declaration_order(g)));
}

TEST(Product, TranspositionOfEdge) {
  const Multigraph g = Fixture("butterfly");
  EXPECT_EQ(format_permutation(g, transposition_of_edge(g, "e5")), "(1 3)");
  EXPECT_EQ(kind_of([&] { transposition_of_edge(g, "zz"); }), ErrorKind::UnknownEdge);
}

TEST(Product, DipoleIsIdentity) {
  const Multigraph g = Fixture("dipole");
  const Permutation pi = permutation_of_ordering(g, declaration_order(g));
  EXPECT_TRUE(pi.is_identity());
  EXPECT_EQ(orbit_count(g, pi), 2u);
  EXPECT_EQ(format_permutation(g, pi), "()");
}

TEST(Product, MatchesPointwiseOracle) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = n - 1 + static_cast<int>(rng() % 8);
    const Multigraph g = testing::make_graph(n, testing::random_connected(n, m, rng));
    const auto order = testing::random_order(g.edge_count(), rng);
    const auto expected = testing::naive_product(g, order);
    const Permutation pi = product_of_transpositions(g, order);
    EXPECT_EQ(pi.images(), expected) << "seed " << testing::kSeed << " trial " << trial;
    Permutation folded(g.vertex_count());
    for (std::size_t e : order) folded = transposition_of_edge(g, g.edge(e).label) * folded;
    EXPECT_EQ(folded, pi);
  }
}

TEST(Resolve, Errors) {
  const Multigraph g = Fixture("dipole");
  EXPECT_EQ(kind_of([&] { resolve_ordering(g, Order({"e1"})); }), ErrorKind::InvalidOrdering);
  EXPECT_EQ(kind_of([&] { resolve_ordering(g, Order({"e1", "e1"})); }), ErrorKind::InvalidOrdering);
  EXPECT_EQ(kind_of([&] { resolve_ordering(g, Order({"e1", "e9"})); }), ErrorKind::InvalidOrdering);
  EXPECT_EQ(kind_of([&] { orbit_count(g, Permutation(3)); }), ErrorKind::InvalidArgument);
}

TEST(CircularShift, Butterfly) {
  const Multigraph g = Fixture("butterfly");
  const EdgeOrdering shifted = circular_shift(declaration_order(g));
  EXPECT_EQ(shifted, Order({"e2", "e3", "e4", "e5", "e6", "e1"}));
  EXPECT_EQ(format_permutation(g, permutation_of_ordering(g, shifted)), "(1 5 4 2 3)");
  EXPECT_EQ(kind_of([] { circular_shift(EdgeOrdering{}); }), ErrorKind::EmptyOrdering);
}

TEST(CircularShift, PreservesCycleType) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = n - 1 + static_cast<int>(rng() % 8);
    const Multigraph g = testing::make_graph(n, testing::random_connected(n, m, rng));
    EdgeOrdering w = ordering_from_indices(g, testing::random_order(g.edge_count(), rng));
    const auto type = permutation_of_ordering(g, w).cycle_type();
    for (std::size_t k = 0; k < w.sequence.size(); ++k) {
      w = circular_shift(w);
      EXPECT_EQ(permutation_of_ordering(g, w).cycle_type(), type) << "seed " << testing::kSeed << " trial " << trial;
    }
  }
}

TEST(RotateToFront, Basic) {
  EXPECT_EQ(rotate_to_front(Order({"a", "b", "c"}), "c"), Order({"c", "a", "b"}));
  EXPECT_EQ(kind_of([] { rotate_to_front(Order({"a"}), "z"); }), ErrorKind::InvalidOrdering);
}

TEST(SubdivideOrdering, Butterfly) {
  const Multigraph g = Fixture("butterfly");
  const auto [sub, w] = subdivide_ordering(g, declaration_order(g), "e3", "w");
  EXPECT_EQ(w, Order({"e3.1", "e3.2", "e4", "e5", "e6", "e1", "e2"}));
  EXPECT_EQ(sub.vertex_count(), 6u);
  EXPECT_EQ(Orbits(sub, w), 1u);
}

TEST(SubdivideOrdering, PreservesOrbitCount) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = n - 1 + static_cast<int>(rng() % 8);
    const Multigraph g = testing::make_graph(n, testing::random_connected(n, m, rng));
    const EdgeOrdering w = ordering_from_indices(g, testing::random_order(g.edge_count(), rng));
    const std::string e = g.edge(rng() % g.edge_count()).label;
    const auto [sub, sw] = subdivide_ordering(g, w, e, "x");
    EXPECT_EQ(Orbits(sub, sw), Orbits(g, w)) << "seed " << testing::kSeed << " trial " << trial;
  }
}

TEST(SmoothOrdering, FixedPointIsRejected) {
  const Multigraph g = subdivide_edge(Fixture("dipole"), "e1", "3");
  const EdgeOrdering w = Order({"e1.1", "e2", "e1.2"});
  EXPECT_TRUE(permutation_of_ordering(g, w).has_fixed_point());
  EXPECT_EQ(kind_of([&] { smooth_ordering(g, w, "3"); }), ErrorKind::FixedPointPrecondition);
}

TEST(SmoothOrdering, Errors) {
  const Multigraph g = Fixture("butterfly");
  EXPECT_EQ(kind_of([&] { smooth_ordering(g, declaration_order(g), "3"); }), ErrorKind::DegreeNotTwo);
  EXPECT_EQ(kind_of([&] { smooth_ordering(g, declaration_order(g), "q"); }), ErrorKind::UnknownVertex);
}

TEST(SmoothOrdering, UndoesSubdivision) {
  const Multigraph g = Fixture("butterfly");
  const auto [sub, sw] = subdivide_ordering(g, declaration_order(g), "e4", "w");
  const auto [back, bw] = smooth_ordering(sub, sw, "w");
  EXPECT_EQ(bw, Order({"w.s", "e5", "e6", "e1", "e2", "e3"}));
  EXPECT_EQ(back.vertex_count(), g.vertex_count());
  EXPECT_EQ(Orbits(back, bw), 1u);
}

TEST(SmoothOrdering, PreservesOrbitCountOnRoundTrips) {
  std::mt19937_64 rng(testing::kSeed);
  int checked = 0;
  for (int trial = 0; checked < 500 && trial < 20000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = n - 1 + static_cast<int>(rng() % 4);
    const Multigraph g = testing::make_graph(n, testing::random_connected(n, m, rng));
    const EdgeOrdering w = ordering_from_indices(g, testing::random_order(g.edge_count(), rng));
    const std::string e = g.edge(rng() % g.edge_count()).label;
    const auto [sub, sw] = subdivide_ordering(g, w, e, "x");
    if (permutation_of_ordering(sub, sw).has_fixed_point()) continue;
    const auto [back, bw] = smooth_ordering(sub, sw, "x");
    EXPECT_EQ(Orbits(back, bw), Orbits(sub, sw)) << "seed " << testing::kSeed << " trial " << trial;
    ++checked;
  }
  EXPECT_EQ(checked, 500);
}

// The merged edge at the leading edge's place would fix vertex 2 here; the
// dropped edge's place keeps the product a single cycle.
TEST(SmoothOrdering, FallsBackToTrailingPlacement) {
  const Multigraph g = Multigraph::validate(
      {{"1", "2", "3", "a", "b"},
       {{"p", "1", "2"}, {"q", "3", "2"}, {"x", "2", "a"}, {"y", "3", "a"}, {"z", "3", "b"}, {"t", "1", "b"}}});
  const EdgeOrdering w = Order({"p", "x", "z", "y", "t", "q"});
  ASSERT_EQ(Orbits(g, w), 1u);
  const Multigraph h = smooth_vertex(g, "a");
  EXPECT_GT(Orbits(h, Order({"a.s", "z", "t", "q", "p"})), 1u);
  const auto [smoothed, sw] = smooth_ordering(g, w, "a");
  EXPECT_EQ(sw, Order({"z", "a.s", "t", "q", "p"}));
  EXPECT_EQ(Orbits(smoothed, sw), 1u);
}

// With more than one orbit the count need not survive smoothing at all: the
// smoothed graph below admits only single-cycle products.
TEST(SmoothOrdering, OrbitCountAboveOneCanBeUnreachable) {
  const Multigraph g = testing::make_graph(
      7, {{4, 2}, {5, 4}, {4, 5}, {4, 0}, {4, 3}, {0, 5}, {1, 4}, {4, 6}});
  const EdgeOrdering w = Order({"e6", "e2", "e8", "e4", "e1", "e5", "e3", "e7"});
  const Permutation pi = permutation_of_ordering(g, w);
  ASSERT_FALSE(pi.has_fixed_point());
  ASSERT_EQ(pi.orbit_count(), 3u);
  const auto [h, hw] = smooth_ordering(g, w, "1");
  std::set<std::size_t> reachable;
  testing::for_each_ordering(h, [&](const std::vector<std::size_t>& order) {
    reachable.insert(product_of_transpositions(h, order).orbit_count());
    return true;
  });
  EXPECT_EQ(reachable, (std::set<std::size_t>{1}));
  EXPECT_EQ(Orbits(h, hw), 1u);
}

// Full cyclic orderings stay full cyclic under smoothing wherever the two
// edges at the smoothed vertex sit.
TEST(SmoothOrdering, KeepsFullCyclicOrderings) {
  std::mt19937_64 rng(testing::kSeed);
  int checked = 0;
  for (int trial = 0; checked < 2000 && trial < 200000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const int m = n - 1 + static_cast<int>(rng() % 7);
    const Multigraph g = testing::make_graph(n, testing::random_connected(n, m, rng));
    std::vector<std::string> sites;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) != 2) continue;
      const auto& inc = g.incident(v);
      if (g.edge(inc[0]).other(v) != g.edge(inc[1]).other(v)) sites.push_back(g.vertex_label(v));
    }
    if (sites.empty()) continue;
    const EdgeOrdering w = ordering_from_indices(g, testing::random_order(g.edge_count(), rng));
    if (Orbits(g, w) != 1) continue;
    const auto [h, hw] = smooth_ordering(g, w, sites[rng() % sites.size()]);
    EXPECT_EQ(Orbits(h, hw), 1u) << "seed " << testing::kSeed << " trial " << trial;
    ++checked;
  }
  EXPECT_EQ(checked, 2000);
}

TEST(TreeOrderings, AllOrderingsOfSmallTreesAreFullCyclic) {
  for (const auto& s : testing::connected_multigraphs(5)) {
    if (static_cast<int>(s.edges.size()) != s.n - 1) continue;
    const Multigraph g = testing::to_multigraph(s);
    testing::for_each_ordering(g, [&](const std::vector<std::size_t>& order) {
      EXPECT_TRUE(product_of_transpositions(g, order).is_full_cycle());
      return true;
    });
  }
}

// Each transposition changes the orbit count by exactly one.
TEST(Parity, OrbitCountStepsByOne) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = n - 1 + static_cast<int>(rng() % 8);
    const Multigraph g = testing::make_graph(n, testing::random_connected(n, m, rng));
    const auto order = testing::random_order(g.edge_count(), rng);
    Permutation p(g.vertex_count());
    std::size_t prev = p.orbit_count();
    for (std::size_t e : order) {
      p.swap_values(g.edge(e).u, g.edge(e).v);
      const std::size_t now = p.orbit_count();
      EXPECT_EQ(now > prev ? now - prev : prev - now, 1u);
      prev = now;
    }
    EXPECT_EQ((g.vertex_count() - prev) % 2, g.edge_count() % 2);
  }
}

}  // namespace
}  // namespace cycletrace
