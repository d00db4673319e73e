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

#include "cycletrace/graph.hpp"

#include <map>
#include <random>
#include <set>
#include <string>

#include "cycletrace/fixtures.hpp"
#include "cycletrace/text_format.hpp"
#include "gtest/gtest.h"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace cycletrace {
namespace {

using testing::kind_of;
constexpr auto Fixture = testing::fixture;

using EdgeSet = std::multiset<std::pair<std::string, std::string>>;

EdgeSet UnorderedEndpoints(const Multigraph& g) {
  EdgeSet out;
  for (const auto& e : g.edges()) {
    auto a = g.vertex_label(e.u);
    auto b = g.vertex_label(e.v);
    out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
  }
  return out;
}

TEST(Validate, ButterflyIsConnected) {
  const Multigraph g = Fixture("butterfly");
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_TRUE(g.connected());
  EXPECT_TRUE(g.simple());
}

TEST(Validate, SingleVertexIsConnected) {
  const Multigraph g = Multigraph::validate({{"1"}, {}});
  EXPECT_TRUE(g.connected());
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(Validate, Errors) {
  EXPECT_EQ(kind_of([] { Multigraph::validate({{"1"}, {{"x", "1", "1"}}}); }), ErrorKind::LoopEdge);
  EXPECT_EQ(kind_of([] { Multigraph::validate({{"1", "1"}, {}}); }), ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of([] { Multigraph::validate({{"1", "2"}, {{"x", "1", "2"}, {"x", "2", "1"}}}); }),
            ErrorKind::DuplicateLabel);
  EXPECT_EQ(kind_of([] { Multigraph::validate({{"1"}, {{"x", "1", "9"}}}); }), ErrorKind::DanglingEndpoint);
  EXPECT_EQ(kind_of([] { Multigraph::validate({{}, {}}); }), ErrorKind::EmptyGraph);
  EXPECT_EQ(kind_of([] { Multigraph::validate({{"a b"}, {}}); }), ErrorKind::InvalidLabel);
}

TEST(Validate, DisconnectedIsRepresentable) {
  const Multigraph g = Multigraph::validate({{"1", "2", "3"}, {{"a", "1", "2"}}});
  EXPECT_FALSE(g.connected());
  EXPECT_EQ(kind_of([&] { betti(g); }), ErrorKind::Disconnected);
}

TEST(Betti, Fixtures) {
  EXPECT_EQ(betti(Fixture("butterfly")), 2u);
  EXPECT_EQ(betti(Fixture("dumbbell")), 2u);
  EXPECT_EQ(betti(Fixture("path3")), 0u);
  EXPECT_EQ(betti(Fixture("k4")), 3u);
  EXPECT_EQ(betti(Fixture("eden12")), 9u);
}

TEST(Betti, TreesAreZero) {
  std::mt19937_64 rng(testing::kSeed);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(betti(testing::make_graph(n, testing::random_tree(n, rng))), 0u);
}

TEST(SubdivideEdge, Dipole) {
  const Multigraph g = subdivide_edge(Fixture("dipole"), "e1", "3");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(UnorderedEndpoints(g), (EdgeSet{{"1", "3"}, {"2", "3"}, {"1", "2"}}));
  EXPECT_EQ(g.edge(g.edge_index("e1.1")).u, g.vertex_index("1"));
  EXPECT_EQ(g.edge(g.edge_index("e1.2")).u, g.vertex_index("2"));
}

TEST(SubdivideEdge, PathBecomesLonger) {
  const Multigraph p = Multigraph::validate({{"1", "2"}, {{"e", "1", "2"}}});
  const Multigraph g = subdivide_edge(p, "e", "3");
  EXPECT_EQ(UnorderedEndpoints(g), (EdgeSet{{"1", "3"}, {"2", "3"}}));
  EXPECT_EQ(p.edge_count(), 1u);  // original untouched
}

TEST(SubdivideEdge, EveryButterflyEdge) {
  Multigraph g = Fixture("butterfly");
  for (int i = 1; i <= 6; ++i) {
    const std::size_t v = g.vertex_count();
    const std::size_t e = g.edge_count();
    g = subdivide_edge(g, "e" + std::to_string(i), "w" + std::to_string(i));
    EXPECT_EQ(g.vertex_count(), v + 1);
    EXPECT_EQ(g.edge_count(), e + 1);
  }
  EXPECT_EQ(g.vertex_count(), 11u);
  EXPECT_EQ(g.edge_count(), 12u);
}

TEST(SubdivideEdge, Errors) {
  const Multigraph g = Fixture("butterfly");
  EXPECT_EQ(kind_of([&] { subdivide_edge(g, "nope", "w"); }), ErrorKind::UnknownEdge);
  EXPECT_EQ(kind_of([&] { subdivide_edge(g, "e1", "3"); }), ErrorKind::VertexLabelCollision);
}

TEST(SmoothVertex, PathBackToEdge) {
  const Multigraph g = Multigraph::validate({{"1", "2", "3"}, {{"a", "1", "3"}, {"b", "3", "2"}}});
  const Multigraph s = smooth_vertex(g, "3");
  EXPECT_EQ(s.vertex_count(), 2u);
  ASSERT_EQ(s.edge_count(), 1u);
  EXPECT_EQ(s.edge(0).label, "3.s");
  EXPECT_EQ(UnorderedEndpoints(s), (EdgeSet{{"1", "2"}}));
}

TEST(SmoothVertex, TriangleBecomesDipole) {
  const Multigraph g = Multigraph::validate({{"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}}});
  const Multigraph s = smooth_vertex(g, "3");
  EXPECT_EQ(UnorderedEndpoints(s), (EdgeSet{{"1", "2"}, {"1", "2"}}));
}

TEST(SmoothVertex, Errors) {
  const Multigraph g = Fixture("butterfly");
  EXPECT_EQ(kind_of([&] { smooth_vertex(g, "9"); }), ErrorKind::UnknownVertex);
  EXPECT_EQ(kind_of([&] { smooth_vertex(g, "3"); }), ErrorKind::DegreeNotTwo);
  const Multigraph pendant_pair = Multigraph::validate({{"a", "b"}, {{"x", "a", "b"}, {"y", "a", "b"}}});
  EXPECT_EQ(kind_of([&] { smooth_vertex(pendant_pair, "b"); }), ErrorKind::WouldCreateLoop);
}

// smooth(subdivide(g, e, w), w) equals g with e renamed to w.s.
TEST(SmoothVertex, InvertsSubdivisionOnButterfly) {
  const Multigraph g = Fixture("butterfly");
  for (const auto& e : g.edges()) {
    const Multigraph back = smooth_vertex(subdivide_edge(g, e.label, "w"), "w");
    EXPECT_EQ(back.vertices(), g.vertices());
    EdgeSet expected;
    EdgeSet actual;
    for (const auto& x : g.edges()) {
      auto a = g.vertex_label(x.u), b = g.vertex_label(x.v);
      expected.insert({x.label == e.label ? "w.s" : x.label, a < b ? a + "-" + b : b + "-" + a});
    }
    for (const auto& x : back.edges()) {
      auto a = back.vertex_label(x.u), b = back.vertex_label(x.v);
      actual.insert({x.label, a < b ? a + "-" + b : b + "-" + a});
    }
    EXPECT_EQ(actual, expected) << "edge " << e.label;
  }
}

TEST(SubdivideEdge, PreservesBettiOnRandomGraphs) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int m = n - 1 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::make_graph(n, testing::random_connected(n, m, rng));
    const std::string e = g.edge(rng() % g.edge_count()).label;
    EXPECT_EQ(betti(subdivide_edge(g, e, "fresh")), betti(g)) << "seed " << testing::kSeed << " trial " << trial;
  }
}

}  // namespace
}  // namespace cycletrace
