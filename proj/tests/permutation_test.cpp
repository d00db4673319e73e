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

#include "cycletrace/permutation.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

namespace cycletrace {
namespace {

using testing::kind_of;

Permutation RandomPermutation(std::size_t n, std::mt19937_64& rng) {
  return Permutation::from_images(testing::random_order(n, rng));
}

TEST(Permutation, IdentityAndTransposition) {
  const Permutation id(4);
  EXPECT_TRUE(id.is_identity());
  EXPECT_EQ(id.orbit_count(), 4u);
  EXPECT_EQ(id.to_string(), "()");
  const Permutation t = Permutation::transposition(4, 0, 2);
  EXPECT_EQ(t(0), 2u);
  EXPECT_EQ(t(2), 0u);
  EXPECT_EQ(t(1), 1u);
  EXPECT_EQ(t.to_string(), "(1 3)");
  EXPECT_EQ(t.cycle_type(), (std::vector<std::size_t>{2, 1, 1}));
}

TEST(Permutation, CompositionAppliesRightFactorFirst) {
  const Permutation a = Permutation::transposition(3, 0, 1);
  const Permutation b = Permutation::transposition(3, 1, 2);
  const Permutation ab = a * b;
  EXPECT_EQ(ab(0), a(b(0)));
  EXPECT_EQ(ab(2), 0u);
  EXPECT_EQ(ab.to_string(), "(1 2 3)");
}

TEST(Permutation, SwapValuesIsLeftMultiplication) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    Permutation p = RandomPermutation(n, rng);
    const std::size_t a = rng() % n;
    std::size_t b = rng() % n;
    if (a == b) b = (b + 1) % n;
    const Permutation expected = Permutation::transposition(n, a, b) * p;
    p.swap_values(a, b);
    EXPECT_EQ(p, expected);
    EXPECT_EQ(p.inverse() * p, Permutation(n));
  }
}

TEST(Permutation, CycleTypeMatchesOracle) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Permutation p = RandomPermutation(n, rng);
    auto lengths = testing::sorted_cycle_lengths(p.images());
    std::vector<std::size_t> type(lengths.rbegin(), lengths.rend());
    EXPECT_EQ(p.cycle_type(), type);
    EXPECT_EQ(p.orbit_count(), testing::naive_orbits(p.images()));
    EXPECT_EQ(p.is_full_cycle(), lengths.size() == 1);
    std::size_t total = 0;
    for (const auto& c : p.cycles()) {
      total += c.size();
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(p(c[i]), c[(i + 1) % c.size()]);
    }
    EXPECT_EQ(total, n);
  }
}

TEST(Permutation, FixedPoints) {
  EXPECT_TRUE(Permutation(3).has_fixed_point());
  EXPECT_FALSE(Permutation::from_images({1, 2, 0}).has_fixed_point());
  EXPECT_TRUE(Permutation::from_images({1, 0, 2}).has_fixed_point());
}

TEST(Permutation, Errors) {
  EXPECT_EQ(kind_of([] { Permutation::from_images({0, 0}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { Permutation::from_images({2, 0}); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { (void)(Permutation(2) * Permutation(3)); }), ErrorKind::InvalidArgument);
}

}  // namespace
}  // namespace cycletrace
