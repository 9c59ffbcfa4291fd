//
// Copyright 2026 The bnfake Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bnfake/random.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace bnfake {
namespace {

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Below(1000), b.Below(1000));
}

TEST(RngTest, BelowStaysInRange) {
  Rng r(1);
  for (std::uint64_t bound : {1ull, 2ull, 3ull, 7ull, 1000ull, (1ull << 63) + 5}) {
    for (int i = 0; i < 200; ++i) EXPECT_LT(r.Below(bound), bound);
  }
}

TEST(RngTest, SampleIndicesAreDistinct) {
  Rng r(3);
  for (std::size_t n : {0u, 1u, 5u, 100u}) {
    for (std::size_t k = 0; k <= n; k += std::max<std::size_t>(1, n / 4)) {
      auto idx = r.SampleIndices(n, k);
      ASSERT_EQ(idx.size(), k);
      std::set<std::size_t> unique(idx.begin(), idx.end());
      EXPECT_EQ(unique.size(), k);
      for (auto i : idx) EXPECT_LT(i, n);
    }
  }
}

TEST(RngTest, SampleIndicesReplaysPartialFisherYates) {
  Rng r(7), oracle(7);
  auto got = r.SampleIndices(10, 4);
  std::vector<std::size_t> pool(10);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t j = i + oracle.Below(10 - i);
    std::swap(pool[i], pool[j]);
  }
  EXPECT_EQ(got, std::vector<std::size_t>(pool.begin(), pool.begin() + 4));
}

TEST(RngTest, ShuffleIsAPermutation) {
  Rng r(9);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  auto copy = v;
  r.Shuffle(v);
  EXPECT_NE(v, copy);
  std::sort(v.begin(), v.end());
  EXPECT_EQ(v, copy);
}

TEST(DeriveSeedTest, DependsOnEveryInput) {
  auto base = DeriveSeed(1, "a1", "x");
  EXPECT_EQ(base, DeriveSeed(1, "a1", "x"));
  EXPECT_NE(base, DeriveSeed(2, "a1", "x"));
  EXPECT_NE(base, DeriveSeed(1, "a2", "x"));
  EXPECT_NE(base, DeriveSeed(1, "a1", "y"));
  // The key/tag boundary matters.
  EXPECT_NE(DeriveSeed(1, "ab", "c"), DeriveSeed(1, "a", "bc"));
}

TEST(Fnv1aTest, KnownVectors) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

}  // namespace
}  // namespace bnfake
