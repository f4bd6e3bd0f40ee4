// Copyright 2026 The Zeroscope Authors.
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

#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "zeroscope/rng.hpp"

namespace zeroscope {
namespace {

using Block = std::array<std::uint32_t, 4>;

// Published known-answer vectors for Philox4x32-10.
TEST(Philox, KnownAnswerZero) {
  EXPECT_EQ(philox4x32_10({0, 0, 0, 0}, {0, 0}),
            (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
  EXPECT_EQ(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
  EXPECT_EQ(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterRng, SamePathSameStream) {
  CounterRng a(SeedPath{5, 3, 1});
  CounterRng b(SeedPath{5, 3, 1});
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(CounterRng, PathsDiffer) {
  const SeedPath base{5, 3, 1};
  for (const SeedPath& other : {SeedPath{6, 3, 1}, SeedPath{5, 4, 1}, SeedPath{5, 3, 2}}) {
    CounterRng a(base);
    CounterRng b(other);
    int equal = 0;
    for (int i = 0; i < 64; ++i) equal += a.next_u64() == b.next_u64();
    EXPECT_EQ(equal, 0);
  }
}

TEST(CounterRng, UnitIntervals) {
  CounterRng r(SeedPath{1, 0, 0});
  for (int i = 0; i < 10000; ++i) {
    const double u = r.next_unit();
    const double v = r.next_open_unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_GT(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST(CounterRng, StandardComplexMoments) {
  const auto v = sample_standard_complex(SeedPath{11, 0, 0}, 200000);
  double mod2 = 0.0, mod4 = 0.0;
  cplx mean{}, pseudo{};
  for (const cplx& z : v) {
    mean += z;
    pseudo += z * z;
    mod2 += std::norm(z);
    mod4 += std::norm(z) * std::norm(z);
  }
  const double n = static_cast<double>(v.size());
  // E|xi|^2 = 1, E|xi|^4 = 2, E xi = E xi^2 = 0.
  EXPECT_NEAR(mod2 / n, 1.0, 5.0 / std::sqrt(n));
  EXPECT_NEAR(mod4 / n, 2.0, 5.0 * std::sqrt(20.0 / n));
  EXPECT_LT(std::abs(mean / n), 5.0 / std::sqrt(n));
  EXPECT_LT(std::abs(pseudo / n), 5.0 * std::sqrt(2.0 / n));
}

TEST(CounterRng, SampleHelperMatchesGenerator) {
  const SeedPath p{9, 2, 0};
  const auto v = sample_standard_complex(p, 17);
  CounterRng r(p);
  for (const cplx& z : v) EXPECT_EQ(z, r.next_standard_complex());
}

}  // namespace
}  // namespace zeroscope
