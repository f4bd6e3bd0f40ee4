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

#include "zeroscope/rng.hpp"

#include <cmath>
#include <numbers>

namespace zeroscope {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                           std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

CounterRng::CounterRng(const SeedPath& path) : path_(path) {
  const std::uint64_t k =
      splitmix64(splitmix64(path.master_seed) ^
                 splitmix64(path.substream_index ^ 0x5851f42d4c957f2dull));
  key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
}

std::uint64_t CounterRng::next_u64() {
  if (used_words_ == 2) {
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
        static_cast<std::uint32_t>(path_.stream_index),
        static_cast<std::uint32_t>(path_.stream_index >> 32)};
    buffer_ = philox4x32_10(ctr, key_);
    ++block_;
    used_words_ = 0;
  }
  const int i = 2 * used_words_++;
  return static_cast<std::uint64_t>(buffer_[i]) |
         (static_cast<std::uint64_t>(buffer_[i + 1]) << 32);
}

double CounterRng::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_open_unit() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

cplx CounterRng::next_standard_complex() {
  const double u1 = next_open_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

std::vector<cplx> sample_standard_complex(const SeedPath& seed, std::size_t n) {
  CounterRng rng(seed);
  std::vector<cplx> out(n);
  for (auto& x : out) x = rng.next_standard_complex();
  return out;
}

}  // namespace zeroscope
