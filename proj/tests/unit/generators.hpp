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

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "zeroscope/rng.hpp"

namespace zeroscope::testing {

/// Small seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed, std::uint64_t stream = 0) : rng_(SeedPath{seed, stream, 7}) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.next_unit(); }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(rng_.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  cplx complex_normal() { return rng_.next_standard_complex(); }
  cplx in_disk(double radius) {
    const double r = radius * std::sqrt(rng_.next_unit());
    return std::polar(r, uniform(0.0, 6.283185307179586));
  }
  std::vector<cplx> polynomial(int degree) {
    std::vector<cplx> a(degree + 1);
    for (auto& c : a) c = complex_normal();
    return a;
  }
  std::vector<double> normals(std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = std::sqrt(2.0) * complex_normal().real();
    return v;
  }

 private:
  CounterRng rng_;
};

}  // namespace zeroscope::testing
