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

#include "zeroscope/special.hpp"

#include <cmath>
#include <numbers>

#include "zeroscope/error.hpp"

namespace zeroscope {
namespace {

// |x| <= 1/2: the tail after k terms is below 2^-k / k^2.
double dilog_series(double x) {
  double term = x, sum = 0.0;
  for (int k = 1; k < 64; ++k) {
    const double add = term / (static_cast<double>(k) * k);
    sum += add;
    if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    term *= x;
  }
  return sum;
}

}  // namespace

double dilog(double x) {
  if (!(x >= -1.0 && x <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "dilog is implemented on [-1, 1]");
  }
  constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  if (x == 1.0) return kZeta2;
  if (x == 0.0) return 0.0;
  if (x < -0.5) {
    // Landen: maps (-1, -1/2) into (1/3, 1/2).
    const double l = std::log1p(-x);
    return -dilog_series(x / (x - 1.0)) - 0.5 * l * l;
  }
  if (x <= 0.5) return dilog_series(x);
  // Euler reflection about 1/2.
  return kZeta2 - std::log(x) * std::log1p(-x) - dilog_series(1.0 - x);
}

double dilog_partial(double x, std::optional<int> n) {
  if (!n) return dilog(x);
  double term = 1.0, sum = 0.0;
  for (int k = 1; k <= *n; ++k) {
    term *= x;
    sum += term / (static_cast<double>(k) * k);
  }
  return sum;
}

double zeta3() { return 1.2020569031595942853997; }

}  // namespace zeroscope
