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
#include <numbers>

#include <boost/math/special_functions/zeta.hpp>

#include "zeroscope/quadrature.hpp"
#include "zeroscope/special.hpp"

namespace zeroscope {
namespace {

constexpr double kPi = std::numbers::pi;

double dilog_series(double x, int terms) {
  double s = 0.0, p = 1.0;
  for (int k = 1; k <= terms; ++k) {
    p *= x;
    s += p / (static_cast<double>(k) * k);
  }
  return s;
}

TEST(Dilog, ClassicalValues) {
  EXPECT_NEAR(dilog(0.0), 0.0, 1e-16);
  EXPECT_NEAR(dilog(1.0), kPi * kPi / 6.0, 1e-15);
  EXPECT_NEAR(dilog(0.5), kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0), 1e-15);
  EXPECT_NEAR(dilog(-1.0), -kPi * kPi / 12.0, 1e-15);
}

TEST(Dilog, MatchesSeriesInsideDisk) {
  for (double x : {-0.9, -0.3, 0.1, 0.4, 0.7, 0.9}) EXPECT_NEAR(dilog(x), dilog_series(x, 2000), 1e-14) << x;
}

TEST(Dilog, ReflectionNearOne) {
  // Li2(x) + Li2(1-x) = pi^2/6 - log x log(1-x)
  for (double x : {0.999, 0.9999999, 0.95}) {
    EXPECT_NEAR(dilog(x) + dilog(1.0 - x), kPi * kPi / 6.0 - std::log(x) * std::log1p(-x), 1e-14);
  }
}

TEST(DilogPartial, FiniteSums) {
  for (int n : {1, 2, 5, 30}) EXPECT_NEAR(dilog_partial(0.8, n), dilog_series(0.8, n), 1e-15);
  EXPECT_NEAR(dilog_partial(0.8, std::nullopt), dilog(0.8), 1e-15);
}

TEST(Zeta3, Value) { EXPECT_NEAR(zeta3(), boost::math::zeta(3.0), 1e-15); }

TEST(GaussLegendre, ExactForPolynomials) {
  for (int n : {1, 2, 5, 8, 20}) {
    const QuadratureRule q = gauss_legendre(n);
    ASSERT_EQ(q.nodes.size(), static_cast<std::size_t>(n));
    for (int k = 0; k <= 2 * n - 1; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.nodes[i], k);
      const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
      EXPECT_NEAR(s, exact, 1e-14) << n << " " << k;
    }
  }
}

TEST(GaussLegendre, CompositeRule) {
  const QuadratureRule q = composite_gauss_legendre(0.0, kPi, 16, 8);
  double s = 0.0;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * std::sin(q.nodes[i]);
  EXPECT_NEAR(s, 2.0, 1e-14);
}

}  // namespace
}  // namespace zeroscope
