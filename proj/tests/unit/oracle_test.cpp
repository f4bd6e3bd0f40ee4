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
#include <functional>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "zeroscope/error.hpp"
#include "zeroscope/statistics.hpp"

namespace zeroscope {
namespace {

constexpr double kPi = std::numbers::pi;

double integrate(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-14);
}

TEST(Oracle, LocalScale) {
  EXPECT_NEAR(local_scale(Model(ModelKind::kFlat, 16), cplx(3.0, 1.0)), 0.25, 1e-15);
  EXPECT_NEAR(local_scale(Model(ModelKind::kElliptic, 16), cplx(1.0, 0.0)), 0.5, 1e-15);
}

TEST(Oracle, DeterministicTermFlat) {
  // (N/pi) * pi s^2
  EXPECT_NEAR(deterministic_term(Model(ModelKind::kFlat, 50), TestFunction::gauss_bump({}, 0.5)), 50 * 0.25, 1e-8);
}

TEST(Oracle, DeterministicTermElliptic) {
  const int n = 64;
  // N int_0^inf e^{-u} / (1 + u)^2 du with u = r^2.
  const double expected = n * integrate([](double u) { return std::exp(-u) / ((1 + u) * (1 + u)); }, 0.0, 60.0);
  EXPECT_NEAR(deterministic_term(Model(ModelKind::kElliptic, n), TestFunction::gauss_bump({}, 1.0)), expected,
              1e-8 * expected);
  EXPECT_NEAR(deterministic_term(Model(ModelKind::kElliptic, n), TestFunction::constant(1.0)), n, 1e-8 * n);
}

TEST(Oracle, DdbarNormFlatGauss) {
  for (double s : {0.5, 1.0, 2.0}) {
    EXPECT_NEAR(ddbar_norm_sq(Model(ModelKind::kFlat, 10), TestFunction::gauss_bump({}, s)), kPi / (s * s),
                1e-8);
  }
}

TEST(Oracle, DdbarNormElliptic) {
  // int 4 phi_{z zbar}^2 (1 + r^2)^2 2 pi r dr, phi = exp(-r^2)
  auto f = [](double r) {
    const double u = r * r;
    const double d = (u - 1.0) * std::exp(-u);
    return 4.0 * d * d * (1.0 + u) * (1.0 + u) * 2.0 * kPi * r;
  };
  const double expected = integrate(f, 0.0, 8.0);
  EXPECT_NEAR(ddbar_norm_sq(Model(ModelKind::kElliptic, 10), TestFunction::gauss_bump({}, 1.0)), expected,
              1e-8 * expected);
}

TEST(Oracle, SemipositiveConstant) {
  const Model m(ModelKind::kElliptic, 10);
  const TestFunction phi = TestFunction::poly_bump4(cplx(0.3, 0.0), 1.5);
  EXPECT_NEAR(semipositive_constant(m, phi), boost::math::zeta(3.0) / (4 * kPi) * ddbar_norm_sq(m, phi), 1e-14);
}

TEST(Oracle, HarmonicFunctionsHaveNoVariance) {
  const Model m(ModelKind::kElliptic, 32);
  for (const auto& phi : {TestFunction::constant(2.0), TestFunction::affine(cplx(1.0, -1.0), 0.5)}) {
    EXPECT_EQ(variance_oracle_smooth(m, phi), 0.0);
    EXPECT_EQ(ddbar_norm_sq(m, phi), 0.0);
  }
}

TEST(Oracle, ApproachesSemipositiveLimit) {
  const Model big(ModelKind::kElliptic, 512);
  const TestFunction phi = TestFunction::gauss_bump({}, 1.0);
  const double limit = semipositive_constant(big, phi);
  double prev = 0.0;
  for (int n : {64, 128, 256, 512}) {
    const double nv = n * variance_oracle_smooth(Model(ModelKind::kElliptic, n), phi);
    EXPECT_GT(nv, prev);
    prev = nv;
  }
  EXPECT_NEAR(prev / limit, 1.0, 0.03);
}

TEST(Oracle, FlatScalingLimit) {
  const TestFunction phi = TestFunction::gauss_bump({}, 1.0);
  const Model m(ModelKind::kFlat, 256);
  EXPECT_NEAR(256 * variance_oracle_smooth(m, phi) / semipositive_constant(m, phi), 1.0, 0.03);
}

TEST(Oracle, TruncatedSeriesIncreases) {
  const Model m(ModelKind::kElliptic, 64);
  const TestFunction phi = TestFunction::gauss_bump({}, 1.0);
  double prev = 0.0;
  for (int n : {1, 2, 5, 20}) {
    const double v = variance_oracle_smooth(m, phi, n);
    EXPECT_GT(v, prev);
    prev = v;
  }
  EXPECT_LE(prev, variance_oracle_smooth(m, phi) * (1 + 1e-6));
}

TEST(Oracle, RejectsProductModel) {
  EXPECT_THROW(variance_oracle_smooth(Model(ModelKind::kProductElliptic2, 3), TestFunction::gauss_bump({}, 1.0)),
               Error);
}

}  // namespace
}  // namespace zeroscope
