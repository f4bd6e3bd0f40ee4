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
#include "zeroscope/error.hpp"
#include "zeroscope/statistics.hpp"

namespace zeroscope {
namespace {

TEST(Summarize, ThreeValues) {
  const std::vector<double> v{1.0, 2.0, 3.0};
  const Summary s = summarize(v);
  EXPECT_EQ(s.count, 3u);
  EXPECT_DOUBLE_EQ(s.mean, 2.0);
  EXPECT_DOUBLE_EQ(s.variance, 1.0);
  EXPECT_DOUBLE_EQ(s.central_moments[0], 0.0);
  EXPECT_DOUBLE_EQ(s.central_moments[1], 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(s.skewness, 0.0);
  EXPECT_NEAR(s.kurtosis_excess, 1.5 - 3.0, 1e-15);
}

TEST(Summarize, TooFewValuesGiveNaN) {
  for (const std::vector<double>& v : {std::vector<double>{}, std::vector<double>{4.0}}) {
    const Summary s = summarize(v);
    EXPECT_TRUE(std::isnan(s.variance));
    EXPECT_TRUE(std::isnan(s.ks));
    EXPECT_TRUE(std::isnan(s.central_moments[2]));
  }
}

TEST(Summarize, KnownKsDistance) {
  // sd = sqrt(2): atoms at -+1/sqrt(2).
  const std::vector<double> v{-1.0, 1.0};
  const Summary s = summarize(v);
  const double phi = normal_cdf(-1.0 / std::sqrt(2.0));
  EXPECT_NEAR(s.ks, std::max(phi, 0.5 - phi), 1e-15);
}

TEST(Summarize, NormalSampleIsClose) {
  testing::Gen g(3);
  const auto v = g.normals(20000);
  const Summary s = summarize(v);
  EXPECT_LT(s.ks, 1.63 / std::sqrt(20000.0));
  EXPECT_NEAR(s.skewness, 0.0, 0.06);
  EXPECT_NEAR(s.kurtosis_excess, 0.0, 0.12);
  EXPECT_NEAR(s.variance, 1.0, 0.05);
}

TEST(Summarize, TiesAreGrouped) {
  const std::vector<double> v{0.0, 0.0, 0.0, 1.0, 1.0, 1.0};
  const Summary s = summarize(v);
  // Atoms at -+0.5/sqrt(0.3) standard deviations, jumps of height 1/2.
  const double z = 0.5 / std::sqrt(0.3);
  EXPECT_NEAR(s.ks, 0.5 - normal_cdf(-z), 1e-12);
  EXPECT_NEAR(s.ks_midpoint, std::abs(0.25 - normal_cdf(-z)), 1e-12);
}

TEST(NormalCdf, Values) {
  EXPECT_DOUBLE_EQ(normal_cdf(0.0), 0.5);
  EXPECT_NEAR(normal_cdf(1.959963984540054), 0.975, 1e-15);
  EXPECT_NEAR(normal_cdf(-8.0), 6.22096057427178e-16, 1e-28);
}

TEST(SlopeFit, ExactPowerLaw) {
  const std::vector<double> n{64, 128, 256, 512};
  std::vector<double> v;
  for (double x : n) v.push_back(3.0 * std::pow(x, -1.0));
  const SlopeFit f = variance_exponent_fit(n, v);
  EXPECT_NEAR(f.slope, -1.0, 1e-14);
  EXPECT_NEAR(f.stderr_slope, 0.0, 1e-7);
  EXPECT_NEAR(f.intercept, std::log(3.0), 1e-12);
}

TEST(SlopeFit, StandardErrorByHand) {
  const std::vector<double> n{1, std::exp(1.0), std::exp(2.0), std::exp(3.0)};
  const std::vector<double> v{1.0, std::exp(1.0), std::exp(1.0), std::exp(3.0)};
  // x = 0..3, y = 0, 1, 1, 3: Sxx = 5, Sxy = 4.5.
  const SlopeFit f = variance_exponent_fit(n, v);
  EXPECT_NEAR(f.slope, 0.9, 1e-12);
  EXPECT_NEAR(f.intercept, -0.1, 1e-12);
  double acc = 0.0;
  const double y[] = {0, 1, 1, 3};
  for (int i = 0; i < 4; ++i) acc += std::pow(y[i] - f.intercept - 0.9 * i, 2);
  EXPECT_NEAR(f.stderr_slope, std::sqrt(acc / 2.0 / 5.0), 1e-12);
}

TEST(SlopeFit, Errors) {
  const std::vector<double> three{1, 2, 3};
  EXPECT_THROW(variance_exponent_fit(three, three), Error);
  const std::vector<double> n{1, 2, 3, 4};
  const std::vector<double> v{1, 0, 1, 1};
  try {
    variance_exponent_fit(n, v);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonPositiveVariance);
  }
  const std::vector<double> unsorted{1, 3, 2, 4};
  EXPECT_THROW(variance_exponent_fit(unsorted, n), Error);
}

TEST(TestFunction, SpecRoundTrip) {
  for (const char* text : {"gauss:0:1", "gauss:0.5,-1:2", "poly4:0:3", "const:2.5", "affine:1,2:0.5"}) {
    EXPECT_EQ(parse_test_function(text).spec(), text);
  }
  for (const char* text : {"gauss:0", "gauss:0:-1", "bump:0:1", "const:x", ""}) {
    EXPECT_THROW(parse_test_function(text), Error) << text;
  }
}

// phi_{z zbar} = Laplacian / 4 by central differences.
double laplacian_quarter(const TestFunction& f, cplx z) {
  const double h = 1e-3;
  const double lap = f.value(z + h) + f.value(z - h) + f.value(z + cplx(0, h)) + f.value(z - cplx(0, h)) -
                     4.0 * f.value(z);
  return lap / (4.0 * h * h);
}

TEST(TestFunction, MixedDerivativeMatchesFiniteDifferences) {
  const TestFunction fs[] = {TestFunction::gauss_bump(cplx(0.2, -0.1), 0.8), TestFunction::poly_bump4({}, 2.0),
                             TestFunction::affine(cplx(1.0, 2.0), 3.0), TestFunction::constant(4.0)};
  for (const auto& f : fs) {
    for (cplx z : {cplx(0.0, 0.0), cplx(0.5, 0.3), cplx(-1.1, 0.7)}) {
      EXPECT_NEAR(f.dzdzbar(z), laplacian_quarter(f, z), 2e-5) << f.spec();
    }
  }
}

TEST(TestFunction, UserTableFollowsProfile) {
  const double radius = 4.0;
  std::vector<double> samples;
  for (int i = 0; i <= 80; ++i) {
    const double r = radius * i / 80.0;
    samples.push_back(std::exp(-r * r));
  }
  const TestFunction t = TestFunction::user_table({}, radius, samples);
  const TestFunction g = TestFunction::gauss_bump({}, 1.0);
  for (double r : {0.0, 0.3, 1.0, 1.7, 2.5}) {
    EXPECT_NEAR(t.value(cplx(r, 0.0)), g.value(cplx(r, 0.0)), 1e-5);
    EXPECT_NEAR(t.dzdzbar(cplx(0.0, r)), g.dzdzbar(cplx(0.0, r)), 1e-3);
  }
  EXPECT_EQ(t.dzdzbar(cplx(5.0, 0.0)), 0.0);
  EXPECT_THROW(TestFunction::user_table({}, 1.0, {1.0, 2.0}), Error);
}

TEST(TestFunction, ProductEvaluation) {
  const TestFunction g = TestFunction::gauss_bump({}, 1.0);
  const ChartPoint p{cplx(0.5, 0.0), cplx(0.0, 1.0)};
  EXPECT_DOUBLE_EQ(g.value(p, 2), std::exp(-0.25) * std::exp(-1.0));
  EXPECT_DOUBLE_EQ(g.value(p, 1), std::exp(-0.25));
}

TEST(Statistics, SmoothAndNumerical) {
  ZeroSet zs;
  zs.points = {{cplx(0.0, 0.0), {}}, {cplx(2.0, 0.0), {}}};
  EXPECT_DOUBLE_EQ(smooth_statistic(zs, TestFunction::gauss_bump({}, 1.0)), 1.0 + std::exp(-4.0));
  EXPECT_EQ(numerical_statistic(zs, Disk{{}, 1.0}), 1);
  EXPECT_EQ(StatisticSpec::numerical(Disk{{}, 1.0}).label(), "numerical:disk:0:1");
  EXPECT_EQ(StatisticSpec::smooth(TestFunction::gauss_bump({}, 1.0)).label(), "smooth:gauss:0:1");
}

}  // namespace
}  // namespace zeroscope
