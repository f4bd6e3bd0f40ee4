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
#include <numbers>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zeroscope/chaos.hpp"
#include "zeroscope/error.hpp"

namespace zeroscope {
namespace {

constexpr double kGamma = 0.57721566490153286;

// E[f(X)] for X ~ Exp(1).
double exp_mean(const std::function<double(double)>& f) {
  auto g = [&](double x) { return f(x) * std::exp(-x); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, 0.0, 120.0, 25, 1e-14);
}

TEST(TruncatedLog, ValueAtZero) {
  for (int n : {1, 2, 5, 10, 30}) {
    double h = 0.0;
    for (int a = 1; a <= n; ++a) h += 1.0 / a;
    EXPECT_NEAR(truncated_log(0.0, n), -0.5 * kGamma - 0.5 * h, 1e-13);
  }
}

TEST(TruncatedLog, Guards) {
  try {
    truncated_log(1.0, kMaxTruncationOrder + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  EXPECT_THROW(truncated_log(-0.5, 3), Error);
}

TEST(TruncatedLog, EvaluatorMatchesWickExpansion) {
  for (int n : {1, 3, 8}) {
    const TruncatedLogEvaluator e(n);
    ASSERT_EQ(e.table().size(), static_cast<std::size_t>(n + 1));
    for (int a = 0; a <= n; ++a) {
      EXPECT_NEAR(e.weights()[a], wick::chaos_coefficient(a) / std::tgamma(a + 1.0), 1e-15);
      EXPECT_EQ(e.table()[a].coefficients, wick::wick_polynomial(a).coefficients);
    }
    for (double x : {0.1, 1.0, 3.0}) {
      double direct = 0.0;
      for (int a = 0; a <= n; ++a) direct += e.weights()[a] * e.table()[a](x);
      EXPECT_NEAR(e(x), direct, 1e-11);
      EXPECT_EQ(e(x), truncated_log(x, n));
    }
  }
}

TEST(TruncatedLog, MeanAndParseval) {
  for (int n : {1, 2, 5, 10}) {
    const TruncatedLogEvaluator e(n);
    const double mean = exp_mean([&](double x) { return e(x); });
    const double second = exp_mean([&](double x) { return e(x) * e(x); });
    double expected = 0.0;
    for (int a = 1; a <= n; ++a) expected += 0.25 / (static_cast<double>(a) * a);
    EXPECT_NEAR(mean, -0.5 * kGamma, 1e-10);
    EXPECT_NEAR(second - mean * mean, expected, 1e-10);
  }
  // Var log sqrt(X) = pi^2 / 24 is the n = infinity limit.
  const double m = exp_mean([](double x) { return 0.5 * std::log(x); });
  const double v = exp_mean([](double x) { return 0.25 * std::log(x) * std::log(x); }) - m * m;
  EXPECT_NEAR(v, std::numbers::pi * std::numbers::pi / 24.0, 1e-8);
}

TEST(FluctuationGrid, WeightsAndCenter) {
  const Model m(ModelKind::kElliptic, 64);
  const TestFunction phi = TestFunction::gauss_bump(cplx(0.3, 0.0), 1.0);
  const FluctuationGrid g = make_fluctuation_grid(m, phi, 1.0);
  ASSERT_EQ(g.nodes.size(), g.weights.size());
  ASSERT_EQ(g.nodes.size(), g.spacing.size());
  double sum = 0.0, abs_sum = 0.0;
  for (double w : g.weights) {
    sum += w;
    abs_sum += std::abs(w);
  }
  // The integral of a compactly supported Laplacian vanishes.
  EXPECT_LT(std::abs(sum), 1e-6 * abs_sum);
  EXPECT_NEAR(g.deterministic, deterministic_term(m, phi), 1e-6 * g.deterministic);
}

TEST(TruncatedStatistics, VectorFormAgrees) {
  const Model m(ModelKind::kElliptic, 32);
  const TestFunction phi = TestFunction::gauss_bump({}, 1.0);
  const FluctuationGrid g = make_fluctuation_grid(m, phi, 1.0);
  const SectionSample s = sample_section(m, SeedPath{4, 2, 0});
  const std::vector<TruncatedLogEvaluator> evals{TruncatedLogEvaluator(1), TruncatedLogEvaluator(4)};
  const auto v = truncated_statistics(s, evals, g);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_NEAR(v[0], truncated_statistic(s, evals[0], g), 1e-10);
  EXPECT_NEAR(v[1], truncated_statistic(s, evals[1], g), 1e-10);
  EXPECT_NEAR(v[2], log_statistic(s, g), 1e-10);
}

TEST(Tabulate, IdentitiesOnSyntheticColumns) {
  const std::vector<double> x{1.0, 2.0, 0.5, 3.0, -1.0, 0.0};
  const std::vector<double> y{0.1, -0.2, 0.3, 0.0, 0.2, -0.1};
  std::vector<double> full(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) full[i] = x[i] + y[i];
  const std::vector<int> orders{1};
  const TruncationTable t = tabulate_truncation(orders, {x}, full);
  ASSERT_EQ(t.rows.size(), 1u);
  const auto var = [](const std::vector<double>& v) {
    const double m = std::accumulate(v.begin(), v.end(), 0.0) / v.size();
    double s = 0.0;
    for (double a : v) s += (a - m) * (a - m);
    return s / (v.size() - 1.0);
  };
  const TruncationRow& r = t.rows[0];
  EXPECT_NEAR(r.var_truncated, var(x), 1e-14);
  EXPECT_NEAR(r.var_rest, var(y), 1e-14);
  EXPECT_NEAR(t.var_full, var(full), 1e-14);
  EXPECT_NEAR(r.decomposition_gap, t.var_full - var(x) - var(y), 1e-14);
  EXPECT_NEAR(r.decomposition_gap, 2.0 * r.cross_term * x.size() / (x.size() - 1.0), 1e-12);
  EXPECT_GE(r.delta, 0.0);
  EXPECT_LE(r.delta, 4.0);
}

TEST(TruncationExperiment, DeterministicAndOrdered) {
  const Model m(ModelKind::kElliptic, 32);
  const TestFunction phi = TestFunction::gauss_bump({}, 1.0);
  const std::vector<int> orders{1, 3, 10};
  const TruncationTable a = truncation_experiment(m, phi, orders, 200, 5, 1, 1.0);
  const TruncationTable b = truncation_experiment(m, phi, orders, 200, 5, 3, 1.0);
  ASSERT_EQ(a.rows.size(), 3u);
  for (int k = 0; k < 3; ++k) EXPECT_EQ(a.rows[k].delta, b.rows[k].delta);
  EXPECT_GT(a.rows[0].delta, a.rows[1].delta);
  EXPECT_GT(a.rows[1].delta, a.rows[2].delta);
  EXPECT_THROW(truncation_experiment(m, phi, orders, 1, 5), Error);
}

}  // namespace
}  // namespace zeroscope
