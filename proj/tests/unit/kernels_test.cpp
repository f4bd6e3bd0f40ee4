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

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "zeroscope/error.hpp"
#include "zeroscope/kernels.hpp"

namespace zeroscope {
namespace {

constexpr double kPi = std::numbers::pi;

const ModelKind kAll[] = {ModelKind::kElliptic, ModelKind::kFlat, ModelKind::kHyperbolic,
                          ModelKind::kProductElliptic2};

TEST(Model, ParseNames) {
  EXPECT_EQ(parse_model_kind("elliptic"), ModelKind::kElliptic);
  EXPECT_EQ(parse_model_kind("flat"), ModelKind::kFlat);
  EXPECT_EQ(parse_model_kind("hyperbolic"), ModelKind::kHyperbolic);
  EXPECT_EQ(parse_model_kind("product"), ModelKind::kProductElliptic2);
  EXPECT_FALSE(parse_model_kind("torus").has_value());
}

TEST(Model, RejectsBadDegrees) {
  EXPECT_THROW(Model(ModelKind::kElliptic, 0), Error);
  EXPECT_THROW(Model(ModelKind::kHyperbolic, 1), Error);
  EXPECT_NO_THROW(Model(ModelKind::kHyperbolic, 2));
}

TEST(Model, EllipticCoefficients) {
  const Model m(ModelKind::kElliptic, 12);
  ASSERT_EQ(m.basis_size(), 13);
  const auto lf = m.log_coefficients();
  for (int j = 0; j <= 12; ++j) {
    EXPECT_NEAR(std::exp(2.0 * lf[j]), 13.0 / kPi * boost::math::binomial_coefficient<double>(12, j), 1e-9);
  }
}

TEST(Model, HyperbolicChart) {
  const Model m(ModelKind::kHyperbolic, 5);
  EXPECT_TRUE(m.in_chart({cplx(0.5, 0.0), {}}));
  try {
    m.check_in_chart({cplx(1.2, 0.0), {}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfChart);
  }
}

TEST(Model, FlatTruncationTail) {
  for (int n : {10, 100}) {
    const Model m(ModelKind::kFlat, n);
    const int j = m.factor_size();
    const double lambda = n * m.domain_radius() * m.domain_radius();
    // Poisson(lambda) mass at or above J.
    EXPECT_LE(boost::math::gamma_p(j, lambda), 1e-13);
    EXPECT_GT(boost::math::gamma_p(j - 8, lambda), 1e-14);
  }
  EXPECT_EQ(truncation_index(ModelKind::kElliptic, 7, 1.0), 8);
}

TEST(Bergman, ClosedForms) {
  EXPECT_NEAR(bergman_closed_form(Model(ModelKind::kElliptic, 10)), 11.0 / kPi, 1e-14);
  EXPECT_NEAR(bergman_closed_form(Model(ModelKind::kFlat, 10)), 10.0 / kPi, 1e-14);
  EXPECT_NEAR(bergman_closed_form(Model(ModelKind::kHyperbolic, 10)), 9.0 / kPi, 1e-14);
  EXPECT_NEAR(bergman_closed_form(Model(ModelKind::kProductElliptic2, 10)), 121.0 / (kPi * kPi), 1e-13);
}

TEST(Bergman, ConstantOnProbeGrid) {
  for (ModelKind kind : kAll) {
    for (int n : {10, 100}) {
      const Model m(kind, n);
      const double c = bergman_closed_form(m);
      for (const auto& p : probe_grid(m, 6)) EXPECT_NEAR(bergman(m, p) / c, 1.0, 1e-9);
    }
  }
}

TEST(Rho, ClosedFormMatchesBasisSum) {
  for (ModelKind kind : kAll) {
    for (int n : {10, 100}) {
      const Model m(kind, n);
      const auto grid = probe_grid(m, 5);
      for (const auto& x : grid) {
        for (const auto& y : grid) EXPECT_LT(std::abs(rho(m, x, y) - rho_basis_sum(m, x, y)), 1e-10);
      }
    }
  }
}

TEST(Rho, DiagonalAndSymmetry) {
  for (ModelKind kind : kAll) {
    const Model m(kind, 20);
    const auto grid = probe_grid(m, 4);
    for (const auto& x : grid) {
      EXPECT_NEAR(p_mod(m, x, x), 1.0, 1e-12);
      for (const auto& y : grid) {
        EXPECT_NEAR(p_mod(m, x, y), p_mod(m, y, x), 1e-14);
        EXPECT_LE(p_mod(m, x, y), 1.0 + 1e-12);
      }
    }
  }
}

TEST(Rho, ModulusFromOrigin) {
  const int n = 7;
  for (double r : {0.2, 0.6, 0.9}) {
    const ChartPoint o{}, z{cplx(0.0, r), {}};
    EXPECT_NEAR(p_mod(Model(ModelKind::kElliptic, n), o, z), std::pow(1.0 + r * r, -0.5 * n), 1e-14);
    EXPECT_NEAR(p_mod(Model(ModelKind::kFlat, n), o, z), std::exp(-0.5 * n * r * r), 1e-14);
    EXPECT_NEAR(p_mod(Model(ModelKind::kHyperbolic, n), o, z), std::pow(1.0 - r * r, 0.5 * n), 1e-14);
  }
}

TEST(Rho, SquaredHelper) {
  for (ModelKind kind : {ModelKind::kElliptic, ModelKind::kFlat, ModelKind::kHyperbolic}) {
    const Model m(kind, 30);
    const auto grid = probe_grid(m, 4);
    for (const auto& x : grid) {
      for (const auto& y : grid) {
        const double p = p_mod(m, x, y);
        EXPECT_NEAR(p_squared(m, x.z, y.z), p * p, 1e-14);
      }
    }
  }
}

TEST(Rho, QTruncIncreasesToLimit) {
  const Model m(ModelKind::kElliptic, 10);
  const ChartPoint x{cplx(0.1, 0.0), {}}, y{cplx(0.0, 0.2), {}};
  double prev = q_trunc(m, x, y, 0);
  for (int n = 1; n <= 20; ++n) {
    const double q = q_trunc(m, x, y, n);
    EXPECT_GE(q, prev);
    prev = q;
  }
  EXPECT_LE(prev, q_trunc(m, x, y, std::nullopt) + 1e-15);
}

TEST(Geometry, OmegaDensity) {
  const cplx z(0.3, 0.4);
  EXPECT_NEAR(omega_density(Model(ModelKind::kElliptic, 3), z), 1.0 / std::pow(1.25, 2), 1e-15);
  EXPECT_EQ(omega_density(Model(ModelKind::kFlat, 3), z), 1.0);
  EXPECT_NEAR(omega_density(Model(ModelKind::kHyperbolic, 3), z), 1.0 / std::pow(0.75, 2), 1e-15);
}

TEST(Geometry, Distances) {
  const ChartPoint a{cplx(0.1, 0.2), {}}, b{cplx(-0.3, 0.05), {}};
  EXPECT_NEAR(distance(Model(ModelKind::kFlat, 3), a, b), std::abs(a.z - b.z), 1e-15);
  for (ModelKind kind : {ModelKind::kElliptic, ModelKind::kHyperbolic}) {
    const Model m(kind, 3);
    EXPECT_NEAR(distance(m, a, a), 0.0, 1e-7);
    EXPECT_NEAR(distance(m, a, b), distance(m, b, a), 1e-14);
  }
}

TEST(Scaling, FlatDeficitVanishes) {
  const Model m(ModelKind::kFlat, 50);
  for (double u : {0.0, 1.0, 2.5}) {
    EXPECT_LT(scaling_deficit(m, {cplx(u, 0.0), {}}, {cplx(0.0, -u), {}}), 1e-13);
  }
}

TEST(Scaling, DeficitShrinksWithDegree) {
  for (ModelKind kind : {ModelKind::kElliptic, ModelKind::kHyperbolic}) {
    const ChartPoint u{cplx(2.0, 0.0), {}}, v{cplx(-1.0, 0.0), {}};
    EXPECT_LT(scaling_deficit(Model(kind, 400), u, v), scaling_deficit(Model(kind, 100), u, v));
  }
}

TEST(Scaling, OffDiagonalDecay) {
  for (ModelKind kind : kAll) EXPECT_LT(offdiag_decay(Model(kind, 100), 3.0), 1e-6);
  EXPECT_THROW(offdiag_decay(Model(ModelKind::kElliptic, 10), 0.0), Error);
}

}  // namespace
}  // namespace zeroscope
