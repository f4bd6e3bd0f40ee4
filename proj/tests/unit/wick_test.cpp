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

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/special_functions/laguerre.hpp>

#include "generators.hpp"
#include "zeroscope/error.hpp"
#include "zeroscope/wick.hpp"

namespace zeroscope::wick {
namespace {

using V = std::vector<int>;

double factorial(int n) { return std::tgamma(n + 1.0); }

// Number of slot bijections with no slot of vertex i sent to a slot of i.
std::size_t brute_force_count(const V& alphas) {
  V owner;
  for (int i = 0; i < static_cast<int>(alphas.size()); ++i) owner.insert(owner.end(), alphas[i], i);
  std::vector<int> perm(owner.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t s = 0; s < perm.size() && ok; ++s) ok = owner[s] != owner[perm[s]];
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TEST(WickPolynomial, LowOrders) {
  EXPECT_EQ(wick_polynomial(0).coefficients, std::vector<double>{1.0});
  EXPECT_EQ(wick_polynomial(1).coefficients, (std::vector<double>{-1.0, 1.0}));
  EXPECT_EQ(wick_polynomial(2).coefficients, (std::vector<double>{2.0, -4.0, 1.0}));
}

TEST(WickPolynomial, LaguerreIdentity) {
  for (int a = 0; a <= 12; ++a) {
    const WickPolynomial w = wick_polynomial(a);
    for (double x : {0.0, 0.3, 1.0, 2.5, 7.0}) {
      const double expected = (a % 2 ? -1.0 : 1.0) * factorial(a) * boost::math::laguerre(a, x);
      EXPECT_NEAR(w(x), expected, 1e-9 * std::max(1.0, std::abs(expected))) << a << " " << x;
    }
  }
}

TEST(WickPolynomial, OverflowGuard) {
  EXPECT_NO_THROW(wick_polynomial(kMaxWickOrder));
  try {
    wick_polynomial(kMaxWickOrder + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOverflow);
  }
}

TEST(ChaosCoefficient, ProjectionOfHalfLog) {
  // c_{2a} a! = E[log sqrt(X) :X:_a] for X ~ Exp(1).
  for (int a = 0; a <= 6; ++a) {
    const WickPolynomial w = wick_polynomial(a);
    auto f = [&](double x) { return 0.5 * std::log(x) * w(x) * std::exp(-x); };
    // x = e^{-s} on (0, 1] removes the log singularity.
    auto g = [&](double s) {
      const double x = std::exp(-s);
      return -0.5 * s * w(x) * std::exp(-x) * x;
    };
    const double head = boost::math::quadrature::exp_sinh<double>().integrate(g);
    const double tail = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 1.0, 80.0, 15, 1e-13);
    EXPECT_NEAR(chaos_coefficient(a) * factorial(a), head + tail, 1e-9) << a;
  }
}

TEST(Diagrams, DiagonalPairCountsAreFactorialSquares) {
  for (int a = 1; a <= 4; ++a) {
    const V alphas{a, a};
    const double f = factorial(a);
    EXPECT_EQ(count_diagrams(alphas), static_cast<std::size_t>(f * f));
  }
}

TEST(Diagrams, SingleVertexAndUnequalPairsEmpty) {
  for (int a = 1; a <= 4; ++a) {
    EXPECT_EQ(count_diagrams(V{a}), 0u);
    EXPECT_TRUE(enumerate_diagrams(V{a}).empty());
    for (int b = 1; b <= 4; ++b) {
      if (b != a) EXPECT_EQ(count_diagrams(V{a, b}), 0u);
    }
  }
}

TEST(Diagrams, CountsMatchBruteForce) {
  for (const V& alphas : {V{1, 1, 1}, V{2, 1, 1}, V{1, 2, 1, 1}, V{2, 2, 2}, V{3, 2, 1}, V{1, 1, 1, 1, 1}}) {
    EXPECT_EQ(count_diagrams(alphas), brute_force_count(alphas));
    const auto all = enumerate_diagrams(alphas);
    EXPECT_EQ(all.size(), brute_force_count(alphas));
    for (const auto& d : all) EXPECT_TRUE(d.is_valid());
  }
}

TEST(Diagrams, GuardAboveEight) {
  try {
    enumerate_diagrams(V{5, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(WickMoment, MeanZeroAndOrthogonality) {
  CMatrix one = CMatrix::Ones(2, 2);
  for (int a = 1; a <= 4; ++a) {
    EXPECT_NEAR(wick_moment(V{a}, CMatrix::Identity(1, 1)), 0.0, 1e-12);
    for (int b = 1; b <= 4; ++b) {
      const double expected = a == b ? factorial(a) * factorial(a) : 0.0;
      EXPECT_NEAR(wick_moment(V{a, b}, one), expected, 1e-9);
    }
  }
}

TEST(WickMoment, PairFormula) {
  // E[:|xi_1|^{2a}: :|xi_2|^{2a}:] = (a!)^2 |rho_12|^{2a}
  CMatrix c(2, 2);
  c << 1.0, cplx(0.3, 0.5), cplx(0.3, -0.5), 1.0;
  for (int a = 1; a <= 4; ++a) {
    const double f = factorial(a);
    EXPECT_NEAR(wick_moment(V{a, a}, c), f * f * std::pow(std::norm(c(0, 1)), a), 1e-10);
  }
}

TEST(WickMoment, AgreesWithIsserlisOnRandomMatrices) {
  testing::Gen g(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int p = g.integer(1, 4);
    V alphas(p);
    int total = 0;
    for (auto& a : alphas) total += (a = g.integer(1, 2));
    if (total > 6) continue;
    const CMatrix rho = random_correlation_matrix(p, SeedPath{99, static_cast<std::uint64_t>(trial), 0});
    EXPECT_NEAR(wick_moment(alphas, rho), wick_moment_isserlis(alphas, rho), 1e-10);
  }
}

TEST(DiagramValue, EmptyDiagramIsOne) {
  FeynmanDiagram d;
  d.alphas = {0, 0};
  EXPECT_EQ(diagram_value(d, CMatrix::Identity(2, 2)), cplx(1.0));
}

TEST(Multigraph, DegreesAndComponents) {
  for (const auto& d : enumerate_diagrams(V{1, 1, 1, 1})) {
    const DirectedMultigraph g = to_multigraph(d);
    EXPECT_EQ(g.edge_count(), 4);
    for (int v = 0; v < 4; ++v) {
      EXPECT_EQ(g.out_degree(v), 1);
      EXPECT_EQ(g.in_degree(v), 1);
    }
    std::size_t covered = 0;
    for (const auto& comp : connected_components(g)) {
      EXPECT_GE(comp.size(), 2u);
      covered += comp.size();
    }
    EXPECT_EQ(covered, 4u);
  }
}

TEST(Multigraph, CombineAddsMultiplicities) {
  const auto ds = enumerate_diagrams(V{1, 1});
  ASSERT_EQ(ds.size(), 1u);
  const std::vector<DirectedMultigraph> gs{to_multigraph(ds[0]), to_multigraph(ds[0])};
  const DirectedMultigraph sum = combine(gs);
  EXPECT_EQ(sum.edge_count(), 4);
  EXPECT_EQ(sum.out_degree(0), 2);
}

TEST(Multigraph, CombineRejectsDifferentVertexSets) {
  const std::vector<DirectedMultigraph> gs{to_multigraph(enumerate_diagrams(V{1, 1})[0]),
                                           to_multigraph(enumerate_diagrams(V{1, 1, 1})[0])};
  try {
    combine(gs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kVertexSetMismatch);
  }
}

TEST(Multigraph, ValueFactorizesOverComponents) {
  const CMatrix rho = random_correlation_matrix(4, SeedPath{5, 0, 0});
  for (const auto& d : enumerate_diagrams(V{1, 2, 1, 2})) EXPECT_TRUE(value_factorization_check(d, rho));
}

TEST(Multigraph, RestrictionKeepsInternalEdges) {
  for (const auto& d : enumerate_diagrams(V{1, 1, 1, 1})) {
    for (const auto& comp : connected_components(to_multigraph(d))) {
      const FeynmanDiagram sub = restrict_diagram(d, comp);
      EXPECT_EQ(sub.vertex_count(), static_cast<int>(comp.size()));
      EXPECT_TRUE(sub.is_valid());
    }
  }
}

TEST(GaussianMoments, DoubleFactorials) {
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(5), 15);
  EXPECT_EQ(double_factorial(6), 48);
  EXPECT_EQ(gaussian_moment(3), 0);
  EXPECT_EQ(gaussian_moment(4), 3);
  EXPECT_EQ(gaussian_moment(6), 15);
}

}  // namespace
}  // namespace zeroscope::wick
