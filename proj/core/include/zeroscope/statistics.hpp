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

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zeroscope/kernels.hpp"
#include "zeroscope/solver.hpp"

namespace zeroscope {

/**
 * A real test function on the chart, with its mixed derivative phi_{z zbar}.
 *
 *   GaussBump   exp(-|z-c|^2/s^2)
 *   PolyBump4   (1 - |z-c|^2/R^2)^4 on the disk, 0 outside
 *   UserTable   radial profile about c, quintic spline through uniform
 *               samples on [0, R] with vanishing end derivatives
 *   Constant    c                         (phi_{z zbar} = 0)
 *   Affine      Re(a z) + b               (phi_{z zbar} = 0)
 *
 * On the product geometry the function is evaluated as phi(z) phi(w).
 */
class TestFunction {
 public:
  enum class Kind { kGaussBump, kPolyBump4, kUserTable, kConstant, kAffine };

  static TestFunction gauss_bump(cplx center, double scale);
  static TestFunction poly_bump4(cplx center, double radius);
  /// values[i] = phi at radius i * R / (values.size() - 1); at least 8 samples.
  /// Quintic spline in r, even at the origin and flat at R.
  static TestFunction user_table(cplx center, double radius, std::vector<double> values);
  static TestFunction constant(double value);
  static TestFunction affine(cplx a, double b);

  Kind kind() const { return kind_; }
  cplx center() const { return center_; }
  double scale() const { return scale_; }
  /// True for the three bump kinds (functions of |z - c| only).
  bool radial() const;

  double value(cplx z) const;
  double value(const ChartPoint& p, int dimension) const;
  double dzdzbar(cplx z) const;
  /// Radius about center() outside which phi and phi_{z zbar} are below
  /// 1e-16 (bumps), or infinity.
  double support_radius() const;

  /// "gauss:c:s", "poly4:c:R", "const:v", "affine:a:b" (c, a as "x" or "x,y").
  std::string spec() const;

 private:
  struct Table;
  Kind kind_ = Kind::kConstant;
  cplx center_{};
  double scale_ = 1.0;
  double offset_ = 0.0;
  std::shared_ptr<const Table> table_;
};

/// Parses the spec() grammar; user tables are built by the caller.
TestFunction parse_test_function(std::string_view text);

double smooth_statistic(const ZeroSet& zs, const TestFunction& phi, int dimension = 1);
int numerical_statistic(const ZeroSet& zs, const RegionSpec& region);

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  /// Central moments of order 3..6 (divided by the count).
  std::array<double, 4> central_moments{};
  /// Kolmogorov-Smirnov distance of the sample-standardized values to N(0,1).
  double ks = 0.0;
  /// Same distance with the empirical distribution taken at the midpoint of
  /// each jump; differs from ks only for tied (lattice) data.
  double ks_midpoint = 0.0;
  double skewness = 0.0;
  double kurtosis_excess = 0.0;
  std::optional<double> slope;
  std::optional<double> slope_stderr;
};

/// Fields are NaN when fewer than two values are given.
Summary summarize(std::span<const double> values);
/// Standard normal distribution function.
double normal_cdf(double x);

struct SlopeFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  double intercept = 0.0;
};

/// OLS of log variance against log degree.  Needs >= 4 increasing degrees;
/// throws kNonPositiveVariance.
SlopeFit variance_exponent_fit(std::span<const double> degrees, std::span<const double> variances);

enum class StatisticKind { kSmooth, kNumerical };

struct StatisticSpec {
  StatisticKind kind = StatisticKind::kSmooth;
  TestFunction phi = TestFunction::constant(1.0);
  RegionSpec region = Disk{};

  static StatisticSpec smooth(TestFunction f);
  static StatisticSpec numerical(RegionSpec r);
  std::string label() const;
};

struct CampaignConfig {
  Model model{ModelKind::kElliptic, 1};
  int trials = 100;
  std::uint64_t seed = 0;
  std::vector<StatisticSpec> statistics;
  int threads = 1;
};

struct ExperimentReport {
  std::string statistic;
  /// Values of the successful trials, in trial order.
  std::vector<double> values;
  std::vector<std::uint64_t> trial_ids;
  int failed_trials = 0;
  Summary summary;
};

struct CampaignResult {
  std::vector<ExperimentReport> reports;  // one per statistic
  int trials = 0;
  int failed_trials = 0;
  /// Product model: trials whose common-zero count was 2N^2.
  int full_count_trials = 0;
};

/// Trial t draws its section from SeedPath{seed, t, 0} (the second product
/// section from substream 1).  Failed trials are excluded and counted;
/// more than 1% failures throws kSolverFailureRate.
CampaignResult run_campaign(const CampaignConfig& config);

/// Calls body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

// Quadrature oracles (single-variable models).

/// Correlation length 1/sqrt(N omega-density) of the field at z.
double local_scale(const Model& model, cplx z);

/// (N/pi) integral of phi against omega: the mean of the smooth statistic.
double deterministic_term(const Model& model, const TestFunction& phi);

/// integral of f^2 omega where i ddbar phi = f omega, i.e.
/// integral 4 phi_{z zbar}^2 / omega-density dA.
double ddbar_norm_sq(const Model& model, const TestFunction& phi);

/// zeta(3) / (4 pi) * ddbar_norm_sq: the predicted limit of N Var.
double semipositive_constant(const Model& model, const TestFunction& phi);

/// Double integral of (1/4) sum_{a<=n} P^{2a}/a^2 against mu(z) mu(w) with
/// mu = (2/pi) phi_{z zbar}; n = nullopt for the dilogarithm.  Throws
/// kQuadratureNotConverged.
double variance_oracle_smooth(const Model& model, const TestFunction& phi,
                              std::optional<int> n = std::nullopt);

}  // namespace zeroscope
