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

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zeroscope/sampler.hpp"
#include "zeroscope/statistics.hpp"
#include "zeroscope/wick.hpp"

namespace zeroscope {

inline constexpr int kMaxTruncationOrder = 30;

/**
 * L^[n](x) = c_0 + sum_{a=1}^{n} (c_{2a}/a!) :x:_a, the order-n chaos
 * partial sum of log sqrt(x) at x = |xi|^2.
 *
 * (c_{2a}/a!) :x:_a equals -Lag_a(x)/(2a) with the Laguerre polynomial
 * Lag_a; values are computed by the Laguerre recurrence, which stays
 * accurate for large x where the monomial form cancels.
 */
class TruncatedLogEvaluator {
 public:
  explicit TruncatedLogEvaluator(int n);

  int order() const { return n_; }
  double operator()(double x) const;
  /// Wick polynomials :x:_a for a = 0..n.
  const std::vector<wick::WickPolynomial>& table() const { return table_; }
  /// c_{2a}/a! for a = 0..n.
  const std::vector<double>& weights() const { return weights_; }

 private:
  int n_;
  std::vector<wick::WickPolynomial> table_;
  std::vector<double> weights_;
};

/// Throws kTooLarge for n > kMaxTruncationOrder, kInvalidArgument for x < 0.
double truncated_log(double x, int n);

/// Quadrature nodes covering the support of mu = (2/pi) phi_{z zbar}, with
/// weights mu dA, and the deterministic part D_N(phi).
struct FluctuationGrid {
  std::vector<ChartPoint> nodes;
  std::vector<double> weights;
  std::vector<double> spacing;
  double deterministic = 0.0;
};

/// Node spacing about 0.5/density correlation lengths.
FluctuationGrid make_fluctuation_grid(const Model& model, const TestFunction& phi, double density = 2.0);

/// sum_i w_i L^[n](|xi(z_i)|^2) + D_N(phi).
double truncated_statistic(const SectionSample& sample, const TruncatedLogEvaluator& eval,
                           const FluctuationGrid& grid);
/// The n = infinity surrogate: log|xi| in place of L^[n].
double log_statistic(const SectionSample& sample, const FluctuationGrid& grid);

/// Values for each order in `orders` followed by the n = infinity value.
std::vector<double> truncated_statistics(const SectionSample& sample,
                                         std::span<const TruncatedLogEvaluator> evals,
                                         const FluctuationGrid& grid);

struct TruncationRow {
  int n = 0;
  double var_truncated = 0.0;  // Var X^[n]
  double var_rest = 0.0;       // Var (X - X^[n])
  double cross_term = 0.0;     // mean of centered X^[n] (X - X^[n])
  double cross_stderr = 0.0;
  /// Var X - Var X^[n] - Var(X - X^[n]); equals 2 cross_term.
  double decomposition_gap = 0.0;
  double gap_stderr = 0.0;
  double delta = 0.0;
};

struct TruncationTable {
  std::vector<TruncationRow> rows;
  double var_full = 0.0;
  int trials = 0;
};

TruncationTable truncation_experiment(const Model& model, const TestFunction& phi,
                                      std::span<const int> orders, int trials, std::uint64_t seed,
                                      int threads = 1, double density = 2.0);

/// Rows from per-trial samples: columns[k][t] for each order, full[t] for n = infinity.
TruncationTable tabulate_truncation(std::span<const int> orders,
                                    const std::vector<std::vector<double>>& columns,
                                    std::span<const double> full);

}  // namespace zeroscope
