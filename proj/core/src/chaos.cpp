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

#include "zeroscope/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polar_grid.hpp"
#include "zeroscope/error.hpp"

namespace zeroscope {
namespace {

constexpr double kNearZero = 1e-16;  // |xi|^2 below this means a node sits on a zero

double centered_mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

TruncatedLogEvaluator::TruncatedLogEvaluator(int n) : n_(n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "truncation order must be >= 0");
  if (n > kMaxTruncationOrder) {
    throw Error(ErrorCode::kTooLarge, "truncation order above " + std::to_string(kMaxTruncationOrder));
  }
  double factorial = 1.0;
  for (int a = 0; a <= n; ++a) {
    if (a > 0) factorial *= a;
    table_.push_back(wick::wick_polynomial(a));
    weights_.push_back(wick::chaos_coefficient(a) / factorial);
  }
}

double TruncatedLogEvaluator::operator()(double x) const {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::kInvalidArgument, "truncated log needs a finite x >= 0");
  }
  double total = weights_[0];
  double prev = 1.0;      // Lag_0
  double cur = 1.0 - x;   // Lag_1
  for (int a = 1; a <= n_; ++a) {
    total -= cur / (2.0 * a);
    const double next = ((2.0 * a + 1.0 - x) * cur - a * prev) / (a + 1.0);
    prev = cur;
    cur = next;
  }
  if (!std::isfinite(total)) throw Error(ErrorCode::kOverflow, "truncated log overflowed");
  return total;
}

double truncated_log(double x, int n) { return TruncatedLogEvaluator(n)(x); }

FluctuationGrid make_fluctuation_grid(const Model& model, const TestFunction& phi, double density) {
  if (model.dimension() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "fluctuation grid needs a single-variable model");
  }
  if (!(density > 0.0)) throw Error(ErrorCode::kInvalidArgument, "grid density must be positive");
  FluctuationGrid grid;
  grid.deterministic = deterministic_term(model, phi);
  if (!phi.radial()) return grid;
  const cplx c = phi.center();
  const double outer = phi.support_radius();
  if (!model.in_chart({c + outer, {}}) || std::abs(c) + outer > model.domain_radius()) {
    throw Error(ErrorCode::kOutOfChart, "test function support leaves the sampled domain");
  }
  const double feature =
      detail::feature_scale(outer, phi.kind() == TestFunction::Kind::kGaussBump) / 2.0;
  auto spacing = [&](double r) {
    return 0.5 / density * std::min(detail::min_local_scale(model, c, r), feature);
  };
  for (const auto& ring : detail::polar_rings(outer, spacing)) {
    const double da = 2.0 * std::numbers::pi / ring.angles;
    for (int k = 0; k < ring.angles; ++k) {
      const cplx z = c + std::polar(ring.radius, k * da);
      const double w = ring.weight * da * (2.0 / std::numbers::pi) * phi.dzdzbar(z);
      if (w == 0.0) continue;
      grid.nodes.push_back({z, {}});
      grid.weights.push_back(w);
      grid.spacing.push_back(ring.radius * da);
    }
  }
  return grid;
}

std::vector<double> truncated_statistics(const SectionSample& sample,
                                         std::span<const TruncatedLogEvaluator> evals,
                                         const FluctuationGrid& grid) {
  const std::vector<cplx> xi = sample.eval_field_grid(grid.nodes);
  std::vector<double> out(evals.size() + 1, grid.deterministic);
  for (std::size_t i = 0; i < xi.size(); ++i) {
    double x = std::norm(xi[i]);
    if (x < kNearZero) {
      const ChartPoint moved{grid.nodes[i].z + grid.spacing[i], {}};
      x = std::norm(sample.eval_field(moved));
    }
    for (std::size_t k = 0; k < evals.size(); ++k) out[k] += grid.weights[i] * evals[k](x);
    out.back() += grid.weights[i] * 0.5 * std::log(x);
  }
  return out;
}

double truncated_statistic(const SectionSample& sample, const TruncatedLogEvaluator& eval,
                           const FluctuationGrid& grid) {
  return truncated_statistics(sample, std::span<const TruncatedLogEvaluator>(&eval, 1), grid)[0];
}

double log_statistic(const SectionSample& sample, const FluctuationGrid& grid) {
  return truncated_statistics(sample, {}, grid).back();
}

TruncationTable tabulate_truncation(std::span<const int> orders,
                                    const std::vector<std::vector<double>>& columns,
                                    std::span<const double> full) {
  if (columns.size() != orders.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one column per truncation order");
  }
  const std::size_t t = full.size();
  if (t < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two trials");
  TruncationTable table;
  table.trials = static_cast<int>(t);
  const double tt = static_cast<double>(t);
  const double mx = centered_mean(full);
  std::vector<double> xc(t);
  for (std::size_t i = 0; i < t; ++i) xc[i] = full[i] - mx;
  double vx = 0.0;
  for (double v : xc) vx += v * v;
  vx /= tt - 1.0;
  table.var_full = vx;
  for (std::size_t k = 0; k < orders.size(); ++k) {
    const auto& col = columns[k];
    if (col.size() != t) throw Error(ErrorCode::kDimensionMismatch, "column length differs");
    const double mn = centered_mean(col);
    TruncationRow row;
    row.n = orders[k];
    double vn = 0.0, vr = 0.0, cross = 0.0, cov = 0.0;
    std::vector<double> prod(t);
    for (std::size_t i = 0; i < t; ++i) {
      const double a = col[i] - mn;
      const double rest = xc[i] - a;
      vn += a * a;
      vr += rest * rest;
      cov += a * xc[i];
      prod[i] = a * rest;
      cross += prod[i];
    }
    row.var_truncated = vn / (tt - 1.0);
    row.var_rest = vr / (tt - 1.0);
    row.cross_term = cross / tt;
    double sp = 0.0;
    for (double p : prod) sp += (p - row.cross_term) * (p - row.cross_term);
    row.cross_stderr = std::sqrt(sp / (tt - 1.0) / tt);
    row.decomposition_gap = vx - row.var_truncated - row.var_rest;
    row.gap_stderr = 2.0 * row.cross_stderr * tt / (tt - 1.0);
    const double sn = std::sqrt(row.var_truncated);
    const double sx = std::sqrt(vx);
    row.delta = sn > 0.0 && sx > 0.0 ? 2.0 - 2.0 * (cov / (tt - 1.0)) / (sn * sx) : 0.0;
    table.rows.push_back(row);
  }
  return table;
}

TruncationTable truncation_experiment(const Model& model, const TestFunction& phi,
                                      std::span<const int> orders, int trials, std::uint64_t seed,
                                      int threads, double density) {
  if (trials < 2) throw Error(ErrorCode::kInvalidArgument, "need at least two trials");
  const FluctuationGrid grid = make_fluctuation_grid(model, phi, density);
  std::vector<TruncatedLogEvaluator> evals;
  for (int n : orders) evals.emplace_back(n);
  std::vector<std::vector<double>> per_trial(trials);
  parallel_for(per_trial.size(), threads, [&](std::size_t t) {
    const SectionSample s = sample_section(model, SeedPath{seed, t, 0});
    per_trial[t] = truncated_statistics(s, evals, grid);
  });
  std::vector<std::vector<double>> columns(orders.size(), std::vector<double>(trials));
  std::vector<double> full(trials);
  for (int t = 0; t < trials; ++t) {
    for (std::size_t k = 0; k < orders.size(); ++k) columns[k][t] = per_trial[t][k];
    full[t] = per_trial[t].back();
  }
  return tabulate_truncation(orders, columns, full);
}

}  // namespace zeroscope
