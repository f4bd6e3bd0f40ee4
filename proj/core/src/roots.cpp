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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "zeroscope/error.hpp"
#include "zeroscope/solver.hpp"

namespace zeroscope {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 200;
constexpr double kGoldenAngle = 2.399963229728653;

struct Evaluation {
  cplx newton;      // p / p'
  double residual;  // |p| / sum |a_k| |z|^k
};

// Horner in the chart where |z| <= 1: directly, or on the reversed
// polynomial at u = 1/z.
Evaluation evaluate(std::span<const cplx> a, cplx z) {
  const int d = static_cast<int>(a.size()) - 1;
  cplx p{}, dp{};
  double mag = 0.0;
  if (std::abs(z) <= 1.0) {
    const double r = std::abs(z);
    for (int k = d; k >= 0; --k) {
      dp = dp * z + p;
      p = p * z + a[k];
      mag = mag * r + std::abs(a[k]);
    }
    return {p / dp, std::abs(p) / mag};
  }
  const cplx u = 1.0 / z;
  const double r = std::abs(u);
  for (int k = 0; k <= d; ++k) {
    dp = dp * u + p;
    p = p * u + a[k];
    mag = mag * r + std::abs(a[k]);
  }
  return {z * p / (static_cast<double>(d) * p - u * dp), std::abs(p) / mag};
}

// Initial guesses on the circles given by the upper convex hull of
// (k, log|a_k|).
std::vector<cplx> initial_guesses(std::span<const cplx> a) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<int> hull;
  std::vector<double> h(d + 1);
  for (int k = 0; k <= d; ++k) {
    const double m = std::abs(a[k]);
    h[k] = m > 0.0 ? std::log(m) : -std::numeric_limits<double>::infinity();
  }
  for (int k = 0; k <= d; ++k) {
    if (!std::isfinite(h[k])) continue;
    while (hull.size() >= 2) {
      const int i = hull[hull.size() - 2];
      const int j = hull.back();
      if ((h[j] - h[i]) * (k - i) <= (h[k] - h[i]) * (j - i)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(k);
  }
  std::vector<cplx> z;
  z.reserve(d);
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int i = hull[s];
    const int j = hull[s + 1];
    const int count = j - i;
    const double radius = std::exp((h[i] - h[j]) / count);
    const double offset = kGoldenAngle * static_cast<double>(s + 1) + 0.4;
    for (int m = 0; m < count; ++m) {
      z.push_back(std::polar(radius, 2.0 * std::numbers::pi * m / count + offset));
    }
  }
  return z;
}

}  // namespace

ZeroSet roots_univariate(std::span<const cplx> coeffs) {
  return roots_univariate(coeffs, std::vector<double>(coeffs.size(), 1.0));
}

ZeroSet roots_univariate(std::span<const cplx> coeffs, std::span<const double> natural_scale) {
  if (natural_scale.size() != coeffs.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one scale per coefficient");
  }
  double peak = 0.0;
  for (const cplx& c : coeffs) peak = std::max(peak, std::abs(c));
  if (coeffs.empty() || !(peak > 1e-300)) {
    throw Error(ErrorCode::kDegenerateAllZero, "all coefficients vanish");
  }
  double scale = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    scale = std::max(scale, std::abs(coeffs[j]) / natural_scale[j]);
  }
  ZeroSet zs;
  int top = static_cast<int>(coeffs.size()) - 1;
  zs.degree_expected = top;
  while (std::abs(coeffs[top]) / natural_scale[top] <= 1e-13 * scale) {
    --top;
    ++zs.at_infinity;
  }
  int low = 0;
  while (coeffs[low] == cplx{}) ++low;
  for (int k = 0; k < low; ++k) zs.points.push_back({});
  const std::span<const cplx> a = coeffs.subspan(low, top - low + 1);
  const int d = top - low;
  if (d == 0) return zs;

  std::vector<cplx> z = initial_guesses(a);
  std::vector<char> done(d, 0);
  const double tol = 4.0 * (d + 1) * kEps;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    bool all_done = true;
    for (int i = 0; i < d; ++i) {
      if (done[i]) continue;
      const Evaluation e = evaluate(a, z[i]);
      if (e.residual <= tol) {
        done[i] = 1;
        continue;
      }
      all_done = false;
      if (!std::isfinite(e.newton.real()) || !std::isfinite(e.newton.imag())) {
        z[i] *= cplx(1.0 + 1e-7, 1e-7);
        continue;
      }
      cplx sum{};
      for (int j = 0; j < d; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      const cplx step = e.newton / (1.0 - e.newton * sum);
      z[i] -= step;
      if (std::abs(step) <= 1e-14 * std::abs(z[i])) done[i] = 1;
    }
    if (all_done) break;
  }
  for (int i = 0; i < d; ++i) {
    const Evaluation e = evaluate(a, z[i]);
    double residual = e.residual;
    if (residual > 0.0 && std::isfinite(e.newton.real()) && std::isfinite(e.newton.imag())) {
      const cplx polished = z[i] - e.newton;
      const double r2 = evaluate(a, polished).residual;
      if (r2 < residual) {
        z[i] = polished;
        residual = r2;
      }
    }
    zs.max_residual = std::max(zs.max_residual, residual);
    zs.points.push_back({z[i], {}});
  }
  return zs;
}

ZeroSet zeros_of(const SectionSample& sample) {
  const Model& model = sample.model();
  if (model.dimension() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "zeros_of needs a single-variable model");
  }
  const auto s = model.scaled_coefficients();
  ZeroSet raw = roots_univariate(sample.scaled_polynomial(), std::vector<double>(s.begin(), s.end()));
  const double scale = model.scale_radius();
  ZeroSet zs;
  zs.max_residual = raw.max_residual;
  zs.at_infinity = raw.at_infinity;
  zs.degree_expected = model.truncated() ? raw.degree_expected : model.degree();
  for (const auto& p : raw.points) {
    const cplx z = p.z * scale;
    if (model.truncated() && std::abs(z) > model.domain_radius()) continue;
    zs.points.push_back({z, {}});
  }
  return zs;
}

}  // namespace zeroscope
