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

#include "zeroscope/sampler.hpp"

#include <cmath>

#include "zeroscope/error.hpp"

namespace zeroscope {
namespace {

cplx horner(std::span<const cplx> a, cplx t) {
  cplx acc{};
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
  return acc;
}

cplx horner_reversed(std::span<const cplx> a, cplx u) {
  cplx acc{};
  for (const cplx& c : a) acc = acc * u + c;
  return acc;
}

}  // namespace

SectionSample::SectionSample(Model model, std::vector<cplx> coefficients, SeedPath seed)
    : model_(std::move(model)), zeta_(std::move(coefficients)), seed_(seed) {
  if (static_cast<int>(zeta_.size()) != model_.basis_size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "coefficient count must equal the model basis size");
  }
  const auto s = model_.scaled_coefficients();
  const std::size_t n = s.size();
  scaled_.resize(zeta_.size());
  if (model_.dimension() == 1) {
    for (std::size_t j = 0; j < n; ++j) scaled_[j] = zeta_[j] * s[j];
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) scaled_[j * n + l] = zeta_[j * n + l] * s[j] * s[l];
    }
  }
}

cplx SectionSample::eval_factor(std::span<const cplx> a, cplx z, double& log_scale) const {
  log_scale += model_.coefficient_shift();
  const double r = std::abs(z);
  if (!model_.truncated() && r > 1.0) {
    const int n = static_cast<int>(a.size()) - 1;
    log_scale += n * std::log(r);
    return horner_reversed(a, 1.0 / z) * std::polar(1.0, n * std::arg(z));
  }
  return horner(a, z / model_.scale_radius());
}

cplx SectionSample::field_unchecked(const ChartPoint& p) const {
  double log_scale = 0.0;
  cplx value;
  if (model_.dimension() == 1) {
    value = eval_factor(scaled_, p.z, log_scale);
  } else {
    const std::size_t n = model_.factor_size();
    std::vector<cplx> inner(n);
    double log_w = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      log_w = 0.0;
      inner[j] = eval_factor(std::span<const cplx>(scaled_).subspan(j * n, n), p.w, log_w);
    }
    value = eval_factor(inner, p.z, log_scale);
    log_scale += log_w - 0.5 * model_.log_kernel_diagonal(std::norm(p.w));
  }
  log_scale -= 0.5 * model_.log_kernel_diagonal(std::norm(p.z));
  return value * std::exp(log_scale);
}

cplx SectionSample::eval_field(const ChartPoint& p) const {
  model_.check_in_domain(p);
  return field_unchecked(p);
}

std::vector<cplx> SectionSample::eval_field_grid(std::span<const ChartPoint> grid) const {
  for (const auto& p : grid) model_.check_in_domain(p);
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = field_unchecked(grid[i]);
  return out;
}

cplx SectionSample::eval_section(const ChartPoint& p) const {
  model_.check_in_domain(p);
  double log_k = 0.5 * model_.log_kernel_diagonal(std::norm(p.z));
  if (model_.dimension() == 2) log_k += 0.5 * model_.log_kernel_diagonal(std::norm(p.w));
  return field_unchecked(p) * std::exp(log_k);
}

SectionSample sample_section(const Model& model, const SeedPath& seed) {
  return SectionSample(model, sample_standard_complex(seed, model.basis_size()), seed);
}

}  // namespace zeroscope
