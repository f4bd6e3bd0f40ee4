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

#include <span>
#include <vector>

#include "zeroscope/kernels.hpp"
#include "zeroscope/rng.hpp"

namespace zeroscope {

/**
 * One draw s^N = sum_j zeta_j S_j^N with iid N_C(0,1) coefficients.
 *
 * For the product geometry the coefficients are stored row-major with
 * zeta[j * n + l] multiplying z^j w^l, n = model.factor_size().
 *
 * Evaluation uses Horner on the rescaled coefficients
 * zeta_j * model.scaled_coefficients()[j] in t = z / R; on the elliptic
 * chart |z| > 1 is evaluated in the reversed polynomial at 1/z, so no
 * intermediate overflows.
 */
class SectionSample {
 public:
  SectionSample(Model model, std::vector<cplx> coefficients, SeedPath seed = {});

  const Model& model() const { return model_; }
  const std::vector<cplx>& coefficients() const { return zeta_; }
  const SeedPath& seed_path() const { return seed_; }

  /// sum_j zeta_j f_j(z) in the chart trivialization.  May overflow to inf
  /// for large degrees away from the origin; prefer eval_field.
  cplx eval_section(const ChartPoint& p) const;
  /// The unit-variance field xi(p) = s(p) / sqrt(sum_j |f_j(p)|^2).
  cplx eval_field(const ChartPoint& p) const;
  std::vector<cplx> eval_field_grid(std::span<const ChartPoint> grid) const;

  /// Chart polynomial coefficients in t = z / model.scale_radius(), divided
  /// by the common factor exp(model.coefficient_shift()) (per variable).
  /// Same layout as coefficients().
  const std::vector<cplx>& scaled_polynomial() const { return scaled_; }

 private:
  cplx field_unchecked(const ChartPoint& p) const;
  // Returns the Horner value and adds the log of the dropped scale factor.
  cplx eval_factor(std::span<const cplx> a, cplx z, double& log_scale) const;

  Model model_;
  std::vector<cplx> zeta_;
  std::vector<cplx> scaled_;  // zeta times scaled coefficient magnitudes
  SeedPath seed_;
};

/// Draws d_N (or truncated J(N)) iid coefficients from `seed`.
SectionSample sample_section(const Model& model, const SeedPath& seed);

}  // namespace zeroscope
