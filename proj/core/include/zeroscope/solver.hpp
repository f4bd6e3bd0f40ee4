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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "zeroscope/kernels.hpp"
#include "zeroscope/sampler.hpp"

namespace zeroscope {

/**
 * Zeros of one polynomial (points[i].z) or common zeros of two bivariate
 * polynomials (points[i].z, points[i].w).
 *
 * max_residual is the largest relative backward error |p| / sum |a_j||z|^j
 * over the returned points, measured in the better conditioned chart.
 */
struct ZeroSet {
  std::vector<ChartPoint> points;
  double max_residual = 0.0;
  int degree_expected = 0;
  /// Roots lost to vanishing leading coefficients.
  int at_infinity = 0;
  /// Bivariate candidates whose Newton polish did not converge.
  int dropped = 0;

  int size() const { return static_cast<int>(points.size()); }
};

/// Coefficients a_0..a_d (ascending).  Throws kDegenerateAllZero.
ZeroSet roots_univariate(std::span<const cplx> coeffs);
/// As above, with the at-infinity test |a_d| <= 1e-13 relative applied to
/// a_j / natural_scale[j] (the typical size of each coefficient).
ZeroSet roots_univariate(std::span<const cplx> coeffs, std::span<const double> natural_scale);

/// Matrix entry (j, l) multiplies z^j w^l; both inputs (N+1) x (N+1), N <= 10.
/// Throws kResultantDegenerate, kDimensionMismatch, kTooLarge.
ZeroSet common_zeros_bivariate(const Eigen::MatrixXcd& p, const Eigen::MatrixXcd& q);

inline constexpr int kMaxBivariateDegree = 10;

/// Zeros of a single-variable sample, in chart coordinates.  Truncated models
/// keep only zeros with |z| <= domain_radius.
ZeroSet zeros_of(const SectionSample& sample);
/// Common zeros of two product-model samples.
ZeroSet common_zeros(const SectionSample& p, const SectionSample& q);

struct Disk {
  cplx center{};
  double radius = 1.0;
};
struct Annulus {
  cplx center{};
  double inner = 0.5;
  double outer = 1.0;
};
struct Square {
  cplx center{};
  double half_width = 1.0;
};
struct ProductDisks {
  Disk first;
  Disk second;
};
using RegionSpec = std::variant<Disk, Annulus, Square, ProductDisks>;

inline constexpr double kBoundaryGrace = 1e-10;

bool region_contains(const RegionSpec& region, const ChartPoint& p);
int count_in_region(const ZeroSet& zs, const RegionSpec& region);

/// "disk:c:r", "annulus:c:r1:r2", "square:c:h", "pdisk:c1:r1:c2:r2", where a
/// complex center is "x" or "x,y".  Throws kInvalidArgument.
RegionSpec parse_region(std::string_view text);
std::string format_region(const RegionSpec& region);

/// Integral of the model's (1,1)-form omega over the region; with density
/// 1/(1+|z|^2)^2, 1 or 1/(1-|z|^2)^2.  Product disks give the product of the
/// two factor areas.
double omega_area(const Model& model, const RegionSpec& region);

}  // namespace zeroscope
