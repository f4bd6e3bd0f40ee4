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

#include <functional>
#include <vector>

#include "zeroscope/kernels.hpp"

namespace zeroscope::detail {

struct PolarRing {
  double radius;
  double weight;  // Gauss-Legendre weight times radius
  int angles;     // uniform angular nodes on this ring
};

/// Radial Gauss-Legendre panels on [0, outer] about a center, with node
/// spacing close to spacing(r) in both directions.
std::vector<PolarRing> polar_rings(double outer, const std::function<double(double)>& spacing);

/// Smallest correlation length over the disk of radius r about c.
double min_local_scale(const Model& model, cplx c, double r);

/// Characteristic length of a test function (for grid spacing).
double feature_scale(double support_radius, bool gaussian);

}  // namespace zeroscope::detail
