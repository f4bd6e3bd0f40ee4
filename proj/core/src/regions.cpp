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

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "zeroscope/error.hpp"
#include "zeroscope/quadrature.hpp"
#include "zeroscope/solver.hpp"

namespace zeroscope {
namespace {

bool in_disk(const Disk& d, cplx z) { return std::abs(z - d.center) < d.radius + kBoundaryGrace; }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_real(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

cplx parse_center(std::string_view s) {
  const auto parts = split(s, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() == 2) return {parse_real(parts[0]), parse_real(parts[1])};
  throw Error(ErrorCode::kInvalidArgument, "bad center '" + std::string(s) + "'");
}

double parse_positive(std::string_view s) {
  const double v = parse_real(s);
  if (!(v > 0.0)) throw Error(ErrorCode::kInvalidArgument, "expected a positive number");
  return v;
}

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fmt(cplx c) {
  if (c.imag() == 0.0) return fmt(c.real());
  return fmt(c.real()) + "," + fmt(c.imag());
}

double disk_area(const Model& model, const Disk& d, double inner = 0.0) {
  if (model.kind() == ModelKind::kHyperbolic && std::abs(d.center) + d.radius >= 1.0) {
    throw Error(ErrorCode::kOutOfChart, "region reaches the disk boundary");
  }
  const QuadratureRule radial = composite_gauss_legendre(inner, d.radius, 16, 16);
  const int angles = 256;
  double total = 0.0;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double r = radial.nodes[i];
    double ring = 0.0;
    for (int k = 0; k < angles; ++k) {
      ring += omega_density(model, d.center + std::polar(r, 2.0 * std::numbers::pi * k / angles));
    }
    total += radial.weights[i] * r * ring * (2.0 * std::numbers::pi / angles);
  }
  return total;
}

}  // namespace

bool region_contains(const RegionSpec& region, const ChartPoint& p) {
  return std::visit(
      [&](const auto& r) -> bool {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return in_disk(r, p.z);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const double d = std::abs(p.z - r.center);
          return d > r.inner - kBoundaryGrace && d < r.outer + kBoundaryGrace;
        } else if constexpr (std::is_same_v<T, Square>) {
          const cplx v = p.z - r.center;
          return std::max(std::abs(v.real()), std::abs(v.imag())) < r.half_width + kBoundaryGrace;
        } else {
          return in_disk(r.first, p.z) && in_disk(r.second, p.w);
        }
      },
      region);
}

int count_in_region(const ZeroSet& zs, const RegionSpec& region) {
  int count = 0;
  for (const auto& p : zs.points) count += region_contains(region, p) ? 1 : 0;
  return count;
}

RegionSpec parse_region(std::string_view text) {
  const auto f = split(text, ':');
  const std::string_view shape = f[0];
  if (shape == "disk" && f.size() == 3) return Disk{parse_center(f[1]), parse_positive(f[2])};
  if (shape == "annulus" && f.size() == 4) {
    const double inner = parse_positive(f[2]);
    const double outer = parse_positive(f[3]);
    if (!(inner < outer)) throw Error(ErrorCode::kInvalidArgument, "annulus needs r1 < r2");
    return Annulus{parse_center(f[1]), inner, outer};
  }
  if (shape == "square" && f.size() == 3) return Square{parse_center(f[1]), parse_positive(f[2])};
  if (shape == "pdisk" && f.size() == 5) {
    return ProductDisks{Disk{parse_center(f[1]), parse_positive(f[2])},
                        Disk{parse_center(f[3]), parse_positive(f[4])}};
  }
  throw Error(ErrorCode::kInvalidArgument, "unrecognized region '" + std::string(text) + "'");
}

std::string format_region(const RegionSpec& region) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return "disk:" + fmt(r.center) + ":" + fmt(r.radius);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          return "annulus:" + fmt(r.center) + ":" + fmt(r.inner) + ":" + fmt(r.outer);
        } else if constexpr (std::is_same_v<T, Square>) {
          return "square:" + fmt(r.center) + ":" + fmt(r.half_width);
        } else {
          return "pdisk:" + fmt(r.first.center) + ":" + fmt(r.first.radius) + ":" +
                 fmt(r.second.center) + ":" + fmt(r.second.radius);
        }
      },
      region);
}

double omega_area(const Model& model, const RegionSpec& region) {
  return std::visit(
      [&](const auto& r) -> double {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return disk_area(model, r);
        } else if constexpr (std::is_same_v<T, Annulus>) {
          return disk_area(model, Disk{r.center, r.outer}, r.inner);
        } else if constexpr (std::is_same_v<T, Square>) {
          if (model.kind() == ModelKind::kHyperbolic &&
              std::abs(r.center) + std::sqrt(2.0) * r.half_width >= 1.0) {
            throw Error(ErrorCode::kOutOfChart, "region reaches the disk boundary");
          }
          const QuadratureRule q = composite_gauss_legendre(-r.half_width, r.half_width, 16, 16);
          double total = 0.0;
          for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            for (std::size_t k = 0; k < q.nodes.size(); ++k) {
              total += q.weights[i] * q.weights[k] *
                       omega_density(model, r.center + cplx(q.nodes[i], q.nodes[k]));
            }
          }
          return total;
        } else {
          if (model.kind() != ModelKind::kProductElliptic2) {
            throw Error(ErrorCode::kDimensionMismatch, "product region on a one-variable model");
          }
          return disk_area(model, r.first) * disk_area(model, r.second);
        }
      },
      region);
}

}  // namespace zeroscope
