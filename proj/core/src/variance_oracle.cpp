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
#include <numbers>

#include "polar_grid.hpp"
#include "zeroscope/error.hpp"
#include "zeroscope/quadrature.hpp"
#include "zeroscope/special.hpp"
#include "zeroscope/statistics.hpp"

namespace zeroscope {
namespace detail {

namespace {
constexpr int kRadialOrder = 8;
}

std::vector<PolarRing> polar_rings(double outer, const std::function<double(double)>& spacing) {
  const QuadratureRule base = gauss_legendre(kRadialOrder);
  std::vector<PolarRing> rings;
  double a = 0.0;
  while (a < outer) {
    double h = std::min(kRadialOrder * spacing(a), outer - a);
    if (outer - a - h < 0.3 * h) h = outer - a;
    const double mid = a + 0.5 * h;
    for (int k = 0; k < kRadialOrder; ++k) {
      const double r = mid + 0.5 * h * base.nodes[k];
      const double delta = spacing(r);
      const int angles = std::max(16, static_cast<int>(std::ceil(2.0 * std::numbers::pi * r / delta)));
      rings.push_back({r, 0.5 * h * base.weights[k] * r, angles});
    }
    a += h;
  }
  return rings;
}

double min_local_scale(const Model& model, cplx c, double r) {
  const double n = std::sqrt(static_cast<double>(model.degree()));
  const double ac = std::abs(c);
  switch (model.kind()) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2: {
      const double near = std::abs(ac - r);
      return (1.0 + near * near) / n;
    }
    case ModelKind::kFlat:
      return 1.0 / n;
    case ModelKind::kHyperbolic: {
      const double far = std::min(ac + r, 1.0 - 1e-6);
      return (1.0 - far * far) / n;
    }
  }
  return 1.0 / n;
}

double feature_scale(double support_radius, bool gaussian) {
  return gaussian ? support_radius / 6.5 : support_radius / 2.0;
}

}  // namespace detail

namespace {

using detail::PolarRing;

constexpr double kRelTol = 1e-3;
constexpr int kMaxLevel = 6;
constexpr double kNegligible = 1e-18;

bool has_density(const TestFunction& phi) { return phi.radial(); }

void require_single_variable(const Model& model) {
  if (model.dimension() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "oracle needs a single-variable model");
  }
}

void require_support_in_chart(const Model& model, const TestFunction& phi) {
  if (model.kind() == ModelKind::kHyperbolic && std::abs(phi.center()) + phi.support_radius() >= 1.0) {
    throw Error(ErrorCode::kOutOfChart, "test function support leaves the disk");
  }
}

double phi_length(const TestFunction& phi) {
  return detail::feature_scale(phi.support_radius(), phi.kind() == TestFunction::Kind::kGaussBump);
}

// Ring integral of f over the polar grid about phi's center.
template <class F>
double integrate_grid(const std::vector<PolarRing>& rings, cplx center, F f) {
  double total = 0.0;
  for (const auto& ring : rings) {
    double s = 0.0;
    for (int k = 0; k < ring.angles; ++k) {
      s += f(center + std::polar(ring.radius, 2.0 * std::numbers::pi * k / ring.angles));
    }
    total += ring.weight * s * (2.0 * std::numbers::pi / ring.angles);
  }
  return total;
}

template <class F>
double integrate_smooth(const TestFunction& phi, F f) {
  double previous = 0.0;
  for (int level = 0; level <= kMaxLevel; ++level) {
    const double delta = phi_length(phi) / (4.0 * std::ldexp(1.0, level));
    const auto rings = detail::polar_rings(phi.support_radius(), [&](double) { return delta; });
    const double v = integrate_grid(rings, phi.center(), f);
    if (level > 0 && std::abs(v - previous) <= 1e-9 * std::max(std::abs(v), 1e-300)) return v;
    previous = v;
  }
  throw Error(ErrorCode::kQuadratureNotConverged, "smooth integral did not settle");
}

double kernel(double p2, std::optional<int> n) { return 0.25 * dilog_partial(std::min(p2, 1.0), n); }

// Var for phi radial about c when the model is rotation invariant about c.
double oracle_symmetric(const Model& model, const TestFunction& phi, std::optional<int> n,
                        const std::vector<PolarRing>& rings,
                        const std::function<double(double)>& spacing) {
  const cplx c = phi.center();
  const std::size_t m = rings.size();
  std::vector<double> mu(m);
  for (std::size_t a = 0; a < m; ++a) mu[a] = (2.0 / std::numbers::pi) * phi.dzdzbar(c + rings[a].radius);
  double total = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    if (mu[a] == 0.0) continue;
    const cplx za = c + rings[a].radius;
    for (std::size_t b = a; b < m; ++b) {
      if (mu[b] == 0.0) continue;
      const double rb = rings[b].radius;
      if (p_squared(model, za, c + rb) < kNegligible) {
        if (rb > rings[a].radius) break;
        continue;
      }
      const double rmax = std::max(rings[a].radius, rb);
      int steps = static_cast<int>(std::ceil(2.0 * std::numbers::pi * rmax / spacing(rmax)));
      steps = std::max(32, steps + (steps % 2));
      const double dt = 2.0 * std::numbers::pi / steps;
      double sum = kernel(p_squared(model, za, c + rb), n);
      for (int k = 1; k <= steps / 2; ++k) {
        const double p2 = p_squared(model, za, c + std::polar(rb, k * dt));
        if (p2 < kNegligible) break;
        sum += (k == steps / 2 ? 1.0 : 2.0) * kernel(p2, n);
      }
      const double inner = sum * dt;
      const double pair = 2.0 * std::numbers::pi * rings[a].weight * rings[b].weight * mu[a] * mu[b] * inner;
      total += (a == b ? 1.0 : 2.0) * pair;
    }
  }
  return total;
}

double oracle_general(const Model& model, const TestFunction& phi, std::optional<int> n,
                      const std::vector<PolarRing>& rings) {
  struct Node {
    cplx z;
    double w;
  };
  std::vector<Node> nodes;
  for (const auto& ring : rings) {
    for (int k = 0; k < ring.angles; ++k) {
      const cplx z = phi.center() + std::polar(ring.radius, 2.0 * std::numbers::pi * k / ring.angles);
      const double w = ring.weight * (2.0 * std::numbers::pi / ring.angles) * (2.0 / std::numbers::pi) *
                       phi.dzdzbar(z);
      if (w != 0.0) nodes.push_back({z, w});
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    total += nodes[i].w * nodes[i].w * kernel(1.0, n);
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      const double p2 = p_squared(model, nodes[i].z, nodes[j].z);
      if (p2 < kNegligible) continue;
      total += 2.0 * nodes[i].w * nodes[j].w * kernel(p2, n);
    }
  }
  return total;
}

}  // namespace

double local_scale(const Model& model, cplx z) {
  return 1.0 / std::sqrt(model.degree() * omega_density(model, z));
}

double deterministic_term(const Model& model, const TestFunction& phi) {
  require_single_variable(model);
  const double n = model.degree();
  if (phi.kind() == TestFunction::Kind::kConstant && model.kind() == ModelKind::kElliptic) {
    return n * phi.value(cplx{});
  }
  if (!has_density(phi)) {
    throw Error(ErrorCode::kInvalidArgument, "mean of " + phi.spec() + " diverges on this chart");
  }
  require_support_in_chart(model, phi);
  return n / std::numbers::pi *
         integrate_smooth(phi, [&](cplx z) { return phi.value(z) * omega_density(model, z); });
}

double ddbar_norm_sq(const Model& model, const TestFunction& phi) {
  require_single_variable(model);
  if (!has_density(phi)) return 0.0;
  require_support_in_chart(model, phi);
  return integrate_smooth(phi, [&](cplx z) {
    const double f = phi.dzdzbar(z);
    return 4.0 * f * f / omega_density(model, z);
  });
}

double semipositive_constant(const Model& model, const TestFunction& phi) {
  return zeta3() / (4.0 * std::numbers::pi) * ddbar_norm_sq(model, phi);
}

double variance_oracle_smooth(const Model& model, const TestFunction& phi, std::optional<int> n) {
  require_single_variable(model);
  if (n && (*n < 0)) throw Error(ErrorCode::kInvalidArgument, "truncation order must be >= 0");
  if (!has_density(phi)) return 0.0;
  require_support_in_chart(model, phi);
  const cplx c = phi.center();
  const bool symmetric = model.kind() == ModelKind::kFlat || c == cplx{};
  const double outer = phi.support_radius();
  double previous = 0.0;
  for (int level = 0; level <= kMaxLevel; ++level) {
    const double kappa = 0.5 / std::ldexp(1.0, level);
    const double feature = phi_length(phi) / 4.0;
    auto spacing = [&](double r) {
      return kappa * std::min(detail::min_local_scale(model, c, r), 2.0 * feature);
    };
    const auto rings = detail::polar_rings(outer, spacing);
    const double v = symmetric ? oracle_symmetric(model, phi, n, rings, spacing)
                               : oracle_general(model, phi, n, rings);
    if (level > 0 && std::abs(v - previous) <= kRelTol * std::abs(v)) return v;
    previous = v;
  }
  throw Error(ErrorCode::kQuadratureNotConverged, "variance quadrature did not settle");
}

}  // namespace zeroscope
