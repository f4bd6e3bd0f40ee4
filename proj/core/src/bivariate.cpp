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

using Eigen::MatrixXcd;

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMatchRadius = 1e-4;
constexpr double kMergeDistance = 1e-8;
constexpr double kAcceptResidual = 1e-10;
constexpr int kNewtonIterations = 60;

// In-place radix-2 transform; sign = -1 forward, +1 inverse (unscaled).
void fft(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const cplx wl = std::polar(1.0, sign * 2.0 * std::numbers::pi / static_cast<double>(len));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
}

double chordal(cplx a, cplx b) {
  if (std::isinf(std::abs(a)) || std::isinf(std::abs(b))) return 1.0;
  return std::abs(a - b) / std::sqrt((1.0 + std::norm(a)) * (1.0 + std::norm(b)));
}

// Coefficients in w of p(z, .), up to the common factor z^N when |z| > 1.
std::vector<cplx> restrict_to(const MatrixXcd& p, cplx z) {
  const Eigen::Index n = p.rows();
  std::vector<cplx> out(n);
  const bool reversed = std::abs(z) > 1.0;
  const cplx t = reversed ? 1.0 / z : z;
  for (Eigen::Index l = 0; l < n; ++l) {
    cplx acc{};
    for (Eigen::Index k = 0; k < n; ++k) {
      acc = acc * t + (reversed ? p(k, l) : p(n - 1 - k, l));
    }
    out[l] = acc;
  }
  return out;
}

// Resultant in w at z, divided by |z|^(2N^2) when |z| > 1.
cplx resultant_value(const MatrixXcd& p, const MatrixXcd& q, cplx z, double& hadamard) {
  const int n = static_cast<int>(p.rows()) - 1;
  std::vector<cplx> a = restrict_to(p, z);
  std::vector<cplx> b = restrict_to(q, z);
  double na = 0.0, nb = 0.0;
  for (int k = 0; k <= n; ++k) {
    na += std::norm(a[k]);
    nb += std::norm(b[k]);
  }
  MatrixXcd s = MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= n; ++k) {
      s(i, i + k) = a[n - k];
      s(n + i, i + k) = b[n - k];
    }
  }
  cplx det = s.partialPivLu().determinant();
  hadamard = std::pow(std::sqrt(na * nb), n);
  if (std::abs(z) > 1.0) det *= std::polar(1.0, 2.0 * n * n * std::arg(z));
  return det;
}

struct Chart {
  bool flip_z = false;
  bool flip_w = false;
};

MatrixXcd in_chart(const MatrixXcd& p, const Chart& c) {
  MatrixXcd out = p;
  if (c.flip_z) out = out.colwise().reverse().eval();
  if (c.flip_w) out = out.rowwise().reverse().eval();
  return out;
}

struct Value {
  cplx f, fz, fw;
  double mag;
};

Value eval2(const MatrixXcd& p, cplx z, cplx w) {
  const Eigen::Index n = p.rows();
  const double az = std::abs(z), aw = std::abs(w);
  Value v{{}, {}, {}, 0.0};
  for (Eigen::Index j = n - 1; j >= 0; --j) {
    cplx g{}, gw{};
    double gm = 0.0;
    for (Eigen::Index l = n - 1; l >= 0; --l) {
      gw = gw * w + g;
      g = g * w + p(j, l);
      gm = gm * aw + std::abs(p(j, l));
    }
    v.fz = v.fz * z + v.f;
    v.f = v.f * z + g;
    v.fw = v.fw * z + gw;
    v.mag = v.mag * az + gm;
  }
  return v;
}

double relative_residual(const MatrixXcd& p, const MatrixXcd& q, cplx z, cplx w) {
  const Value a = eval2(p, z, w);
  const Value b = eval2(q, z, w);
  return std::max(std::abs(a.f) / a.mag, std::abs(b.f) / b.mag);
}

struct Polished {
  bool ok = false;
  bool at_infinity = false;
  ChartPoint point;
  double residual = 0.0;
};

Polished polish(const MatrixXcd& p, const MatrixXcd& q, cplx z0, cplx w0) {
  Chart chart{std::abs(z0) > 1.0, std::abs(w0) > 1.0};
  const MatrixXcd pc = in_chart(p, chart);
  const MatrixXcd qc = in_chart(q, chart);
  cplx z = chart.flip_z ? 1.0 / z0 : z0;
  cplx w = chart.flip_w ? 1.0 / w0 : w0;
  double best = relative_residual(pc, qc, z, w);
  const double target = 4.0 * kEps * static_cast<double>(p.rows());
  for (int iter = 0; iter < kNewtonIterations && best > target; ++iter) {
    const Value a = eval2(pc, z, w);
    const Value b = eval2(qc, z, w);
    const cplx det = a.fz * b.fw - a.fw * b.fz;
    if (det == cplx{}) break;
    const cplx dz = (a.f * b.fw - a.fw * b.f) / det;
    const cplx dw = (a.fz * b.f - a.f * b.fz) / det;
    const cplx zn = z - dz, wn = w - dw;
    if (!std::isfinite(std::abs(zn)) || !std::isfinite(std::abs(wn))) break;
    const double r = relative_residual(pc, qc, zn, wn);
    if (r >= best && iter >= 5) break;
    z = zn;
    w = wn;
    best = r;
  }
  Polished out;
  out.residual = best;
  out.ok = best <= kAcceptResidual;
  if (!out.ok) return out;
  if ((chart.flip_z && z == cplx{}) || (chart.flip_w && w == cplx{})) {
    out.at_infinity = true;
    return out;
  }
  out.point = {chart.flip_z ? 1.0 / z : z, chart.flip_w ? 1.0 / w : w};
  return out;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

ZeroSet common_zeros_bivariate(const MatrixXcd& p, const MatrixXcd& q) {
  if (p.rows() != p.cols() || q.rows() != q.cols() || p.rows() != q.rows() || p.rows() < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "need two (N+1)x(N+1) coefficient matrices, N >= 1");
  }
  const int n = static_cast<int>(p.rows()) - 1;
  if (n > kMaxBivariateDegree) {
    throw Error(ErrorCode::kTooLarge, "bivariate degree above " + std::to_string(kMaxBivariateDegree));
  }
  const int d = 2 * n * n;
  const std::size_t m = next_pow2(static_cast<std::size_t>(d) + 1);

  // Evaluate on circles of radius 2^k and keep, per coefficient, the circle
  // with the smallest amplification E_r / r^j.
  int kmax = 0;
  while (std::ldexp(1.0, kmax + 1) <= 2.0 * std::sqrt(static_cast<double>(d))) ++kmax;
  std::vector<cplx> coeffs(d + 1);
  std::vector<double> best(d + 1, std::numeric_limits<double>::infinity());
  double degeneracy = 0.0;
  for (int k = -kmax; k <= kmax; ++k) {
    const double r = std::ldexp(1.0, k);
    std::vector<cplx> vals(m);
    double peak = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(i) / m);
      double hadamard = 0.0;
      vals[i] = resultant_value(p, q, z, hadamard);
      peak = std::max(peak, std::abs(vals[i]));
      if (k == 0 && hadamard > 0.0) degeneracy = std::max(degeneracy, std::abs(vals[i]) / hadamard);
    }
    if (k == 0 && degeneracy <= 1e-12) {
      throw Error(ErrorCode::kResultantDegenerate, "resultant vanishes identically");
    }
    fft(vals, -1);
    const double logr = std::log(r);
    const double dropped = r > 1.0 ? d * logr : 0.0;
    for (int j = 0; j <= d; ++j) {
      const double amp = std::log(peak) + dropped - j * logr;
      if (amp < best[j]) {
        best[j] = amp;
        coeffs[j] = vals[j] / static_cast<double>(m) * std::exp(dropped - j * logr);
      }
    }
  }

  // Typical coefficient sizes of a resultant whose roots spread over the
  // sphere.
  std::vector<double> natural(d + 1);
  for (int j = 0; j <= d; ++j) {
    natural[j] = std::exp(0.5 * (std::lgamma(d + 1.0) - std::lgamma(j + 1.0) - std::lgamma(d - j + 1.0)));
  }
  const ZeroSet zroots = roots_univariate(coeffs, natural);
  ZeroSet zs;
  zs.degree_expected = d;
  zs.at_infinity = zroots.at_infinity;
  for (const auto& zr : zroots.points) {
    const ZeroSet wp = roots_univariate(restrict_to(p, zr.z));
    const ZeroSet wq = roots_univariate(restrict_to(q, zr.z));
    std::vector<cplx> wa, wb;
    for (const auto& x : wp.points) wa.push_back(x.z);
    for (const auto& x : wq.points) wb.push_back(x.z);
    if (wp.at_infinity > 0) wa.push_back(cplx(std::numeric_limits<double>::infinity(), 0.0));
    if (wq.at_infinity > 0) wb.push_back(cplx(std::numeric_limits<double>::infinity(), 0.0));
    std::vector<std::pair<double, cplx>> candidates;
    double best_dist = std::numeric_limits<double>::infinity();
    cplx best_w{};
    bool best_inf = false;
    for (const cplx& a : wa) {
      for (const cplx& b : wb) {
        const bool inf = std::isinf(std::abs(a)) && std::isinf(std::abs(b));
        const double dist = inf ? 0.0 : chordal(a, b);
        const cplx mid = inf ? cplx{} : (std::abs(a) <= 1.0 ? 0.5 * (a + b) : 2.0 / (1.0 / a + 1.0 / b));
        if (dist < best_dist) {
          best_dist = dist;
          best_w = mid;
          best_inf = inf;
        }
        if (dist <= kMatchRadius && !inf) candidates.push_back({dist, mid});
      }
    }
    if (best_inf) {
      ++zs.at_infinity;
      continue;
    }
    if (candidates.empty()) candidates.push_back({best_dist, best_w});
    for (const auto& [dist, w] : candidates) {
      const Polished pol = polish(p, q, zr.z, w);
      if (!pol.ok) {
        ++zs.dropped;
        continue;
      }
      if (pol.at_infinity) {
        ++zs.at_infinity;
        continue;
      }
      bool duplicate = false;
      for (const auto& e : zs.points) {
        if (chordal(e.z, pol.point.z) < kMergeDistance && chordal(e.w, pol.point.w) < kMergeDistance) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      zs.max_residual = std::max(zs.max_residual, pol.residual);
      zs.points.push_back(pol.point);
    }
  }
  return zs;
}

ZeroSet common_zeros(const SectionSample& p, const SectionSample& q) {
  if (p.model().kind() != ModelKind::kProductElliptic2 || q.model().kind() != ModelKind::kProductElliptic2) {
    throw Error(ErrorCode::kDimensionMismatch, "common_zeros needs two product-model samples");
  }
  const int n = p.model().factor_size();
  if (q.model().factor_size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "samples of different degree");
  }
  MatrixXcd a(n, n), b(n, n);
  for (int j = 0; j < n; ++j) {
    for (int l = 0; l < n; ++l) {
      a(j, l) = p.scaled_polynomial()[j * n + l];
      b(j, l) = q.scaled_polynomial()[j * n + l];
    }
  }
  return common_zeros_bivariate(a, b);
}

}  // namespace zeroscope
