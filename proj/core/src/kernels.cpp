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

#include "zeroscope/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zeroscope/error.hpp"
#include "zeroscope/special.hpp"

namespace zeroscope {
namespace {

constexpr double kPi = std::numbers::pi;
// exp(-kMaxShift) must stay comfortably inside the normal double range.
constexpr double kMaxShift = 600.0;

double log_binom(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log f_j^2 for one factor.
double log_coeff_sq(ModelKind kind, int N, int j) {
  switch (kind) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2:
      return std::log((N + 1.0) / kPi) + log_binom(N, j);
    case ModelKind::kFlat:
      return (j + 1.0) * std::log(static_cast<double>(N)) - std::log(kPi) -
             std::lgamma(j + 1.0);
    case ModelKind::kHyperbolic:
      return std::log((N - 1.0) / kPi) + log_binom(N + j - 1.0, j);
  }
  return 0.0;
}

double default_domain_radius(ModelKind kind) {
  switch (kind) {
    case ModelKind::kFlat: return 2.0;
    case ModelKind::kHyperbolic: return 0.95;
    default: return std::numeric_limits<double>::infinity();
  }
}

// log of |z|^j that treats 0^0 as 1.
inline double log_pow(double log_r, int j) { return j == 0 ? 0.0 : j * log_r; }

double log_sum_exp(std::span<const double> v) {
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

// Normalized basis F_j(z) = f_j z^j / sqrt(K(|z|^2)) for a single factor.
std::vector<cplx> normalized_basis(const Model& model, cplx z) {
  const auto logc = model.log_coefficients();
  const double r = std::abs(z);
  const double log_r = std::log(r);
  const double theta = std::arg(z);
  std::vector<double> logs(logc.size());
  for (std::size_t j = 0; j < logc.size(); ++j) {
    logs[j] = 2.0 * (logc[j] + log_pow(log_r, static_cast<int>(j)));
  }
  const double log_norm = log_sum_exp(logs);
  std::vector<cplx> out(logc.size());
  for (std::size_t j = 0; j < logc.size(); ++j) {
    out[j] = std::polar(std::exp(0.5 * (logs[j] - log_norm)), static_cast<double>(j) * theta);
  }
  return out;
}

cplx rho_factor(ModelKind kind, int N, cplx z, cplx w) {
  const double nz = std::norm(z), nw = std::norm(w);
  const cplx zw = z * std::conj(w);
  switch (kind) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2:
      return std::exp(static_cast<double>(N) *
                      (std::log(1.0 + zw) - 0.5 * std::log1p(nz) - 0.5 * std::log1p(nw)));
    case ModelKind::kFlat:
      return std::exp(static_cast<double>(N) * (zw - 0.5 * nz - 0.5 * nw));
    case ModelKind::kHyperbolic:
      return std::exp(static_cast<double>(N) *
                      (0.5 * std::log1p(-nz) + 0.5 * std::log1p(-nw) - std::log(1.0 - zw)));
  }
  return {};
}

double distance_factor(ModelKind kind, cplx z, cplx w) {
  switch (kind) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2:
      return std::atan2(std::abs(z - w), std::abs(1.0 + z * std::conj(w)));
    case ModelKind::kFlat:
      return std::abs(z - w);
    case ModelKind::kHyperbolic: {
      const double t = std::abs(z - w) / std::abs(1.0 - z * std::conj(w));
      return std::atanh(std::min(t, 1.0 - 1e-16));
    }
  }
  return 0.0;
}

}  // namespace

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::kElliptic: return "elliptic";
    case ModelKind::kFlat: return "flat";
    case ModelKind::kHyperbolic: return "hyperbolic";
    case ModelKind::kProductElliptic2: return "product";
  }
  return "unknown";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
  if (name == "elliptic") return ModelKind::kElliptic;
  if (name == "flat") return ModelKind::kFlat;
  if (name == "hyperbolic") return ModelKind::kHyperbolic;
  if (name == "product" || name == "product-elliptic2") return ModelKind::kProductElliptic2;
  return std::nullopt;
}

int truncation_index(ModelKind kind, int degree, double radius) {
  if (kind == ModelKind::kElliptic || kind == ModelKind::kProductElliptic2) return degree + 1;
  const double x = radius * radius;
  if (kind == ModelKind::kHyperbolic && !(x < 1.0)) {
    throw Error(ErrorCode::kOutOfChart, "hyperbolic domain radius must be < 1");
  }
  const double log_x = std::log(x);
  // log of the probability mass t_j at |z| = radius.
  auto log_mass = [&](int j) {
    if (kind == ModelKind::kFlat) {
      const double lambda = degree * x;
      return -lambda + log_pow(std::log(lambda), j) - std::lgamma(j + 1.0);
    }
    return log_binom(degree + j - 1.0, j) + log_pow(log_x, j) +
           degree * std::log1p(-x);
  };
  auto ratio = [&](int j) {  // t_{j+1} / t_j, decreasing in j
    if (kind == ModelKind::kFlat) return degree * x / (j + 1.0);
    return (degree + j) * x / (j + 1.0);
  };
  const double log_tol = std::log(kTruncationTail);
  for (int j = 0; j < 50'000'000; ++j) {
    const double q = ratio(j);
    if (q < 1.0 && log_mass(j + 1) - std::log1p(-q) < log_tol) return j + 1;
  }
  throw Error(ErrorCode::kOverflow, "truncation index does not fit");
}

struct Model::Tables {
  std::vector<double> log_coeff;
  std::vector<double> scaled;
  double scale_radius = 1.0;
  double shift = 0.0;
};

Model::Model(ModelKind kind, int degree) : Model(kind, degree, default_domain_radius(kind)) {}

Model::Model(ModelKind kind, int degree, double domain_radius)
    : kind_(kind), degree_(degree), domain_radius_(domain_radius) {
  if (degree < 1 || (kind == ModelKind::kHyperbolic && degree < 2)) {
    throw Error(ErrorCode::kInvalidArgument,
                "degree must be >= 1 (>= 2 for the hyperbolic model)");
  }
  if (!(domain_radius > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "domain radius must be positive");
  }
  if (!truncated()) domain_radius_ = std::numeric_limits<double>::infinity();

  auto t = std::make_shared<Tables>();
  const int n = truncation_index(kind, degree, domain_radius_);
  t->log_coeff.resize(n);
  for (int j = 0; j < n; ++j) t->log_coeff[j] = 0.5 * log_coeff_sq(kind, degree, j);
  t->scale_radius = truncated() ? domain_radius_ : 1.0;
  const double log_s = std::log(t->scale_radius);
  double shift = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) shift = std::max(shift, t->log_coeff[j] + log_pow(log_s, j));
  if (shift - t->log_coeff[0] > kMaxShift) {
    throw Error(ErrorCode::kOverflow,
                "coefficient range exceeds double precision; reduce degree or domain radius");
  }
  t->shift = shift;
  t->scaled.resize(n);
  for (int j = 0; j < n; ++j) t->scaled[j] = std::exp(t->log_coeff[j] + log_pow(log_s, j) - shift);
  tables_ = std::move(t);
}

int Model::factor_size() const { return static_cast<int>(tables_->log_coeff.size()); }

int Model::basis_size() const {
  const int n = factor_size();
  return kind_ == ModelKind::kProductElliptic2 ? n * n : n;
}

std::span<const double> Model::log_coefficients() const { return tables_->log_coeff; }
std::span<const double> Model::scaled_coefficients() const { return tables_->scaled; }
double Model::scale_radius() const { return tables_->scale_radius; }
double Model::coefficient_shift() const { return tables_->shift; }

double Model::log_kernel_diagonal(double x) const {
  const double N = degree_;
  switch (kind_) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2:
      return std::log((N + 1.0) / kPi) + N * std::log1p(x);
    case ModelKind::kFlat:
      return std::log(N / kPi) + N * x;
    case ModelKind::kHyperbolic:
      return std::log((N - 1.0) / kPi) - N * std::log1p(-x);
  }
  return 0.0;
}

double Model::log_weight(double x) const {
  const double N = degree_;
  switch (kind_) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2:
      return -N * std::log1p(x);
    case ModelKind::kFlat:
      return -N * x;
    case ModelKind::kHyperbolic:
      return N * std::log1p(-x);
  }
  return 0.0;
}

bool Model::in_chart(const ChartPoint& p) const {
  auto finite = [](cplx c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
  if (!finite(p.z) || !finite(p.w)) return false;
  if (kind_ == ModelKind::kHyperbolic) return std::abs(p.z) < 1.0;
  return true;
}

void Model::check_in_chart(const ChartPoint& p) const {
  if (!in_chart(p)) throw Error(ErrorCode::kOutOfChart, "point outside the model chart");
}

void Model::check_in_domain(const ChartPoint& p) const {
  check_in_chart(p);
  if (truncated() && std::abs(p.z) > domain_radius_ * (1.0 + 1e-12)) {
    throw Error(ErrorCode::kOutOfChart,
                "point outside the truncation domain |z| <= " + std::to_string(domain_radius_));
  }
}

double bergman(const Model& model, const ChartPoint& p) {
  model.check_in_domain(p);
  auto factor = [&](cplx z) {
    const auto logc = model.log_coefficients();
    const double x = std::norm(z);
    const double log_r2 = std::log(x);
    std::vector<double> logs(logc.size());
    for (std::size_t j = 0; j < logc.size(); ++j) {
      logs[j] = 2.0 * logc[j] + log_pow(log_r2, static_cast<int>(j));
    }
    return std::exp(log_sum_exp(logs) + model.log_weight(x));
  };
  double b = factor(p.z);
  if (model.dimension() == 2) b *= factor(p.w);
  return b;
}

double bergman_closed_form(const Model& model) {
  const double N = model.degree();
  switch (model.kind()) {
    case ModelKind::kElliptic: return (N + 1.0) / kPi;
    case ModelKind::kFlat: return N / kPi;
    case ModelKind::kHyperbolic: return (N - 1.0) / kPi;
    case ModelKind::kProductElliptic2: return (N + 1.0) * (N + 1.0) / (kPi * kPi);
  }
  return 0.0;
}

cplx rho(const Model& model, const ChartPoint& x, const ChartPoint& y) {
  model.check_in_chart(x);
  model.check_in_chart(y);
  cplx r = rho_factor(model.kind(), model.degree(), x.z, y.z);
  if (model.dimension() == 2) r *= rho_factor(model.kind(), model.degree(), x.w, y.w);
  return r;
}

double p_mod(const Model& model, const ChartPoint& x, const ChartPoint& y) {
  return std::abs(rho(model, x, y));
}

cplx rho_basis_sum(const Model& model, const ChartPoint& x, const ChartPoint& y) {
  model.check_in_domain(x);
  model.check_in_domain(y);
  auto factor = [&](cplx a, cplx b) {
    const auto fa = normalized_basis(model, a);
    const auto fb = normalized_basis(model, b);
    cplx s{};
    for (std::size_t j = 0; j < fa.size(); ++j) s += fa[j] * std::conj(fb[j]);
    return s;
  };
  cplx r = factor(x.z, y.z);
  if (model.dimension() == 2) r *= factor(x.w, y.w);
  return r;
}

double q_trunc(const Model& model, const ChartPoint& x, const ChartPoint& y,
               std::optional<int> n) {
  if (n && *n < 0) throw Error(ErrorCode::kInvalidArgument, "truncation order must be >= 0");
  const double p = p_mod(model, x, y);
  const double c = 1.0 / (4.0 * kPi * kPi);
  return c * std::numbers::egamma * std::numbers::egamma +
         c * dilog_partial(std::min(p * p, 1.0), n);
}

double distance(const Model& model, const ChartPoint& x, const ChartPoint& y) {
  model.check_in_chart(x);
  model.check_in_chart(y);
  const double dz = distance_factor(model.kind(), x.z, y.z);
  if (model.dimension() == 1) return dz;
  const double dw = distance_factor(model.kind(), x.w, y.w);
  return std::hypot(dz, dw);
}

double omega_density(const Model& model, cplx z) {
  const double x = std::norm(z);
  switch (model.kind()) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2:
      return 1.0 / ((1.0 + x) * (1.0 + x));
    case ModelKind::kFlat:
      return 1.0;
    case ModelKind::kHyperbolic:
      return 1.0 / ((1.0 - x) * (1.0 - x));
  }
  return 0.0;
}

double p_squared(const Model& model, cplx z, cplx w) {
  const double n = model.degree();
  switch (model.kind()) {
    case ModelKind::kElliptic:
    case ModelKind::kProductElliptic2:
      return std::pow(std::norm(1.0 + z * std::conj(w)) / ((1.0 + std::norm(z)) * (1.0 + std::norm(w))), n);
    case ModelKind::kFlat:
      return std::exp(-n * std::norm(z - w));
    case ModelKind::kHyperbolic:
      return std::pow((1.0 - std::norm(z)) * (1.0 - std::norm(w)) / std::norm(1.0 - z * std::conj(w)), n);
  }
  return 0.0;
}

double scaling_deficit(const Model& model, const ChartPoint& u, const ChartPoint& v) {
  const double s = 1.0 / std::sqrt(static_cast<double>(model.degree()));
  const ChartPoint x{u.z * s, u.w * s};
  const ChartPoint y{v.z * s, v.w * s};
  double d2 = std::norm(u.z - v.z);
  if (model.dimension() == 2) d2 += std::norm(u.w - v.w);
  return std::abs(p_mod(model, x, y) - std::exp(-0.5 * d2));
}

std::vector<ChartPoint> probe_grid(const Model& model, int per_axis) {
  double limit = 2.0;
  if (model.kind() == ModelKind::kHyperbolic) limit = 0.9;
  limit = std::min(limit, model.domain_radius());
  std::vector<cplx> ring;
  ring.reserve(static_cast<std::size_t>(per_axis) * per_axis);
  for (int i = 0; i < per_axis; ++i) {
    const double r = limit * (i + 0.5) / per_axis;
    for (int k = 0; k < per_axis; ++k) {
      const double t = 2.0 * kPi * (k + 0.25 * (i % 4)) / per_axis;
      ring.push_back(std::polar(r, t));
    }
  }
  std::vector<ChartPoint> out;
  out.reserve(ring.size());
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (model.dimension() == 1) {
      out.push_back({ring[i], {}});
    } else {
      out.push_back({ring[i], ring[(7 * i + 3) % ring.size()]});
    }
  }
  return out;
}

double offdiag_decay(const Model& model, double b) {
  if (!(b > 0.0)) throw Error(ErrorCode::kInvalidArgument, "b must be positive");
  const double N = model.degree();
  const double threshold = b * std::sqrt(std::log(N) / N);
  const auto grid = probe_grid(model, model.dimension() == 1 ? 24 : 12);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (distance(model, grid[i], grid[j]) < threshold) continue;
      worst = std::max(worst, p_mod(model, grid[i], grid[j]));
    }
  }
  return worst;
}

}  // namespace zeroscope
