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

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace zeroscope {

using cplx = std::complex<double>;

enum class ModelKind { kElliptic, kFlat, kHyperbolic, kProductElliptic2 };

std::string_view to_string(ModelKind kind);
/// Accepts "elliptic", "flat", "hyperbolic", "product".
std::optional<ModelKind> parse_model_kind(std::string_view name);

/// Affine chart coordinates; `w` is only used by the product geometry.
struct ChartPoint {
  cplx z{};
  cplx w{};
};

/// Tail mass allowed beyond the truncation index of an infinite basis.
inline constexpr double kTruncationTail = 1e-14;

/**
 * One Gaussian ensemble at a fixed degree N: its chart, its orthonormal
 * monomial basis S_j = f_j z^j (f_j > 0) and the metric weight h.
 *
 *   elliptic    f_j^2 = (N+1)/pi binom(N, j),       h = 1/(1+|z|^2), j <= N
 *   flat        f_j^2 = N^{j+1}/(pi j!),            h = exp(-|z|^2)
 *   hyperbolic  f_j^2 = (N-1)/pi binom(N+j-1, j),   h = 1-|z|^2, |z| < 1
 *   product     tensor square of the elliptic basis on CP1 x CP1
 *
 * Flat and hyperbolic bases are infinite; they are cut at the smallest J
 * whose tail mass at |z| = domain_radius is below kTruncationTail.
 * Copies share the immutable coefficient tables.
 */
class Model {
 public:
  Model(ModelKind kind, int degree);
  Model(ModelKind kind, int degree, double domain_radius);

  ModelKind kind() const { return kind_; }
  int degree() const { return degree_; }
  /// Complex dimension m of the manifold.
  int dimension() const { return kind_ == ModelKind::kProductElliptic2 ? 2 : 1; }
  /// Radius of the chart region where the (truncated) basis is accurate.
  double domain_radius() const { return domain_radius_; }
  bool truncated() const {
    return kind_ == ModelKind::kFlat || kind_ == ModelKind::kHyperbolic;
  }

  /// Monomials per chart variable (N+1 or J(N)).
  int factor_size() const;
  /// d_N, or the truncated count.
  int basis_size() const;

  /// log f_j for the single-variable factor.
  std::span<const double> log_coefficients() const;
  /// Scaled magnitudes exp(log f_j + j log R - shift), all <= 1, used with
  /// the rescaled variable t = z / R where R = scale_radius().
  std::span<const double> scaled_coefficients() const;
  double scale_radius() const;
  double coefficient_shift() const;

  /// log sum_j f_j^2 x^j in closed form, x = |z|^2 (single factor).
  double log_kernel_diagonal(double x) const;
  /// log h(x)^N, x = |z|^2 (single factor).
  double log_weight(double x) const;

  bool in_chart(const ChartPoint& p) const;
  /// Throws kOutOfChart.
  void check_in_chart(const ChartPoint& p) const;
  /// Like check_in_chart, and additionally requires the truncated basis to be
  /// accurate at p (|z| <= domain_radius).
  void check_in_domain(const ChartPoint& p) const;

 private:
  struct Tables;
  ModelKind kind_;
  int degree_;
  double domain_radius_;
  std::shared_ptr<const Tables> tables_;
};

/// Smallest J with Poisson / negative-binomial tail below kTruncationTail at
/// radius r.  Elliptic and product return N + 1.
int truncation_index(ModelKind kind, int degree, double radius);

/// Basis sum B_N(p) = sum_j |S_j(p)|^2_{h_N}, evaluated in log space.
double bergman(const Model& model, const ChartPoint& p);
/// The constant value of B_N for these homogeneous models.
double bergman_closed_form(const Model& model);

/// Normalized Szego kernel at angular coordinate zero (closed form).
cplx rho(const Model& model, const ChartPoint& x, const ChartPoint& y);
/// |rho|.
double p_mod(const Model& model, const ChartPoint& x, const ChartPoint& y);
/// sum_j F_j(x) conj(F_j(y)) over the (truncated) basis; independent of the
/// closed form.
cplx rho_basis_sum(const Model& model, const ChartPoint& x, const ChartPoint& y);

/// gamma^2/(4 pi^2) + (1/(4 pi^2)) sum_{a=1}^{n} P^{2a}/a^2, n = nullopt for infinity.
double q_trunc(const Model& model, const ChartPoint& x, const ChartPoint& y,
               std::optional<int> n);

/// Geodesic distance of the model metric (Fubini-Study, Euclidean, Poincare;
/// product metric for the product geometry).
double distance(const Model& model, const ChartPoint& x, const ChartPoint& y);

/// |P_N(u/sqrt N, v/sqrt N) - exp(-|u-v|^2/2)| at the chart origin.
double scaling_deficit(const Model& model, const ChartPoint& u, const ChartPoint& v);

/// Density of the model (1,1)-form omega against dA in the chart (one
/// factor): 1/(1+|z|^2)^2, 1 or 1/(1-|z|^2)^2.
double omega_density(const Model& model, cplx z);

/// P_N(x, y)^2 for one-variable models, without complex powers.
double p_squared(const Model& model, cplx z, cplx w);

/// Fixed probe set used by offdiag_decay (and the kernel probe tests).
std::vector<ChartPoint> probe_grid(const Model& model, int per_axis);

/// Max P_N(x, y) over probe pairs with distance >= b sqrt(log N / N); 0 if
/// no pair qualifies.
double offdiag_decay(const Model& model, double b);

}  // namespace zeroscope
