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

#include "zeroscope/statistics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/interpolators/cardinal_quintic_b_spline.hpp>

#include "zeroscope/error.hpp"

namespace zeroscope {

struct TestFunction::Table {
  boost::math::interpolators::cardinal_quintic_b_spline<double> spline;
  double radius;
  double tail;
};

namespace {

constexpr double kGaussCutoff = 6.5;

double parse_real(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidArgument, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

cplx parse_complex(std::string_view s) {
  const std::size_t comma = s.find(',');
  if (comma == std::string_view::npos) return {parse_real(s), 0.0};
  return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
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

}  // namespace

TestFunction TestFunction::gauss_bump(cplx center, double scale) {
  if (!(scale > 0.0)) throw Error(ErrorCode::kInvalidArgument, "bump scale must be positive");
  TestFunction f;
  f.kind_ = Kind::kGaussBump;
  f.center_ = center;
  f.scale_ = scale;
  return f;
}

TestFunction TestFunction::poly_bump4(cplx center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::kInvalidArgument, "bump radius must be positive");
  TestFunction f;
  f.kind_ = Kind::kPolyBump4;
  f.center_ = center;
  f.scale_ = radius;
  return f;
}

TestFunction TestFunction::user_table(cplx center, double radius, std::vector<double> values) {
  if (!(radius > 0.0) || values.size() < 8) {
    throw Error(ErrorCode::kInvalidArgument, "user table needs radius > 0 and >= 8 samples");
  }
  TestFunction f;
  f.kind_ = Kind::kUserTable;
  f.center_ = center;
  f.scale_ = radius;
  const double h = radius / static_cast<double>(values.size() - 1);
  const double tail = values.back();
  // Even extension about r = 0 gives f'(0) = 0 and a five-point f''(0).
  const double f2_origin = (32.0 * values[1] - 2.0 * values[2] - 30.0 * values[0]) / (12.0 * h * h);
  f.table_ = std::make_shared<const Table>(Table{
      boost::math::interpolators::cardinal_quintic_b_spline<double>(values, 0.0, h, {0.0, f2_origin},
                                                                    {0.0, 0.0}),
      radius, tail});
  return f;
}

TestFunction TestFunction::constant(double value) {
  TestFunction f;
  f.kind_ = Kind::kConstant;
  f.offset_ = value;
  return f;
}

TestFunction TestFunction::affine(cplx a, double b) {
  TestFunction f;
  f.kind_ = Kind::kAffine;
  f.center_ = a;
  f.offset_ = b;
  return f;
}

bool TestFunction::radial() const {
  return kind_ == Kind::kGaussBump || kind_ == Kind::kPolyBump4 || kind_ == Kind::kUserTable;
}

double TestFunction::value(cplx z) const {
  switch (kind_) {
    case Kind::kGaussBump:
      return std::exp(-std::norm(z - center_) / (scale_ * scale_));
    case Kind::kPolyBump4: {
      const double u = std::norm(z - center_) / (scale_ * scale_);
      if (u >= 1.0) return 0.0;
      const double v = 1.0 - u;
      return v * v * v * v;
    }
    case Kind::kUserTable: {
      const double r = std::abs(z - center_);
      return r >= table_->radius ? table_->tail : table_->spline(r);
    }
    case Kind::kConstant:
      return offset_;
    case Kind::kAffine:
      return (center_ * z).real() + offset_;
  }
  return 0.0;
}

double TestFunction::value(const ChartPoint& p, int dimension) const {
  return dimension == 2 ? value(p.z) * value(p.w) : value(p.z);
}

double TestFunction::dzdzbar(cplx z) const {
  switch (kind_) {
    case Kind::kGaussBump: {
      const double s2 = scale_ * scale_;
      const double u = std::norm(z - center_) / s2;
      return (u - 1.0) * std::exp(-u) / s2;
    }
    case Kind::kPolyBump4: {
      const double r2 = std::norm(z - center_);
      const double R2 = scale_ * scale_;
      const double u = r2 / R2;
      if (u >= 1.0) return 0.0;
      const double v = 1.0 - u;
      return -4.0 / R2 * v * v * v + 12.0 * r2 / (R2 * R2) * v * v;
    }
    case Kind::kUserTable: {
      const double r = std::abs(z - center_);
      if (r >= table_->radius) return 0.0;
      const double f2 = table_->spline.double_prime(r);
      // f'/r -> f''(0) at the center.
      const double f1r = r > 1e-8 * table_->radius ? table_->spline.prime(r) / r
                                                   : table_->spline.double_prime(0.0);
      return 0.25 * (f2 + f1r);
    }
    case Kind::kConstant:
    case Kind::kAffine:
      return 0.0;
  }
  return 0.0;
}

double TestFunction::support_radius() const {
  switch (kind_) {
    case Kind::kGaussBump:
      return kGaussCutoff * scale_;
    case Kind::kPolyBump4:
    case Kind::kUserTable:
      return scale_;
    case Kind::kConstant:
    case Kind::kAffine:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

std::string TestFunction::spec() const {
  switch (kind_) {
    case Kind::kGaussBump:
      return "gauss:" + fmt(center_) + ":" + fmt(scale_);
    case Kind::kPolyBump4:
      return "poly4:" + fmt(center_) + ":" + fmt(scale_);
    case Kind::kUserTable:
      return "table:" + fmt(center_) + ":" + fmt(scale_);
    case Kind::kConstant:
      return "const:" + fmt(offset_);
    case Kind::kAffine:
      return "affine:" + fmt(center_) + ":" + fmt(offset_);
  }
  return {};
}

TestFunction parse_test_function(std::string_view text) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(':', start);
    f.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (f[0] == "gauss" && f.size() == 3) return TestFunction::gauss_bump(parse_complex(f[1]), parse_real(f[2]));
  if (f[0] == "poly4" && f.size() == 3) return TestFunction::poly_bump4(parse_complex(f[1]), parse_real(f[2]));
  if (f[0] == "const" && f.size() == 2) return TestFunction::constant(parse_real(f[1]));
  if (f[0] == "affine" && f.size() == 3) return TestFunction::affine(parse_complex(f[1]), parse_real(f[2]));
  throw Error(ErrorCode::kInvalidArgument, "unrecognized test function '" + std::string(text) + "'");
}

double smooth_statistic(const ZeroSet& zs, const TestFunction& phi, int dimension) {
  double total = 0.0;
  for (const auto& p : zs.points) total += phi.value(p, dimension);
  return total;
}

int numerical_statistic(const ZeroSet& zs, const RegionSpec& region) {
  return count_in_region(zs, region);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (values.size() < 2) {
    s.mean = values.empty() ? nan : values[0];
    s.variance = nan;
    s.central_moments.fill(nan);
    s.ks = s.ks_midpoint = s.skewness = s.kurtosis_excess = nan;
    return s;
  }
  const double t = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / t;
  std::array<double, 5> sums{};  // orders 2..6
  for (double v : values) {
    const double d = v - s.mean;
    double p = d * d;
    for (double& acc : sums) {
      acc += p;
      p *= d;
    }
  }
  const double m2 = sums[0] / t;
  s.variance = sums[0] / (t - 1.0);
  for (int k = 0; k < 4; ++k) s.central_moments[k] = sums[k + 1] / t;
  s.skewness = s.central_moments[0] / std::pow(m2, 1.5);
  s.kurtosis_excess = s.central_moments[1] / (m2 * m2) - 3.0;

  const double sd = std::sqrt(s.variance);
  std::vector<double> z(values.begin(), values.end());
  std::sort(z.begin(), z.end());
  double ks = 0.0;
  double ks_mid = 0.0;
  std::size_t i = 0;
  while (i < z.size()) {
    std::size_t j = i;
    while (j < z.size() && z[j] == z[i]) ++j;
    const double cdf = sd > 0.0 ? normal_cdf((z[i] - s.mean) / sd) : 0.5;
    ks = std::max({ks, std::abs(static_cast<double>(j) / t - cdf),
                   std::abs(cdf - static_cast<double>(i) / t)});
    ks_mid = std::max(ks_mid, std::abs(0.5 * static_cast<double>(i + j) / t - cdf));
    i = j;
  }
  s.ks = ks;
  s.ks_midpoint = ks_mid;
  return s;
}

SlopeFit variance_exponent_fit(std::span<const double> degrees, std::span<const double> variances) {
  if (degrees.size() != variances.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "degrees and variances differ in length");
  }
  if (degrees.size() < 4) throw Error(ErrorCode::kInvalidArgument, "slope fit needs at least 4 degrees");
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (!(degrees[i] > 0.0) || (i > 0 && !(degrees[i] > degrees[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument, "degrees must be positive and increasing");
    }
    if (!(variances[i] > 0.0)) {
      throw Error(ErrorCode::kNonPositiveVariance, "variance at N=" + fmt(degrees[i]) + " is not positive");
    }
  }
  const std::size_t r = degrees.size();
  std::vector<double> x(r), y(r);
  for (std::size_t i = 0; i < r; ++i) {
    x[i] = std::log(degrees[i]);
    y[i] = std::log(variances[i]);
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / r;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / r;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < r; ++i) {
    const double e = y[i] - fit.intercept - fit.slope * x[i];
    ssr += e * e;
  }
  fit.stderr_slope = std::sqrt(ssr / static_cast<double>(r - 2) / sxx);
  return fit;
}

StatisticSpec StatisticSpec::smooth(TestFunction f) {
  StatisticSpec s;
  s.kind = StatisticKind::kSmooth;
  s.phi = std::move(f);
  return s;
}

StatisticSpec StatisticSpec::numerical(RegionSpec r) {
  StatisticSpec s;
  s.kind = StatisticKind::kNumerical;
  s.region = r;
  return s;
}

std::string StatisticSpec::label() const {
  return kind == StatisticKind::kSmooth ? "smooth:" + phi.spec() : "numerical:" + format_region(region);
}

}  // namespace zeroscope
