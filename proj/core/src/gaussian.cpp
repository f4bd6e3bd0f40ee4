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

#include "zeroscope/gaussian.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "zeroscope/error.hpp"

namespace zeroscope {

ComplexGaussianSpec::ComplexGaussianSpec(CMatrix covariance)
    : covariance_(std::move(covariance)) {
  if (covariance_.rows() == 0 || covariance_.rows() != covariance_.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "covariance must be square and non-empty");
  }
  const double asym = (covariance_ - covariance_.adjoint()).cwiseAbs().maxCoeff();
  if (asym > kHermitianTol) {
    throw Error(ErrorCode::kInvalidArgument,
                "covariance is not Hermitian (deviation " + std::to_string(asym) + ")");
  }
  const CMatrix herm = 0.5 * (covariance_ + covariance_.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> eig(herm);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  if (lambda.minCoeff() < -kPsdTol) {
    throw Error(ErrorCode::kNotPSD,
                "smallest eigenvalue " + std::to_string(lambda.minCoeff()));
  }
  const Eigen::VectorXd sqrt_lambda = lambda.cwiseMax(0.0).cwiseSqrt();
  root_ = eig.eigenvectors() * sqrt_lambda.asDiagonal() * eig.eigenvectors().adjoint();
}

ComplexGaussianSpec ComplexGaussianSpec::identity(int p) {
  return ComplexGaussianSpec(CMatrix::Identity(p, p));
}

CVector sample_correlated(const ComplexGaussianSpec& spec, const SeedPath& seed) {
  CounterRng rng(seed);
  CVector g(spec.dimension());
  for (int i = 0; i < g.size(); ++i) g[i] = rng.next_standard_complex();
  return spec.root() * g;
}

const CVector& CorrelatedSampler::next() {
  for (int i = 0; i < work_.size(); ++i) work_[i] = rng_.next_standard_complex();
  out_.noalias() = root_ * work_;
  return out_;
}

cplx isserlis_moment(std::span<const int> a, std::span<const int> b,
                     const CMatrix& covariance) {
  const auto p = static_cast<std::size_t>(covariance.rows());
  if (covariance.rows() != covariance.cols() || a.size() != p || b.size() != p) {
    throw Error(ErrorCode::kDimensionMismatch,
                "exponent vectors must match the covariance dimension");
  }
  if (std::any_of(a.begin(), a.end(), [](int v) { return v < 0; }) ||
      std::any_of(b.begin(), b.end(), [](int v) { return v < 0; })) {
    throw Error(ErrorCode::kInvalidArgument, "exponents must be nonnegative");
  }
  const int total_a = std::accumulate(a.begin(), a.end(), 0);
  const int total_b = std::accumulate(b.begin(), b.end(), 0);
  if (total_a > kMaxIsserlisOrder || total_b > kMaxIsserlisOrder) {
    throw Error(ErrorCode::kTooLarge, "isserlis_moment supports at most 8 slots per side");
  }
  if (total_a != total_b) return {0.0, 0.0};
  if (total_a == 0) return {1.0, 0.0};

  std::vector<int> holo_slots, anti_slots;
  for (std::size_t i = 0; i < p; ++i) {
    holo_slots.insert(holo_slots.end(), a[i], static_cast<int>(i));
    anti_slots.insert(anti_slots.end(), b[i], static_cast<int>(i));
  }
  std::vector<int> perm(total_a);
  std::iota(perm.begin(), perm.end(), 0);
  cplx sum{0.0, 0.0};
  do {
    cplx term{1.0, 0.0};
    for (int k = 0; k < total_a; ++k) {
      term *= covariance(holo_slots[k], anti_slots[perm[k]]);
    }
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

CMatrix random_correlation_matrix(int p, const SeedPath& seed) {
  if (p < 1) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  const auto draws = sample_standard_complex(seed, static_cast<std::size_t>(p) * (p + 1));
  CMatrix g(p, p + 1);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j <= p; ++j) g(i, j) = draws[static_cast<std::size_t>(i) * (p + 1) + j];
  }
  CMatrix c = g * g.adjoint();
  Eigen::VectorXd d = c.diagonal().real().cwiseSqrt().cwiseInverse();
  c = d.asDiagonal() * c * d.asDiagonal();
  c = (0.5 * (c + c.adjoint())).eval();
  for (int i = 0; i < p; ++i) c(i, i) = 1.0;
  return c;
}

}  // namespace zeroscope
