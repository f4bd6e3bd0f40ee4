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

#include <Eigen/Dense>
#include <span>

#include "zeroscope/rng.hpp"

namespace zeroscope {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Covariance of a centred circular complex Gaussian vector,
/// C(i, j) = E[xi_i conj(xi_j)].
class ComplexGaussianSpec {
 public:
  static constexpr double kHermitianTol = 1e-12;
  static constexpr double kPsdTol = 1e-10;

  /// Throws kInvalidArgument (non-square / non-Hermitian) or kNotPSD.
  explicit ComplexGaussianSpec(CMatrix covariance);

  static ComplexGaussianSpec identity(int p);

  int dimension() const { return static_cast<int>(covariance_.rows()); }
  const CMatrix& covariance() const { return covariance_; }
  /// Hermitian square root with eigenvalues clamped at zero.
  const CMatrix& root() const { return root_; }

 private:
  CMatrix covariance_;
  CMatrix root_;
};

/// Draws root * g where g is a vector of iid N_C(0,1) taken from `seed`.
CVector sample_correlated(const ComplexGaussianSpec& spec, const SeedPath& seed);

/// Same as sample_correlated but reuses one generator for many draws.
class CorrelatedSampler {
 public:
  CorrelatedSampler(const ComplexGaussianSpec& spec, const SeedPath& seed)
      : root_(spec.root()), rng_(seed), work_(spec.dimension()) {}

  const CVector& next();

 private:
  CMatrix root_;
  CounterRng rng_;
  CVector work_;
  CVector out_;
};

/// Seeded random correlation matrix (Hermitian PSD, unit diagonal): the
/// normalized Gram matrix of p random vectors in C^{p+1}.
CMatrix random_correlation_matrix(int p, const SeedPath& seed);

/// Largest total degree per side accepted by isserlis_moment.
inline constexpr int kMaxIsserlisOrder = 8;

/**
 * Exact E[prod_i xi_i^{a_i} conj(xi_i)^{b_i}] by enumerating every bijection
 * between the xi-slots and the conj(xi)-slots; each bijection contributes
 * the product of C[slot][slot'] over its pairs.  Zero when sum(a) != sum(b).
 * Throws kTooLarge when sum(a) > 8 and kDimensionMismatch on size errors.
 */
cplx isserlis_moment(std::span<const int> a, std::span<const int> b,
                     const CMatrix& covariance);

}  // namespace zeroscope
