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

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "zeroscope/gaussian.hpp"

namespace zeroscope::wick {

inline constexpr int kMaxWickOrder = 30;
/// Enumeration guard: at most this many slots per side (8!^2 matchings).
inline constexpr int kMaxDiagramOrder = 8;

/// :|xi|^{2 alpha}: = sum_k coefficients[k] |xi|^{2k}.
struct WickPolynomial {
  int alpha = 0;
  std::vector<double> coefficients;

  /// Evaluates at x = |xi|^2.
  double operator()(double x) const;
};

/// Coefficients alpha! binom(alpha,k) (-1)^{k+alpha} / k!, computed exactly
/// in integer arithmetic before conversion.  Throws kOverflow above 30.
WickPolynomial wick_polynomial(int alpha);

/// c_{2 alpha} of log|xi| = sum_alpha c_{2 alpha}/alpha! :|xi|^{2 alpha}:.
double chaos_coefficient(int alpha);

/// One pairing of the `source_slot`-th copy of xi_source with the
/// `target_slot`-th copy of conj(xi_target).  Vertex indices are 0-based.
struct DiagramEdge {
  int source = 0;
  int target = 0;
  int source_slot = 0;
  int target_slot = 0;

  friend auto operator<=>(const DiagramEdge&, const DiagramEdge&) = default;
};

/// Labelled Feynman diagram in Gamma(alphas): a perfect matching between
/// holomorphic and antiholomorphic slots with no edge joining i to conj(i).
struct FeynmanDiagram {
  std::vector<int> alphas;
  std::vector<DiagramEdge> edges;  // sorted by (source, source_slot)

  int vertex_count() const { return static_cast<int>(alphas.size()); }
  /// Completeness and non-diagonality.
  bool is_valid() const;
};

/// All of Gamma(alphas) in lexicographic order of the target-slot sequence.
/// Empty when no diagram exists.  Throws kTooLarge when sum(alphas) > 8.
std::vector<FeynmanDiagram> enumerate_diagrams(std::span<const int> alphas);
std::size_t count_diagrams(std::span<const int> alphas);

/// Product over edges (i, j) of rho(i, j); the empty diagram has value 1.
cplx diagram_value(const FeynmanDiagram& d, const CMatrix& rho);

/// E[prod_i :|xi_i|^{2 alpha_i}:] as the sum of diagram values.
double wick_moment(std::span<const int> alphas, const CMatrix& rho);

/// The same expectation by expanding each Wick polynomial into monomials
/// and summing isserlis_moment over the expansion; sum(alphas) <= 8.
double wick_moment_isserlis(std::span<const int> alphas, const CMatrix& rho);

/// Edge-multiplicity encoding of a diagram or a superposition of diagrams.
struct DirectedMultigraph {
  int vertex_count = 0;
  std::map<std::pair<int, int>, int> multiplicity;

  int edge_count() const;
  int out_degree(int v) const;
  int in_degree(int v) const;
  friend bool operator==(const DirectedMultigraph&, const DirectedMultigraph&) = default;
};

DirectedMultigraph to_multigraph(const FeynmanDiagram& d);
/// Disjoint union of edge multisets.  Throws kVertexSetMismatch.
DirectedMultigraph combine(std::span<const DirectedMultigraph> graphs);
/// Undirected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const DirectedMultigraph& g);

/// Sub-diagram on `vertices` (sorted), relabelled to 0..k-1 in that order.
/// Edges leaving the vertex set are dropped.
FeynmanDiagram restrict_diagram(const FeynmanDiagram& d, std::span<const int> vertices);

/// diagram_value(d, rho) equals the product over connected components of
/// the restricted sub-diagram values, within 1e-12.
bool value_factorization_check(const FeynmanDiagram& d, const CMatrix& rho);

/// n!! with (-1)!! = 0!! = 1.
std::int64_t double_factorial(int n);
/// E[X^p] for X ~ N_R(0,1): (p-1)!! for even p, 0 for odd p.
std::int64_t gaussian_moment(int p);

}  // namespace zeroscope::wick
