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

#include "zeroscope/wick.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "zeroscope/error.hpp"

namespace zeroscope::wick {

namespace mp = boost::multiprecision;

double WickPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

WickPolynomial wick_polynomial(int alpha) {
  if (alpha < 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be nonnegative");
  if (alpha > kMaxWickOrder) {
    throw Error(ErrorCode::kOverflow, "wick_polynomial supports alpha <= 30");
  }
  WickPolynomial out;
  out.alpha = alpha;
  out.coefficients.resize(alpha + 1);
  // alpha!/k! * binom(alpha, k) is an integer; build it from the top down.
  mp::cpp_int falling = 1;  // alpha!/k!
  for (int k = alpha; k >= 0; --k) {
    mp::cpp_int binom = 1;
    for (int t = 1; t <= k; ++t) binom = binom * (alpha - k + t) / t;
    mp::cpp_int c = falling * binom;
    if ((k + alpha) % 2 != 0) c = -c;
    out.coefficients[k] = c.convert_to<double>();
    falling *= k;  // next: alpha!/(k-1)!
  }
  return out;
}

double chaos_coefficient(int alpha) {
  if (alpha < 0) throw Error(ErrorCode::kInvalidArgument, "alpha must be nonnegative");
  if (alpha == 0) return -0.5 * std::numbers::egamma;
  const double sign = (alpha % 2 == 1) ? 1.0 : -1.0;
  return sign / (2.0 * alpha);
}

bool FeynmanDiagram::is_valid() const {
  const int p = vertex_count();
  std::vector<int> out(p, 0), in(p, 0);
  for (const auto& e : edges) {
    if (e.source < 0 || e.source >= p || e.target < 0 || e.target >= p) return false;
    if (e.source == e.target) return false;
    ++out[e.source];
    ++in[e.target];
  }
  for (int i = 0; i < p; ++i) {
    if (out[i] != alphas[i] || in[i] != alphas[i]) return false;
  }
  return true;
}

namespace {

int checked_total(std::span<const int> alphas) {
  int total = 0;
  for (int a : alphas) {
    if (a < 0) throw Error(ErrorCode::kInvalidArgument, "alphas must be nonnegative");
    total += a;
  }
  if (total > kMaxDiagramOrder) {
    throw Error(ErrorCode::kTooLarge, "diagram enumeration supports sum(alpha) <= 8");
  }
  return total;
}

struct Slot {
  int vertex;
  int index;
};

template <typename Visit>
void enumerate_matchings(std::span<const int> alphas, Visit&& visit) {
  const int total = checked_total(alphas);
  std::vector<Slot> slots;
  slots.reserve(total);
  for (int v = 0; v < static_cast<int>(alphas.size()); ++v) {
    for (int s = 0; s < alphas[v]; ++s) slots.push_back({v, s});
  }
  // Holomorphic and antiholomorphic slots share the same (vertex, index) list.
  std::vector<int> target(total, -1);
  std::vector<char> used(total, 0);
  auto recurse = [&](auto&& self, int k) -> void {
    if (k == total) {
      visit(slots, target);
      return;
    }
    for (int t = 0; t < total; ++t) {
      if (used[t] || slots[t].vertex == slots[k].vertex) continue;
      used[t] = 1;
      target[k] = t;
      self(self, k + 1);
      used[t] = 0;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::vector<FeynmanDiagram> enumerate_diagrams(std::span<const int> alphas) {
  std::vector<FeynmanDiagram> out;
  const std::vector<int> alpha_vec(alphas.begin(), alphas.end());
  enumerate_matchings(alphas, [&](const std::vector<Slot>& slots,
                                  const std::vector<int>& target) {
    FeynmanDiagram d;
    d.alphas = alpha_vec;
    d.edges.reserve(slots.size());
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const Slot& t = slots[target[k]];
      d.edges.push_back({slots[k].vertex, t.vertex, slots[k].index, t.index});
    }
    out.push_back(std::move(d));
  });
  return out;
}

std::size_t count_diagrams(std::span<const int> alphas) {
  std::size_t n = 0;
  enumerate_matchings(alphas, [&](const auto&, const auto&) { ++n; });
  return n;
}

cplx diagram_value(const FeynmanDiagram& d, const CMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() != d.vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "rho must be p x p for a diagram on p vertices");
  }
  cplx value{1.0, 0.0};
  for (const auto& e : d.edges) value *= rho(e.source, e.target);
  return value;
}

double wick_moment(std::span<const int> alphas, const CMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() != static_cast<Eigen::Index>(alphas.size())) {
    throw Error(ErrorCode::kDimensionMismatch, "rho must be p x p");
  }
  cplx sum{0.0, 0.0};
  double scale = 1.0;
  std::size_t count = 0;
  enumerate_matchings(alphas, [&](const std::vector<Slot>& slots,
                                  const std::vector<int>& target) {
    cplx term{1.0, 0.0};
    for (std::size_t k = 0; k < slots.size(); ++k) {
      term *= rho(slots[k].vertex, slots[target[k]].vertex);
    }
    sum += term;
    scale = std::max(scale, std::abs(term));
    ++count;
  });
  if (count == 0) return 0.0;
  if (std::abs(sum.imag()) > 1e-10 * scale * static_cast<double>(count)) {
    throw Error(ErrorCode::kInvalidArgument,
                "Wick moment is not real; rho is probably not Hermitian");
  }
  return sum.real();
}

int DirectedMultigraph::edge_count() const {
  int n = 0;
  for (const auto& [key, m] : multiplicity) n += m;
  return n;
}

int DirectedMultigraph::out_degree(int v) const {
  int n = 0;
  for (const auto& [key, m] : multiplicity) {
    if (key.first == v) n += m;
  }
  return n;
}

int DirectedMultigraph::in_degree(int v) const {
  int n = 0;
  for (const auto& [key, m] : multiplicity) {
    if (key.second == v) n += m;
  }
  return n;
}

DirectedMultigraph to_multigraph(const FeynmanDiagram& d) {
  DirectedMultigraph g;
  g.vertex_count = d.vertex_count();
  for (const auto& e : d.edges) ++g.multiplicity[{e.source, e.target}];
  return g;
}

DirectedMultigraph combine(std::span<const DirectedMultigraph> graphs) {
  DirectedMultigraph out;
  if (graphs.empty()) return out;
  out.vertex_count = graphs.front().vertex_count;
  for (const auto& g : graphs) {
    if (g.vertex_count != out.vertex_count) {
      throw Error(ErrorCode::kVertexSetMismatch, "combined graphs must share a vertex set");
    }
    for (const auto& [key, m] : g.multiplicity) out.multiplicity[key] += m;
  }
  return out;
}

std::vector<std::vector<int>> connected_components(const DirectedMultigraph& g) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& [key, m] : g.multiplicity) {
    const int a = find(key.first), b = find(key.second);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < g.vertex_count; ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return out;
}

FeynmanDiagram restrict_diagram(const FeynmanDiagram& d, std::span<const int> vertices) {
  std::vector<int> relabel(d.vertex_count(), -1);
  FeynmanDiagram out;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    relabel.at(vertices[k]) = static_cast<int>(k);
    out.alphas.push_back(d.alphas.at(vertices[k]));
  }
  for (const auto& e : d.edges) {
    if (relabel[e.source] < 0 || relabel[e.target] < 0) continue;
    out.edges.push_back({relabel[e.source], relabel[e.target], e.source_slot, e.target_slot});
  }
  return out;
}

bool value_factorization_check(const FeynmanDiagram& d, const CMatrix& rho) {
  const cplx whole = diagram_value(d, rho);
  cplx product{1.0, 0.0};
  for (const auto& comp : connected_components(to_multigraph(d))) {
    const FeynmanDiagram sub = restrict_diagram(d, comp);
    CMatrix sub_rho(comp.size(), comp.size());
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = 0; j < comp.size(); ++j) sub_rho(i, j) = rho(comp[i], comp[j]);
    }
    product *= diagram_value(sub, sub_rho);
  }
  return std::abs(whole - product) <= 1e-12;
}

std::int64_t double_factorial(int n) {
  if (n < -1) throw Error(ErrorCode::kInvalidArgument, "double_factorial needs n >= -1");
  if (n > 33) throw Error(ErrorCode::kOverflow, "double_factorial overflows above 33");
  std::int64_t r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

std::int64_t gaussian_moment(int p) {
  if (p < 0) throw Error(ErrorCode::kInvalidArgument, "moment order must be nonnegative");
  return (p % 2 == 1) ? 0 : double_factorial(p - 1);
}

double wick_moment_isserlis(std::span<const int> alphas, const CMatrix& rho) {
  const std::size_t p = alphas.size();
  if (rho.rows() != rho.cols() || rho.rows() != static_cast<Eigen::Index>(p)) {
    throw Error(ErrorCode::kDimensionMismatch, "rho must be p x p");
  }
  if (std::accumulate(alphas.begin(), alphas.end(), 0) > kMaxIsserlisOrder) {
    throw Error(ErrorCode::kTooLarge, "expansion limited to total degree 8");
  }
  std::vector<WickPolynomial> polys;
  for (int a : alphas) polys.push_back(wick_polynomial(a));
  std::vector<int> k(p, 0);
  double total = 0.0;
  while (true) {
    double coeff = 1.0;
    for (std::size_t i = 0; i < p; ++i) coeff *= polys[i].coefficients[k[i]];
    if (coeff != 0.0) total += coeff * isserlis_moment(k, k, rho).real();
    std::size_t i = 0;
    while (i < p && k[i] == alphas[i]) k[i++] = 0;
    if (i == p) break;
    ++k[i];
  }
  return total;
}

}  // namespace zeroscope::wick
