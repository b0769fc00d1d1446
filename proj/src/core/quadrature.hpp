// Copyright 2026 The Topoforge Authors
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

#include <cstddef>
#include <functional>
#include <vector>

#include "core/polynomial.hpp"

namespace topoforge {

/// Gauss rule for one of the classical weights:
///   kGaussLegendre  w(x) = 1 on [-1, 1]
///   kGaussChebyshev w(x) = 1/sqrt(1 - x^2) on [-1, 1]
///   kGaussHermite   w(x) = exp(-x^2) on the real line
enum class QuadratureKind { kGaussLegendre, kGaussChebyshev, kGaussHermite };

struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::kGaussLegendre;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  /// Highest polynomial degree (times the weight) integrated exactly.
  int exact_degree() const { return 2 * static_cast<int>(nodes.size()) - 1; }
  /// Integral of the weight function itself: 2, pi, sqrt(pi).
  double measure() const;
};

QuadratureRule gauss_legendre(std::size_t n);
QuadratureRule gauss_chebyshev(std::size_t n);
QuadratureRule gauss_hermite(std::size_t n);

/// Node count that integrates products up to degree 2 * max_order exactly.
std::size_t default_node_count(int max_order);

/// The rule that matches a family's orthogonality weight.
QuadratureRule rule_for(const PolynomialFamily& family, std::size_t n);

/// Weighted inner product <phi_m, phi_n>. Hermite functions carry their own
/// Gaussian, so the rule's exp(-x^2) is divided back out before summing.
/// Throws kConfiguration if the rule does not match the family or is not exact
/// for degree m + n.
double inner_product(const PolynomialFamily& family, int m, int n, const QuadratureRule& rule);

/// Analytic squared norm: 2/(2n+1), pi or pi/2, and 1 for standard Hermite
/// functions. Throws kConfiguration for the non-orthogonal Hermite variant.
double analytic_norm_squared(const PolynomialFamily& family, int n);

/// L2 error on [-1, 1] of the projection of f onto Legendre orders 0..terms-1.
double legendre_projection_error(const std::function<double(double)>& f, int terms);

}  // namespace topoforge
