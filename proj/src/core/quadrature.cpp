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

#include "core/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "core/error.hpp"

namespace topoforge {

double QuadratureRule::measure() const {
  switch (kind) {
    case QuadratureKind::kGaussLegendre: return 2.0;
    case QuadratureKind::kGaussChebyshev: return std::numbers::pi;
    case QuadratureKind::kGaussHermite: return std::sqrt(std::numbers::pi);
  }
  return 0.0;
}

QuadratureRule gauss_legendre(std::size_t n) {
  require(n >= 1, ErrorCode::kInvalidInput, "quadrature needs at least one node");
  QuadratureRule rule{QuadratureKind::kGaussLegendre, std::vector<double>(n), std::vector<double>(n)};
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      derivative = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / derivative;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_chebyshev(std::size_t n) {
  require(n >= 1, ErrorCode::kInvalidInput, "quadrature needs at least one node");
  QuadratureRule rule{QuadratureKind::kGaussChebyshev, std::vector<double>(n),
                      std::vector<double>(n, std::numbers::pi / static_cast<double>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = -std::cos(std::numbers::pi * (2.0 * i + 1.0) / (2.0 * n));
  }
  return rule;
}

QuadratureRule gauss_hermite(std::size_t n) {
  require(n >= 1, ErrorCode::kInvalidInput, "quadrature needs at least one node");
  QuadratureRule rule{QuadratureKind::kGaussHermite, std::vector<double>(n), std::vector<double>(n)};
  // Newton iteration on the orthonormal Hermite recurrence, with the usual
  // asymptotic starting guesses for the largest roots.
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  const std::size_t half = (n + 1) / 2;
  double z = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    const double dn = static_cast<double>(n);
    if (i == 0) {
      z = std::sqrt(2.0 * dn + 1.0) - 1.85575 * std::pow(2.0 * dn + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(dn, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double derivative = 0.0;
    for (int iter = 0; iter < 200; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1.0)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1.0)) * p3;
      }
      derivative = std::sqrt(2.0 * dn) * p2;
      const double step = p1 / derivative;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    const double w = 2.0 / (derivative * derivative);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  // Ascending order like the other rules.
  for (std::size_t i = 0; i < n / 2; ++i) {
    std::swap(rule.nodes[i], rule.nodes[n - 1 - i]);
    std::swap(rule.weights[i], rule.weights[n - 1 - i]);
  }
  return rule;
}

std::size_t default_node_count(int max_order) {
  return 2 * static_cast<std::size_t>(max_order < 0 ? 0 : max_order) + 4;
}

QuadratureRule rule_for(const PolynomialFamily& family, std::size_t n) {
  switch (family.kind) {
    case PolynomialKind::kLegendre: return gauss_legendre(n);
    case PolynomialKind::kChebyshevFirstKind: return gauss_chebyshev(n);
    case PolynomialKind::kHermiteGaussian: return gauss_hermite(n);
  }
  fail(ErrorCode::kConfiguration, "unknown polynomial family");
}

namespace {

QuadratureKind expected_kind(PolynomialKind kind) {
  switch (kind) {
    case PolynomialKind::kLegendre: return QuadratureKind::kGaussLegendre;
    case PolynomialKind::kChebyshevFirstKind: return QuadratureKind::kGaussChebyshev;
    case PolynomialKind::kHermiteGaussian: return QuadratureKind::kGaussHermite;
  }
  return QuadratureKind::kGaussLegendre;
}

}  // namespace

double inner_product(const PolynomialFamily& family, int m, int n, const QuadratureRule& rule) {
  require(rule.kind == expected_kind(family.kind), ErrorCode::kConfiguration,
          "quadrature rule does not match the " + std::string(family_name(family.kind)) +
              " weight");
  require(rule.nodes.size() == rule.weights.size() && !rule.nodes.empty(),
          ErrorCode::kConfiguration, "malformed quadrature rule");
  require(rule.exact_degree() >= m + n, ErrorCode::kConfiguration,
          "quadrature rule with " + std::to_string(rule.size()) + " nodes is not exact for degree " +
              std::to_string(m + n));
  const int top = std::max(m, n);
  std::vector<double> values(static_cast<std::size_t>(top) + 1);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double x = rule.nodes[i];
    eval_orders(family, top, x, values);
    double w = rule.weights[i];
    if (family.kind == PolynomialKind::kHermiteGaussian) w *= std::exp(x * x);
    sum += w * values[m] * values[n];
  }
  return sum;
}

double analytic_norm_squared(const PolynomialFamily& family, int n) {
  require(n >= 0, ErrorCode::kInvalidInput, "polynomial order must be non-negative");
  switch (family.kind) {
    case PolynomialKind::kLegendre: return 2.0 / (2.0 * n + 1.0);
    case PolynomialKind::kChebyshevFirstKind:
      return n == 0 ? std::numbers::pi : std::numbers::pi / 2.0;
    case PolynomialKind::kHermiteGaussian:
      require(family.hermite_exponent == HermiteExponent::kStandard, ErrorCode::kConfiguration,
              "the exp(-x^2/3) Hermite variant has no orthonormality reference");
      return 1.0;
  }
  return 0.0;
}

double legendre_projection_error(const std::function<double(double)>& f, int terms) {
  require(terms >= 1, ErrorCode::kInvalidInput, "projection needs at least one term");
  const PolynomialFamily legendre{PolynomialKind::kLegendre};
  const QuadratureRule rule = gauss_legendre(static_cast<std::size_t>(terms) + 48);
  const int top = terms - 1;
  std::vector<double> values(static_cast<std::size_t>(terms));
  std::vector<double> coeff(static_cast<std::size_t>(terms), 0.0);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    eval_orders(legendre, top, rule.nodes[i], values);
    const double fx = f(rule.nodes[i]);
    for (int k = 0; k < terms; ++k) coeff[k] += rule.weights[i] * fx * values[k];
  }
  for (int k = 0; k < terms; ++k) coeff[k] *= (2.0 * k + 1.0) / 2.0;
  double err2 = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    eval_orders(legendre, top, rule.nodes[i], values);
    double approx = 0.0;
    for (int k = 0; k < terms; ++k) approx += coeff[k] * values[k];
    const double diff = f(rule.nodes[i]) - approx;
    err2 += rule.weights[i] * diff * diff;
  }
  return std::sqrt(err2);
}

}  // namespace topoforge
