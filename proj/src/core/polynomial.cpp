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

#include "core/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>

#include "core/error.hpp"

namespace topoforge {

Interval orthogonality_interval(PolynomialKind kind) {
  if (kind == PolynomialKind::kHermiteGaussian) {
    const double inf = std::numeric_limits<double>::infinity();
    return {-inf, inf};
  }
  return {-1.0, 1.0};
}

std::string_view family_name(PolynomialKind kind) {
  switch (kind) {
    case PolynomialKind::kLegendre: return "legendre";
    case PolynomialKind::kChebyshevFirstKind: return "chebyshev";
    case PolynomialKind::kHermiteGaussian: return "hermite";
  }
  return "unknown";
}

std::string family_label(const PolynomialFamily& family) {
  std::string label(family_name(family.kind));
  if (family.kind == PolynomialKind::kHermiteGaussian &&
      family.hermite_exponent == HermiteExponent::kPaperAsWritten) {
    label += "-x2over3";
  }
  return label;
}

std::optional<PolynomialKind> parse_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "legendre") return PolynomialKind::kLegendre;
  if (lower == "chebyshev" || lower == "chebyshev1" || lower == "chebyshev-first-kind") {
    return PolynomialKind::kChebyshevFirstKind;
  }
  if (lower == "hermite" || lower == "hermite-gaussian" || lower == "hermitegaussian") {
    return PolynomialKind::kHermiteGaussian;
  }
  return std::nullopt;
}

void eval_orders(const PolynomialFamily& family, int max_n, double x, std::span<double> out,
                 int order_limit) {
  require(max_n >= 0, ErrorCode::kInvalidInput, "polynomial order must be non-negative");
  require(max_n <= order_limit, ErrorCode::kOrderOverflow,
          "polynomial order " + std::to_string(max_n) + " exceeds limit " +
              std::to_string(order_limit));
  require(std::isfinite(x), ErrorCode::kInvalidInput, "polynomial argument must be finite");
  require(out.size() > static_cast<std::size_t>(max_n), ErrorCode::kInvalidInput,
          "output span too small for requested orders");

  switch (family.kind) {
    case PolynomialKind::kLegendre: {
      out[0] = 1.0;
      if (max_n >= 1) out[1] = x;
      for (int n = 1; n < max_n; ++n) {
        out[n + 1] = ((2.0 * n + 1.0) * x * out[n] - n * out[n - 1]) / (n + 1.0);
      }
      break;
    }
    case PolynomialKind::kChebyshevFirstKind: {
      out[0] = 1.0;
      if (max_n >= 1) out[1] = x;
      for (int n = 1; n < max_n; ++n) out[n + 1] = 2.0 * x * out[n] - out[n - 1];
      break;
    }
    case PolynomialKind::kHermiteGaussian: {
      // Physicists' H_n first, then scale each order by
      // exp(-x^2/c) / sqrt(2^n n! sqrt(pi)) with the normalizer in log space.
      out[0] = 1.0;
      if (max_n >= 1) out[1] = 2.0 * x;
      for (int n = 1; n < max_n; ++n) out[n + 1] = 2.0 * x * out[n] - 2.0 * n * out[n - 1];
      const double c = family.hermite_exponent == HermiteExponent::kStandard ? 2.0 : 3.0;
      const double gauss_log = -x * x / c;
      const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);
      for (int n = 0; n <= max_n; ++n) {
        const double log_norm = 0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0) + log_sqrt_pi);
        out[n] *= std::exp(gauss_log - log_norm);
      }
      break;
    }
  }
}

double eval_1d(const PolynomialFamily& family, int n, double x, int order_limit) {
  require(n >= 0, ErrorCode::kInvalidInput, "polynomial order must be non-negative");
  require(n <= order_limit, ErrorCode::kOrderOverflow,
          "polynomial order " + std::to_string(n) + " exceeds limit " + std::to_string(order_limit));
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  eval_orders(family, n, x, values, order_limit);
  return values.back();
}

AxisMatrix eval_axis(const PolynomialFamily& family, int max_order, std::span<const double> points,
                     int order_limit) {
  require(max_order >= 0, ErrorCode::kInvalidInput, "polynomial order must be non-negative");
  require(max_order <= order_limit, ErrorCode::kOrderOverflow,
          "polynomial order " + std::to_string(max_order) + " exceeds limit " +
              std::to_string(order_limit));
  AxisMatrix matrix(max_order, points.size());
  std::vector<double> column(static_cast<std::size_t>(max_order) + 1);
  for (std::size_t m = 0; m < points.size(); ++m) {
    eval_orders(family, max_order, points[m], column, order_limit);
    for (std::size_t n = 0; n < column.size(); ++n) matrix(n, m) = column[n];
  }
  return matrix;
}

}  // namespace topoforge
