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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace topoforge {

enum class PolynomialKind { kLegendre, kChebyshevFirstKind, kHermiteGaussian };

/// Gaussian factor of the Hermite functions. kStandard uses exp(-x^2/2), which
/// makes the functions orthonormal on the real line; kPaperAsWritten uses
/// exp(-x^2/3) and is not orthogonal.
enum class HermiteExponent { kStandard, kPaperAsWritten };

struct PolynomialFamily {
  PolynomialKind kind = PolynomialKind::kLegendre;
  HermiteExponent hermite_exponent = HermiteExponent::kStandard;

  bool operator==(const PolynomialFamily&) const = default;
};

struct Interval {
  double lo;
  double hi;
};

inline constexpr int kDefaultMaxOrder = 64;

/// Natural orthogonality interval: [-1, 1], or the whole line for Hermite.
Interval orthogonality_interval(PolynomialKind kind);

std::string_view family_name(PolynomialKind kind);
std::string family_label(const PolynomialFamily& family);
/// Accepts "legendre", "chebyshev", "hermite" (case-insensitive) and a few aliases.
std::optional<PolynomialKind> parse_family(std::string_view name);

/// Writes phi_0(x) .. phi_{max_n}(x) into out[0..max_n] by three-term recurrence.
/// Every single-order and axis evaluation goes through here, so values are
/// bitwise identical regardless of the entry point.
void eval_orders(const PolynomialFamily& family, int max_n, double x, std::span<double> out,
                 int order_limit = kDefaultMaxOrder);

/// phi_n(x). Throws kOrderOverflow when n > order_limit, kInvalidInput for
/// negative n or non-finite x.
double eval_1d(const PolynomialFamily& family, int n, double x, int order_limit = kDefaultMaxOrder);

/// Values of orders 0..max_order at a set of points, row-major by order.
class AxisMatrix {
 public:
  AxisMatrix() = default;
  AxisMatrix(int max_order, std::size_t points)
      : orders_(max_order + 1), points_(points), values_(orders_ * points, 0.0) {}

  std::size_t orders() const { return orders_; }
  std::size_t points() const { return points_; }
  double operator()(std::size_t n, std::size_t m) const { return values_[n * points_ + m]; }
  double& operator()(std::size_t n, std::size_t m) { return values_[n * points_ + m]; }
  std::span<const double> row(std::size_t n) const { return {values_.data() + n * points_, points_}; }

 private:
  std::size_t orders_ = 0;
  std::size_t points_ = 0;
  std::vector<double> values_;
};

AxisMatrix eval_axis(const PolynomialFamily& family, int max_order, std::span<const double> points,
                     int order_limit = kDefaultMaxOrder);

}  // namespace topoforge
