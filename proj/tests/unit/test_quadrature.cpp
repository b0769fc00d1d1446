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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/error.hpp"
#include "core/quadrature.hpp"

using namespace topoforge;

namespace {

const PolynomialFamily kLegendre{PolynomialKind::kLegendre};
const PolynomialFamily kChebyshev{PolynomialKind::kChebyshevFirstKind};
const PolynomialFamily kHermite{PolynomialKind::kHermiteGaussian};

}  // namespace

TEST_CASE("rules integrate monomials exactly") {
  // int_{-1}^{1} x^k dx, int x^k / sqrt(1-x^2) dx, int x^k e^{-x^2} dx for even k
  const auto gl = gauss_legendre(8);
  const auto gc = gauss_chebyshev(8);
  const auto gh = gauss_hermite(8);
  double double_factorial = 1.0;  // (k-1)!!
  for (int k = 0; k <= 14; k += 2) {
    if (k > 0) double_factorial *= (k - 1);
    double sl = 0, sc = 0, sh = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      sl += gl.weights[i] * std::pow(gl.nodes[i], k);
      sc += gc.weights[i] * std::pow(gc.nodes[i], k);
      sh += gh.weights[i] * std::pow(gh.nodes[i], k);
    }
    CHECK(std::abs(sl - 2.0 / (k + 1)) < 1e-13);
    // int x^k / sqrt(1-x^2) = pi (k-1)!! / k!!
    double ratio = 1.0;
    for (int j = 1; j <= k; j += 2) ratio *= static_cast<double>(j) / (j + 1);
    CHECK(std::abs(sc - std::numbers::pi * ratio) < 1e-13);
    CHECK(std::abs(sh - std::sqrt(std::numbers::pi) * double_factorial / std::pow(2.0, k / 2)) < 1e-10);
  }
  CHECK(gl.exact_degree() == 15);
}

TEST_CASE("nodes ascend and weights are positive") {
  for (const auto& rule : {gauss_legendre(16), gauss_chebyshev(16), gauss_hermite(40)}) {
    for (std::size_t i = 0; i < rule.size(); ++i) {
      CHECK(rule.weights[i] > 0.0);
      if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
    }
  }
}

TEST_CASE("inner product examples") {
  CHECK(std::abs(inner_product(kLegendre, 0, 1, gauss_legendre(16))) < 1e-12);
  CHECK(std::abs(inner_product(kLegendre, 3, 3, gauss_legendre(16)) - 2.0 / 7.0) < 1e-10);
  CHECK(std::abs(inner_product(kChebyshev, 4, 4, gauss_chebyshev(32)) - std::numbers::pi / 2) < 1e-10);
  CHECK(std::abs(inner_product(kChebyshev, 0, 0, gauss_chebyshev(32)) - std::numbers::pi) < 1e-10);
  CHECK(std::abs(inner_product(kHermite, 5, 5, gauss_hermite(24)) - 1.0) < 1e-10);
}

TEST_CASE("analytic norms") {
  CHECK(analytic_norm_squared(kLegendre, 3) == doctest::Approx(2.0 / 7.0));
  CHECK(analytic_norm_squared(kChebyshev, 0) == doctest::Approx(std::numbers::pi));
  CHECK(analytic_norm_squared(kChebyshev, 6) == doctest::Approx(std::numbers::pi / 2));
  CHECK(analytic_norm_squared(kHermite, 9) == 1.0);
}

TEST_CASE("inner product rejects unsuitable rules") {
  try {
    inner_product(kLegendre, 0, 1, gauss_chebyshev(16));
    FAIL("expected configuration error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfiguration);
  }
  try {
    inner_product(kLegendre, 10, 10, gauss_legendre(4));
    FAIL("expected configuration error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kConfiguration);
  }
}

TEST_CASE("Legendre projection of exp converges") {
  double previous = INFINITY;
  for (int n = 1; n <= 8; ++n) {
    const double err = legendre_projection_error([](double x) { return std::exp(x); }, n);
    CHECK(err < previous);
    previous = err;
  }
  CHECK(previous < 1e-6);
}
