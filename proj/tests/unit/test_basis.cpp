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
#include <vector>

#include "../oracles.hpp"
#include "core/basis.hpp"
#include "core/error.hpp"
#include "core/perturbation.hpp"
#include "core/rng.hpp"

using namespace topoforge;

namespace {

CoefficientTensor zeros(const BasisSpec& spec) {
  CoefficientTensor c;
  c.family = spec.family;
  c.max_order = spec.max_order;
  c.rank = spec.rank;
  c.values.assign(spec.cardinality(), 0.0);
  return c;
}

CoefficientTensor random_coefficients(const BasisSpec& spec, std::uint64_t seed) {
  CoefficientTensor c = zeros(spec);
  RandomStream s(seed, 9);
  for (double& v : c.values) v = s.normal();
  return c;
}

}  // namespace

TEST_CASE("grid coordinates") {
  CHECK(grid_coordinates(DomainMapping::kSymmetricUnit, 3) == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(grid_coordinates(DomainMapping::kUnitInterval, 4) == std::vector<double>{0.0, 0.25, 0.5, 0.75});
  CHECK(grid_coordinates(DomainMapping::kSymmetricUnit, 2) == std::vector<double>{-1.0, 1.0});
  try {
    grid_coordinates(DomainMapping::kSymmetricUnit, 1);
    FAIL("expected degenerate grid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateGrid);
  }
  CHECK(grid_coordinates(DomainMapping::kUnitInterval, 1) == std::vector<double>{0.0});
}

TEST_CASE("basis spec validation") {
  BasisSpec spec;
  CHECK(spec.cardinality() == 1331);
  spec.rank = 2;
  CHECK(spec.cardinality() == 121);
  spec.rank = 4;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec.rank = 3;
  spec.max_order = 65;
  CHECK_THROWS_AS(spec.validate(), Error);
}

TEST_CASE("constant expansion") {
  BasisSpec spec;
  spec.family = {PolynomialKind::kLegendre};
  spec.max_order = 0;
  CoefficientTensor c = zeros(spec);
  c.values[0] = 2.5;
  const Field f = eval_expansion_grid(spec, c, Extent::make3d(5, 6, 7));
  for (double v : f) CHECK(v == 2.5);
}

TEST_CASE("single Chebyshev term reproduces the x coordinate") {
  BasisSpec spec;
  spec.family = {PolynomialKind::kChebyshevFirstKind};
  spec.max_order = 1;
  CoefficientTensor c = zeros(spec);
  c.values[c.index(1, 0, 0)] = 1.0;
  const Extent dims = Extent::make3d(9, 4, 3);
  const Field f = eval_expansion_grid(spec, c, dims);
  const auto xs = grid_coordinates(spec.mapping, 9);
  for (std::size_t z = 0; z < 3; ++z)
    for (std::size_t y = 0; y < 4; ++y)
      for (std::size_t x = 0; x < 9; ++x) CHECK(std::abs(f.at(x, y, z) - xs[x]) < 1e-15);
}

TEST_CASE("expansion is linear and deterministic") {
  BasisSpec spec;
  spec.family = {PolynomialKind::kHermiteGaussian};
  spec.max_order = 4;
  const Extent dims = Extent::make3d(8, 7, 6);
  const auto a = random_coefficients(spec, 1), b = random_coefficients(spec, 2);
  CoefficientTensor sum = a;
  for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] = 2.0 * a.values[i] - 0.5 * b.values[i];
  const Field fa = eval_expansion_grid(spec, a, dims), fb = eval_expansion_grid(spec, b, dims);
  const Field fs = eval_expansion_grid(spec, sum, dims);
  for (std::size_t i = 0; i < fs.size(); ++i) CHECK(std::abs(fs[i] - (2.0 * fa[i] - 0.5 * fb[i])) < 1e-12);
  CHECK(eval_expansion_grid(spec, a, dims) == fa);
}

TEST_CASE("separable evaluation matches per-voxel oracle") {
  for (auto kind : {PolynomialKind::kLegendre, PolynomialKind::kChebyshevFirstKind, PolynomialKind::kHermiteGaussian}) {
    BasisSpec spec;
    spec.family = {kind};
    spec.max_order = 3;
    const auto c = random_coefficients(spec, 11);
    const Extent dims = Extent::make3d(5, 4, 6);
    const Field f = eval_expansion_grid(spec, c, dims);
    const Field g = eval_expansion_naive(spec, c, dims);
    const auto xs = grid_coordinates(spec.mapping, 5), ys = grid_coordinates(spec.mapping, 4),
               zs = grid_coordinates(spec.mapping, 6);
    auto phi = [&](int n, double x) {
      switch (kind) {
        case PolynomialKind::kLegendre: return oracle::legendre_rodrigues(n, x);
        case PolynomialKind::kChebyshevFirstKind: return oracle::chebyshev_trig(n, std::clamp(x, -1.0, 1.0));
        default: return oracle::hermite_function(n, x);
      }
    };
    for (std::size_t z = 0; z < 6; ++z)
      for (std::size_t y = 0; y < 4; ++y)
        for (std::size_t x = 0; x < 5; ++x) {
          double ref = 0;
          for (int i = 0; i <= 3; ++i)
            for (int j = 0; j <= 3; ++j)
              for (int k = 0; k <= 3; ++k) ref += c(i, j, k) * phi(i, xs[x]) * phi(j, ys[y]) * phi(k, zs[z]);
          CHECK(std::abs(f.at(x, y, z) - ref) < 1e-10);
          CHECK(std::abs(g.at(x, y, z) - ref) < 1e-10);
        }
  }
}

TEST_CASE("two-dimensional expansion") {
  BasisSpec spec;
  spec.rank = 2;
  spec.max_order = 2;
  const auto c = random_coefficients(spec, 5);
  const Extent dims = Extent::make2d(7, 5);
  const Field f = eval_expansion_grid(spec, c, dims), g = eval_expansion_naive(spec, c, dims);
  for (std::size_t i = 0; i < f.size(); ++i) CHECK(std::abs(f[i] - g[i]) < 1e-12);
  CHECK_THROWS_AS(eval_expansion_grid(spec, c, Extent::make3d(7, 5, 2)), Error);
}
