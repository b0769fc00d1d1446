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

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/perturbation.hpp"

using namespace topoforge;

namespace {

MaskSpec spec_for(PolynomialKind kind, int order, Extent dims, std::uint64_t seed) {
  MaskSpec spec;
  spec.basis.family = {kind};
  spec.basis.max_order = order;
  spec.dims = dims;
  spec.seed = seed;
  return spec;
}

}  // namespace

TEST_CASE("coefficient sampling") {
  MaskSpec spec;
  spec.seed = 3;
  const auto a = sample_coefficients(spec);
  CHECK(a.values.size() == 1331);
  for (double v : a.values) CHECK(std::isfinite(v));
  CHECK(sample_coefficients(spec).values == a.values);
  spec.seed = 4;
  CHECK(sample_coefficients(spec).values != a.values);

  double sum = 0, sum2 = 0;
  std::size_t n = 0;
  for (std::uint64_t seed = 0; n < 100000; ++seed) {
    spec.seed = seed;
    for (double v : sample_coefficients(spec).values) {
      sum += v;
      sum2 += v * v;
      ++n;
    }
  }
  const double mean = sum / n, sd = std::sqrt(sum2 / n - mean * mean);
  CHECK(mean >= -0.02);
  CHECK(mean <= 0.02);
  CHECK(sd >= 0.98);
  CHECK(sd <= 1.02);
}

TEST_CASE("order zero gives a degenerate constant mask") {
  const Mask m = synthesize_mask(spec_for(PolynomialKind::kLegendre, 0, Extent::make3d(8, 8, 8), 1));
  CHECK(m.degenerate);
  for (float v : m.values) CHECK(v == 0.5f);
}

TEST_CASE("min-max normalized mask spans [0, 1]") {
  const Mask m = synthesize_mask(spec_for(PolynomialKind::kChebyshevFirstKind, 10, Extent::make3d(64, 64, 64), 42));
  CHECK_FALSE(m.degenerate);
  const auto [lo, hi] = std::minmax_element(m.values.begin(), m.values.end());
  CHECK(*lo == 0.0f);
  CHECK(*hi == 1.0f);
  const Mask again = synthesize_mask(spec_for(PolynomialKind::kChebyshevFirstKind, 10, Extent::make3d(64, 64, 64), 42));
  CHECK(again.values == m.values);
}

TEST_CASE("Legendre mask has a superlevel component") {
  const Mask m = synthesize_mask(spec_for(PolynomialKind::kLegendre, 4, Extent::make3d(32, 32, 32), 7));
  CHECK(mask_statistics(m.values, 0.5).component_count >= 1);
}

TEST_CASE("mask statistics of a constant map") {
  const ProbabilityMap constant(Extent::make3d(6, 6, 6), 0.5f);
  const auto low = mask_statistics(constant, 0.4);
  CHECK(low.component_count == 1);
  CHECK(low.mean == doctest::Approx(0.5));
  CHECK(low.stddev == doctest::Approx(0.0));
  CHECK(low.saddle_proxy == 0);
  CHECK(mask_statistics(constant, 0.6).component_count == 0);
  CHECK_THROWS_AS(mask_statistics(constant, 0.0), Error);
  CHECK_THROWS_AS(mask_statistics(constant, 1.0), Error);
}

TEST_CASE("higher order fragments the superlevel set more") {
  double low = 0, high = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    low += mask_statistics(
               synthesize_mask(spec_for(PolynomialKind::kChebyshevFirstKind, 4, Extent::make3d(64, 64, 64), seed)).values,
               0.5)
               .component_count;
    high += mask_statistics(
                synthesize_mask(spec_for(PolynomialKind::kChebyshevFirstKind, 10, Extent::make3d(64, 64, 64), seed)).values,
                0.5)
                .component_count;
  }
  MESSAGE("mean components order 4: " << low / 100 << ", order 10: " << high / 100);
  CHECK(high > low);
}

TEST_CASE("mask spec validation") {
  MaskSpec spec;
  spec.coeff_std = -1.0;
  CHECK_THROWS_AS(synthesize_mask(spec), Error);
  spec.coeff_std = 1.0;
  spec.dims = Extent::make2d(16, 16);
  CHECK_THROWS_AS(synthesize_mask(spec), Error);
  spec.basis.rank = 2;
  CHECK(synthesize_mask(spec).values.extent() == Extent::make2d(16, 16));
  spec.dims = Extent::make2d(1, 16);
  try {
    synthesize_mask(spec);
    FAIL("expected degenerate grid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateGrid);
  }
  CHECK(spec.canonical() != MaskSpec{}.canonical());
}

TEST_CASE("unnormalized mask keeps raw values") {
  MaskSpec spec = spec_for(PolynomialKind::kLegendre, 0, Extent::make3d(4, 4, 4), 1);
  spec.normalization = Normalization::kNone;
  const Mask m = synthesize_mask(spec);
  const double c = sample_coefficients(spec).values[0];
  for (float v : m.values) CHECK(v == static_cast<float>(c));
}
