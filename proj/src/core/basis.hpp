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
#include <cstdint>
#include <vector>

#include "core/polynomial.hpp"
#include "core/volume.hpp"

namespace topoforge {

/// How grid index m of an axis with D samples maps to a coordinate.
enum class DomainMapping {
  kSymmetricUnit,  // -1 + 2m/(D-1), both endpoints included
  kUnitInterval,   // m/D
};

/// Tensor-product basis e_{ijk}(x,y,z) = phi_i(x) phi_j(y) phi_k(z) with
/// 0 <= i,j,k <= max_order and the same family on every axis.
struct BasisSpec {
  PolynomialFamily family;
  int max_order = 10;
  int rank = 3;
  DomainMapping mapping = DomainMapping::kSymmetricUnit;

  std::size_t terms_per_axis() const { return static_cast<std::size_t>(max_order) + 1; }
  std::size_t cardinality() const;
  void validate() const;

  bool operator==(const BasisSpec&) const = default;
};

/// Expansion coefficients a_{ijk}, stored with i slowest and k fastest (the
/// order in which they are drawn). 2D tensors use (i, j).
struct CoefficientTensor {
  PolynomialFamily family;
  int max_order = 0;
  int rank = 3;
  std::uint64_t seed = 0;
  std::vector<double> values;

  std::size_t terms_per_axis() const { return static_cast<std::size_t>(max_order) + 1; }
  std::size_t index(std::size_t i, std::size_t j, std::size_t k = 0) const {
    const std::size_t t = terms_per_axis();
    return rank == 3 ? (i * t + j) * t + k : i * t + j;
  }
  double operator()(std::size_t i, std::size_t j, std::size_t k = 0) const { return values[index(i, j, k)]; }
};

std::vector<double> grid_coordinates(DomainMapping mapping, std::size_t samples);

/// Evaluates the truncated expansion on the grid by contracting one axis at a
/// time (x, then y, then z) against precomputed axis matrices.
Field eval_expansion_grid(const BasisSpec& spec, const CoefficientTensor& coeffs, const Extent& dims);

/// Reference evaluation: per voxel, the direct sum over all basis terms.
/// Meant for small grids only.
Field eval_expansion_naive(const BasisSpec& spec, const CoefficientTensor& coeffs, const Extent& dims);

}  // namespace topoforge
