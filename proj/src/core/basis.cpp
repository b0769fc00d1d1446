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

#include "core/basis.hpp"

#include <cmath>

#include "core/error.hpp"

namespace topoforge {

std::size_t BasisSpec::cardinality() const {
  std::size_t count = 1;
  for (int d = 0; d < rank; ++d) count *= terms_per_axis();
  return count;
}

void BasisSpec::validate() const {
  require(max_order >= 0, ErrorCode::kInvalidInput, "basis order must be non-negative");
  require(max_order <= kDefaultMaxOrder, ErrorCode::kOrderOverflow,
          "basis order " + std::to_string(max_order) + " exceeds limit " +
              std::to_string(kDefaultMaxOrder));
  require(rank == 2 || rank == 3, ErrorCode::kInvalidInput, "basis dimensionality must be 2 or 3");
}

std::vector<double> grid_coordinates(DomainMapping mapping, std::size_t samples) {
  require(samples > 0, ErrorCode::kInvalidInput, "axis must have at least one sample");
  std::vector<double> coords(samples);
  if (mapping == DomainMapping::kSymmetricUnit) {
    require(samples >= 2, ErrorCode::kDegenerateGrid,
            "endpoint-inclusive [-1, 1] mapping needs at least 2 samples per axis");
    const double denom = static_cast<double>(samples - 1);
    for (std::size_t m = 0; m < samples; ++m) coords[m] = -1.0 + 2.0 * static_cast<double>(m) / denom;
  } else {
    const double denom = static_cast<double>(samples);
    for (std::size_t m = 0; m < samples; ++m) coords[m] = static_cast<double>(m) / denom;
  }
  return coords;
}

namespace {

void check_inputs(const BasisSpec& spec, const CoefficientTensor& coeffs, const Extent& dims) {
  spec.validate();
  require(coeffs.rank == spec.rank && coeffs.max_order == spec.max_order &&
              coeffs.values.size() == spec.cardinality(),
          ErrorCode::kInvalidInput, "coefficient tensor shape does not match the basis");
  require(dims.rank == spec.rank, ErrorCode::kInvalidInput,
          "grid dimensionality does not match the basis");
  for (int d = 0; d < dims.rank; ++d) {
    require(dims.n[d] > 0, ErrorCode::kInvalidInput, "grid axes must be positive");
    if (spec.mapping == DomainMapping::kSymmetricUnit) {
      require(dims.n[d] >= 2, ErrorCode::kDegenerateGrid,
              "axis of size 1 cannot span [-1, 1]; use the unit-interval mapping");
    }
  }
  for (double a : coeffs.values) {
    require(std::isfinite(a), ErrorCode::kInvalidInput, "coefficients must be finite");
  }
}

AxisMatrix axis_matrix(const BasisSpec& spec, std::size_t samples) {
  const auto coords = grid_coordinates(spec.mapping, samples);
  return eval_axis(spec.family, spec.max_order, coords);
}

}  // namespace

Field eval_expansion_grid(const BasisSpec& spec, const CoefficientTensor& coeffs, const Extent& dims) {
  check_inputs(spec, coeffs, dims);
  const std::size_t t = spec.terms_per_axis();
  const std::size_t nx = dims.nx();
  const std::size_t ny = dims.ny();
  const AxisMatrix ax = axis_matrix(spec, nx);
  const AxisMatrix ay = axis_matrix(spec, ny);
  Field out(dims);

  if (spec.rank == 2) {
    // t1[j][x] = sum_i a_ij ax(i, x)
    std::vector<double> t1(t * nx, 0.0);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        const double a = coeffs(i, j);
        double* dst = &t1[j * nx];
        for (std::size_t x = 0; x < nx; ++x) dst[x] += a * ax(i, x);
      }
    }
    for (std::size_t j = 0; j < t; ++j) {
      const double* src = &t1[j * nx];
      for (std::size_t y = 0; y < ny; ++y) {
        const double w = ay(j, y);
        double* dst = &out[y * nx];
        for (std::size_t x = 0; x < nx; ++x) dst[x] += src[x] * w;
      }
    }
    return out;
  }

  const std::size_t nz = dims.nz();
  const AxisMatrix az = axis_matrix(spec, nz);

  // Mode x: t1[(j * t + k)][x] = sum_i a_ijk ax(i, x)
  std::vector<double> t1(t * t * nx, 0.0);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t jk = 0; jk < t * t; ++jk) {
      const double a = coeffs.values[i * t * t + jk];
      double* dst = &t1[jk * nx];
      for (std::size_t x = 0; x < nx; ++x) dst[x] += a * ax(i, x);
    }
  }
  // Mode y: t2[k][y][x] = sum_j t1[j, k][x] ay(j, y)
  std::vector<double> t2(t * ny * nx, 0.0);
  for (std::size_t j = 0; j < t; ++j) {
    for (std::size_t k = 0; k < t; ++k) {
      const double* src = &t1[(j * t + k) * nx];
      for (std::size_t y = 0; y < ny; ++y) {
        const double w = ay(j, y);
        double* dst = &t2[(k * ny + y) * nx];
        for (std::size_t x = 0; x < nx; ++x) dst[x] += src[x] * w;
      }
    }
  }
  // Mode z: out[z][y][x] = sum_k t2[k][y][x] az(k, z)
  for (std::size_t k = 0; k < t; ++k) {
    const double* src = &t2[k * ny * nx];
    for (std::size_t z = 0; z < nz; ++z) {
      const double w = az(k, z);
      double* dst = &out[z * ny * nx];
      for (std::size_t yx = 0; yx < ny * nx; ++yx) dst[yx] += src[yx] * w;
    }
  }
  return out;
}

Field eval_expansion_naive(const BasisSpec& spec, const CoefficientTensor& coeffs, const Extent& dims) {
  check_inputs(spec, coeffs, dims);
  const int top = spec.max_order;
  const auto xs = grid_coordinates(spec.mapping, dims.nx());
  const auto ys = grid_coordinates(spec.mapping, dims.ny());
  const auto zs = spec.rank == 3 ? grid_coordinates(spec.mapping, dims.nz()) : std::vector<double>{0.0};
  Field out(dims);
  for (std::size_t z = 0; z < dims.nz(); ++z) {
    for (std::size_t y = 0; y < dims.ny(); ++y) {
      for (std::size_t x = 0; x < dims.nx(); ++x) {
        double sum = 0.0;
        for (int i = 0; i <= top; ++i) {
          const double px = eval_1d(spec.family, i, xs[x]);
          for (int j = 0; j <= top; ++j) {
            const double py = eval_1d(spec.family, j, ys[y]);
            if (spec.rank == 2) {
              sum += coeffs(i, j) * px * py;
              continue;
            }
            for (int k = 0; k <= top; ++k) {
              sum += coeffs(i, j, k) * px * py * eval_1d(spec.family, k, zs[z]);
            }
          }
        }
        out.at(x, y, z) = sum;
      }
    }
  }
  return out;
}

}  // namespace topoforge
