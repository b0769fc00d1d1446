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

#include "core/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/topology.hpp"

namespace topoforge {

namespace {

constexpr std::uint32_t kCoefficientStream = 0x436F6566u;  // "Coef"

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void MaskSpec::validate() const {
  basis.validate();
  require(dims.rank == basis.rank, ErrorCode::kInvalidInput,
          "mask dims " + dims.to_string() + " do not match basis dimensionality " +
              std::to_string(basis.rank));
  for (int d = 0; d < dims.rank; ++d) {
    require(dims.n[d] >= 2, ErrorCode::kDegenerateGrid, "mask dims must be at least 2 per axis");
  }
  require(std::isfinite(coeff_mean), ErrorCode::kInvalidInput, "coefficient mean must be finite");
  require(std::isfinite(coeff_std) && coeff_std > 0.0, ErrorCode::kInvalidInput,
          "coefficient std must be positive");
}

std::string MaskSpec::canonical() const {
  std::string s = "family=" + family_label(basis.family);
  s += ";order=" + std::to_string(basis.max_order);
  s += ";rank=" + std::to_string(basis.rank);
  s += ";mapping=";
  s += basis.mapping == DomainMapping::kSymmetricUnit ? "symmetric" : "unit";
  s += ";dims=" + dims.to_string();
  s += ";mean=" + format_double(coeff_mean);
  s += ";std=" + format_double(coeff_std);
  s += ";norm=";
  s += normalization == Normalization::kMinMaxUnit ? "minmax" : "none";
  return s;
}

CoefficientTensor sample_coefficients(const MaskSpec& spec) {
  spec.validate();
  CoefficientTensor coeffs;
  coeffs.family = spec.basis.family;
  coeffs.max_order = spec.basis.max_order;
  coeffs.rank = spec.basis.rank;
  coeffs.seed = spec.seed;
  coeffs.values.resize(spec.basis.cardinality());
  const std::uint64_t key = derive_seed(spec.seed, fnv1a64(spec.canonical()));
  RandomStream stream(key, kCoefficientStream);
  for (double& a : coeffs.values) a = stream.normal(spec.coeff_mean, spec.coeff_std);
  return coeffs;
}

Mask synthesize_mask(const MaskSpec& spec) {
  const CoefficientTensor coeffs = sample_coefficients(spec);
  const Field field = eval_expansion_grid(spec.basis, coeffs, spec.dims);
  Mask mask{ProbabilityMap(spec.dims), false};
  if (spec.normalization == Normalization::kNone) {
    for (std::size_t v = 0; v < field.size(); ++v) mask.values[v] = static_cast<float>(field[v]);
    return mask;
  }
  const auto [lo, hi] = std::minmax_element(field.begin(), field.end());
  const double min = *lo;
  const double range = *hi - min;
  if (!(range >= 1e-12)) {
    std::fill(mask.values.begin(), mask.values.end(), 0.5f);
    mask.degenerate = true;
    return mask;
  }
  for (std::size_t v = 0; v < field.size(); ++v) {
    mask.values[v] = static_cast<float>((field[v] - min) / range);
  }
  return mask;
}

MaskStatistics mask_statistics(const ProbabilityMap& mask, double threshold) {
  require(threshold > 0.0 && threshold < 1.0, ErrorCode::kInvalidInput,
          "mask threshold must lie in (0, 1)");
  MaskStatistics stats;
  const std::size_t count = mask.size();
  if (count == 0) return stats;

  LabelMap superlevel(mask.extent());
  double sum = 0.0;
  for (std::size_t v = 0; v < count; ++v) {
    superlevel[v] = mask[v] >= threshold ? 1 : 0;
    sum += mask[v];
  }
  stats.mean = sum / static_cast<double>(count);
  double sq = 0.0;
  for (std::size_t v = 0; v < count; ++v) {
    const double d = mask[v] - stats.mean;
    sq += d * d;
  }
  stats.stddev = std::sqrt(sq / static_cast<double>(count));

  const Connectivity conn = mask.rank() == 3 ? Connectivity::k26 : Connectivity::k8;
  stats.component_count = connected_components(superlevel, conn).count;

  const Extent& e = mask.extent();
  const std::size_t stride[3] = {1, e.nx(), e.nx() * e.ny()};
  for (int axis = 0; axis < e.rank; ++axis) {
    const std::size_t len = e.n[axis];
    if (len < 3) continue;
    for (std::size_t z = 0; z < (axis == 2 ? 1 : e.nz()); ++z) {
      for (std::size_t y = 0; y < (axis == 1 ? 1 : e.ny()); ++y) {
        for (std::size_t x = 0; x < (axis == 0 ? 1 : e.nx()); ++x) {
          const std::size_t base = e.index(x, y, z);
          int previous_sign = 0;
          for (std::size_t m = 0; m + 1 < len; ++m) {
            const float d = mask[base + (m + 1) * stride[axis]] - mask[base + m * stride[axis]];
            const int sign = (d > 0.0f) - (d < 0.0f);
            if (sign == 0) continue;
            if (previous_sign != 0 && sign != previous_sign) ++stats.saddle_proxy;
            previous_sign = sign;
          }
        }
      }
    }
  }
  return stats;
}

}  // namespace topoforge
