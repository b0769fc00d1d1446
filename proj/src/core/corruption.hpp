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

#include <cstdint>

#include "core/volume.hpp"

namespace topoforge {

/// Over-segmentation noise and binarization settings. The multiplicative
/// stage is always applied when noise_std > 0; spherical blob injection only
/// when blob_rate > 0.
struct CorruptionSpec {
  double noise_std = 0.05;
  double blob_rate = 0.0;
  double blob_radius_min = 2.0;
  double blob_radius_max = 5.0;
  double threshold = 0.5;
  std::uint64_t seed = 0;

  void validate() const;

  bool operator==(const CorruptionSpec&) const = default;
};

/// M' = H * gt, voxelwise.
ProbabilityMap corrupt(const LabelMap& truth, const ProbabilityMap& mask);

/// Multiplies every voxel by g ~ N(1, noise_std^2) and clamps to [0, 1], then
/// composites K ~ Poisson(blob_rate) smooth spherical blobs centred on
/// background voxels (value < threshold) by voxelwise max.
ProbabilityMap apply_overseg_noise(const ProbabilityMap& map, const CorruptionSpec& spec);

/// 1 where value >= threshold.
LabelMap binarize(const ProbabilityMap& map, double threshold);

}  // namespace topoforge
