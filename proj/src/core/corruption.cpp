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

#include "core/corruption.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace topoforge {

namespace {

constexpr std::uint32_t kNoiseStream = 0x4E6F6973u;  // "Nois"
constexpr std::uint32_t kBlobStream = 0x426C6F62u;   // "Blob"

constexpr double kBlobPeakMin = 0.6;
constexpr double kBlobPeakMax = 1.0;

}  // namespace

void CorruptionSpec::validate() const {
  require(std::isfinite(noise_std) && noise_std >= 0.0, ErrorCode::kInvalidInput,
          "noise std must be non-negative");
  require(std::isfinite(blob_rate) && blob_rate >= 0.0, ErrorCode::kInvalidInput,
          "blob rate must be non-negative");
  require(blob_radius_min > 0.0 && blob_radius_min <= blob_radius_max, ErrorCode::kInvalidInput,
          "blob radius range must satisfy 0 < r_min <= r_max");
  require(threshold > 0.0 && threshold < 1.0, ErrorCode::kInvalidInput,
          "binarization threshold must lie in (0, 1)");
}

ProbabilityMap corrupt(const LabelMap& truth, const ProbabilityMap& mask) {
  require_same_extent(truth.extent(), mask.extent(), "corrupt");
  ProbabilityMap out(mask.extent());
  for (std::size_t v = 0; v < truth.size(); ++v) {
    require(truth[v] <= 1, ErrorCode::kInvalidInput, "ground truth must be binary {0,1}");
    const float h = mask[v];
    require(h >= 0.0f && h <= 1.0f, ErrorCode::kInvalidInput, "mask values must lie in [0, 1]");
    out[v] = truth[v] ? h : 0.0f;
  }
  return out;
}

ProbabilityMap apply_overseg_noise(const ProbabilityMap& map, const CorruptionSpec& spec) {
  spec.validate();
  ProbabilityMap out = map;

  if (spec.noise_std > 0.0) {
    RandomStream noise(spec.seed, kNoiseStream);
    for (float& v : out) {
      const double g = noise.normal(1.0, spec.noise_std);
      v = static_cast<float>(std::clamp(static_cast<double>(v) * g, 0.0, 1.0));
    }
  }

  if (spec.blob_rate > 0.0) {
    RandomStream blobs(spec.seed, kBlobStream);
    const std::uint64_t count = blobs.poisson(spec.blob_rate);
    std::vector<std::size_t> background;
    for (std::size_t v = 0; v < map.size(); ++v) {
      if (map[v] < spec.threshold) background.push_back(v);
    }
    const Extent& e = out.extent();
    for (std::uint64_t b = 0; b < count && !background.empty(); ++b) {
      const std::size_t centre = background[blobs.below(background.size())];
      const double radius = blobs.uniform(spec.blob_radius_min, spec.blob_radius_max);
      const double peak = blobs.uniform(kBlobPeakMin, kBlobPeakMax);
      const auto cx = static_cast<std::ptrdiff_t>(centre % e.nx());
      const auto cy = static_cast<std::ptrdiff_t>((centre / e.nx()) % e.ny());
      const auto cz = static_cast<std::ptrdiff_t>(centre / (e.nx() * e.ny()));
      const auto reach = static_cast<std::ptrdiff_t>(std::ceil(radius));
      const std::ptrdiff_t zreach = e.rank == 3 ? reach : 0;
      for (std::ptrdiff_t dz = -zreach; dz <= zreach; ++dz) {
        for (std::ptrdiff_t dy = -reach; dy <= reach; ++dy) {
          for (std::ptrdiff_t dx = -reach; dx <= reach; ++dx) {
            const std::ptrdiff_t x = cx + dx, y = cy + dy, z = cz + dz;
            if (x < 0 || y < 0 || z < 0 || x >= static_cast<std::ptrdiff_t>(e.nx()) ||
                y >= static_cast<std::ptrdiff_t>(e.ny()) || z >= static_cast<std::ptrdiff_t>(e.nz())) {
              continue;
            }
            const double r2 = static_cast<double>(dx * dx + dy * dy + dz * dz) / (radius * radius);
            if (r2 >= 1.0) continue;
            const double falloff = (1.0 - r2) * (1.0 - r2);
            float& dst = out.at(x, y, z);
            dst = std::max(dst, static_cast<float>(peak * falloff));
          }
        }
      }
    }
  }
  return out;
}

LabelMap binarize(const ProbabilityMap& map, double threshold) {
  require(threshold > 0.0 && threshold < 1.0, ErrorCode::kInvalidInput,
          "binarization threshold must lie in (0, 1)");
  LabelMap out(map.extent());
  for (std::size_t v = 0; v < map.size(); ++v) out[v] = map[v] >= threshold ? 1 : 0;
  return out;
}

}  // namespace topoforge
