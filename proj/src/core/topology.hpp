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
#include <string_view>

#include "core/volume.hpp"

namespace topoforge {

/// Voxel adjacency. k4/k8 apply to 2D grids, k6/k26 to 3D grids.
enum class Connectivity { k4 = 4, k8 = 8, k6 = 6, k26 = 26 };

std::string_view connectivity_name(Connectivity c);

struct Components {
  std::size_t count = 0;
  /// 0 for background, 1..count in order of each component's first voxel.
  Grid<std::uint32_t> labels;
};

/// Two-pass union-find labeling of the nonzero voxels.
Components connected_components(const LabelMap& volume, Connectivity connectivity);

/// Euler characteristic of the union of closed unit squares/cubes of the
/// foreground voxels (V - E + F in 2D, V - E + F - C in 3D).
std::int64_t euler_characteristic(const LabelMap& volume);

struct BettiNumbers {
  std::int64_t b0 = 0;
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  Connectivity foreground = Connectivity::k26;
  Connectivity background = Connectivity::k6;

  bool same_counts(const BettiNumbers& o) const { return b0 == o.b0 && b1 == o.b1 && b2 == o.b2; }
};

/// Betti numbers under the complementary (26, 6) convention in 3D and (8, 4)
/// in 2D. b0 and b2 come from component counts (the background is padded by one
/// voxel so every border-touching background region joins one outer
/// component); b1 follows from the Euler characteristic. Throws kInternal if the
/// counts are inconsistent.
BettiNumbers betti(const LabelMap& volume);

/// 2|P and G| / (|P| + |G|); 1 when both are empty.
double dice(const LabelMap& prediction, const LabelMap& truth);

struct MetricsReport {
  double dice = 0.0;
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
  std::int64_t e2 = 0;
  std::int64_t e = 0;  // e0 + e1 only
  BettiNumbers prediction;
  BettiNumbers truth;
};

/// Topology fields of the report (dice left at 0).
MetricsReport betti_error(const LabelMap& prediction, const LabelMap& truth);

/// Betti errors plus Dice.
MetricsReport evaluate(const LabelMap& prediction, const LabelMap& truth);

/// Throws kInvalidInput unless every voxel is 0 or 1.
void require_binary(const LabelMap& volume, const char* what);

}  // namespace topoforge
