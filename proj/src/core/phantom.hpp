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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "core/topology.hpp"
#include "core/volume.hpp"

namespace topoforge {

enum class PhantomKind { kBox, kTube, kRing, kShell, kYJunction, kLoopGrid };

/// Geometry of a synthetic ground truth. Zero-valued radius/thickness pick a
/// size-dependent default (see list_phantoms()).
struct PhantomSpec {
  PhantomKind kind = PhantomKind::kRing;
  Extent dims = Extent::make3d(64, 64, 64);
  double radius = 0.0;
  double thickness = 0.0;
  int loops = 4;
  std::uint64_t seed = 0;
  /// Maximum centre displacement in voxels, drawn from the seed. 0 disables.
  double jitter = 0.0;

  bool operator==(const PhantomSpec&) const = default;
};

struct Phantom {
  LabelMap volume;
  BettiNumbers declared;
};

/// Voxelizes the phantom by thresholding the distance to its analytic
/// primitive. Throws kInvalidInput if the shape does not fit with a one-voxel
/// margin.
Phantom generate(const PhantomSpec& spec);

struct PhantomParam {
  std::string name;
  std::string meaning;
  std::string default_value;
};

struct PhantomCatalogEntry {
  PhantomKind kind;
  std::string name;
  std::string description;
  std::vector<PhantomParam> params;
  BettiNumbers declared;
};

std::vector<PhantomCatalogEntry> list_phantoms();

std::string_view phantom_name(PhantomKind kind);
std::optional<PhantomKind> parse_phantom(std::string_view name);

}  // namespace topoforge
