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
#include <string>

#include "core/basis.hpp"
#include "core/volume.hpp"

namespace topoforge {

enum class Normalization { kMinMaxUnit, kNone };

/// Everything needed to reproduce one perturbation mask bit for bit.
struct MaskSpec {
  BasisSpec basis;
  Extent dims = Extent::make3d(64, 64, 64);
  std::uint64_t seed = 0;
  double coeff_mean = 0.0;
  double coeff_std = 1.0;
  Normalization normalization = Normalization::kMinMaxUnit;

  void validate() const;
  /// Stable textual form of every field; hashed into the RNG key.
  std::string canonical() const;

  bool operator==(const MaskSpec&) const = default;
};

/// Draws (N+1)^d coefficients from Normal(coeff_mean, coeff_std^2) in
/// lexicographic (i, j, k) order. The Philox key is derived from the seed and
/// the hash of the rest of the spec.
CoefficientTensor sample_coefficients(const MaskSpec& spec);

struct Mask {
  ProbabilityMap values;
  /// Set when the field was constant; the mask is then filled with 0.5.
  bool degenerate = false;
};

Mask synthesize_mask(const MaskSpec& spec);

struct MaskStatistics {
  std::size_t component_count = 0;  // components of {H >= threshold}, 26/8-connected
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t saddle_proxy = 0;     // sign changes of forward differences along all axis lines
};

MaskStatistics mask_statistics(const ProbabilityMap& mask, double threshold);

}  // namespace topoforge
