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

#include "core/volume.hpp"

namespace topoforge {

Extent Extent::from(std::span<const std::size_t> dims) {
  require(dims.size() == 2 || dims.size() == 3, ErrorCode::kInvalidInput,
          "volume must have 2 or 3 axes, got " + std::to_string(dims.size()));
  for (std::size_t d : dims) require(d > 0, ErrorCode::kInvalidInput, "axis size must be positive");
  if (dims.size() == 2) return make2d(dims[0], dims[1]);
  return make3d(dims[0], dims[1], dims[2]);
}

std::string Extent::to_string() const {
  std::string s = std::to_string(n[0]) + "x" + std::to_string(n[1]);
  if (rank == 3) s += "x" + std::to_string(n[2]);
  return s;
}

}  // namespace topoforge
