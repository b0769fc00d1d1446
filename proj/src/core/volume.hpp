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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/error.hpp"

namespace topoforge {

/// Shape of a dense 2D or 3D grid. Unused trailing axes have extent 1.
/// Linear index is (z * ny + y) * nx + x, x fastest.
struct Extent {
  int rank = 3;
  std::array<std::size_t, 3> n{1, 1, 1};

  static Extent make2d(std::size_t nx, std::size_t ny) { return {2, {nx, ny, 1}}; }
  static Extent make3d(std::size_t nx, std::size_t ny, std::size_t nz) { return {3, {nx, ny, nz}}; }

  /// Builds an extent from 2 or 3 axis sizes; throws kInvalidInput otherwise.
  static Extent from(std::span<const std::size_t> dims);

  std::size_t nx() const { return n[0]; }
  std::size_t ny() const { return n[1]; }
  std::size_t nz() const { return n[2]; }
  std::size_t voxels() const { return n[0] * n[1] * n[2]; }

  std::size_t index(std::size_t x, std::size_t y, std::size_t z = 0) const {
    return (z * n[1] + y) * n[0] + x;
  }

  std::vector<std::size_t> axes() const {
    return {n.begin(), n.begin() + rank};
  }

  std::string to_string() const;

  bool operator==(const Extent&) const = default;
};

/// Dense scalar grid with value semantics.
template <class T>
class Grid {
 public:
  using value_type = T;

  Grid() = default;
  explicit Grid(const Extent& extent, T fill = T{})
      : extent_(extent), data_(extent.voxels(), fill) {}
  Grid(const Extent& extent, std::vector<T> data) : extent_(extent), data_(std::move(data)) {
    require(data_.size() == extent_.voxels(), ErrorCode::kLengthMismatch,
            "grid payload does not match extent " + extent_.to_string());
  }

  const Extent& extent() const { return extent_; }
  int rank() const { return extent_.rank; }
  std::size_t size() const { return data_.size(); }

  T& operator[](std::size_t i) { return data_[i]; }
  const T& operator[](std::size_t i) const { return data_[i]; }

  T& at(std::size_t x, std::size_t y, std::size_t z = 0) { return data_[extent_.index(x, y, z)]; }
  const T& at(std::size_t x, std::size_t y, std::size_t z = 0) const {
    return data_[extent_.index(x, y, z)];
  }

  std::span<T> values() { return data_; }
  std::span<const T> values() const { return data_; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

  bool operator==(const Grid&) const = default;

 private:
  Extent extent_{};
  std::vector<T> data_;
};

using Field = Grid<double>;            // unnormalized expansion values
using ProbabilityMap = Grid<float>;    // masks and soft segmentations
using LabelMap = Grid<std::uint8_t>;   // binary segmentations, values {0,1}

inline void require_same_extent(const Extent& a, const Extent& b, const char* what) {
  require(a == b, ErrorCode::kShapeMismatch,
          std::string(what) + ": extent " + a.to_string() + " vs " + b.to_string());
}

}  // namespace topoforge
