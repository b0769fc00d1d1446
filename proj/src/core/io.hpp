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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "core/topology.hpp"
#include "core/volume.hpp"

namespace topoforge {

inline constexpr std::string_view kVolumeFormat = "topoforge-vol/1";

enum class ElementType { kFloat32, kUInt8 };

using Volume = std::variant<ProbabilityMap, LabelMap>;

ElementType element_type(const Volume& volume);
const Extent& volume_extent(const Volume& volume);
std::string_view element_type_name(ElementType type);

/// Sidecar path pair for a volume. "foo", "foo.json" and "foo.raw" all name
/// the same volume.
struct VolumePaths {
  std::filesystem::path metadata;
  std::filesystem::path payload;
};
VolumePaths volume_paths(const std::filesystem::path& path);

/// Writes <base>.json (metadata) and <base>.raw (little-endian payload, x
/// fastest). Float volumes containing NaN are rejected. Both files are
/// written through a temporary and renamed into place.
void write_volume(const Volume& volume, const std::filesystem::path& path,
                  const nlohmann::json& provenance = nlohmann::json::object());

struct LoadedVolume {
  Volume volume;
  nlohmann::json provenance;
  std::size_t nan_count = 0;
};

/// Reads a volume written by write_volume. NaN payloads are accepted and
/// counted. Errors: kIo (unreadable), kBadMetadata, kUnknownVersion,
/// kLengthMismatch.
LoadedVolume read_volume(const std::filesystem::path& path);

/// Label volume from either element type: uint8 must be {0,1}; float32 is
/// thresholded at `threshold`.
LabelMap as_binary(const Volume& volume, double threshold);

/// One row per report plus a final row of mean±std (population std) per
/// column. ids may be empty, in which case rows are numbered from 0.
void write_metrics_csv(std::span<const MetricsReport> reports, std::span<const std::string> ids,
                       const std::filesystem::path& path);

inline constexpr std::string_view kMetricsCsvHeader =
    "sample_id,dice,betti_err,betti0_err,betti1_err,betti2_err,b0_pred,b1_pred,b2_pred,b0_gt,b1_gt,b2_gt";

/// Writes bytes to path via a sibling temporary file and rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace topoforge
