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

#include "core/io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/corruption.hpp"
#include "core/error.hpp"

namespace topoforge {

namespace fs = std::filesystem;

ElementType element_type(const Volume& volume) {
  return std::holds_alternative<ProbabilityMap>(volume) ? ElementType::kFloat32 : ElementType::kUInt8;
}

const Extent& volume_extent(const Volume& volume) {
  return std::visit([](const auto& grid) -> const Extent& { return grid.extent(); }, volume);
}

std::string_view element_type_name(ElementType type) {
  return type == ElementType::kFloat32 ? "float32" : "uint8";
}

VolumePaths volume_paths(const fs::path& path) {
  fs::path base = path;
  if (base.extension() == ".json" || base.extension() == ".raw") base.replace_extension();
  fs::path metadata = base;
  metadata += ".json";
  fs::path payload = base;
  payload += ".raw";
  return {metadata, payload};
}

void write_file_atomic(const fs::path& path, std::string_view bytes) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorCode::kIo, "cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    require(static_cast<bool>(out), ErrorCode::kIo, "failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  require(!ec, ErrorCode::kIo, "cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

template <class T>
std::string encode_payload(std::span<const T> values) {
  std::string bytes(values.size() * sizeof(T), '\0');
  std::memcpy(bytes.data(), values.data(), bytes.size());
  if constexpr (sizeof(T) > 1) {
    if constexpr (std::endian::native == std::endian::big) {
      for (std::size_t i = 0; i < bytes.size(); i += sizeof(T)) {
        std::reverse(bytes.begin() + i, bytes.begin() + i + sizeof(T));
      }
    }
  }
  return bytes;
}

template <class T>
std::vector<T> decode_payload(std::string bytes) {
  if constexpr (sizeof(T) > 1) {
    if constexpr (std::endian::native == std::endian::big) {
      for (std::size_t i = 0; i < bytes.size(); i += sizeof(T)) {
        std::reverse(bytes.begin() + i, bytes.begin() + i + sizeof(T));
      }
    }
  }
  std::vector<T> values(bytes.size() / sizeof(T));
  std::memcpy(values.data(), bytes.data(), values.size() * sizeof(T));
  return values;
}

}  // namespace

void write_volume(const Volume& volume, const fs::path& path, const nlohmann::json& provenance) {
  const VolumePaths paths = volume_paths(path);
  const Extent& extent = volume_extent(volume);
  const ElementType type = element_type(volume);

  std::string payload;
  if (type == ElementType::kFloat32) {
    const auto& grid = std::get<ProbabilityMap>(volume);
    for (float v : grid) require(!std::isnan(v), ErrorCode::kInvalidInput, "refusing to write NaN voxels");
    payload = encode_payload(grid.values());
  } else {
    payload = encode_payload(std::get<LabelMap>(volume).values());
  }

  nlohmann::json meta;
  meta["format"] = kVolumeFormat;
  meta["dims"] = extent.axes();
  meta["element_type"] = element_type_name(type);
  meta["layout"] = "x-fastest";
  meta["endianness"] = "little";
  meta["payload"] = paths.payload.filename().string();
  meta["provenance"] = provenance.is_null() ? nlohmann::json::object() : provenance;

  write_file_atomic(paths.payload, payload);
  write_file_atomic(paths.metadata, meta.dump(2) + "\n");
}

LoadedVolume read_volume(const fs::path& path) {
  const VolumePaths paths = volume_paths(path);
  const std::string text = read_file(paths.metadata);
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kBadMetadata, paths.metadata.string() + ": " + e.what());
  }
  require(meta.is_object() && meta.contains("format") && meta["format"].is_string(),
          ErrorCode::kBadMetadata, paths.metadata.string() + ": missing format tag");
  const std::string format = meta["format"];
  require(format == kVolumeFormat, ErrorCode::kUnknownVersion,
          paths.metadata.string() + ": unsupported format '" + format + "'");

  std::vector<std::size_t> dims;
  std::string type_name;
  try {
    dims = meta.at("dims").get<std::vector<std::size_t>>();
    type_name = meta.at("element_type").get<std::string>();
    require(meta.value("layout", "x-fastest") == "x-fastest" &&
                meta.value("endianness", "little") == "little",
            ErrorCode::kBadMetadata, paths.metadata.string() + ": unsupported layout");
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kBadMetadata, paths.metadata.string() + ": " + e.what());
  }
  require(dims.size() == 2 || dims.size() == 3, ErrorCode::kBadMetadata,
          paths.metadata.string() + ": dims must have 2 or 3 entries");
  for (std::size_t d : dims) require(d > 0, ErrorCode::kBadMetadata, "dims must be positive");
  const Extent extent = Extent::from(dims);

  fs::path payload_path = paths.payload;
  if (meta.contains("payload") && meta["payload"].is_string()) {
    payload_path = paths.metadata.parent_path() / meta["payload"].get<std::string>();
  }
  std::string bytes = read_file(payload_path);

  LoadedVolume out;
  out.provenance = meta.value("provenance", nlohmann::json::object());
  if (type_name == "float32") {
    require(bytes.size() == extent.voxels() * 4, ErrorCode::kLengthMismatch,
            payload_path.string() + ": expected " + std::to_string(extent.voxels() * 4) +
                " bytes, found " + std::to_string(bytes.size()));
    ProbabilityMap grid(extent, decode_payload<float>(std::move(bytes)));
    for (float v : grid) out.nan_count += std::isnan(v) ? 1 : 0;
    out.volume = std::move(grid);
  } else if (type_name == "uint8") {
    require(bytes.size() == extent.voxels(), ErrorCode::kLengthMismatch,
            payload_path.string() + ": expected " + std::to_string(extent.voxels()) +
                " bytes, found " + std::to_string(bytes.size()));
    out.volume = LabelMap(extent, decode_payload<std::uint8_t>(std::move(bytes)));
  } else {
    fail(ErrorCode::kBadMetadata, paths.metadata.string() + ": unknown element type '" + type_name + "'");
  }
  return out;
}

LabelMap as_binary(const Volume& volume, double threshold) {
  if (const auto* labels = std::get_if<LabelMap>(&volume)) {
    require_binary(*labels, "label volume");
    return *labels;
  }
  return binarize(std::get<ProbabilityMap>(volume), threshold);
}

namespace {

std::string fmt_number(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_summary(const std::vector<double>& column) {
  double mean = 0.0;
  for (double v : column) mean += v;
  mean /= static_cast<double>(column.size());
  double var = 0.0;
  for (double v : column) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / static_cast<double>(column.size()));
  return fmt_number(mean) + "\xC2\xB1" + fmt_number(sd);
}

}  // namespace

void write_metrics_csv(std::span<const MetricsReport> reports, std::span<const std::string> ids,
                       const fs::path& path) {
  require(!reports.empty(), ErrorCode::kInvalidInput, "metrics CSV needs at least one report");
  require(ids.empty() || ids.size() == reports.size(), ErrorCode::kInvalidInput,
          "sample id count does not match report count");
  constexpr std::size_t kColumns = 11;
  std::vector<std::vector<double>> columns(kColumns);
  std::string text(kMetricsCsvHeader);
  text += '\n';
  for (std::size_t r = 0; r < reports.size(); ++r) {
    const MetricsReport& m = reports[r];
    const double row[kColumns] = {m.dice,
                                  static_cast<double>(m.e),
                                  static_cast<double>(m.e0),
                                  static_cast<double>(m.e1),
                                  static_cast<double>(m.e2),
                                  static_cast<double>(m.prediction.b0),
                                  static_cast<double>(m.prediction.b1),
                                  static_cast<double>(m.prediction.b2),
                                  static_cast<double>(m.truth.b0),
                                  static_cast<double>(m.truth.b1),
                                  static_cast<double>(m.truth.b2)};
    text += ids.empty() ? std::to_string(r) : ids[r];
    for (std::size_t c = 0; c < kColumns; ++c) {
      columns[c].push_back(row[c]);
      text += ',';
      text += fmt_number(row[c]);
    }
    text += '\n';
  }
  text += "summary";
  for (const auto& column : columns) {
    text += ',';
    text += fmt_summary(column);
  }
  text += '\n';
  write_file_atomic(path, text);
}

}  // namespace topoforge
