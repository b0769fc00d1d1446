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
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/corruption.hpp"
#include "core/perturbation.hpp"
#include "core/phantom.hpp"
#include "core/polynomial.hpp"
#include "core/topology.hpp"

namespace topoforge {

inline constexpr const char* kManifestFormat = "topoforge-manifest/1";

/// Runs body(i) for i in [0, count) on `threads` workers. The first exception
/// thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

// ---------------------------------------------------------------------------
// Orthogonality check

struct OrthoEntry {
  int m = 0;
  int n = 0;
  double value = 0.0;
  double expected = 0.0;  // NaN when there is no reference value
  double abs_error = 0.0;
  bool pass = true;
};

struct OrthoReport {
  PolynomialFamily family;
  int max_order = 0;
  double tolerance = 0.0;
  std::size_t nodes = 0;
  std::vector<OrthoEntry> entries;  // all pairs 0 <= m <= n <= max_order
  bool all_pass = true;
};

OrthoReport orthocheck(const PolynomialFamily& family, int max_order, double tolerance);

// ---------------------------------------------------------------------------
// Dataset generation

struct DatasetConfig {
  /// Either a phantom recipe or a directory of ground-truth volumes.
  std::optional<PhantomSpec> phantom;
  std::filesystem::path gt_dir;
  std::size_t count = 1;
  /// Template; dims and seed are filled in per sample.
  MaskSpec mask;
  /// Template; seed is filled in per sample.
  CorruptionSpec corruption;
  std::uint64_t global_seed = 0;
  unsigned threads = 1;
  std::filesystem::path out_dir;
};

/// Writes sample_NNNNN_{gt,mask,corrupted} volumes and manifest.json into
/// out_dir. Each sample's seeds derive from (global_seed, index), so output is
/// independent of the worker count. Returns the manifest.
nlohmann::json generate_dataset(const DatasetConfig& config);

/// Rebuilds every sample listed in a manifest from its recorded specs into
/// out_dir (manifest included).
nlohmann::json regenerate_dataset(const std::filesystem::path& manifest_path,
                                  const std::filesystem::path& out_dir, unsigned threads);

// ---------------------------------------------------------------------------
// Order/family ablation

struct AblationConfig {
  std::vector<PolynomialFamily> families;
  std::vector<int> orders;
  std::size_t seeds = 100;
  PhantomSpec phantom;
  DomainMapping mapping = DomainMapping::kSymmetricUnit;
  CorruptionSpec corruption;  // threshold also used for mask statistics
  std::uint64_t global_seed = 0;
  unsigned threads = 1;
};

struct AblationRow {
  PolynomialFamily family;
  int order = 0;
  std::size_t seeds = 0;
  double mean_e = 0, std_e = 0;
  double mean_e0 = 0, mean_e1 = 0, mean_e2 = 0;
  double mean_dice = 0;
  double topology_change_rate = 0;  // fraction of samples with e > 0
  double mean_components = 0, std_components = 0;
  double mean_saddle_proxy = 0;
  std::size_t degenerate_masks = 0;
};

/// One row per (family, order), families outermost.
std::vector<AblationRow> run_ablation(const AblationConfig& config);

void write_ablation_csv(const std::vector<AblationRow>& rows, const std::filesystem::path& path);

}  // namespace topoforge
