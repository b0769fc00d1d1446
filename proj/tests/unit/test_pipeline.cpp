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


#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>

#include "../oracles.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/phantom.hpp"
#include "core/pipeline.hpp"
#include "core/serialize.hpp"

using namespace topoforge;
namespace fs = std::filesystem;

namespace {

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = read_file(e.path());
  return files;
}

DatasetConfig small_dataset(const fs::path& out, unsigned threads) {
  DatasetConfig config;
  PhantomSpec ring;
  ring.dims = Extent::make3d(24, 24, 24);
  config.phantom = ring;
  config.count = 6;
  config.mask.dims = ring.dims;
  config.mask.basis.max_order = 6;
  config.corruption.blob_rate = 1.0;
  config.global_seed = 123;
  config.threads = threads;
  config.out_dir = out;
  return config;
}

}  // namespace

TEST_CASE("spec JSON round trips") {
  MaskSpec mask;
  mask.basis.family = {PolynomialKind::kHermiteGaussian, HermiteExponent::kPaperAsWritten};
  mask.basis.max_order = 7;
  mask.basis.mapping = DomainMapping::kUnitInterval;
  mask.dims = Extent::make3d(10, 11, 12);
  mask.seed = 0xfedcba9876543210ULL;
  mask.coeff_std = 0.3;
  CHECK(mask_spec_from_json(to_json(mask)) == mask);
  CHECK(to_json(mask)["rng"] == "philox4x32-10");

  CorruptionSpec corruption;
  corruption.blob_rate = 2.5;
  corruption.seed = 99;
  CHECK(corruption_from_json(to_json(corruption)) == corruption);

  PhantomSpec phantom;
  phantom.kind = PhantomKind::kLoopGrid;
  phantom.loops = 3;
  CHECK(phantom_from_json(to_json(phantom)) == phantom);

  CHECK_THROWS_AS(mask_spec_from_json(nlohmann::json{{"dims", "x"}}), Error);
  CHECK(parse_mapping(mapping_name(DomainMapping::kUnitInterval)) == DomainMapping::kUnitInterval);
}

TEST_CASE("orthogonality report") {
  for (auto kind : {PolynomialKind::kLegendre, PolynomialKind::kChebyshevFirstKind, PolynomialKind::kHermiteGaussian}) {
    const auto report = orthocheck({kind}, 10, 1e-8);
    CHECK(report.all_pass);
    CHECK(report.entries.size() == 66);
  }
  const auto paper = orthocheck({PolynomialKind::kHermiteGaussian, HermiteExponent::kPaperAsWritten}, 4, 1e-8);
  for (const auto& e : paper.entries) {
    if (e.m == e.n) CHECK(std::isnan(e.expected));
  }
}

TEST_CASE("parallel_for visits every index once") {
  for (unsigned threads : {1u, 3u, 8u}) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
  CHECK_THROWS_AS(parallel_for(10, 2, [](std::size_t i) {
                    if (i == 7) fail(ErrorCode::kInternal, "boom");
                  }),
                  Error);
}

TEST_CASE("datasets are identical across worker counts and regeneration") {
  const auto root = oracle::scratch_dir("pipeline_dataset");
  generate_dataset(small_dataset(root / "one", 1));
  generate_dataset(small_dataset(root / "many", 4));
  const auto a = snapshot(root / "one");
  CHECK(a.size() == 6 * 6 + 1);
  CHECK(a == snapshot(root / "many"));
  regenerate_dataset(root / "one" / "manifest.json", root / "again", 2);
  CHECK(a == snapshot(root / "again"));

  const auto manifest = nlohmann::json::parse(a.at("manifest.json"));
  CHECK(manifest["format"] == kManifestFormat);
  CHECK(manifest["samples"].size() == 6);
  const auto& s0 = manifest["samples"][0];
  for (const char* key : {"seed", "gt", "mask", "corrupted", "mask_spec", "corruption_spec", "metrics"}) {
    CHECK(s0.contains(key));
  }
  CHECK(manifest["samples"][0]["seed"] != manifest["samples"][1]["seed"]);
}

TEST_CASE("datasets from a ground-truth directory") {
  const auto root = oracle::scratch_dir("pipeline_gtdir");
  fs::create_directories(root / "gt");
  for (auto kind : {PhantomKind::kRing, PhantomKind::kTube}) {
    PhantomSpec spec;
    spec.kind = kind;
    spec.dims = Extent::make3d(20, 20, 20);
    write_volume(generate(spec).volume, root / "gt" / std::string(phantom_name(kind)));
  }
  DatasetConfig config;
  config.gt_dir = root / "gt";
  config.count = 4;
  config.mask.dims = Extent::make3d(20, 20, 20);
  config.out_dir = root / "out";
  const auto manifest = generate_dataset(config);
  CHECK(manifest["samples"].size() == 4);
  CHECK(fs::exists(root / "out" / "sample_00003_corrupted.json"));

  DatasetConfig bad = config;
  bad.gt_dir = root / "nothing";
  CHECK_THROWS_AS(generate_dataset(bad), Error);
}

TEST_CASE("ablation sweep") {
  AblationConfig config;
  config.families = {{PolynomialKind::kChebyshevFirstKind}, {PolynomialKind::kLegendre}};
  config.orders = {2, 6};
  config.seeds = 8;
  config.phantom.dims = Extent::make3d(24, 24, 24);
  config.threads = 2;
  const auto rows = run_ablation(config);
  REQUIRE(rows.size() == 4);
  for (const auto& r : rows) {
    CHECK(r.seeds == 8);
    CHECK(r.mean_dice > 0.0);
    CHECK(r.mean_dice <= 1.0);
    CHECK(r.topology_change_rate >= 0.0);
    CHECK(r.topology_change_rate <= 1.0);
  }
  config.threads = 1;
  const auto again = run_ablation(config);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].mean_e == again[i].mean_e);
    CHECK(rows[i].mean_components == again[i].mean_components);
  }
  const auto dir = oracle::scratch_dir("pipeline_ablation");
  write_ablation_csv(rows, dir / "a.csv");
  std::ifstream in(dir / "a.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("family,order,seeds,mean_betti_err", 0) == 0);
  int count = 0;
  for (std::string line; std::getline(in, line);) ++count;
  CHECK(count == 4);
}
