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

#include "core/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "core/error.hpp"
#include "core/io.hpp"
#include "core/quadrature.hpp"
#include "core/rng.hpp"
#include "core/serialize.hpp"

namespace topoforge {

namespace fs = std::filesystem;
using nlohmann::json;

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (!stop.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) break;
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          stop = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

OrthoReport orthocheck(const PolynomialFamily& family, int max_order, double tolerance) {
  require(max_order >= 0, ErrorCode::kInvalidInput, "max order must be non-negative");
  require(tolerance > 0.0, ErrorCode::kInvalidInput, "tolerance must be positive");
  OrthoReport report;
  report.family = family;
  report.max_order = max_order;
  report.tolerance = tolerance;
  const QuadratureRule rule = rule_for(family, default_node_count(max_order));
  report.nodes = rule.size();
  const bool has_reference = !(family.kind == PolynomialKind::kHermiteGaussian &&
                               family.hermite_exponent == HermiteExponent::kPaperAsWritten);
  for (int m = 0; m <= max_order; ++m) {
    for (int n = m; n <= max_order; ++n) {
      OrthoEntry entry{m, n, inner_product(family, m, n, rule)};
      if (m != n) {
        entry.expected = 0.0;
      } else {
        entry.expected = has_reference ? analytic_norm_squared(family, n)
                                       : std::numeric_limits<double>::quiet_NaN();
      }
      if (std::isnan(entry.expected)) {
        entry.abs_error = 0.0;
        entry.pass = true;
      } else {
        entry.abs_error = std::abs(entry.value - entry.expected);
        entry.pass = entry.abs_error < tolerance;
      }
      report.all_pass = report.all_pass && entry.pass;
      report.entries.push_back(entry);
    }
  }
  return report;
}

namespace {

struct SampleJob {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::optional<PhantomSpec> phantom;
  fs::path gt_source;
  MaskSpec mask;
  CorruptionSpec corruption;
};

std::string sample_base(std::size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "sample_%05zu", index);
  return buf;
}

json run_sample(const SampleJob& job, const fs::path& out_dir) {
  LabelMap gt;
  json gt_source;
  if (job.phantom) {
    gt = generate(*job.phantom).volume;
    gt_source = {{"phantom", to_json(*job.phantom)}};
  } else {
    gt = as_binary(read_volume(job.gt_source).volume, 0.5);
    gt_source = {{"file", job.gt_source.string()}};
  }
  require(gt.extent() == job.mask.dims, ErrorCode::kShapeMismatch,
          "ground truth " + gt.extent().to_string() + " does not match mask dims " +
              job.mask.dims.to_string());

  const Mask mask = synthesize_mask(job.mask);
  const ProbabilityMap clean = corrupt(gt, mask.values);
  const ProbabilityMap noisy = apply_overseg_noise(clean, job.corruption);
  const MetricsReport metrics = evaluate(binarize(noisy, job.corruption.threshold), gt);

  const std::string base = sample_base(job.index);
  const json mask_json = to_json(job.mask);
  const json corruption_json = to_json(job.corruption);
  write_volume(gt, out_dir / (base + "_gt"), {{"role", "ground_truth"}, {"source", gt_source}});
  write_volume(mask.values, out_dir / (base + "_mask"),
               {{"role", "perturbation_mask"}, {"mask_spec", mask_json}, {"degenerate", mask.degenerate}});
  write_volume(noisy, out_dir / (base + "_corrupted"),
               {{"role", "corrupted_probability_map"},
                {"mask_spec", mask_json},
                {"corruption_spec", corruption_json}});

  return {{"index", job.index},
          {"seed", job.seed},
          {"gt", base + "_gt"},
          {"mask", base + "_mask"},
          {"corrupted", base + "_corrupted"},
          {"gt_source", gt_source},
          {"mask_spec", mask_json},
          {"corruption_spec", corruption_json},
          {"degenerate_mask", mask.degenerate},
          {"metrics", to_json(metrics)}};
}

json run_jobs(const std::vector<SampleJob>& jobs, const fs::path& out_dir, unsigned threads) {
  std::vector<json> records(jobs.size());
  parallel_for(jobs.size(), threads, [&](std::size_t i) { records[i] = run_sample(jobs[i], out_dir); });
  return json(records);
}

std::vector<fs::path> list_volumes(const fs::path& dir) {
  require(fs::is_directory(dir), ErrorCode::kIo, "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  require(!files.empty(), ErrorCode::kInvalidInput, "no volumes found in " + dir.string());
  return files;
}

}  // namespace

json generate_dataset(const DatasetConfig& config) {
  require(config.count >= 1, ErrorCode::kInvalidInput, "dataset needs at least one sample");
  require(config.phantom.has_value() != !config.gt_dir.empty(), ErrorCode::kInvalidInput,
          "dataset needs exactly one of a phantom recipe or a ground-truth directory");
  config.corruption.validate();
  fs::create_directories(config.out_dir);

  std::vector<fs::path> gt_files;
  json source;
  if (config.phantom) {
    source = {{"phantom", to_json(*config.phantom)}};
  } else {
    gt_files = list_volumes(config.gt_dir);
    std::vector<std::string> names;
    for (const auto& f : gt_files) names.push_back(f.filename().string());
    source = {{"gt_dir", config.gt_dir.string()}, {"files", names}};
  }

  std::vector<SampleJob> jobs(config.count);
  for (std::size_t i = 0; i < config.count; ++i) {
    SampleJob& job = jobs[i];
    job.index = i;
    job.seed = derive_seed(config.global_seed, i);
    job.mask = config.mask;
    job.mask.seed = derive_seed(job.seed, 0);
    job.corruption = config.corruption;
    job.corruption.seed = derive_seed(job.seed, 1);
    if (config.phantom) {
      job.phantom = *config.phantom;
      job.phantom->seed = derive_seed(job.seed, 2);
      job.mask.dims = job.phantom->dims;
    } else {
      job.gt_source = gt_files[i % gt_files.size()];
      const auto meta = json::parse(read_file(volume_paths(job.gt_source).metadata));
      job.mask.dims = Extent::from(meta.at("dims").get<std::vector<std::size_t>>());
    }
    job.mask.basis.rank = job.mask.dims.rank;
    job.mask.validate();
  }

  json manifest;
  manifest["format"] = kManifestFormat;
  manifest["toolkit_version"] = TOPOFORGE_VERSION;
  manifest["global_seed"] = config.global_seed;
  manifest["count"] = config.count;
  manifest["source"] = source;
  manifest["samples"] = run_jobs(jobs, config.out_dir, config.threads);
  write_file_atomic(config.out_dir / "manifest.json", manifest.dump(2) + "\n");
  return manifest;
}

json regenerate_dataset(const fs::path& manifest_path, const fs::path& out_dir, unsigned threads) {
  json manifest;
  try {
    manifest = json::parse(read_file(manifest_path));
  } catch (const json::exception& e) {
    fail(ErrorCode::kBadMetadata, manifest_path.string() + ": " + e.what());
  }
  require(manifest.value("format", "") == kManifestFormat, ErrorCode::kUnknownVersion,
          manifest_path.string() + ": not a " + std::string(kManifestFormat) + " manifest");
  std::vector<SampleJob> jobs;
  try {
    for (const json& s : manifest.at("samples")) {
      SampleJob job;
      job.index = s.at("index").get<std::size_t>();
      job.seed = s.at("seed").get<std::uint64_t>();
      job.mask = mask_spec_from_json(s.at("mask_spec"));
      job.corruption = corruption_from_json(s.at("corruption_spec"));
      const json& src = s.at("gt_source");
      if (src.contains("phantom")) {
        job.phantom = phantom_from_json(src.at("phantom"));
      } else {
        job.gt_source = src.at("file").get<std::string>();
      }
      jobs.push_back(std::move(job));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::kBadMetadata, manifest_path.string() + ": " + e.what());
  }
  fs::create_directories(out_dir);
  json rebuilt = manifest;
  rebuilt["samples"] = run_jobs(jobs, out_dir, threads);
  write_file_atomic(out_dir / "manifest.json", rebuilt.dump(2) + "\n");
  return rebuilt;
}

namespace {

struct AblationSample {
  MaskStatistics stats;
  MetricsReport metrics;
  bool degenerate = false;
};

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v) {
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return v.empty() ? 0.0 : std::sqrt(s / static_cast<double>(v.size()));
}

}  // namespace

std::vector<AblationRow> run_ablation(const AblationConfig& config) {
  require(!config.families.empty() && !config.orders.empty() && config.seeds >= 1,
          ErrorCode::kInvalidInput, "ablation needs families, orders and at least one seed");
  config.corruption.validate();
  const Phantom gt = generate(config.phantom);

  const std::size_t per_cell = config.seeds;
  const std::size_t cells = config.families.size() * config.orders.size();
  std::vector<AblationSample> samples(cells * per_cell);

  parallel_for(samples.size(), config.threads, [&](std::size_t item) {
    const std::size_t cell = item / per_cell;
    const std::size_t s = item % per_cell;
    MaskSpec spec;
    spec.basis.family = config.families[cell / config.orders.size()];
    spec.basis.max_order = config.orders[cell % config.orders.size()];
    spec.basis.rank = config.phantom.dims.rank;
    spec.basis.mapping = config.mapping;
    spec.dims = config.phantom.dims;
    spec.seed = derive_seed(config.global_seed, s);
    CorruptionSpec noise = config.corruption;
    noise.seed = derive_seed(spec.seed, 1);

    const Mask mask = synthesize_mask(spec);
    AblationSample& out = samples[item];
    out.degenerate = mask.degenerate;
    out.stats = mask_statistics(mask.values, config.corruption.threshold);
    const ProbabilityMap noisy = apply_overseg_noise(corrupt(gt.volume, mask.values), noise);
    out.metrics = evaluate(binarize(noisy, config.corruption.threshold), gt.volume);
  });

  std::vector<AblationRow> rows;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    AblationRow row;
    row.family = config.families[cell / config.orders.size()];
    row.order = config.orders[cell % config.orders.size()];
    row.seeds = per_cell;
    std::vector<double> e, e0, e1, e2, d, comps, saddles;
    std::size_t changed = 0;
    for (std::size_t s = 0; s < per_cell; ++s) {
      const AblationSample& sample = samples[cell * per_cell + s];
      e.push_back(static_cast<double>(sample.metrics.e));
      e0.push_back(static_cast<double>(sample.metrics.e0));
      e1.push_back(static_cast<double>(sample.metrics.e1));
      e2.push_back(static_cast<double>(sample.metrics.e2));
      d.push_back(sample.metrics.dice);
      comps.push_back(static_cast<double>(sample.stats.component_count));
      saddles.push_back(static_cast<double>(sample.stats.saddle_proxy));
      changed += sample.metrics.e > 0 ? 1 : 0;
      row.degenerate_masks += sample.degenerate ? 1 : 0;
    }
    row.mean_e = mean_of(e);
    row.std_e = std_of(e);
    row.mean_e0 = mean_of(e0);
    row.mean_e1 = mean_of(e1);
    row.mean_e2 = mean_of(e2);
    row.mean_dice = mean_of(d);
    row.topology_change_rate = static_cast<double>(changed) / static_cast<double>(per_cell);
    row.mean_components = mean_of(comps);
    row.std_components = std_of(comps);
    row.mean_saddle_proxy = mean_of(saddles);
    rows.push_back(row);
  }
  return rows;
}

void write_ablation_csv(const std::vector<AblationRow>& rows, const fs::path& path) {
  std::string text =
      "family,order,seeds,mean_betti_err,std_betti_err,mean_betti0_err,mean_betti1_err,"
      "mean_betti2_err,mean_dice,topology_change_rate,mean_mask_components,std_mask_components,"
      "mean_saddle_proxy,degenerate_masks\n";
  char buf[512];
  for (const AblationRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%d,%zu,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%zu\n",
                  family_label(r.family).c_str(), r.order, r.seeds, r.mean_e, r.std_e, r.mean_e0,
                  r.mean_e1, r.mean_e2, r.mean_dice, r.topology_change_rate, r.mean_components,
                  r.std_components, r.mean_saddle_proxy, r.degenerate_masks);
    text += buf;
  }
  write_file_atomic(path, text);
}

}  // namespace topoforge
