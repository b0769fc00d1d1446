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

// Command-line front end. Talks to the library only through topoforge.h.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topoforge/topoforge.h"

namespace fs = std::filesystem;

namespace {

constexpr const char* kFormatVersion = "topoforge-vol/1";

// Exit codes: 0 ok, 1 validation, 2 I/O, 3 internal inconsistency.
int exit_code_for(tf_status status) {
  switch (status) {
    case TF_OK: return 0;
    case TF_ERR_IO:
    case TF_ERR_LENGTH_MISMATCH:
    case TF_ERR_UNKNOWN_VERSION:
    case TF_ERR_BAD_METADATA: return 2;
    case TF_ERR_INTERNAL: return 3;
    default: return 1;
  }
}

struct Failure {
  tf_status status;
  std::string message;
};

void check(tf_status status) {
  if (status != TF_OK) throw Failure{status, tf_last_error()};
}

struct VolumeDeleter {
  void operator()(tf_volume* v) const { tf_volume_destroy(v); }
};
using VolumePtr = std::unique_ptr<tf_volume, VolumeDeleter>;

VolumePtr read(const std::string& path) {
  tf_volume* raw = nullptr;
  size_t nans = 0;
  check(tf_volume_read(path.c_str(), &raw, &nans));
  if (nans > 0) std::cerr << "warning: " << path << " contains " << nans << " NaN voxels\n";
  return VolumePtr(raw);
}

const std::map<std::string, tf_family> kFamilies{
    {"legendre", TF_LEGENDRE}, {"chebyshev", TF_CHEBYSHEV}, {"hermite", TF_HERMITE_GAUSSIAN}};
const std::map<std::string, tf_hermite_exponent> kExponents{
    {"standard", TF_HERMITE_STANDARD}, {"paper", TF_HERMITE_PAPER_AS_WRITTEN}};
const std::map<std::string, tf_mapping> kMappings{
    {"symmetric", TF_MAP_SYMMETRIC_UNIT}, {"unit", TF_MAP_UNIT_INTERVAL}};
const std::map<std::string, tf_normalization> kNormalizations{
    {"minmax", TF_NORM_MINMAX}, {"none", TF_NORM_NONE}};
const std::map<std::string, tf_phantom_kind> kPhantoms{
    {"box", TF_PHANTOM_BOX},     {"tube", TF_PHANTOM_TUBE},           {"ring", TF_PHANTOM_RING},
    {"shell", TF_PHANTOM_SHELL}, {"yjunction", TF_PHANTOM_YJUNCTION}, {"loopgrid", TF_PHANTOM_LOOPGRID}};

std::string family_label(tf_family f) {
  for (const auto& [name, value] : kFamilies) {
    if (value == f) return name;
  }
  return "?";
}

struct GlobalFlags {
  uint64_t seed = 0;
  unsigned threads = 1;
  std::string out_dir = ".";
  std::string format_version = kFormatVersion;
};

struct MaskFlags {
  std::string family = "chebyshev";
  int order = 10;
  std::vector<size_t> dims{64, 64, 64};
  std::string mapping = "symmetric";
  std::string hermite_exponent = "standard";
  double coeff_mean = 0.0;
  double coeff_std = 1.0;
  std::string normalization = "minmax";

  void add(CLI::App* app, bool with_dims = true) {
    app->add_option("--family", family, "Polynomial family")
        ->check(CLI::IsMember({"legendre", "chebyshev", "hermite"}));
    app->add_option("--order", order, "Highest polynomial order N per axis")->check(CLI::Range(0, 64));
    if (with_dims) {
      app->add_option("--dims", dims, "Grid size Nx,Ny[,Nz]")->delimiter(',')->expected(2, 3);
    }
    app->add_option("--mapping", mapping, "Grid coordinate mapping: symmetric ([-1,1]) or unit (m/N)")
        ->check(CLI::IsMember({"symmetric", "unit"}));
    app->add_option("--hermite-exponent", hermite_exponent,
                    "Hermite Gaussian factor: standard exp(-x^2/2) or paper exp(-x^2/3)")
        ->check(CLI::IsMember({"standard", "paper"}));
    app->add_option("--coeff-mean", coeff_mean, "Mean of the coefficient distribution");
    app->add_option("--coeff-std", coeff_std, "Std of the coefficient distribution");
    app->add_option("--normalization", normalization, "Mask normalization")
        ->check(CLI::IsMember({"minmax", "none"}));
  }

  tf_mask_params params(uint64_t seed) const {
    tf_mask_params p;
    tf_mask_params_default(&p);
    p.family = kFamilies.at(family);
    p.hermite_exponent = kExponents.at(hermite_exponent);
    p.order = order;
    p.rank = static_cast<int>(dims.size());
    p.dims[0] = dims[0];
    p.dims[1] = dims[1];
    p.dims[2] = dims.size() == 3 ? dims[2] : 1;
    p.seed = seed;
    p.coeff_mean = coeff_mean;
    p.coeff_std = coeff_std;
    p.mapping = kMappings.at(mapping);
    p.normalization = kNormalizations.at(normalization);
    return p;
  }
};

struct NoiseFlags {
  double noise_std = 0.05;
  double blob_rate = 0.0;
  double blob_radius_min = 2.0;
  double blob_radius_max = 5.0;
  double threshold = 0.5;

  void add(CLI::App* app) {
    app->add_option("--noise-std", noise_std, "Std of the multiplicative N(1, s^2) noise");
    app->add_option("--blob-rate", blob_rate, "Expected number of injected background blobs (0 = off)");
    app->add_option("--blob-radius-min", blob_radius_min, "Smallest blob radius in voxels");
    app->add_option("--blob-radius-max", blob_radius_max, "Largest blob radius in voxels");
    app->add_option("--threshold", threshold, "Binarization threshold (ties are foreground)");
  }

  tf_noise_params params(uint64_t seed) const {
    return {noise_std, blob_rate, blob_radius_min, blob_radius_max, threshold, seed};
  }
};

struct PhantomFlags {
  std::string kind = "ring";
  std::vector<size_t> dims{64, 64, 64};
  double radius = 0.0;
  double thickness = 0.0;
  int loops = 4;
  double jitter = 0.0;

  void add(CLI::App* app, const std::string& kind_flag, bool with_dims = true) {
    app->add_option(kind_flag, kind, "Phantom kind")
        ->check(CLI::IsMember({"box", "tube", "ring", "shell", "yjunction", "loopgrid"}));
    if (with_dims) app->add_option("--dims", dims, "Volume size Nx,Ny,Nz")->delimiter(',')->expected(3);
    app->add_option("--radius", radius, "Main radius in voxels (0 = size-dependent default)");
    app->add_option("--thickness", thickness, "Wall/tube thickness in voxels (0 = default 3)");
    app->add_option("--loops", loops, "Independent loops for loopgrid");
    app->add_option("--jitter", jitter, "Max seeded centre displacement in voxels");
  }

  tf_phantom_params params(uint64_t seed) const {
    tf_phantom_params p;
    tf_phantom_params_default(&p);
    p.kind = kPhantoms.at(kind);
    for (int d = 0; d < 3; ++d) p.dims[d] = dims.at(d);
    p.radius = radius;
    p.thickness = thickness;
    p.loops = loops;
    p.seed = seed;
    p.jitter = jitter;
    return p;
  }
};

std::string resolve(const GlobalFlags& g, const std::string& path) {
  const fs::path p(path);
  if (p.is_absolute()) return path;
  return (fs::path(g.out_dir) / p).string();
}

nlohmann::json betti_json(const tf_betti& b) {
  return {{"b0", b.b0}, {"b1", b.b1}, {"b2", b.b2}, {"euler", b.euler},
          {"fg_connectivity", b.fg_connectivity}, {"bg_connectivity", b.bg_connectivity}};
}

nlohmann::json metrics_json(const tf_metrics& m) {
  return {{"dice", m.dice}, {"e", m.e},   {"e0", m.e0},
          {"e1", m.e1},     {"e2", m.e2}, {"betti_pred", betti_json(m.pred)},
          {"betti_gt", betti_json(m.gt)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topoforge: polynomial topology-perturbation synthesis and Betti-error evaluation"};
  app.option_defaults()->always_capture_default();
  app.set_config("--config", "", "Read flags from a TOML/INI file (keys mirror flag names)");
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--seed", global.seed, "Global random seed");
  app.add_option("--threads", global.threads, "Worker threads for batch commands")->check(CLI::Range(1u, 1024u));
  app.add_option("--out-dir", global.out_dir, "Directory that relative output paths resolve against");
  app.add_option("--format-version", global.format_version, "Volume format version to emit")
      ->check(CLI::IsMember({kFormatVersion}));
  app.set_version_flag("--version", tf_version());

  // phantom
  auto* phantom_cmd = app.add_subcommand("phantom", "Generate a ground-truth phantom with known Betti numbers");
  PhantomFlags phantom_flags;
  std::string phantom_out = "phantom";
  bool phantom_list = false;
  phantom_flags.add(phantom_cmd, "--kind");
  phantom_cmd->add_option("--out", phantom_out, "Output volume base path");
  phantom_cmd->add_flag("--list", phantom_list, "Print the phantom catalog as JSON and exit");

  // mask
  auto* mask_cmd = app.add_subcommand("mask", "Synthesize a topology-perturbation mask");
  MaskFlags mask_flags;
  std::string mask_out = "mask";
  mask_flags.add(mask_cmd);
  mask_cmd->add_option("--out", mask_out, "Output volume base path");

  // corrupt
  auto* corrupt_cmd = app.add_subcommand("corrupt", "Multiply a ground truth by a mask and add noise");
  MaskFlags corrupt_mask_flags;
  NoiseFlags corrupt_noise;
  std::string corrupt_gt, corrupt_mask, corrupt_out = "corrupted", corrupt_binary_out;
  corrupt_cmd->add_option("--gt", corrupt_gt, "Ground-truth volume (uint8 {0,1})")->required();
  corrupt_cmd->add_option("--mask", corrupt_mask, "Existing mask volume; otherwise synthesized from mask flags");
  corrupt_mask_flags.add(corrupt_cmd, false);
  corrupt_noise.add(corrupt_cmd);
  corrupt_cmd->add_option("--out", corrupt_out, "Output probability map base path");
  corrupt_cmd->add_option("--binary-out", corrupt_binary_out, "Also write the binarized map here");

  // betti
  auto* betti_cmd = app.add_subcommand("betti", "Print Betti numbers of a volume");
  std::string betti_input;
  double betti_threshold = 0.5;
  betti_cmd->add_option("input", betti_input, "Volume path")->required();
  betti_cmd->add_option("--threshold", betti_threshold, "Threshold for float volumes");

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Dice and Betti errors of a prediction against ground truth");
  std::string metrics_pred, metrics_gt, metrics_csv;
  double metrics_threshold = 0.5;
  metrics_cmd->add_option("--pred", metrics_pred, "Prediction volume")->required();
  metrics_cmd->add_option("--gt", metrics_gt, "Ground-truth volume")->required();
  metrics_cmd->add_option("--threshold", metrics_threshold, "Threshold for float volumes");
  metrics_cmd->add_option("--csv", metrics_csv, "Also write a metrics CSV");

  // orthocheck
  auto* ortho_cmd = app.add_subcommand("orthocheck", "Check orthogonality of the polynomial families by quadrature");
  std::vector<std::string> ortho_families{"legendre", "chebyshev", "hermite"};
  int ortho_max_order = 10;
  double ortho_tol = 1e-8;
  std::string ortho_exponent = "standard";
  ortho_cmd->add_option("--family", ortho_families, "Families to check")
      ->delimiter(',')
      ->check(CLI::IsMember({"legendre", "chebyshev", "hermite"}));
  ortho_cmd->add_option("--max-order", ortho_max_order, "Highest order checked")->check(CLI::Range(0, 64));
  ortho_cmd->add_option("--tolerance", ortho_tol, "Absolute tolerance");
  ortho_cmd->add_option("--hermite-exponent", ortho_exponent, "standard or paper")
      ->check(CLI::IsMember({"standard", "paper"}));

  // dataset
  auto* dataset_cmd = app.add_subcommand("dataset", "Emit a batch of corrupted samples plus a manifest");
  PhantomFlags dataset_phantom;
  MaskFlags dataset_mask;
  NoiseFlags dataset_noise;
  std::string dataset_gt_dir, dataset_manifest;
  size_t dataset_count = 16;
  dataset_cmd->add_option("--gt-dir", dataset_gt_dir, "Directory of ground-truth volumes (instead of a phantom)");
  dataset_phantom.add(dataset_cmd, "--phantom");
  dataset_mask.add(dataset_cmd, false);
  dataset_noise.add(dataset_cmd);
  dataset_cmd->add_option("--count", dataset_count, "Number of samples")->check(CLI::PositiveNumber);
  dataset_cmd->add_option("--from-manifest", dataset_manifest, "Regenerate the samples listed in a manifest");

  // ablate
  auto* ablate_cmd = app.add_subcommand("ablate", "Sweep families and orders; report mean Betti errors and mask statistics");
  std::vector<std::string> ablate_families{"legendre", "chebyshev", "hermite"};
  std::vector<int> ablate_orders{4, 6, 8, 10};
  size_t ablate_seeds = 100;
  std::string ablate_csv = "ablation.csv", ablate_mapping = "symmetric", ablate_exponent = "standard";
  PhantomFlags ablate_phantom;
  NoiseFlags ablate_noise;
  ablate_cmd->add_option("--families", ablate_families, "Families to sweep")
      ->delimiter(',')
      ->check(CLI::IsMember({"legendre", "chebyshev", "hermite"}));
  ablate_cmd->add_option("--orders", ablate_orders, "Orders to sweep")->delimiter(',')->check(CLI::Range(0, 64));
  ablate_cmd->add_option("--seeds", ablate_seeds, "Masks per (family, order)")->check(CLI::PositiveNumber);
  ablate_cmd->add_option("--mapping", ablate_mapping, "Grid coordinate mapping")
      ->check(CLI::IsMember({"symmetric", "unit"}));
  ablate_cmd->add_option("--hermite-exponent", ablate_exponent, "standard or paper")
      ->check(CLI::IsMember({"standard", "paper"}));
  ablate_phantom.add(ablate_cmd, "--phantom");
  ablate_noise.add(ablate_cmd);
  ablate_cmd->add_option("--out-csv", ablate_csv, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "topoforge: error status=validation code=1 message=\"" << e.what() << "\"\n";
    return 1;
  }

  CLI::App* active = app.get_subcommands().front();
  std::cerr << "# effective configuration\n"
            << "seed=" << global.seed << "\nthreads=" << global.threads << "\nout-dir=\"" << global.out_dir
            << "\"\nformat-version=\"" << global.format_version << "\"\n[" << active->get_name() << "]\n"
            << active->config_to_str(true, false);

  try {
    if (*phantom_cmd) {
      if (phantom_list) {
        std::cout << tf_phantom_catalog_json() << "\n";
        return 0;
      }
      const tf_phantom_params p = phantom_flags.params(global.seed);
      tf_volume* raw = nullptr;
      tf_betti declared{};
      check(tf_phantom_generate(&p, &raw, &declared));
      VolumePtr volume(raw);
      const std::string out = resolve(global, phantom_out);
      check(tf_volume_write(volume.get(), out.c_str()));
      std::cout << nlohmann::json{{"out", out}, {"declared_betti", betti_json(declared)}}.dump() << "\n";
    } else if (*mask_cmd) {
      const tf_mask_params p = mask_flags.params(global.seed);
      tf_volume* raw = nullptr;
      int degenerate = 0;
      check(tf_mask_synthesize(&p, &raw, &degenerate));
      VolumePtr mask(raw);
      const std::string out = resolve(global, mask_out);
      check(tf_volume_write(mask.get(), out.c_str()));
      if (degenerate) std::cerr << "warning: constant field, mask set to 0.5\n";
      std::cout << nlohmann::json{{"out", out}, {"degenerate", degenerate != 0}}.dump() << "\n";
    } else if (*corrupt_cmd) {
      VolumePtr gt = read(corrupt_gt);
      VolumePtr mask;
      if (!corrupt_mask.empty()) {
        mask = read(corrupt_mask);
      } else {
        size_t dims[3];
        tf_volume_dims(gt.get(), dims);
        MaskFlags flags = corrupt_mask_flags;
        flags.dims.assign(dims, dims + tf_volume_rank(gt.get()));
        const tf_mask_params p = flags.params(global.seed);
        tf_volume* raw = nullptr;
        check(tf_mask_synthesize(&p, &raw, nullptr));
        mask.reset(raw);
      }
      tf_volume* raw = nullptr;
      check(tf_corrupt(gt.get(), mask.get(), &raw));
      VolumePtr clean(raw);
      const tf_noise_params noise = corrupt_noise.params(global.seed);
      check(tf_apply_overseg_noise(clean.get(), &noise, &raw));
      VolumePtr noisy(raw);
      const std::string out = resolve(global, corrupt_out);
      check(tf_volume_write(noisy.get(), out.c_str()));
      tf_metrics metrics{};
      check(tf_metrics_compute(noisy.get(), gt.get(), noise.threshold, &metrics));
      if (!corrupt_binary_out.empty()) {
        check(tf_binarize(noisy.get(), noise.threshold, &raw));
        VolumePtr binary(raw);
        check(tf_volume_write(binary.get(), resolve(global, corrupt_binary_out).c_str()));
      }
      std::cout << nlohmann::json{{"out", out}, {"metrics", metrics_json(metrics)}}.dump() << "\n";
    } else if (*betti_cmd) {
      VolumePtr volume = read(betti_input);
      tf_betti b{};
      check(tf_betti_compute(volume.get(), betti_threshold, &b));
      std::cout << betti_json(b).dump() << "\n";
    } else if (*metrics_cmd) {
      VolumePtr pred = read(metrics_pred);
      VolumePtr gt = read(metrics_gt);
      tf_metrics m{};
      check(tf_metrics_compute(pred.get(), gt.get(), metrics_threshold, &m));
      if (!metrics_csv.empty()) {
        const std::string id = fs::path(metrics_pred).stem().string();
        const char* ids[] = {id.c_str()};
        check(tf_metrics_write_csv(&m, ids, 1, resolve(global, metrics_csv).c_str()));
      }
      std::cout << metrics_json(m).dump() << "\n";
    } else if (*ortho_cmd) {
      bool all_pass = true;
      std::printf("%-10s %3s %3s %22s %22s %12s %s\n", "family", "m", "n", "inner_product", "expected",
                  "abs_error", "status");
      for (const std::string& name : ortho_families) {
        size_t count = 0;
        int pass = 0;
        check(tf_orthocheck(kFamilies.at(name), kExponents.at(ortho_exponent), ortho_max_order, ortho_tol,
                            nullptr, 0, &count, &pass));
        std::vector<tf_ortho_entry> entries(count);
        check(tf_orthocheck(kFamilies.at(name), kExponents.at(ortho_exponent), ortho_max_order, ortho_tol,
                            entries.data(), entries.size(), &count, &pass));
        for (const tf_ortho_entry& e : entries) {
          std::printf("%-10s %3d %3d %22.15e %22.15e %12.3e %s\n", name.c_str(), e.m, e.n, e.value, e.expected,
                      e.abs_error, std::isnan(e.expected) ? "n/a" : (e.pass ? "PASS" : "FAIL"));
        }
        all_pass = all_pass && pass;
      }
      std::printf("overall: %s\n", all_pass ? "PASS" : "FAIL");
      return all_pass ? 0 : 1;
    } else if (*dataset_cmd) {
      if (!dataset_manifest.empty()) {
        check(tf_dataset_regenerate(dataset_manifest.c_str(), global.out_dir.c_str(), global.threads));
      } else {
        tf_dataset_params p{};
        p.out_dir = global.out_dir.c_str();
        p.gt_dir = dataset_gt_dir.c_str();
        p.phantom = dataset_phantom.params(0);
        p.count = dataset_count;
        p.mask = dataset_mask.params(0);
        p.noise = dataset_noise.params(0);
        p.global_seed = global.seed;
        p.threads = global.threads;
        check(tf_dataset_generate(&p));
      }
      std::cout << nlohmann::json{{"manifest", (fs::path(global.out_dir) / "manifest.json").string()}}.dump()
                << "\n";
    } else if (*ablate_cmd) {
      std::vector<tf_family> families;
      for (const auto& f : ablate_families) families.push_back(kFamilies.at(f));
      tf_ablation_params p{};
      p.families = families.data();
      p.family_count = families.size();
      p.hermite_exponent = kExponents.at(ablate_exponent);
      p.orders = ablate_orders.data();
      p.order_count = ablate_orders.size();
      p.seeds = ablate_seeds;
      p.phantom = ablate_phantom.params(0);
      p.mapping = kMappings.at(ablate_mapping);
      p.noise = ablate_noise.params(0);
      p.global_seed = global.seed;
      p.threads = global.threads;
      const std::string csv = resolve(global, ablate_csv);
      p.out_csv = csv.c_str();
      std::vector<tf_ablation_row> rows(families.size() * ablate_orders.size());
      size_t count = 0;
      check(tf_ablation_run(&p, rows.data(), rows.size(), &count));
      for (size_t i = 0; i < count; ++i) {
        const tf_ablation_row& r = rows[i];
        std::cerr << family_label(r.family) << " order " << r.order << ": mean e " << r.mean_e
                  << ", mean mask components " << r.mean_components << "\n";
      }
      std::cout << nlohmann::json{{"csv", csv}, {"rows", count}}.dump() << "\n";
    }
  } catch (const Failure& f) {
    std::cerr << "topoforge: error status=" << tf_status_name(f.status) << " code=" << exit_code_for(f.status)
              << " message=" << nlohmann::json(f.message).dump() << "\n";
    return exit_code_for(f.status);
  }
  return 0;
}
