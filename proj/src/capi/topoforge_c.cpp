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

#include "topoforge/topoforge.h"

#include <cstring>
#include <limits>
#include <string>
#include <utility>

#include "core/corruption.hpp"
#include "core/error.hpp"
#include "core/io.hpp"
#include "core/perturbation.hpp"
#include "core/phantom.hpp"
#include "core/pipeline.hpp"
#include "core/serialize.hpp"
#include "core/topology.hpp"

namespace tf = topoforge;

struct tf_volume {
  tf::Volume volume;
  std::string provenance = "{}";
};

namespace {

thread_local std::string g_last_error;

tf_status record(tf::ErrorCode code, const char* message) {
  g_last_error = message;
  return static_cast<tf_status>(code);
}

// Runs f, translating exceptions into status codes and tf_last_error().
template <class F>
tf_status guard(F&& f) noexcept {
  try {
    f();
    return TF_OK;
  } catch (const tf::Error& e) {
    return record(e.code(), e.what());
  } catch (const nlohmann::json::exception& e) {
    return record(tf::ErrorCode::kBadMetadata, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return record(tf::ErrorCode::kIo, e.what());
  } catch (const std::bad_alloc&) {
    return record(tf::ErrorCode::kInternal, "out of memory");
  } catch (const std::exception& e) {
    return record(tf::ErrorCode::kInternal, e.what());
  } catch (...) {
    return record(tf::ErrorCode::kInternal, "unknown error");
  }
}

void require_ptr(const void* p, const char* what) {
  tf::require(p != nullptr, tf::ErrorCode::kInvalidInput, std::string(what) + " must not be NULL");
}

tf::PolynomialFamily to_family(tf_family family, tf_hermite_exponent exponent) {
  tf::PolynomialFamily out;
  switch (family) {
    case TF_LEGENDRE: out.kind = tf::PolynomialKind::kLegendre; break;
    case TF_CHEBYSHEV: out.kind = tf::PolynomialKind::kChebyshevFirstKind; break;
    case TF_HERMITE_GAUSSIAN: out.kind = tf::PolynomialKind::kHermiteGaussian; break;
    default: tf::fail(tf::ErrorCode::kInvalidInput, "unknown polynomial family");
  }
  out.hermite_exponent = exponent == TF_HERMITE_PAPER_AS_WRITTEN ? tf::HermiteExponent::kPaperAsWritten
                                                                 : tf::HermiteExponent::kStandard;
  return out;
}

tf_family from_kind(tf::PolynomialKind kind) {
  switch (kind) {
    case tf::PolynomialKind::kLegendre: return TF_LEGENDRE;
    case tf::PolynomialKind::kChebyshevFirstKind: return TF_CHEBYSHEV;
    case tf::PolynomialKind::kHermiteGaussian: return TF_HERMITE_GAUSSIAN;
  }
  return TF_LEGENDRE;
}

tf::Extent to_extent(int rank, const size_t dims[3]) {
  tf::require(rank == 2 || rank == 3, tf::ErrorCode::kInvalidInput, "rank must be 2 or 3");
  return tf::Extent::from(std::span<const size_t>(dims, static_cast<size_t>(rank)));
}

tf::MaskSpec to_mask_spec(const tf_mask_params& p) {
  tf::MaskSpec spec;
  spec.basis.family = to_family(p.family, p.hermite_exponent);
  spec.basis.max_order = p.order;
  spec.basis.rank = p.rank;
  spec.basis.mapping =
      p.mapping == TF_MAP_UNIT_INTERVAL ? tf::DomainMapping::kUnitInterval : tf::DomainMapping::kSymmetricUnit;
  spec.dims = to_extent(p.rank, p.dims);
  spec.seed = p.seed;
  spec.coeff_mean = p.coeff_mean;
  spec.coeff_std = p.coeff_std;
  spec.normalization = p.normalization == TF_NORM_NONE ? tf::Normalization::kNone : tf::Normalization::kMinMaxUnit;
  return spec;
}

tf::CorruptionSpec to_corruption(const tf_noise_params& p) {
  tf::CorruptionSpec spec;
  spec.noise_std = p.noise_std;
  spec.blob_rate = p.blob_rate;
  spec.blob_radius_min = p.blob_radius_min;
  spec.blob_radius_max = p.blob_radius_max;
  spec.threshold = p.threshold;
  spec.seed = p.seed;
  return spec;
}

tf::PhantomSpec to_phantom(const tf_phantom_params& p) {
  tf::require(p.kind >= TF_PHANTOM_BOX && p.kind <= TF_PHANTOM_LOOPGRID, tf::ErrorCode::kInvalidInput,
              "unknown phantom kind");
  tf::PhantomSpec spec;
  spec.kind = static_cast<tf::PhantomKind>(p.kind);
  spec.dims = to_extent(3, p.dims);
  spec.radius = p.radius;
  spec.thickness = p.thickness;
  spec.loops = p.loops;
  spec.seed = p.seed;
  spec.jitter = p.jitter;
  return spec;
}

tf_betti to_c(const tf::BettiNumbers& b, std::int64_t euler) {
  return {b.b0, b.b1, b.b2, euler, static_cast<int>(b.foreground), static_cast<int>(b.background)};
}

tf::BettiNumbers from_c(const tf_betti& b) {
  tf::BettiNumbers out;
  out.b0 = b.b0;
  out.b1 = b.b1;
  out.b2 = b.b2;
  out.foreground = static_cast<tf::Connectivity>(b.fg_connectivity);
  out.background = static_cast<tf::Connectivity>(b.bg_connectivity);
  return out;
}

tf_volume* wrap(tf::Volume volume, const nlohmann::json& provenance) {
  return new tf_volume{std::move(volume), provenance.dump()};
}

const tf::ProbabilityMap& as_float(const tf_volume* v, const char* what) {
  const auto* grid = std::get_if<tf::ProbabilityMap>(&v->volume);
  tf::require(grid != nullptr, tf::ErrorCode::kInvalidInput, std::string(what) + " must be float32");
  return *grid;
}

const tf::LabelMap& as_labels(const tf_volume* v, const char* what) {
  const auto* grid = std::get_if<tf::LabelMap>(&v->volume);
  tf::require(grid != nullptr, tf::ErrorCode::kInvalidInput, std::string(what) + " must be uint8");
  return *grid;
}

}  // namespace

extern "C" {

const char* tf_version(void) { return TOPOFORGE_VERSION; }

const char* tf_last_error(void) { return g_last_error.c_str(); }

const char* tf_status_name(tf_status status) { return tf::error_name(static_cast<tf::ErrorCode>(status)); }

tf_status tf_volume_create(tf_element_type type, int rank, const size_t* dims, tf_volume** out) {
  return guard([&] {
    require_ptr(dims, "dims");
    require_ptr(out, "out");
    const tf::Extent extent = to_extent(rank, dims);
    if (type == TF_FLOAT32) {
      *out = wrap(tf::ProbabilityMap(extent), nlohmann::json::object());
    } else if (type == TF_UINT8) {
      *out = wrap(tf::LabelMap(extent), nlohmann::json::object());
    } else {
      tf::fail(tf::ErrorCode::kInvalidInput, "unknown element type");
    }
  });
}

tf_status tf_volume_clone(const tf_volume* volume, tf_volume** out) {
  return guard([&] {
    require_ptr(volume, "volume");
    require_ptr(out, "out");
    *out = new tf_volume(*volume);
  });
}

void tf_volume_destroy(tf_volume* volume) { delete volume; }

int tf_volume_rank(const tf_volume* volume) {
  return volume ? tf::volume_extent(volume->volume).rank : 0;
}

void tf_volume_dims(const tf_volume* volume, size_t dims[3]) {
  if (!volume || !dims) return;
  const tf::Extent& e = tf::volume_extent(volume->volume);
  for (int d = 0; d < 3; ++d) dims[d] = e.n[d];
}

tf_element_type tf_volume_element_type(const tf_volume* volume) {
  return tf::element_type(volume->volume) == tf::ElementType::kFloat32 ? TF_FLOAT32 : TF_UINT8;
}

size_t tf_volume_voxel_count(const tf_volume* volume) {
  return volume ? tf::volume_extent(volume->volume).voxels() : 0;
}

float* tf_volume_data_f32(tf_volume* volume) {
  if (!volume) return nullptr;
  auto* grid = std::get_if<tf::ProbabilityMap>(&volume->volume);
  return grid ? grid->values().data() : nullptr;
}

uint8_t* tf_volume_data_u8(tf_volume* volume) {
  if (!volume) return nullptr;
  auto* grid = std::get_if<tf::LabelMap>(&volume->volume);
  return grid ? grid->values().data() : nullptr;
}

const char* tf_volume_provenance(const tf_volume* volume) {
  return volume ? volume->provenance.c_str() : "";
}

tf_status tf_volume_set_provenance(tf_volume* volume, const char* json) {
  return guard([&] {
    require_ptr(volume, "volume");
    require_ptr(json, "json");
    volume->provenance = nlohmann::json::parse(json).dump();
  });
}

tf_status tf_volume_read(const char* path, tf_volume** out, size_t* nan_count) {
  return guard([&] {
    require_ptr(path, "path");
    require_ptr(out, "out");
    tf::LoadedVolume loaded = tf::read_volume(path);
    if (nan_count) *nan_count = loaded.nan_count;
    *out = wrap(std::move(loaded.volume), loaded.provenance);
  });
}

tf_status tf_volume_write(const tf_volume* volume, const char* path) {
  return guard([&] {
    require_ptr(volume, "volume");
    require_ptr(path, "path");
    tf::write_volume(volume->volume, path, nlohmann::json::parse(volume->provenance));
  });
}

tf_status tf_poly_eval(tf_family family, tf_hermite_exponent exponent, int order, double x, double* out) {
  return guard([&] {
    require_ptr(out, "out");
    *out = tf::eval_1d(to_family(family, exponent), order, x);
  });
}

tf_status tf_orthocheck(tf_family family, tf_hermite_exponent exponent, int max_order, double tolerance,
                        tf_ortho_entry* entries, size_t capacity, size_t* count, int* all_pass) {
  return guard([&] {
    const tf::OrthoReport report = tf::orthocheck(to_family(family, exponent), max_order, tolerance);
    if (count) *count = report.entries.size();
    if (all_pass) *all_pass = report.all_pass ? 1 : 0;
    for (size_t i = 0; i < report.entries.size() && i < capacity && entries; ++i) {
      const tf::OrthoEntry& e = report.entries[i];
      entries[i] = {e.m, e.n, e.value, e.expected, e.abs_error, e.pass ? 1 : 0};
    }
  });
}

void tf_mask_params_default(tf_mask_params* params) {
  if (!params) return;
  *params = tf_mask_params{TF_CHEBYSHEV, TF_HERMITE_STANDARD, 10, 3, {64, 64, 64}, 0, 0.0, 1.0,
                           TF_MAP_SYMMETRIC_UNIT, TF_NORM_MINMAX};
}

tf_status tf_mask_synthesize(const tf_mask_params* params, tf_volume** out, int* degenerate) {
  return guard([&] {
    require_ptr(params, "params");
    require_ptr(out, "out");
    const tf::MaskSpec spec = to_mask_spec(*params);
    tf::Mask mask = tf::synthesize_mask(spec);
    if (degenerate) *degenerate = mask.degenerate ? 1 : 0;
    *out = wrap(std::move(mask.values), {{"role", "perturbation_mask"},
                                         {"mask_spec", tf::to_json(spec)},
                                         {"degenerate", mask.degenerate}});
  });
}

tf_status tf_mask_statistics(const tf_volume* mask, double threshold, tf_mask_stats* out) {
  return guard([&] {
    require_ptr(mask, "mask");
    require_ptr(out, "out");
    const tf::MaskStatistics s = tf::mask_statistics(as_float(mask, "mask"), threshold);
    *out = {s.component_count, s.mean, s.stddev, s.saddle_proxy};
  });
}

void tf_noise_params_default(tf_noise_params* params) {
  if (!params) return;
  const tf::CorruptionSpec d;
  *params = {d.noise_std, d.blob_rate, d.blob_radius_min, d.blob_radius_max, d.threshold, d.seed};
}

tf_status tf_corrupt(const tf_volume* gt, const tf_volume* mask, tf_volume** out) {
  return guard([&] {
    require_ptr(gt, "gt");
    require_ptr(mask, "mask");
    require_ptr(out, "out");
    const tf::LabelMap& labels = as_labels(gt, "ground truth");
    tf::ProbabilityMap result = tf::corrupt(labels, as_float(mask, "mask"));
    nlohmann::json provenance{{"role", "corrupted_probability_map"}};
    const auto mask_prov = nlohmann::json::parse(mask->provenance);
    if (mask_prov.contains("mask_spec")) provenance["mask_spec"] = mask_prov["mask_spec"];
    *out = wrap(std::move(result), provenance);
  });
}

tf_status tf_apply_overseg_noise(const tf_volume* map, const tf_noise_params* params, tf_volume** out) {
  return guard([&] {
    require_ptr(map, "map");
    require_ptr(params, "params");
    require_ptr(out, "out");
    const tf::CorruptionSpec spec = to_corruption(*params);
    auto provenance = nlohmann::json::parse(map->provenance);
    if (!provenance.is_object()) provenance = nlohmann::json::object();
    provenance["corruption_spec"] = tf::to_json(spec);
    *out = wrap(tf::apply_overseg_noise(as_float(map, "probability map"), spec), provenance);
  });
}

tf_status tf_binarize(const tf_volume* map, double threshold, tf_volume** out) {
  return guard([&] {
    require_ptr(map, "map");
    require_ptr(out, "out");
    *out = wrap(tf::binarize(as_float(map, "probability map"), threshold),
                {{"role", "binarized"}, {"threshold", threshold}});
  });
}

tf_status tf_betti_compute(const tf_volume* volume, double threshold, tf_betti* out) {
  return guard([&] {
    require_ptr(volume, "volume");
    require_ptr(out, "out");
    const tf::LabelMap labels = tf::as_binary(volume->volume, threshold);
    *out = to_c(tf::betti(labels), tf::euler_characteristic(labels));
  });
}

tf_status tf_metrics_compute(const tf_volume* pred, const tf_volume* gt, double threshold, tf_metrics* out) {
  return guard([&] {
    require_ptr(pred, "pred");
    require_ptr(gt, "gt");
    require_ptr(out, "out");
    const tf::LabelMap p = tf::as_binary(pred->volume, threshold);
    const tf::LabelMap g = tf::as_binary(gt->volume, threshold);
    const tf::MetricsReport r = tf::evaluate(p, g);
    *out = {r.dice, r.e0, r.e1, r.e2, r.e,
            to_c(r.prediction, tf::euler_characteristic(p)), to_c(r.truth, tf::euler_characteristic(g))};
  });
}

tf_status tf_metrics_write_csv(const tf_metrics* reports, const char* const* ids, size_t count,
                               const char* path) {
  return guard([&] {
    require_ptr(path, "path");
    tf::require(count == 0 || reports != nullptr, tf::ErrorCode::kInvalidInput, "reports must not be NULL");
    std::vector<tf::MetricsReport> converted;
    std::vector<std::string> names;
    for (size_t i = 0; i < count; ++i) {
      const tf_metrics& m = reports[i];
      tf::MetricsReport r;
      r.dice = m.dice;
      r.e0 = m.e0;
      r.e1 = m.e1;
      r.e2 = m.e2;
      r.e = m.e;
      r.prediction = from_c(m.pred);
      r.truth = from_c(m.gt);
      converted.push_back(r);
      if (ids) names.emplace_back(ids[i] ? ids[i] : std::to_string(i));
    }
    tf::write_metrics_csv(converted, names, path);
  });
}

void tf_phantom_params_default(tf_phantom_params* params) {
  if (!params) return;
  *params = tf_phantom_params{TF_PHANTOM_RING, {64, 64, 64}, 0.0, 0.0, 4, 0, 0.0};
}

tf_status tf_phantom_generate(const tf_phantom_params* params, tf_volume** out, tf_betti* declared) {
  return guard([&] {
    require_ptr(params, "params");
    require_ptr(out, "out");
    const tf::PhantomSpec spec = to_phantom(*params);
    tf::Phantom phantom = tf::generate(spec);
    if (declared) *declared = to_c(phantom.declared, phantom.declared.b0 - phantom.declared.b1 + phantom.declared.b2);
    *out = wrap(std::move(phantom.volume), {{"role", "ground_truth"},
                                            {"phantom", tf::to_json(spec)},
                                            {"declared_betti", tf::to_json(phantom.declared)}});
  });
}

const char* tf_phantom_catalog_json(void) {
  static const std::string catalog = [] {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& entry : tf::list_phantoms()) {
      nlohmann::json params = nlohmann::json::array();
      for (const auto& p : entry.params) {
        params.push_back({{"name", p.name}, {"meaning", p.meaning}, {"default", p.default_value}});
      }
      entries.push_back({{"kind", entry.name},
                         {"description", entry.description},
                         {"params", params},
                         {"declared_betti", tf::to_json(entry.declared)}});
    }
    return entries.dump(2);
  }();
  return catalog.c_str();
}

tf_status tf_dataset_generate(const tf_dataset_params* params) {
  return guard([&] {
    require_ptr(params, "params");
    require_ptr(params->out_dir, "out_dir");
    tf::DatasetConfig config;
    if (params->gt_dir && params->gt_dir[0] != '\0') {
      config.gt_dir = params->gt_dir;
    } else {
      config.phantom = to_phantom(params->phantom);
    }
    config.count = params->count;
    tf_mask_params mask = params->mask;
    if (config.phantom) {
      mask.rank = 3;
      for (int d = 0; d < 3; ++d) mask.dims[d] = params->phantom.dims[d];
    }
    config.mask = to_mask_spec(mask);
    config.corruption = to_corruption(params->noise);
    config.global_seed = params->global_seed;
    config.threads = params->threads;
    config.out_dir = params->out_dir;
    tf::generate_dataset(config);
  });
}

tf_status tf_dataset_regenerate(const char* manifest_path, const char* out_dir, unsigned threads) {
  return guard([&] {
    require_ptr(manifest_path, "manifest_path");
    require_ptr(out_dir, "out_dir");
    tf::regenerate_dataset(manifest_path, out_dir, threads);
  });
}

tf_status tf_ablation_run(const tf_ablation_params* params, tf_ablation_row* rows, size_t capacity,
                          size_t* count) {
  return guard([&] {
    require_ptr(params, "params");
    tf::require(params->family_count > 0 && params->families, tf::ErrorCode::kInvalidInput,
                "ablation needs at least one family");
    tf::require(params->order_count > 0 && params->orders, tf::ErrorCode::kInvalidInput,
                "ablation needs at least one order");
    tf::AblationConfig config;
    for (size_t i = 0; i < params->family_count; ++i) {
      config.families.push_back(to_family(params->families[i], params->hermite_exponent));
    }
    config.orders.assign(params->orders, params->orders + params->order_count);
    config.seeds = params->seeds;
    config.phantom = to_phantom(params->phantom);
    config.mapping = params->mapping == TF_MAP_UNIT_INTERVAL ? tf::DomainMapping::kUnitInterval
                                                             : tf::DomainMapping::kSymmetricUnit;
    config.corruption = to_corruption(params->noise);
    config.global_seed = params->global_seed;
    config.threads = params->threads;
    const auto result = tf::run_ablation(config);
    if (params->out_csv) tf::write_ablation_csv(result, params->out_csv);
    if (count) *count = result.size();
    for (size_t i = 0; i < result.size() && i < capacity && rows; ++i) {
      const tf::AblationRow& r = result[i];
      rows[i] = {from_kind(r.family.kind), r.order, r.seeds, r.mean_e, r.std_e, r.mean_e0, r.mean_e1,
                 r.mean_e2, r.mean_dice, r.topology_change_rate, r.mean_components, r.std_components,
                 r.mean_saddle_proxy, r.degenerate_masks};
    }
  });
}

}  // extern "C"
