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

/*
 * topoforge C API.
 *
 * Every fallible call returns a tf_status; on failure a human-readable
 * message is available from tf_last_error() on the calling thread until the
 * next failing call on that thread. Volumes are opaque handles created by the
 * library and released with tf_volume_destroy().
 */
#ifndef TOPOFORGE_TOPOFORGE_H
#define TOPOFORGE_TOPOFORGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TOPOFORGE_BUILDING_LIBRARY)
#    define TF_API __declspec(dllexport)
#  else
#    define TF_API __declspec(dllimport)
#  endif
#else
#  define TF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_INVALID_INPUT = 1,
  TF_ERR_ORDER_OVERFLOW = 2,
  TF_ERR_DEGENERATE_GRID = 3,
  TF_ERR_CONFIGURATION = 4,
  TF_ERR_SHAPE_MISMATCH = 5,
  TF_ERR_IO = 6,
  TF_ERR_LENGTH_MISMATCH = 7,
  TF_ERR_UNKNOWN_VERSION = 8,
  TF_ERR_BAD_METADATA = 9,
  TF_ERR_INTERNAL = 10
} tf_status;

typedef enum tf_element_type { TF_FLOAT32 = 0, TF_UINT8 = 1 } tf_element_type;

typedef enum tf_family {
  TF_LEGENDRE = 0,
  TF_CHEBYSHEV = 1,
  TF_HERMITE_GAUSSIAN = 2
} tf_family;

/* Gaussian factor of the Hermite functions: exp(-x^2/2) or exp(-x^2/3). */
typedef enum tf_hermite_exponent {
  TF_HERMITE_STANDARD = 0,
  TF_HERMITE_PAPER_AS_WRITTEN = 1
} tf_hermite_exponent;

typedef enum tf_mapping { TF_MAP_SYMMETRIC_UNIT = 0, TF_MAP_UNIT_INTERVAL = 1 } tf_mapping;

typedef enum tf_normalization { TF_NORM_MINMAX = 0, TF_NORM_NONE = 1 } tf_normalization;

typedef enum tf_phantom_kind {
  TF_PHANTOM_BOX = 0,
  TF_PHANTOM_TUBE = 1,
  TF_PHANTOM_RING = 2,
  TF_PHANTOM_SHELL = 3,
  TF_PHANTOM_YJUNCTION = 4,
  TF_PHANTOM_LOOPGRID = 5
} tf_phantom_kind;

typedef struct tf_volume tf_volume;

TF_API const char* tf_version(void);
TF_API const char* tf_last_error(void);
TF_API const char* tf_status_name(tf_status status);

/* ---- volumes ---------------------------------------------------------- */

/* rank is 2 or 3; dims holds rank entries. The payload is zero-filled. */
TF_API tf_status tf_volume_create(tf_element_type type, int rank, const size_t* dims, tf_volume** out);
TF_API tf_status tf_volume_clone(const tf_volume* volume, tf_volume** out);
TF_API void tf_volume_destroy(tf_volume* volume);
TF_API int tf_volume_rank(const tf_volume* volume);
/* Writes 3 entries; unused trailing axes are 1. */
TF_API void tf_volume_dims(const tf_volume* volume, size_t dims[3]);
TF_API tf_element_type tf_volume_element_type(const tf_volume* volume);
TF_API size_t tf_volume_voxel_count(const tf_volume* volume);
/* Return NULL when the element type does not match. Layout is x fastest. */
TF_API float* tf_volume_data_f32(tf_volume* volume);
TF_API uint8_t* tf_volume_data_u8(tf_volume* volume);
/* Provenance JSON attached to the handle and written into the sidecar. */
TF_API const char* tf_volume_provenance(const tf_volume* volume);
TF_API tf_status tf_volume_set_provenance(tf_volume* volume, const char* json);

/* path may be the base name or either of <base>.json / <base>.raw. */
TF_API tf_status tf_volume_read(const char* path, tf_volume** out, size_t* nan_count);
TF_API tf_status tf_volume_write(const tf_volume* volume, const char* path);

/* ---- polynomials ------------------------------------------------------ */

TF_API tf_status tf_poly_eval(tf_family family, tf_hermite_exponent exponent, int order, double x,
                              double* out);

typedef struct tf_ortho_entry {
  int m;
  int n;
  double value;
  double expected; /* NaN when no reference exists */
  double abs_error;
  int pass;
} tf_ortho_entry;

/* Fills up to capacity entries (pairs m <= n); *count receives the total. */
TF_API tf_status tf_orthocheck(tf_family family, tf_hermite_exponent exponent, int max_order,
                               double tolerance, tf_ortho_entry* entries, size_t capacity,
                               size_t* count, int* all_pass);

/* ---- perturbation masks ----------------------------------------------- */

typedef struct tf_mask_params {
  tf_family family;
  tf_hermite_exponent hermite_exponent;
  int order;
  int rank;
  size_t dims[3];
  uint64_t seed;
  double coeff_mean;
  double coeff_std;
  tf_mapping mapping;
  tf_normalization normalization;
} tf_mask_params;

/* Chebyshev, order 10, 64^3, seed 0, N(0,1), symmetric mapping, min-max. */
TF_API void tf_mask_params_default(tf_mask_params* params);
TF_API tf_status tf_mask_synthesize(const tf_mask_params* params, tf_volume** out, int* degenerate);

typedef struct tf_mask_stats {
  size_t component_count;
  double mean;
  double stddev;
  size_t saddle_proxy;
} tf_mask_stats;

TF_API tf_status tf_mask_statistics(const tf_volume* mask, double threshold, tf_mask_stats* out);

/* ---- corruption ------------------------------------------------------- */

typedef struct tf_noise_params {
  double noise_std;
  double blob_rate;
  double blob_radius_min;
  double blob_radius_max;
  double threshold;
  uint64_t seed;
} tf_noise_params;

/* noise_std 0.05, no blobs, radii [2, 5], threshold 0.5, seed 0. */
TF_API void tf_noise_params_default(tf_noise_params* params);
TF_API tf_status tf_corrupt(const tf_volume* gt, const tf_volume* mask, tf_volume** out);
TF_API tf_status tf_apply_overseg_noise(const tf_volume* map, const tf_noise_params* params,
                                        tf_volume** out);
TF_API tf_status tf_binarize(const tf_volume* map, double threshold, tf_volume** out);

/* ---- topology --------------------------------------------------------- */

typedef struct tf_betti {
  int64_t b0;
  int64_t b1;
  int64_t b2;
  int64_t euler;
  int fg_connectivity;
  int bg_connectivity;
} tf_betti;

typedef struct tf_metrics {
  double dice;
  int64_t e0;
  int64_t e1;
  int64_t e2;
  int64_t e; /* e0 + e1 */
  tf_betti pred;
  tf_betti gt;
} tf_metrics;

/* Float volumes are binarized at threshold; uint8 volumes must be {0,1}. */
TF_API tf_status tf_betti_compute(const tf_volume* volume, double threshold, tf_betti* out);
TF_API tf_status tf_metrics_compute(const tf_volume* pred, const tf_volume* gt, double threshold,
                                    tf_metrics* out);
/* ids may be NULL (rows numbered from 0). */
TF_API tf_status tf_metrics_write_csv(const tf_metrics* reports, const char* const* ids, size_t count,
                                      const char* path);

/* ---- phantoms --------------------------------------------------------- */

typedef struct tf_phantom_params {
  tf_phantom_kind kind;
  size_t dims[3];
  double radius;    /* 0 selects the size-dependent default */
  double thickness; /* 0 selects the default */
  int loops;
  uint64_t seed;
  double jitter;
} tf_phantom_params;

TF_API void tf_phantom_params_default(tf_phantom_params* params);
TF_API tf_status tf_phantom_generate(const tf_phantom_params* params, tf_volume** out,
                                     tf_betti* declared);
/* JSON array describing each kind and its parameters. Static storage. */
TF_API const char* tf_phantom_catalog_json(void);

/* ---- batch pipelines -------------------------------------------------- */

typedef struct tf_dataset_params {
  const char* out_dir;
  const char* gt_dir; /* NULL or empty: use the phantom recipe */
  tf_phantom_params phantom;
  size_t count;
  tf_mask_params mask; /* dims and seed are overridden per sample */
  tf_noise_params noise; /* seed is overridden per sample */
  uint64_t global_seed;
  unsigned threads;
} tf_dataset_params;

TF_API tf_status tf_dataset_generate(const tf_dataset_params* params);
TF_API tf_status tf_dataset_regenerate(const char* manifest_path, const char* out_dir, unsigned threads);

typedef struct tf_ablation_params {
  const tf_family* families;
  size_t family_count;
  tf_hermite_exponent hermite_exponent;
  const int* orders;
  size_t order_count;
  size_t seeds;
  tf_phantom_params phantom;
  tf_mapping mapping;
  tf_noise_params noise; /* threshold doubles as the mask statistics threshold */
  uint64_t global_seed;
  unsigned threads;
  const char* out_csv;
} tf_ablation_params;

typedef struct tf_ablation_row {
  tf_family family;
  int order;
  size_t seeds;
  double mean_e;
  double std_e;
  double mean_e0;
  double mean_e1;
  double mean_e2;
  double mean_dice;
  double topology_change_rate;
  double mean_components;
  double std_components;
  double mean_saddle_proxy;
  size_t degenerate_masks;
} tf_ablation_row;

/* Writes the CSV when out_csv is non-NULL; rows (optional) receives up to
 * capacity rows, families outermost. */
TF_API tf_status tf_ablation_run(const tf_ablation_params* params, tf_ablation_row* rows,
                                 size_t capacity, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* TOPOFORGE_TOPOFORGE_H */
