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
#include <cstdint>
#include <string_view>

namespace topoforge {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
/// Output for a (counter, key) pair is fixed forever; all seeded draws in the
/// toolkit go through this function so files stay reproducible across
/// compilers and standard libraries.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::string_view kName = "philox4x32-10";

  static Counter generate(Counter counter, Key key);
};

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for the index-th child of a parent seed.
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);

/// Sequential draws from one Philox stream. The stream is identified by a
/// 64-bit key and a 32-bit stream id; draw k always comes from block k/4.
class RandomStream {
 public:
  RandomStream(std::uint64_t key, std::uint32_t stream_id);

  std::uint32_t next_u32();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer on [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Standard normal via Box-Muller; pairs are consumed in order.
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }
  /// Poisson(lambda) by multiplication of uniforms; lambda expected small.
  std::uint64_t poisson(double lambda);

 private:
  Philox4x32::Key key_;
  std::uint32_t stream_id_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  int used_ = 4;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace topoforge
