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

#include "core/topology.hpp"

#include <array>
#include <numeric>
#include <vector>

#include "core/error.hpp"

namespace topoforge {

namespace {

struct Offset {
  int dx, dy, dz;
};

// Neighbors that precede a voxel in raster order (z, then y, then x).
std::vector<Offset> backward_offsets(Connectivity c) {
  std::vector<Offset> out;
  const bool three_d = c == Connectivity::k6 || c == Connectivity::k26;
  for (int dz = three_d ? -1 : 0; dz <= 0; ++dz) {
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        const bool before = dz < 0 || (dz == 0 && (dy < 0 || (dy == 0 && dx < 0)));
        if (!before) continue;
        const int manhattan = std::abs(dx) + std::abs(dy) + std::abs(dz);
        if ((c == Connectivity::k4 || c == Connectivity::k6) && manhattan != 1) continue;
        out.push_back({dx, dy, dz});
      }
    }
  }
  return out;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller index stays root
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void check_connectivity(const Extent& e, Connectivity c) {
  const bool three_d = c == Connectivity::k6 || c == Connectivity::k26;
  require(three_d == (e.rank == 3), ErrorCode::kInvalidInput,
          std::string("connectivity ") + std::string(connectivity_name(c)) + " does not apply to a " +
              std::to_string(e.rank) + "D volume");
}

}  // namespace

std::string_view connectivity_name(Connectivity c) {
  switch (c) {
    case Connectivity::k4: return "4";
    case Connectivity::k8: return "8";
    case Connectivity::k6: return "6";
    case Connectivity::k26: return "26";
  }
  return "?";
}

Components connected_components(const LabelMap& volume, Connectivity connectivity) {
  const Extent& e = volume.extent();
  check_connectivity(e, connectivity);
  require(volume.size() < 0xFFFFFFFFu, ErrorCode::kInvalidInput, "volume too large for labeling");
  const auto offsets = backward_offsets(connectivity);
  const std::size_t nx = e.nx(), ny = e.ny(), nz = e.nz();

  DisjointSets sets(volume.size());
  for (std::size_t z = 0; z < nz; ++z) {
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t x = 0; x < nx; ++x) {
        const std::size_t v = e.index(x, y, z);
        if (!volume[v]) continue;
        for (const Offset& o : offsets) {
          const auto qx = static_cast<std::ptrdiff_t>(x) + o.dx;
          const auto qy = static_cast<std::ptrdiff_t>(y) + o.dy;
          const auto qz = static_cast<std::ptrdiff_t>(z) + o.dz;
          if (qx < 0 || qy < 0 || qz < 0 || qx >= static_cast<std::ptrdiff_t>(nx) ||
              qy >= static_cast<std::ptrdiff_t>(ny)) {
            continue;
          }
          const std::size_t q = e.index(qx, qy, qz);
          if (volume[q]) sets.unite(static_cast<std::uint32_t>(v), static_cast<std::uint32_t>(q));
        }
      }
    }
  }

  Components out{0, Grid<std::uint32_t>(e, 0u)};
  std::vector<std::uint32_t> root_label(volume.size(), 0u);
  for (std::size_t v = 0; v < volume.size(); ++v) {
    if (!volume[v]) continue;
    const std::uint32_t root = sets.find(static_cast<std::uint32_t>(v));
    if (root_label[root] == 0) root_label[root] = static_cast<std::uint32_t>(++out.count);
    out.labels[v] = root_label[root];
  }
  return out;
}

std::int64_t euler_characteristic(const LabelMap& volume) {
  const Extent& e = volume.extent();
  const auto nx = static_cast<std::ptrdiff_t>(e.nx());
  const auto ny = static_cast<std::ptrdiff_t>(e.ny());
  const auto nz = static_cast<std::ptrdiff_t>(e.nz());
  auto fg = [&](std::ptrdiff_t x, std::ptrdiff_t y, std::ptrdiff_t z) -> bool {
    if (x < 0 || y < 0 || z < 0 || x >= nx || y >= ny || z >= nz) return false;
    return volume[e.index(x, y, z)] != 0;
  };

  // Sweep the lattice points; each point anchors one vertex, the edges leaving
  // it in +x/+y/+z, the faces spanning two of those directions and the cube
  // spanning all three. A cell exists if any voxel containing it is set.
  std::int64_t chi = 0;
  if (e.rank == 2) {
    for (std::ptrdiff_t y = 0; y <= ny; ++y) {
      for (std::ptrdiff_t x = 0; x <= nx; ++x) {
        if (fg(x - 1, y - 1, 0) || fg(x, y - 1, 0) || fg(x - 1, y, 0) || fg(x, y, 0)) ++chi;
        if (fg(x, y - 1, 0) || fg(x, y, 0)) --chi;  // edge along +x
        if (fg(x - 1, y, 0) || fg(x, y, 0)) --chi;  // edge along +y
        if (fg(x, y, 0)) ++chi;
      }
    }
    return chi;
  }
  for (std::ptrdiff_t z = 0; z <= nz; ++z) {
    for (std::ptrdiff_t y = 0; y <= ny; ++y) {
      for (std::ptrdiff_t x = 0; x <= nx; ++x) {
        bool vertex = false;
        for (int c = 0; c < 8 && !vertex; ++c) {
          vertex = fg(x - (c & 1), y - ((c >> 1) & 1), z - ((c >> 2) & 1));
        }
        if (vertex) ++chi;
        // Edges: +x shares voxels (x, y-1..y, z-1..z); likewise for +y, +z.
        bool ex = false, ey = false, ez = false;
        for (int c = 0; c < 4; ++c) {
          const int a = c & 1, b = (c >> 1) & 1;
          ex = ex || fg(x, y - a, z - b);
          ey = ey || fg(x - a, y, z - b);
          ez = ez || fg(x - a, y - b, z);
        }
        chi -= static_cast<int>(ex) + static_cast<int>(ey) + static_cast<int>(ez);
        // Faces: xy-face at height z, xz-face at depth y, yz-face at x.
        const bool fxy = fg(x, y, z - 1) || fg(x, y, z);
        const bool fxz = fg(x, y - 1, z) || fg(x, y, z);
        const bool fyz = fg(x - 1, y, z) || fg(x, y, z);
        chi += static_cast<int>(fxy) + static_cast<int>(fxz) + static_cast<int>(fyz);
        if (fg(x, y, z)) --chi;
      }
    }
  }
  return chi;
}

BettiNumbers betti(const LabelMap& volume) {
  const Extent& e = volume.extent();
  const bool three_d = e.rank == 3;
  BettiNumbers out;
  out.foreground = three_d ? Connectivity::k26 : Connectivity::k8;
  out.background = three_d ? Connectivity::k6 : Connectivity::k4;

  out.b0 = static_cast<std::int64_t>(connected_components(volume, out.foreground).count);

  Extent padded = e;
  for (int d = 0; d < e.rank; ++d) padded.n[d] += 2;
  LabelMap background(padded, 1);
  const std::size_t pz = three_d ? 1 : 0;
  for (std::size_t z = 0; z < e.nz(); ++z) {
    for (std::size_t y = 0; y < e.ny(); ++y) {
      for (std::size_t x = 0; x < e.nx(); ++x) {
        background.at(x + 1, y + 1, z + pz) = volume.at(x, y, z) ? 0 : 1;
      }
    }
  }
  const auto bounded =
      static_cast<std::int64_t>(connected_components(background, out.background).count) - 1;
  const std::int64_t chi = euler_characteristic(volume);

  if (three_d) {
    out.b2 = bounded;
    out.b1 = out.b0 + out.b2 - chi;
    require(out.b1 >= 0, ErrorCode::kInternal,
            "negative first Betti number: b0=" + std::to_string(out.b0) +
                " b2=" + std::to_string(out.b2) + " chi=" + std::to_string(chi));
  } else {
    out.b1 = bounded;
    require(out.b0 - out.b1 == chi, ErrorCode::kInternal,
            "2D Betti numbers disagree with the Euler characteristic: b0=" +
                std::to_string(out.b0) + " b1=" + std::to_string(out.b1) +
                " chi=" + std::to_string(chi));
  }
  return out;
}

void require_binary(const LabelMap& volume, const char* what) {
  for (std::uint8_t v : volume) {
    require(v <= 1, ErrorCode::kInvalidInput, std::string(what) + " must be binary {0,1}");
  }
}

double dice(const LabelMap& prediction, const LabelMap& truth) {
  require_same_extent(prediction.extent(), truth.extent(), "dice");
  require_binary(prediction, "dice prediction");
  require_binary(truth, "dice truth");
  std::size_t p = 0, g = 0, both = 0;
  for (std::size_t v = 0; v < prediction.size(); ++v) {
    const bool a = prediction[v] != 0;
    const bool b = truth[v] != 0;
    p += a;
    g += b;
    both += a && b;
  }
  if (p + g == 0) return 1.0;
  return 2.0 * static_cast<double>(both) / static_cast<double>(p + g);
}

MetricsReport betti_error(const LabelMap& prediction, const LabelMap& truth) {
  require_same_extent(prediction.extent(), truth.extent(), "betti error");
  MetricsReport report;
  report.prediction = betti(prediction);
  report.truth = betti(truth);
  report.e0 = std::abs(report.prediction.b0 - report.truth.b0);
  report.e1 = std::abs(report.prediction.b1 - report.truth.b1);
  report.e2 = std::abs(report.prediction.b2 - report.truth.b2);
  report.e = report.e0 + report.e1;
  return report;
}

MetricsReport evaluate(const LabelMap& prediction, const LabelMap& truth) {
  MetricsReport report = betti_error(prediction, truth);
  report.dice = dice(prediction, truth);
  return report;
}

}  // namespace topoforge
