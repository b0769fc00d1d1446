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

#include "core/phantom.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <numbers>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace topoforge {

namespace {

constexpr std::uint32_t kJitterStream = 0x5068616Eu;  // "Phan"

using Point = std::array<double, 3>;

double norm(const Point& p) { return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]); }

double segment_distance(const Point& p, const Point& a, const Point& b) {
  Point ab{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  Point ap{p[0] - a[0], p[1] - a[1], p[2] - a[2]};
  const double len2 = ab[0] * ab[0] + ab[1] * ab[1] + ab[2] * ab[2];
  const double t = std::clamp((ap[0] * ab[0] + ap[1] * ab[1] + ap[2] * ab[2]) / len2, 0.0, 1.0);
  return norm({ap[0] - t * ab[0], ap[1] - t * ab[1], ap[2] - t * ab[2]});
}

BettiNumbers declared_betti(PhantomKind kind, int loops) {
  BettiNumbers b;
  b.b0 = 1;
  if (kind == PhantomKind::kRing) b.b1 = 1;
  if (kind == PhantomKind::kLoopGrid) b.b1 = loops;
  if (kind == PhantomKind::kShell) b.b2 = 1;
  return b;
}

struct Resolved {
  double radius;
  double thickness;
};

Resolved resolve_defaults(const PhantomSpec& spec) {
  const double s = static_cast<double>(std::min({spec.dims.nx(), spec.dims.ny(), spec.dims.nz()}));
  Resolved r{spec.radius, spec.thickness};
  switch (spec.kind) {
    case PhantomKind::kBox:
      if (r.radius <= 0) r.radius = std::floor(s / 4.0);
      break;
    case PhantomKind::kTube:
      if (r.radius <= 0) r.radius = std::max(2.0, std::floor(s / 8.0));
      break;
    case PhantomKind::kRing:
    case PhantomKind::kShell:
      if (r.radius <= 0) r.radius = std::floor(s / 3.0);
      if (r.thickness <= 0) r.thickness = 3.0;
      break;
    case PhantomKind::kYJunction:
      if (r.radius <= 0) r.radius = std::max(2.0, std::floor(s / 10.0));
      break;
    case PhantomKind::kLoopGrid:
      if (r.thickness <= 0) r.thickness = 3.0;
      break;
  }
  return r;
}

// Fills voxels whose centre satisfies `inside`, after checking that the
// primitive's bounding box keeps one voxel of margin.
LabelMap rasterize(const Extent& e, const Point& lo, const Point& hi,
                   const std::function<bool(const Point&)>& inside) {
  for (int d = 0; d < 3; ++d) {
    require(lo[d] >= 1.0 && hi[d] <= static_cast<double>(e.n[d]) - 2.0, ErrorCode::kInvalidInput,
            "phantom geometry does not fit in " + e.to_string() + " with a one-voxel margin");
  }
  LabelMap out(e);
  for (std::size_t z = 0; z < e.nz(); ++z) {
    for (std::size_t y = 0; y < e.ny(); ++y) {
      for (std::size_t x = 0; x < e.nx(); ++x) {
        if (inside({static_cast<double>(x), static_cast<double>(y), static_cast<double>(z)})) {
          out.at(x, y, z) = 1;
        }
      }
    }
  }
  return out;
}

LabelMap loop_grid(const Extent& e, int loops, int t) {
  require(loops >= 1, ErrorCode::kInvalidInput, "loop grid needs at least one loop");
  require(t >= 2, ErrorCode::kInvalidInput, "loop grid bar thickness must be at least 2 voxels");
  // A ladder in the central z slab: two rails along x joined by loops + 1 rungs.
  const auto nx = static_cast<long>(e.nx()), ny = static_cast<long>(e.ny()), nz = static_cast<long>(e.nz());
  const long margin = 2;
  const long width = nx - 2 * margin;
  const long hole = (width - (loops + 1L) * t) / loops;
  const long hole_y = ny - 2 * margin - 2L * t;
  require(hole >= 2 && hole_y >= 2 && nz >= t + 2, ErrorCode::kInvalidInput,
          "loop grid with " + std::to_string(loops) + " loops does not fit in " + e.to_string());
  const long z0 = (nz - t) / 2;
  LabelMap out(e);
  auto fill = [&](long x0, long x1, long y0, long y1) {
    for (long z = z0; z < z0 + t; ++z) {
      for (long y = y0; y < y1; ++y) {
        for (long x = x0; x < x1; ++x) out.at(x, y, z) = 1;
      }
    }
  };
  const long x_end = margin + loops * (t + hole) + t;
  fill(margin, x_end, margin, margin + t);
  fill(margin, x_end, ny - margin - t, ny - margin);
  for (int k = 0; k <= loops; ++k) {
    const long x0 = margin + k * (t + hole);
    fill(x0, x0 + t, margin, ny - margin);
  }
  return out;
}

}  // namespace

std::string_view phantom_name(PhantomKind kind) {
  switch (kind) {
    case PhantomKind::kBox: return "box";
    case PhantomKind::kTube: return "tube";
    case PhantomKind::kRing: return "ring";
    case PhantomKind::kShell: return "shell";
    case PhantomKind::kYJunction: return "yjunction";
    case PhantomKind::kLoopGrid: return "loopgrid";
  }
  return "unknown";
}

std::optional<PhantomKind> parse_phantom(std::string_view name) {
  std::string lower;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (PhantomKind k : {PhantomKind::kBox, PhantomKind::kTube, PhantomKind::kRing, PhantomKind::kShell,
                        PhantomKind::kYJunction, PhantomKind::kLoopGrid}) {
    if (lower == phantom_name(k)) return k;
  }
  return std::nullopt;
}

Phantom generate(const PhantomSpec& spec) {
  const Extent& e = spec.dims;
  require(e.rank == 3, ErrorCode::kInvalidInput, "phantoms are three-dimensional");
  require(spec.jitter >= 0.0, ErrorCode::kInvalidInput, "jitter must be non-negative");
  const Resolved p = resolve_defaults(spec);

  Point c{(e.nx() - 1) / 2.0, (e.ny() - 1) / 2.0, (e.nz() - 1) / 2.0};
  if (spec.jitter > 0.0 && spec.kind != PhantomKind::kLoopGrid) {
    RandomStream stream(spec.seed, kJitterStream);
    for (double& v : c) v += stream.uniform(-spec.jitter, spec.jitter);
  }
  auto box_around = [&](double rx, double ry, double rz, Point& lo, Point& hi) {
    lo = {c[0] - rx, c[1] - ry, c[2] - rz};
    hi = {c[0] + rx, c[1] + ry, c[2] + rz};
  };

  Phantom out;
  out.declared = declared_betti(spec.kind, spec.loops);
  Point lo, hi;
  switch (spec.kind) {
    case PhantomKind::kBox: {
      const double h = p.radius;
      require(h >= 0.5, ErrorCode::kInvalidInput, "box half-width must be at least 0.5");
      box_around(h, h, h, lo, hi);
      out.volume = rasterize(e, lo, hi, [&](const Point& q) {
        return std::abs(q[0] - c[0]) <= h && std::abs(q[1] - c[1]) <= h && std::abs(q[2] - c[2]) <= h;
      });
      break;
    }
    case PhantomKind::kTube: {
      const double r = p.radius;
      require(r >= 1.0, ErrorCode::kInvalidInput, "tube radius must be at least 1 voxel");
      const double x0 = 2.0, x1 = static_cast<double>(e.nx()) - 3.0;
      require(x1 > x0, ErrorCode::kInvalidInput, "volume too short for a tube");
      lo = {x0, c[1] - r, c[2] - r};
      hi = {x1, c[1] + r, c[2] + r};
      out.volume = rasterize(e, lo, hi, [&](const Point& q) {
        const double dy = q[1] - c[1], dz = q[2] - c[2];
        return q[0] >= x0 && q[0] <= x1 && dy * dy + dz * dz <= r * r;
      });
      break;
    }
    case PhantomKind::kRing: {
      const double major = p.radius;
      const double minor = p.thickness / 2.0;
      require(p.thickness >= 2.0, ErrorCode::kInvalidInput, "ring thickness must be at least 2 voxels");
      require(major - minor >= 1.5, ErrorCode::kInvalidInput, "ring radius too small for its thickness");
      box_around(major + minor, major + minor, minor, lo, hi);
      out.volume = rasterize(e, lo, hi, [&](const Point& q) {
        const double rho = std::hypot(q[0] - c[0], q[1] - c[1]) - major;
        const double dz = q[2] - c[2];
        return rho * rho + dz * dz <= minor * minor;
      });
      break;
    }
    case PhantomKind::kShell: {
      const double outer = p.radius;
      const double inner = p.radius - p.thickness;
      require(p.thickness >= 2.0, ErrorCode::kInvalidInput, "shell thickness must be at least 2 voxels");
      require(inner >= 1.0, ErrorCode::kInvalidInput, "shell radius too small for its thickness");
      box_around(outer, outer, outer, lo, hi);
      out.volume = rasterize(e, lo, hi, [&](const Point& q) {
        const double d = norm({q[0] - c[0], q[1] - c[1], q[2] - c[2]});
        return d >= inner && d <= outer;
      });
      break;
    }
    case PhantomKind::kYJunction: {
      const double r = p.radius;
      require(r >= 1.0, ErrorCode::kInvalidInput, "junction radius must be at least 1 voxel");
      const double half = std::min(e.nx(), e.ny()) / 2.0;
      const double arm = half - r - 2.0 - spec.jitter;
      require(arm > 2.0 * r, ErrorCode::kInvalidInput, "volume too small for a Y junction");
      const double s60 = std::sin(std::numbers::pi / 3.0), c60 = 0.5;
      const std::array<Point, 3> tips{Point{c[0], c[1] - arm, c[2]},
                                      Point{c[0] - arm * s60, c[1] + arm * c60, c[2]},
                                      Point{c[0] + arm * s60, c[1] + arm * c60, c[2]}};
      lo = {c[0] - arm * s60 - r, c[1] - arm - r, c[2] - r};
      hi = {c[0] + arm * s60 + r, c[1] + arm * c60 + r, c[2] + r};
      out.volume = rasterize(e, lo, hi, [&](const Point& q) {
        for (const Point& tip : tips) {
          if (segment_distance(q, c, tip) <= r) return true;
        }
        return false;
      });
      break;
    }
    case PhantomKind::kLoopGrid: {
      out.volume = loop_grid(e, spec.loops, static_cast<int>(std::lround(p.thickness)));
      break;
    }
  }
  return out;
}

std::vector<PhantomCatalogEntry> list_phantoms() {
  auto entry = [](PhantomKind kind, std::string description, std::vector<PhantomParam> params) {
    return PhantomCatalogEntry{kind, std::string(phantom_name(kind)), std::move(description),
                               std::move(params), declared_betti(kind, 4)};
  };
  const PhantomParam dims{"dims", "volume size Nx,Ny,Nz", "64,64,64"};
  const PhantomParam seed{"seed", "seed for centre jitter", "0"};
  const PhantomParam jitter{"jitter", "max centre displacement in voxels", "0"};
  return {
      entry(PhantomKind::kBox, "solid axis-aligned cube", {dims, {"radius", "half-width", "floor(min(dims)/4)"}, seed, jitter}),
      entry(PhantomKind::kTube, "straight cylinder along x",
            {dims, {"radius", "cylinder radius", "max(2, floor(min(dims)/8))"}, seed, jitter}),
      entry(PhantomKind::kRing, "torus in the xy plane",
            {dims, {"radius", "major radius", "floor(min(dims)/3)"},
             {"thickness", "tube diameter (>= 2)", "3"}, seed, jitter}),
      entry(PhantomKind::kShell, "hollow sphere enclosing one cavity",
            {dims, {"radius", "outer radius", "floor(min(dims)/3)"},
             {"thickness", "wall thickness (>= 2)", "3"}, seed, jitter}),
      entry(PhantomKind::kYJunction, "three capsules meeting at the centre",
            {dims, {"radius", "branch radius", "max(2, floor(min(dims)/10))"}, seed, jitter}),
      entry(PhantomKind::kLoopGrid, "ladder with `loops` independent holes",
            {dims, {"loops", "number of independent loops", "4"},
             {"thickness", "bar thickness (>= 2)", "3"}}),
  };
}

}  // namespace topoforge
