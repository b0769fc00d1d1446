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

// Independent reference implementations used as test oracles. None of these
// share code paths with the library.

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <filesystem>
#include <numbers>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

// Coefficients c[k] of x^k.
using Poly = std::vector<double>;

inline Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {0.0};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

inline double horner(const Poly& p, double x) {
  double acc = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
  return acc;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// P_n(x) = 1/(2^n n!) d^n/dx^n (x^2 - 1)^n
inline double legendre_rodrigues(int n, double x) {
  Poly p(2 * n + 1, 0.0);
  double binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    p[2 * k] = binom * (((n - k) % 2) ? -1.0 : 1.0);
    binom = binom * (n - k) / (k + 1);
  }
  for (int i = 0; i < n; ++i) p = derivative(p);
  return horner(p, x) / (std::pow(2.0, n) * factorial(n));
}

inline double chebyshev_trig(int n, double x) { return std::cos(n * std::acos(x)); }

// H_n(x) = (-1)^n e^{x^2} d^n/dx^n e^{-x^2}; d^n e^{-x^2} = q_n(x) e^{-x^2}, q_{n+1} = q_n' - 2x q_n.
inline double hermite_rodrigues(int n, double x) {
  Poly q{1.0};
  for (int i = 0; i < n; ++i) {
    Poly d = derivative(q);
    Poly next(q.size() + 1, 0.0);
    for (std::size_t k = 0; k < d.size(); ++k) next[k] += d[k];
    for (std::size_t k = 0; k < q.size(); ++k) next[k + 1] -= 2.0 * q[k];
    q = next;
  }
  return (n % 2 ? -1.0 : 1.0) * horner(q, x);
}

inline double hermite_function(int n, double x, double exponent_divisor = 2.0) {
  const double norm = std::sqrt(std::pow(2.0, n) * factorial(n) * std::sqrt(std::numbers::pi));
  return hermite_rodrigues(n, x) * std::exp(-x * x / exponent_divisor) / norm;
}

struct Vol {
  std::size_t nx = 1, ny = 1, nz = 1;
  std::vector<std::uint8_t> v;
  Vol(std::size_t x, std::size_t y, std::size_t z) : nx(x), ny(y), nz(z), v(x * y * z, 0) {}
  std::uint8_t get(long x, long y, long z) const {
    if (x < 0 || y < 0 || z < 0 || x >= static_cast<long>(nx) || y >= static_cast<long>(ny) ||
        z >= static_cast<long>(nz)) {
      return 0;
    }
    return v[(z * ny + y) * nx + x];
  }
};

// Breadth-first flood fill. connectivity is 6 or 26 (26 on a single slice gives 8, 6 gives 4).
inline std::size_t bfs_components(const Vol& vol, int connectivity, std::uint8_t value = 1) {
  std::vector<char> seen(vol.v.size(), 0);
  std::size_t count = 0;
  for (std::size_t start = 0; start < vol.v.size(); ++start) {
    if (vol.v[start] != value || seen[start]) continue;
    ++count;
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      const long x = cur % vol.nx, y = (cur / vol.nx) % vol.ny, z = cur / (vol.nx * vol.ny);
      for (long dz = -1; dz <= 1; ++dz)
        for (long dy = -1; dy <= 1; ++dy)
          for (long dx = -1; dx <= 1; ++dx) {
            const int manhattan = std::abs(dx) + std::abs(dy) + std::abs(dz);
            if (manhattan == 0 || (connectivity == 6 && manhattan > 1)) continue;
            const long X = x + dx, Y = y + dy, Z = z + dz;
            if (X < 0 || Y < 0 || Z < 0 || X >= static_cast<long>(vol.nx) || Y >= static_cast<long>(vol.ny) ||
                Z >= static_cast<long>(vol.nz)) {
              continue;
            }
            const std::size_t next = (Z * vol.ny + Y) * vol.nx + X;
            if (vol.v[next] == value && !seen[next]) {
              seen[next] = 1;
              queue.push_back(next);
            }
          }
    }
  }
  return count;
}

// Euler characteristic of the union of closed unit cubes, by enumerating every cell.
// Cells are keyed by doubled centre coordinates; dimension = number of odd coordinates.
inline long long brute_euler(const Vol& vol, bool planar = false) {
  std::set<std::tuple<long, long, long>> cells;
  for (std::size_t z = 0; z < vol.nz; ++z)
    for (std::size_t y = 0; y < vol.ny; ++y)
      for (std::size_t x = 0; x < vol.nx; ++x) {
        if (!vol.get(x, y, z)) continue;
        const long zr = planar ? 0 : 2;
        for (long a = 0; a <= 2; ++a)
          for (long b = 0; b <= 2; ++b)
            for (long c = 0; c <= zr; ++c) cells.emplace(2 * x + a, 2 * y + b, planar ? 0 : 2 * z + c);
      }
  long long chi = 0;
  for (const auto& [a, b, c] : cells) {
    const int dim = (a & 1) + (b & 1) + (c & 1);
    chi += (dim % 2) ? -1 : 1;
  }
  return chi;
}

// Betti numbers of a 3D volume under (26, 6): b0 by flood fill, b2 from the padded background.
inline std::array<long long, 3> betti3(const Vol& vol) {
  Vol padded(vol.nx + 2, vol.ny + 2, vol.nz + 2);
  for (std::size_t z = 0; z < vol.nz; ++z)
    for (std::size_t y = 0; y < vol.ny; ++y)
      for (std::size_t x = 0; x < vol.nx; ++x)
        padded.v[((z + 1) * padded.ny + y + 1) * padded.nx + x + 1] = vol.get(x, y, z);
  const long long b0 = static_cast<long long>(bfs_components(vol, 26));
  const long long b2 = static_cast<long long>(bfs_components(padded, 6, 0)) - 1;
  return {b0, b0 + b2 - brute_euler(vol), b2};
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("topoforge_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace oracle
