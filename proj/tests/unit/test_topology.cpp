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

#include "../oracles.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"
#include "core/topology.hpp"

using namespace topoforge;

namespace {

oracle::Vol to_oracle(const LabelMap& m) {
  oracle::Vol v(m.extent().nx(), m.extent().ny(), m.extent().nz());
  std::copy(m.begin(), m.end(), v.v.begin());
  return v;
}

LabelMap cube(Extent dims, std::size_t lo, std::size_t hi) {
  LabelMap m(dims);
  for (std::size_t z = lo; z < hi; ++z)
    for (std::size_t y = lo; y < hi; ++y)
      for (std::size_t x = lo; x < hi; ++x) m.at(x, y, z) = 1;
  return m;
}

LabelMap random_volume(Extent dims, std::uint64_t seed, double density) {
  RandomStream s(seed, 0);
  LabelMap m(dims);
  for (auto& v : m) v = s.uniform() < density ? 1 : 0;
  return m;
}

}  // namespace

TEST_CASE("connected component examples") {
  CHECK(connected_components(LabelMap(Extent::make3d(5, 5, 5)), Connectivity::k26).count == 0);
  LabelMap diag(Extent::make3d(4, 4, 4));
  diag.at(1, 1, 1) = 1;
  diag.at(2, 2, 2) = 1;
  CHECK(connected_components(diag, Connectivity::k26).count == 1);
  CHECK(connected_components(diag, Connectivity::k6).count == 2);

  LabelMap five(Extent::make3d(16, 16, 16));
  for (std::size_t c = 0; c < 5; ++c)
    for (std::size_t z = 0; z < 2; ++z)
      for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t x = 0; x < 2; ++x) five.at(3 * c + x, 3 * c + y, z + 2 * c) = 1;
  CHECK(connected_components(five, Connectivity::k26).count == 5);

  LabelMap plane(Extent::make2d(3, 3));
  plane.at(0, 0) = plane.at(1, 1) = 1;
  CHECK(connected_components(plane, Connectivity::k8).count == 1);
  CHECK(connected_components(plane, Connectivity::k4).count == 2);
  CHECK_THROWS_AS(connected_components(plane, Connectivity::k26), Error);
}

TEST_CASE("component labels follow scan order") {
  LabelMap m(Extent::make3d(5, 1, 1));
  m.at(0, 0, 0) = m.at(2, 0, 0) = m.at(4, 0, 0) = 1;
  const auto c = connected_components(m, Connectivity::k6);
  CHECK(c.count == 3);
  CHECK(c.labels.at(0, 0, 0) == 1);
  CHECK(c.labels.at(2, 0, 0) == 2);
  CHECK(c.labels.at(4, 0, 0) == 3);
  CHECK(c.labels.at(1, 0, 0) == 0);
}

TEST_CASE("Euler characteristic examples") {
  LabelMap single(Extent::make3d(3, 3, 3));
  single.at(1, 1, 1) = 1;
  CHECK(euler_characteristic(single) == 1);
  CHECK(euler_characteristic(cube(Extent::make3d(5, 5, 5), 1, 4)) == 1);
  LabelMap shell = cube(Extent::make3d(5, 5, 5), 1, 4);
  shell.at(2, 2, 2) = 0;
  CHECK(euler_characteristic(shell) == 2);
}

TEST_CASE("Betti numbers of simple shapes") {
  const auto box = betti(cube(Extent::make3d(8, 8, 8), 2, 6));
  CHECK(box.b0 == 1);
  CHECK(box.b1 == 0);
  CHECK(box.b2 == 0);

  LabelMap ring(Extent::make3d(8, 8, 8));
  for (std::size_t y = 2; y < 5; ++y)
    for (std::size_t x = 2; x < 5; ++x) ring.at(x, y, 3) = 1;
  ring.at(3, 3, 3) = 0;
  const auto r = betti(ring);
  CHECK(r.b0 == 1);
  CHECK(r.b1 == 1);
  CHECK(r.b2 == 0);

  LabelMap shell = cube(Extent::make3d(7, 7, 7), 1, 6);
  for (std::size_t z = 2; z < 5; ++z)
    for (std::size_t y = 2; y < 5; ++y)
      for (std::size_t x = 2; x < 5; ++x) shell.at(x, y, z) = 0;
  const auto s = betti(shell);
  CHECK(s.b0 == 1);
  CHECK(s.b1 == 0);
  CHECK(s.b2 == 1);

  LabelMap annulus(Extent::make2d(7, 7));
  for (std::size_t y = 1; y < 6; ++y)
    for (std::size_t x = 1; x < 6; ++x) annulus.at(x, y) = (x == 3 && y == 3) ? 0 : 1;
  const auto a = betti(annulus);
  CHECK(a.b0 == 1);
  CHECK(a.b1 == 1);
  CHECK(a.b2 == 0);
  CHECK(a.foreground == Connectivity::k8);
  CHECK(a.background == Connectivity::k4);
}

TEST_CASE("drilling through a shell trades a cavity for nothing") {
  LabelMap shell = cube(Extent::make3d(9, 9, 9), 1, 8);
  for (std::size_t z = 3; z < 6; ++z)
    for (std::size_t y = 3; y < 6; ++y)
      for (std::size_t x = 3; x < 6; ++x) shell.at(x, y, z) = 0;
  REQUIRE(betti(shell).b2 == 1);
  // A tunnel through one wall opens the cavity: sphere becomes a disc-like solid.
  LabelMap drilled = shell;
  for (std::size_t x = 1; x < 3; ++x) drilled.at(x, 4, 4) = 0;
  const auto d = betti(drilled);
  CHECK(d.b0 == 1);
  CHECK(d.b2 == 0);
  CHECK(d.b1 == 0);
  // Tunnels through two opposite walls make a handle.
  for (std::size_t x = 6; x < 8; ++x) drilled.at(x, 4, 4) = 0;
  const auto h = betti(drilled);
  CHECK(h.b2 == 0);
  CHECK(h.b1 == 1);
}

TEST_CASE("random volumes agree with independent oracles") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const LabelMap m = random_volume(Extent::make3d(6, 6, 6), seed, 0.2 + 0.6 * (seed % 7) / 6.0);
    const auto o = to_oracle(m);
    const auto b = betti(m);
    const auto ref = oracle::betti3(o);
    CHECK(euler_characteristic(m) == oracle::brute_euler(o));
    CHECK(connected_components(m, Connectivity::k26).count == oracle::bfs_components(o, 26));
    CHECK(connected_components(m, Connectivity::k6).count == oracle::bfs_components(o, 6));
    CHECK(b.b0 == ref[0]);
    CHECK(b.b1 == ref[1]);
    CHECK(b.b2 == ref[2]);
    CHECK(b.b1 >= 0);
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const LabelMap m = random_volume(Extent::make2d(9, 7), seed, 0.5);
    const auto o = to_oracle(m);
    CHECK(euler_characteristic(m) == oracle::brute_euler(o, true));
    const auto b = betti(m);
    CHECK(b.b0 == static_cast<std::int64_t>(oracle::bfs_components(o, 26)));
    CHECK(b.b0 - b.b1 == oracle::brute_euler(o, true));
  }
}

TEST_CASE("Betti numbers are translation invariant") {
  LabelMap a(Extent::make3d(12, 12, 12)), b(Extent::make3d(12, 12, 12));
  const LabelMap src = random_volume(Extent::make3d(5, 5, 5), 3, 0.5);
  for (std::size_t z = 0; z < 5; ++z)
    for (std::size_t y = 0; y < 5; ++y)
      for (std::size_t x = 0; x < 5; ++x) {
        a.at(x + 1, y + 1, z + 1) = src.at(x, y, z);
        b.at(x + 6, y + 4, z + 5) = src.at(x, y, z);
      }
  CHECK(betti(a).same_counts(betti(b)));
}

TEST_CASE("betti error examples") {
  LabelMap ring(Extent::make3d(8, 8, 8));
  for (std::size_t y = 2; y < 5; ++y)
    for (std::size_t x = 2; x < 5; ++x) ring.at(x, y, 3) = 1;
  ring.at(3, 3, 3) = 0;
  LabelMap split = ring;
  split.at(3, 2, 3) = 0;
  split.at(3, 4, 3) = 0;
  const auto r = betti_error(split, ring);
  CHECK(r.e0 == 1);
  CHECK(r.e1 == 1);
  CHECK(r.e2 == 0);
  CHECK(r.e == 2);
  const auto same = betti_error(ring, ring);
  CHECK(same.e == 0);
  CHECK_THROWS_AS(betti_error(ring, LabelMap(Extent::make3d(8, 8, 9))), Error);
}

TEST_CASE("dice") {
  LabelMap p(Extent::make3d(10, 10, 2)), g(Extent::make3d(10, 10, 2));
  for (std::size_t i = 0; i < 100; ++i) g[i] = 1;
  for (std::size_t i = 20; i < 120; ++i) p[i] = 1;
  CHECK(dice(p, g) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(dice(p, g) == dice(g, p));
  CHECK(dice(g, g) == 1.0);
  const LabelMap empty(Extent::make3d(10, 10, 2));
  CHECK(dice(empty, empty) == 1.0);
  CHECK(dice(empty, g) == 0.0);
  LabelMap bad = g;
  bad[0] = 3;
  CHECK_THROWS_AS(dice(bad, g), Error);
}
