/*
 * Copyright 2026 The fslsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <bit>
#include <random>

#include "fslsim/error.hpp"
#include "fslsim/routing.hpp"
#include "oracles.hpp"

using namespace fslsim;

TEST_CASE("ring next hop takes the shortest arc, clockwise on ties") {
  CHECK(next_hop_ring(8, 0, 3) == 1);  // clockwise, 3 hops
  CHECK(next_hop_ring(8, 0, 7) == 7);  // direct counterclockwise neighbor
  CHECK(next_hop_ring(8, 0, 4) == 1);  // both arcs are 4 hops; clockwise wins
  CHECK(next_hop_ring(7, 2, 6) == 1);  // ccw distance 3 beats cw distance 4
  CHECK_THROWS_AS(next_hop_ring(8, 3, 3), RoutingError);
  CHECK_THROWS_AS(next_hop_ring(8, 9, 1), RoutingError);
}

TEST_CASE("star next hop relays through the hub") {
  CHECK(next_hop_star(0, 3, 5) == 0);
  CHECK(next_hop_star(0, 0, 5) == 5);
  CHECK(next_hop_star(0, 3, 0) == 0);
  CHECK_THROWS_AS(next_hop_star(0, 4, 4), RoutingError);
}

TEST_CASE("hypercube next hop flips the lowest differing bit") {
  CHECK(next_hop_hypercube(3, 0, 7) == 1);
  CHECK(next_hop_hypercube(3, 2, 3) == 3);
  CHECK(next_hop_hypercube(2, 1, 2) == 0);
  CHECK_THROWS_AS(next_hop_hypercube(3, 5, 5), RoutingError);
}

TEST_CASE("route assembles the full path") {
  CHECK(route(Topology::star(8), 1, 5).path == std::vector<CoreId>{1, 0, 5});
  CHECK(route(Topology::ring(8), 4, 4).path == std::vector<CoreId>{4});
  CHECK(route(Topology::ring(8), 6, 1).path == std::vector<CoreId>{6, 7, 0, 1});
  CHECK(route(Topology::hypercube(3), 0, 7).path == std::vector<CoreId>{0, 1, 3, 7});
  CHECK(route(Topology::hypercube(2), 1, 2).path == std::vector<CoreId>{1, 0, 2});
}

TEST_CASE("hop counts") {
  CHECK(hop_count(Topology::ring(8), 0, 5) == 3);
  CHECK(hop_count(Topology::star(8), 2, 2) == 0);
  CHECK(hop_count(Topology::hypercube(3), 0, 7) == 3);
}

TEST_CASE("routes are loop-free chains of adjacent cores") {
  std::mt19937 rng(7);
  const Topology topologies[] = {Topology::ring(11), Topology::star(9), Topology::hypercube(4)};
  for (const Topology& t : topologies) {
    for (int trial = 0; trial < 200; ++trial) {
      const CoreId src = rng() % t.core_count();
      const CoreId dst = rng() % t.core_count();
      const Route r = route(t, src, dst);
      CHECK(r.path.front() == src);
      CHECK(r.path.back() == dst);
      for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
        CHECK(t.has_link(r.path[i], r.path[i + 1]));
        for (std::size_t j = i + 1; j < r.path.size(); ++j) CHECK(r.path[i] != r.path[j]);
      }
    }
  }
}

TEST_CASE("hop_count matches brute-force BFS on a sample of instances") {
  std::vector<Topology> topologies;
  for (std::uint32_t n = 3; n <= 10; ++n) topologies.push_back(Topology::ring(n));
  for (std::uint32_t n = 2; n <= 9; ++n) topologies.push_back(Topology::star(n));
  for (std::uint32_t d = 1; d <= 3; ++d) topologies.push_back(Topology::hypercube(d));
  for (const Topology& t : topologies) {
    for (CoreId s = 0; s < t.core_count(); ++s) {
      for (CoreId d = 0; d < t.core_count(); ++d) {
        CHECK(hop_count(t, s, d) == testing::bfs_distance(t, s, d));
      }
    }
  }
}

TEST_CASE("ring closed form min(k, n-k)") {
  for (std::uint32_t n = 3; n <= 16; ++n) {
    const Topology t = Topology::ring(n);
    for (CoreId s = 0; s < n; ++s) {
      for (CoreId d = 0; d < n; ++d) {
        const std::uint32_t k = (d + n - s) % n;
        CHECK(hop_count(t, s, d) == std::min(k, n - k));
      }
    }
  }
}

TEST_CASE("hypercube closed form popcount(xor)") {
  for (std::uint32_t dim = 1; dim <= 4; ++dim) {
    const Topology t = Topology::hypercube(dim);
    for (CoreId s = 0; s < t.core_count(); ++s) {
      for (CoreId d = 0; d < t.core_count(); ++d) {
        CHECK(hop_count(t, s, d) == static_cast<std::uint32_t>(std::popcount(s ^ d)));
      }
    }
  }
}
