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

#include <algorithm>
#include <bit>

#include "fslsim/error.hpp"
#include "fslsim/topology.hpp"

using namespace fslsim;

TEST_CASE("ring construction") {
  const Topology r8 = Topology::ring(8);
  CHECK(r8.kind() == TopologyKind::Ring);
  CHECK(r8.core_count() == 8);
  CHECK(r8.links().size() == 16);
  CHECK(r8.neighbors(0) == std::vector<CoreId>{1, 7});
  CHECK(r8.neighbors(3) == std::vector<CoreId>{2, 4});

  CHECK(Topology::ring(3).links().size() == 6);
  CHECK(Topology::ring(5).neighbors(4) == std::vector<CoreId>{0, 3});

  CHECK_THROWS_AS(Topology::ring(2), InvalidSizeError);
  CHECK_THROWS_AS(Topology::ring(0), InvalidSizeError);
}

TEST_CASE("star construction") {
  const Topology s8 = Topology::star(8);
  CHECK(s8.hub() == CoreId{0});
  CHECK(s8.out_degree(0) == 7);
  CHECK(s8.in_degree(0) == 7);
  for (CoreId k = 1; k < 8; ++k) {
    CHECK(s8.out_degree(k) == 1);
    CHECK(s8.neighbors(k) == std::vector<CoreId>{0});
  }

  const Topology s2 = Topology::star(2);
  CHECK(s2.links() == std::vector<DirectedLink>{{0, 1}, {1, 0}});

  // 16 spokes exactly hits the per-core link limit; 17 exceeds it.
  CHECK(Topology::star(17).out_degree(0) == 16);
  CHECK_THROWS_AS(Topology::star(18), FanOutLimitError);
  CHECK_THROWS_AS(Topology::star(1), InvalidSizeError);
}

TEST_CASE("hypercube construction") {
  const Topology c3 = Topology::hypercube(3);
  CHECK(c3.core_count() == 8);
  CHECK(c3.dimension() == 3);
  CHECK(c3.links().size() == 24);
  for (CoreId i = 0; i < 8; ++i) CHECK(c3.out_degree(i) == 3);
  CHECK(c3.neighbors(5) == std::vector<CoreId>{1, 4, 7});

  CHECK(Topology::hypercube(1).core_count() == 2);
  CHECK(Topology::hypercube(2).neighbors(0) == std::vector<CoreId>{1, 2});

  CHECK_THROWS_AS(Topology::hypercube(0), InvalidSizeError);
  CHECK_THROWS_AS(Topology::hypercube(5), InvalidSizeError);
  CHECK(Topology::hypercube(5, 5).core_count() == 32);  // cap is a policy, not a limit
}

TEST_CASE("every built topology validates cleanly") {
  for (std::uint32_t n = 3; n <= 16; ++n) CHECK(Topology::ring(n).validate().ok());
  for (std::uint32_t n = 2; n <= 17; ++n) CHECK(Topology::star(n).validate().ok());
  for (std::uint32_t d = 1; d <= 4; ++d) CHECK(Topology::hypercube(d).validate().ok());
}

TEST_CASE("link count formulas") {
  for (std::uint32_t n = 3; n <= 16; ++n) CHECK(Topology::ring(n).links().size() == 2 * n);
  for (std::uint32_t n = 2; n <= 17; ++n) CHECK(Topology::star(n).links().size() == 2 * (n - 1));
  for (std::uint32_t d = 1; d <= 4; ++d) {
    CHECK(Topology::hypercube(d).links().size() == d * (1u << d));
  }
}

TEST_CASE("adjacency is symmetric on every build") {
  const Topology topologies[] = {Topology::ring(9), Topology::star(13), Topology::hypercube(4)};
  for (const Topology& t : topologies) {
    for (const DirectedLink& l : t.links()) CHECK(t.has_link(l.to, l.from));
  }
}

TEST_CASE("hypercube adjacency matches Hamming distance one") {
  for (std::uint32_t d = 1; d <= 4; ++d) {
    const Topology t = Topology::hypercube(d);
    for (CoreId i = 0; i < t.core_count(); ++i) {
      for (CoreId j = 0; j < t.core_count(); ++j) {
        CHECK(t.has_link(i, j) == (std::popcount(i ^ j) == 1));
      }
    }
  }
}

TEST_CASE("validate flags a hand-built 18-core star at the hub") {
  std::vector<DirectedLink> links;
  for (CoreId k = 1; k < 18; ++k) {
    links.push_back({0, k});
    links.push_back({k, 0});
  }
  const Topology bad = Topology::custom(TopologyKind::Star, 18, links, CoreId{0});
  const ValidationReport report = bad.validate();
  CHECK_FALSE(report.ok());
  CHECK(report.has(ViolationKind::DegreeCap));
}

TEST_CASE("validate flags a ring with one directed link removed") {
  const Topology good = Topology::ring(8);
  std::vector<DirectedLink> links = good.links();
  links.erase(std::find(links.begin(), links.end(), DirectedLink{5, 4}));
  const Topology bad = Topology::custom(TopologyKind::Ring, 8, links);
  CHECK(bad.validate().has(ViolationKind::MissingReverseLink));
}

TEST_CASE("validate flags self-links, bad ids and disconnection") {
  const Topology self = Topology::custom(
      TopologyKind::Ring, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}});
  CHECK(self.validate().has(ViolationKind::SelfLink));

  const Topology ghost = Topology::custom(TopologyKind::Star, 2, {{0, 1}, {1, 0}, {0, 9}}, CoreId{0});
  CHECK(ghost.validate().has(ViolationKind::BadCoreId));

  const Topology split = Topology::custom(TopologyKind::Ring, 4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(split.validate().has(ViolationKind::Disconnected));
}

TEST_CASE("single-core custom graph is valid") {
  const Topology solo = Topology::custom(TopologyKind::Star, 1, {}, CoreId{0});
  CHECK(solo.validate().ok());
}

TEST_CASE("neighbors rejects out-of-range ids") {
  CHECK_THROWS_AS(Topology::ring(5).neighbors(5), TopologyError);
}

TEST_CASE("kind names round trip") {
  CHECK(to_string(TopologyKind::Hypercube) == "cube");
  CHECK(topology_kind_from_string("ring") == TopologyKind::Ring);
  CHECK(topology_kind_from_string("star") == TopologyKind::Star);
  CHECK(topology_kind_from_string("cube") == TopologyKind::Hypercube);
  CHECK_FALSE(topology_kind_from_string("mesh").has_value());
}
