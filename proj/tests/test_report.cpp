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

#include "fslsim/error.hpp"
#include "fslsim/report.hpp"

using namespace fslsim;

TEST_CASE("dynamic power follows C*V^2*f") {
  CHECK(dynamic_power(0.0, 3.3, 1e9) == 0.0);
  CHECK(dynamic_power(1.0, 1.0, 1e8) == doctest::Approx(1e8));
  CHECK(dynamic_power(2e-9, 1.0, 1e8) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK_THROWS_AS(dynamic_power(-1e-9, 1.0, 1e8), SimError);
  CHECK_THROWS_AS(dynamic_power(1e-9, -1.0, 1e8), SimError);
}

TEST_CASE("dynamic power scaling laws") {
  const double base = dynamic_power(3e-9, 1.2, 1e8);
  CHECK(dynamic_power(3e-9, 1.2, 2e8) == doctest::Approx(2 * base).epsilon(1e-12));
  CHECK(dynamic_power(3e-9, 2.4, 1e8) == doctest::Approx(4 * base).epsilon(1e-12));
}

TEST_CASE("reference power table values") {
  const ReferenceTables t = reference_tables();
  CHECK(t.ring.dynamic_w == 1.77018);
  CHECK(t.star.dynamic_w == 1.76922);
  CHECK(t.cube.dynamic_w == 1.69235);
  CHECK(t.ring.quiescent_w == 1.26711);
  CHECK(t.star.quiescent_w == 1.26356);
  CHECK(t.cube.quiescent_w == 1.2633);
  CHECK(t.ring.total_w == 3.03729);
  CHECK(t.star.total_w == 3.03278);
  CHECK(t.cube.total_w == 2.95565);
}

TEST_CASE("reference utilization table values") {
  const ReferenceTables t = reference_tables();
  REQUIRE(t.utilization.size() == 8);
  CHECK(t.utilization[1].resource == "Number of DSP48Es");
  CHECK(t.utilization[1].ring == "28(43%)");
  CHECK(t.utilization[4].star == "14589(21%)");
  CHECK(t.utilization[5].cube == "13870");
  CHECK(t.utilization[7].ring == "38014(54%)");
}

TEST_CASE("power formatting keeps the published digits") {
  CHECK(format_power(3.03729) == "3.03729");
  CHECK(format_power(1.2633) == "1.2633");  // not 1.26330
  CHECK(format_power(1.77018) == "1.77018");
}

TEST_CASE("rendered tables are digit-for-digit") {
  const std::string text = render_reference_tables(reference_tables());
  for (const char* cell : {"3.03729", "3.03278", "2.95565", "1.2633", "1.69235", "14589(21%)",
                           "28(43%)", "38014(54%)", "13611"}) {
    CAPTURE(cell);
    CHECK(text.find(cell) != std::string::npos);
  }
  CHECK(text.find("1.26330") == std::string::npos);
}

TEST_CASE("build_topology maps core counts") {
  CHECK(build_topology(TopologyKind::Ring, 8).kind() == TopologyKind::Ring);
  CHECK(build_topology(TopologyKind::Hypercube, 8).dimension() == 3);
  CHECK_THROWS_AS(build_topology(TopologyKind::Hypercube, 6), InvalidSizeError);
}

TEST_CASE("sweep rows share compute cycles across topologies") {
  SimConfig cfg;
  const auto rows = sweep(cfg, {4}, {TopologyKind::Ring, TopologyKind::Star, TopologyKind::Hypercube}, 42);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].topology == TopologyKind::Ring);
  CHECK(rows[1].topology == TopologyKind::Star);
  CHECK(rows[2].topology == TopologyKind::Hypercube);
  CHECK(rows[0].compute_cycles == rows[1].compute_cycles);
  CHECK(rows[1].compute_cycles == rows[2].compute_cycles);
  CHECK(rows[0].size == 4);
  CHECK(rows[1].max_hop == 1);  // star never needs more than the hub relay
}

TEST_CASE("sweep with no topologies is empty") {
  SimConfig cfg;
  const auto rows = sweep(cfg, {4, 8}, {}, 42);
  CHECK(rows.empty());
  CHECK(emit_csv(rows) == "size,topology,total_cycles,comm_cycles,compute_cycles,total_seconds,max_hop\n");
}

TEST_CASE("emit_csv formats one line per row") {
  SweepRow row;
  row.size = 4;
  row.topology = TopologyKind::Star;
  row.total_cycles = 2364;
  row.comm_cycles = 3456;
  row.compute_cycles = 640;
  row.total_seconds = 2364.0 / 1e8;
  row.max_hop = 1;
  const std::string csv = emit_csv({row});
  CHECK(csv ==
        "size,topology,total_cycles,comm_cycles,compute_cycles,total_seconds,max_hop\n"
        "4,star,2364,3456,640,0.000023640,1\n");
}

TEST_CASE("sweep output is byte-identical across runs") {
  SimConfig cfg;
  const std::vector<TopologyKind> kinds{TopologyKind::Ring, TopologyKind::Star};
  const std::string a = emit_csv(sweep(cfg, {4, 8}, kinds, 42));
  const std::string b = emit_csv(sweep(cfg, {4, 8}, kinds, 42));
  CHECK(a == b);
}
