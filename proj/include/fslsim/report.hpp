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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fslsim/config.hpp"
#include "fslsim/metrics.hpp"
#include "fslsim/topology.hpp"

namespace fslsim {

/// Switching power C * V^2 * f in watts. Throws SimError on negative input.
double dynamic_power(double capacitance_farads, double volts, double frequency_hz);

struct PowerRow {
  double dynamic_w = 0.0;
  double quiescent_w = 0.0;
  double total_w = 0.0;
};

struct UtilizationRow {
  std::string resource;
  std::string ring;
  std::string star;
  std::string cube;
};

/// Published measurements for the three 8-core builds on an XC5VLX110T at
/// 100 MHz. These are embedded constants used to annotate reports; they are
/// not recomputed (the capacitance and voltage behind them are unknown).
struct ReferenceTables {
  PowerRow ring;
  PowerRow star;
  PowerRow cube;
  std::vector<UtilizationRow> utilization;
};

ReferenceTables reference_tables();
std::string render_reference_tables(const ReferenceTables& tables);

/// Formats a power value the way the reference tables print it: fixed
/// 5-decimal form with trailing zeros removed.
std::string format_power(double watts);

/// Builds ring/star/cube instances by core count (cube takes a power of
/// two). Used by the CLI and the sweep.
Topology build_topology(TopologyKind kind, std::uint32_t n);

struct SweepRow {
  std::uint32_t size = 0;
  TopologyKind topology = TopologyKind::Ring;
  std::uint64_t total_cycles = 0;
  std::uint64_t comm_cycles = 0;
  std::uint64_t compute_cycles = 0;
  double total_seconds = 0.0;
  std::uint32_t max_hop = 0;
};

SweepRow make_sweep_row(std::uint32_t size, TopologyKind kind, const Metrics& metrics);

/// Runs the matmul workload for every (size, topology) pair on 8 cores and
/// returns one row per run, ordered by the given size then topology order.
std::vector<SweepRow> sweep(const SimConfig& cfg, const std::vector<std::uint32_t>& sizes,
                            const std::vector<TopologyKind>& topologies, std::uint64_t seed);

/// CSV with header `size,topology,total_cycles,comm_cycles,compute_cycles,
/// total_seconds,max_hop`; byte-identical for identical inputs.
std::string emit_csv(const std::vector<SweepRow>& rows);

}  // namespace fslsim
