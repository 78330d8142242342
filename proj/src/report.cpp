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

#include "fslsim/report.hpp"

#include <bit>
#include <cstdio>
#include <sstream>

#include "fslsim/engine.hpp"
#include "fslsim/error.hpp"
#include "fslsim/workload.hpp"

namespace fslsim {

double dynamic_power(double capacitance_farads, double volts, double frequency_hz) {
  if (capacitance_farads < 0.0 || volts < 0.0 || frequency_hz < 0.0) {
    throw SimError("dynamic_power requires non-negative inputs");
  }
  return capacitance_farads * volts * volts * frequency_hz;
}

ReferenceTables reference_tables() {
  ReferenceTables t;
  t.ring = PowerRow{1.77018, 1.26711, 3.03729};
  t.star = PowerRow{1.76922, 1.26356, 3.03278};
  t.cube = PowerRow{1.69235, 1.2633, 2.95565};
  t.utilization = {
      {"Number of BUFs", "2(6%)", "2(6%)", "2(6%)"},
      {"Number of DSP48Es", "28(43%)", "28(43%)", "28(43%)"},
      {"Number of External IOBs", "4(1%)", "4(1%)", "4(1%)"},
      {"Number of RAM36", "128(86%)", "128(86%)", "128(86%)"},
      {"Number of slice Registers", "13630(19%)", "14589(21%)", "13900(20%)"},
      {"Number used as Flip-flops", "13611", "14572", "13870"},
      {"Number of Slice LUTs", "31727(45%)", "30410(43%)", "30572(43%)"},
      {"Number of Slice LUT-Flip flop", "38014(54%)", "37445(54%)", "37690(54%)"},
  };
  return t;
}

std::string format_power(double watts) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", watts);
  std::string s(buf);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

std::string render_reference_tables(const ReferenceTables& tables) {
  auto row = [](const std::string& name, const std::string& a, const std::string& b,
                const std::string& c) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-30s %-12s %-12s %-12s\n", name.c_str(), a.c_str(), b.c_str(),
                  c.c_str());
    return std::string(buf);
  };
  std::ostringstream out;
  out << "Power consumption (W)\n";
  out << row("", "Ring", "Star", "Cube");
  out << row("Dynamic Power", format_power(tables.ring.dynamic_w), format_power(tables.star.dynamic_w),
             format_power(tables.cube.dynamic_w));
  out << row("Quiescent Power", format_power(tables.ring.quiescent_w),
             format_power(tables.star.quiescent_w), format_power(tables.cube.quiescent_w));
  out << row("Total Power", format_power(tables.ring.total_w), format_power(tables.star.total_w),
             format_power(tables.cube.total_w));
  out << "\nDevice utilization (XC5VLX110T)\n";
  out << row("", "Ring", "Star", "Cube");
  for (const UtilizationRow& u : tables.utilization) {
    out << row(u.resource, u.ring, u.star, u.cube);
  }
  return out.str();
}

Topology build_topology(TopologyKind kind, std::uint32_t n) {
  switch (kind) {
    case TopologyKind::Ring: return Topology::ring(n);
    case TopologyKind::Star: return Topology::star(n);
    case TopologyKind::Hypercube: {
      if (n == 0 || !std::has_single_bit(n)) {
        throw InvalidSizeError("cube core count must be a power of two, got " + std::to_string(n));
      }
      return Topology::hypercube(static_cast<std::uint32_t>(std::bit_width(n) - 1));
    }
  }
  throw TopologyError("unknown topology kind");
}

SweepRow make_sweep_row(std::uint32_t size, TopologyKind kind, const Metrics& metrics) {
  SweepRow row;
  row.size = size;
  row.topology = kind;
  row.total_cycles = metrics.total_cycles;
  row.comm_cycles = metrics.total_comm_cycles();
  row.compute_cycles = metrics.total_compute_cycles();
  row.total_seconds = metrics.total_seconds;
  row.max_hop = metrics.max_hops();
  return row;
}

std::vector<SweepRow> sweep(const SimConfig& cfg, const std::vector<std::uint32_t>& sizes,
                            const std::vector<TopologyKind>& topologies, std::uint64_t seed) {
  cfg.validate();
  std::vector<SweepRow> rows;
  rows.reserve(sizes.size() * topologies.size());
  for (const std::uint32_t size : sizes) {
    const auto [a, b] = matmul_operands(size, seed);
    for (const TopologyKind kind : topologies) {
      const Topology topo = build_topology(kind, 8);
      MatmulProgram mm = build_matmul_program(a, b, topo, cfg);
      const Metrics metrics = run(cfg, topo, mm.program);
      rows.push_back(make_sweep_row(size, kind, metrics));
    }
  }
  return rows;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
  std::string out = "size,topology,total_cycles,comm_cycles,compute_cycles,total_seconds,max_hop\n";
  char buf[256];
  for (const SweepRow& r : rows) {
    std::snprintf(buf, sizeof(buf), "%u,%s,%llu,%llu,%llu,%.9f,%u\n", r.size,
                  to_string(r.topology).c_str(), static_cast<unsigned long long>(r.total_cycles),
                  static_cast<unsigned long long>(r.comm_cycles),
                  static_cast<unsigned long long>(r.compute_cycles), r.total_seconds, r.max_hop);
    out += buf;
  }
  return out;
}

}  // namespace fslsim
