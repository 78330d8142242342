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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fslsim/engine.hpp"
#include "fslsim/error.hpp"
#include "fslsim/report.hpp"
#include "fslsim/routing.hpp"
#include "fslsim/workload.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::vector<std::string> overrides;
  std::uint64_t seed = 42;
};

fslsim::SimConfig make_config(const CommonOpts& opts) {
  fslsim::SimConfig cfg;
  if (!opts.config_path.empty()) fslsim::load_config_file(opts.config_path, cfg);
  for (const std::string& assignment : opts.overrides) cfg.apply(assignment);
  cfg.validate();
  return cfg;
}

fslsim::TopologyKind parse_kind(const std::string& name) {
  const auto kind = fslsim::topology_kind_from_string(name);
  if (!kind) throw fslsim::ConfigError("unknown topology '" + name + "' (use ring, star or cube)");
  return *kind;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "flat key=value config file");
  cmd->add_option("--set", opts.overrides, "config override, e.g. --set cycles_per_word=1")
      ->take_all();
  cmd->add_option("--seed", opts.seed, "seed for the operand generator");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fslsim::SimError("cannot open output file '" + path + "'");
  out << text;
}

int cmd_simulate(const std::string& topology_name, std::uint32_t n, std::uint32_t size,
                 const CommonOpts& opts, const std::string& csv_path,
                 const std::string& trace_path) {
  const fslsim::SimConfig cfg = make_config(opts);
  const fslsim::TopologyKind kind = parse_kind(topology_name);
  const fslsim::Topology topo = fslsim::build_topology(kind, n);
  const auto [a, b] = fslsim::matmul_operands(size, opts.seed);
  fslsim::MatmulProgram mm = fslsim::build_matmul_program(a, b, topo, cfg);

  std::ofstream trace_file;
  std::ostream* trace = nullptr;
  if (!trace_path.empty()) {
    trace_file.open(trace_path, std::ios::binary);
    if (!trace_file) throw fslsim::SimError("cannot open trace file '" + trace_path + "'");
    trace = &trace_file;
  }

  const fslsim::Metrics metrics = fslsim::run(cfg, topo, mm.program, trace);
  const fslsim::Matrix reference = fslsim::matmul_reference(a, b);
  const fslsim::VerifyResult check =
      fslsim::verify_result(*mm.result, reference, cfg.codec_mode, a.cols, 100.0);

  std::cout << "topology:        " << fslsim::to_string(kind) << " (" << topo.core_count()
            << " cores)\n";
  std::cout << "matrix size:     " << size << "x" << size << "\n";
  std::cout << "codec mode:      " << fslsim::to_string(cfg.codec_mode) << "\n";
  std::cout << "total cycles:    " << metrics.total_cycles << "\n";
  char sec[64];
  std::snprintf(sec, sizeof(sec), "%.9f", metrics.total_seconds);
  std::cout << "total seconds:   " << sec << "\n";
  std::cout << "compute cycles:  " << metrics.total_compute_cycles() << "\n";
  std::cout << "comm cycles:     " << metrics.total_comm_cycles() << "\n";
  std::cout << "messages:        " << metrics.messages_sent << " sent, "
            << metrics.messages_delivered << " delivered\n";
  std::cout << "max hops:        " << metrics.max_hops() << "\n";
  std::cout << "result check:    " << (check.pass ? "OK" : "FAILED") << " (max |err| "
            << check.max_abs_error << ", bound " << check.bound << ")\n";

  if (!csv_path.empty()) {
    write_text(csv_path, fslsim::emit_csv({fslsim::make_sweep_row(size, kind, metrics)}));
    std::cout << "csv written to   " << csv_path << "\n";
  }
  return check.pass ? 0 : 1;
}

int cmd_sweep(const std::vector<std::uint32_t>& sizes, const std::vector<std::string>& topo_names,
              const CommonOpts& opts, const std::string& csv_path) {
  const fslsim::SimConfig cfg = make_config(opts);
  std::vector<fslsim::TopologyKind> kinds;
  kinds.reserve(topo_names.size());
  for (const std::string& name : topo_names) kinds.push_back(parse_kind(name));
  const auto rows = fslsim::sweep(cfg, sizes, kinds, opts.seed);
  const std::string csv = fslsim::emit_csv(rows);
  if (csv_path.empty()) {
    std::cout << csv;
  } else {
    write_text(csv_path, csv);
    std::cout << "csv written to " << csv_path << "\n";
  }
  return 0;
}

int cmd_route(const std::string& topology_name, std::uint32_t n, std::uint32_t src,
              std::uint32_t dst) {
  const fslsim::Topology topo = fslsim::build_topology(parse_kind(topology_name), n);
  const fslsim::Route r = fslsim::route(topo, src, dst);
  std::cout << "route:";
  for (std::size_t i = 0; i < r.path.size(); ++i) {
    std::cout << (i == 0 ? " " : " -> ") << r.path[i];
  }
  std::cout << "\nhops: " << r.hops() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic simulator of message-passing multicore systems on FSL-style links"};
  app.require_subcommand(1);

  // simulate
  std::string sim_topology = "star";
  std::uint32_t sim_n = 8;
  std::uint32_t sim_size = 32;
  std::string sim_csv, sim_trace;
  CommonOpts sim_opts;
  CLI::App* sim = app.add_subcommand("simulate", "run the matmul workload once");
  sim->add_option("--topology", sim_topology, "ring, star or cube")->required();
  sim->add_option("--n", sim_n, "core count (power of two for cube)");
  sim->add_option("--size", sim_size, "square matrix dimension");
  sim->add_option("--csv", sim_csv, "write a one-row CSV here");
  sim->add_option("--trace", sim_trace, "write the event trace here");
  add_common(sim, sim_opts);

  // sweep
  std::vector<std::uint32_t> sweep_sizes{4, 8, 16, 32, 64};
  std::vector<std::string> sweep_topologies{"ring", "star", "cube"};
  std::string sweep_csv;
  CommonOpts sweep_opts;
  CLI::App* sw = app.add_subcommand("sweep", "compare topologies across matrix sizes (8 cores)");
  sw->add_option("--sizes", sweep_sizes, "matrix sizes")->delimiter(',');
  sw->add_option("--topologies", sweep_topologies, "topologies to compare")->delimiter(',');
  sw->add_option("--csv", sweep_csv, "write the CSV here instead of stdout");
  add_common(sw, sweep_opts);

  // route
  std::string route_topology = "ring";
  std::uint32_t route_n = 8, route_src = 0, route_dst = 0;
  CLI::App* rt = app.add_subcommand("route", "print the path between two cores");
  rt->add_option("--topology", route_topology, "ring, star or cube")->required();
  rt->add_option("--n", route_n, "core count");
  rt->add_option("--src", route_src, "source core id")->required();
  rt->add_option("--dst", route_dst, "destination core id")->required();

  // tables
  CLI::App* tb = app.add_subcommand("tables", "print the reference power/utilization tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(sim_topology, sim_n, sim_size, sim_opts, sim_csv, sim_trace);
    if (sw->parsed()) return cmd_sweep(sweep_sizes, sweep_topologies, sweep_opts, sweep_csv);
    if (rt->parsed()) return cmd_route(route_topology, route_n, route_src, route_dst);
    if (tb->parsed()) {
      std::cout << fslsim::render_reference_tables(fslsim::reference_tables());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
