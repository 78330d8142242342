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
#include <vector>

#include "fslsim/topology.hpp"

namespace fslsim {

/// Where a core's cycles went. compute is workload arithmetic, tx is word
/// pushes onto outbound links (own sends and relayed forwards), handler is
/// interrupt entry overhead; blocked is everything else up to the end of the
/// run (waiting on FIFO space, on messages, or idle after finishing).
struct CoreCycleBreakdown {
  std::uint64_t compute = 0;
  std::uint64_t tx = 0;
  std::uint64_t handler = 0;
  std::uint64_t blocked = 0;
  std::uint64_t busy() const { return compute + tx + handler; }
  friend bool operator==(const CoreCycleBreakdown&, const CoreCycleBreakdown&) = default;
};

struct Metrics {
  std::uint64_t total_cycles = 0;
  double total_seconds = 0.0;
  std::vector<DirectedLink> links;          // same order as Topology::links()
  std::vector<std::uint64_t> link_words;    // words carried per link
  std::vector<CoreCycleBreakdown> core_cycles;
  std::uint64_t messages_sent = 0;
  std::uint64_t messages_delivered = 0;
  std::vector<std::uint64_t> hop_histogram;  // index = hops traveled
  std::uint64_t events_processed = 0;

  std::uint64_t total_compute_cycles() const;
  /// Communication work: handler entries plus word pushes, summed over cores.
  std::uint64_t total_comm_cycles() const;
  std::uint32_t max_hops() const;

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

}  // namespace fslsim
