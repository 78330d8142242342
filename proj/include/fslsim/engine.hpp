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

#include <coroutine>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "fslsim/codec.hpp"
#include "fslsim/config.hpp"
#include "fslsim/metrics.hpp"
#include "fslsim/task.hpp"
#include "fslsim/topology.hpp"

namespace fslsim {

// Deterministic discrete-event simulation of cores connected by bounded
// word FIFOs.
//
// Timing model, per message of F frame words:
//   * The sending core pushes one word per cycles_per_word cycles through a
//     single outbound transmit pipeline shared by all of its links; a push
//     into a full FIFO stalls until the receiver drains a frame.
//   * When the last word of a frame lands, the receiving core is
//     interrupted. The handler runs for interrupt_overhead_cycles, removes
//     the frame from the FIFO at entry, then either appends it to the local
//     delivered buffer (frame addressed here) or queues it on the transmit
//     pipeline toward the next hop (store-and-forward relay).
//   * Handlers are serialized per core and preempt both workload compute
//     and the transmit pipeline at word boundaries; compute resumes with no
//     cycles lost beyond the time consumed by handlers and forwards.
//
// In an otherwise idle network this yields a delivery time of exactly
//   hops * (F * cycles_per_word + interrupt_overhead_cycles),
// the closed form computed by unloaded_latency().
//
// Determinism: every state change is driven by a central event queue ordered
// by (time, sequence), with sequence numbers assigned at scheduling time.
// Identical inputs give bit-identical Metrics and traces.

class Engine;

/// Per-core API used inside core programs via co_await.
class CoreHandle {
 public:
  struct SendAwaiter {
    Engine* engine;
    CoreId core;
    CoreId dst;
    std::vector<Word> payload;
    bool await_ready() const noexcept { return false; }
    void await_suspend(std::coroutine_handle<> k);
    std::uint64_t await_resume() const noexcept;  // cycle of the last word push
  };

  struct RecvAwaiter {
    Engine* engine;
    CoreId core;
    std::optional<CoreId> from;
    bool await_ready();
    void await_suspend(std::coroutine_handle<> k);
    Message await_resume();
  };

  struct ComputeAwaiter {
    Engine* engine;
    CoreId core;
    std::uint64_t cycles;
    bool await_ready() const noexcept { return cycles == 0; }
    void await_suspend(std::coroutine_handle<> k);
    void await_resume() const noexcept {}
  };

  CoreId id() const { return id_; }
  std::uint32_t core_count() const;
  std::uint64_t now() const;
  const SimConfig& config() const;

  /// Blocking send of payload toward dst; completes when the last frame word
  /// has been pushed onto the first-hop link.
  SendAwaiter send(CoreId dst, std::vector<Word> payload) {
    return SendAwaiter{engine_, id_, dst, std::move(payload)};
  }
  /// Blocking receive of the oldest delivered message (optionally the oldest
  /// from one specific source).
  RecvAwaiter recv() { return RecvAwaiter{engine_, id_, std::nullopt}; }
  RecvAwaiter recv_from(CoreId src) { return RecvAwaiter{engine_, id_, src}; }
  /// Busy for the given number of cycles; preemptible by the relay handler.
  ComputeAwaiter compute(std::uint64_t cycles) { return ComputeAwaiter{engine_, id_, cycles}; }

 private:
  friend class Engine;
  Engine* engine_ = nullptr;
  CoreId id_ = 0;
};

/// One coroutine per core; a null entry means the core idles.
struct WorkloadProgram {
  std::vector<std::function<SimTask(CoreHandle&)>> programs;
};

/// Runs all core programs to completion and returns the run's metrics.
/// Throws DeadlockError when cores are blocked with no pending events.
/// When trace is set, processed events are written as
/// "time seq kind subject detail" lines.
Metrics run(const SimConfig& cfg, const Topology& topology, const WorkloadProgram& workload,
            std::ostream* trace = nullptr);

/// Analytic delivery time of a single frame in an otherwise idle network:
/// hop_count * (frame_words * cycles_per_word + interrupt_overhead_cycles).
std::uint64_t unloaded_latency(const SimConfig& cfg, const Topology& topology, CoreId src,
                               CoreId dest, std::uint32_t frame_words);

}  // namespace fslsim
