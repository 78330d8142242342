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

#include "fslsim/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "fslsim/error.hpp"
#include "fslsim/routing.hpp"

namespace fslsim {

std::uint64_t Metrics::total_compute_cycles() const {
  std::uint64_t sum = 0;
  for (const auto& c : core_cycles) sum += c.compute;
  return sum;
}

std::uint64_t Metrics::total_comm_cycles() const {
  std::uint64_t sum = 0;
  for (const auto& c : core_cycles) sum += c.tx + c.handler;
  return sum;
}

std::uint32_t Metrics::max_hops() const {
  for (std::size_t h = hop_histogram.size(); h > 0; --h) {
    if (hop_histogram[h - 1] != 0) return static_cast<std::uint32_t>(h - 1);
  }
  return 0;
}

namespace {

enum class EvKind { WordArrival, HandlerComplete, CoreResume };

struct Event {
  std::uint64_t time;
  std::uint64_t seq;
  EvKind kind;
  std::uint32_t core;
  std::uint64_t gen;  // validity check for CoreResume
};

struct EventLater {
  bool operator()(const Event& a, const Event& b) const {
    return a.time != b.time ? a.time > b.time : a.seq > b.seq;
  }
};

/// One in-flight message instance. Reused hop by hop: the relay handler
/// resets the landing progress and points it at the next link.
struct Frame {
  Message msg;
  std::vector<Word> words;
  std::uint32_t hops_taken = 0;
  std::uint32_t link = 0;         // index into Engine::links_
  std::uint32_t words_landed = 0;
  bool program_origin = false;    // current hop initiated by a program send
};
using FramePtr = std::shared_ptr<Frame>;

struct LinkRt {
  DirectedLink ends;
  std::uint32_t fifo_words = 0;
  bool sender_stalled = false;  // the sender's completed push is waiting for space
  std::uint64_t words_carried = 0;
};

}  // namespace

class Engine {
 public:
  Engine(const SimConfig& cfg, const Topology& topo, const WorkloadProgram& workload,
         std::ostream* trace);

  Metrics run();

  // Awaiter entry points (called while a program coroutine is running).
  void op_send(CoreId core, CoreId dst, std::vector<Word> payload, std::coroutine_handle<> k);
  bool op_recv_ready(CoreId core, std::optional<CoreId> from);
  void op_recv_wait(CoreId core, std::optional<CoreId> from, std::coroutine_handle<> k);
  void op_compute(CoreId core, std::uint64_t cycles, std::coroutine_handle<> k);
  Message take_recv_result(CoreId core);

  std::uint64_t now() const { return now_; }
  const SimConfig& config() const { return cfg_; }
  std::uint32_t core_count() const { return topo_.core_count(); }

 private:
  enum class PState { NotStarted, Running, Compute, AwaitSend, AwaitRecv, Done };

  struct CoreRt {
    // interrupt side
    std::deque<FramePtr> irqs;  // completed inbound frames, in (time, seq) order
    bool in_handler = false;
    FramePtr handler_frame;
    // transmit side: one pipeline across all outbound links
    std::deque<FramePtr> tx;
    bool word_in_flight = false;
    bool stalled_for_space = false;
    // program side
    PState pstate = PState::NotStarted;
    std::coroutine_handle<> continuation{};
    std::optional<CoreId> recv_filter;
    Message recv_result;
    bool recv_result_ready = false;
    std::uint64_t compute_remaining = 0;
    std::uint64_t compute_resumed_at = 0;
    bool compute_running = false;
    std::uint64_t gen = 0;
    std::deque<Message> mailbox;  // the local buffer holding delivered messages
    // accounting
    std::uint64_t cyc_compute = 0, cyc_tx = 0, cyc_handler = 0;
  };

  void schedule(std::uint64_t time, EvKind kind, std::uint32_t core, std::uint64_t gen);
  void dispatch(std::uint32_t ci);
  void start_tx_word(std::uint32_t ci);
  void pause_compute(CoreRt& c);
  void resume_program(std::uint32_t ci);
  bool try_take_mailbox(CoreRt& c);
  void land_word(FramePtr f);
  void drain_fifo(FramePtr f);
  std::uint32_t link_index(CoreId from, CoreId to) const;

  void on_word_arrival(std::uint32_t ci);
  void on_handler_complete(std::uint32_t ci);
  void on_core_resume(std::uint32_t ci);

  void trace_line(const char* kind, const std::string& subject, const std::string& detail);

  const SimConfig cfg_;
  const Topology& topo_;
  const WorkloadProgram& workload_;
  std::ostream* trace_;

  std::vector<LinkRt> links_;
  std::map<DirectedLink, std::uint32_t> link_lookup_;
  std::vector<CoreRt> cores_;
  std::vector<CoreHandle> handles_;
  std::vector<SimTask> tasks_;

  std::priority_queue<Event, std::vector<Event>, EventLater> events_;
  std::uint64_t now_ = 0;
  std::uint64_t seq_ = 0;
  std::uint64_t trace_seq_ = 0;
  std::uint64_t events_processed_ = 0;

  std::uint64_t messages_sent_ = 0;
  std::uint64_t messages_delivered_ = 0;
  std::vector<std::uint64_t> hop_histogram_;
};

Engine::Engine(const SimConfig& cfg, const Topology& topo, const WorkloadProgram& workload,
               std::ostream* trace)
    : cfg_(cfg), topo_(topo), workload_(workload), trace_(trace) {
  cfg_.validate();
  const ValidationReport report = topo_.validate();
  if (!report.ok()) {
    throw TopologyError("cannot simulate an invalid topology: " + report.violations.front().detail);
  }
  if (workload_.programs.size() != topo_.core_count()) {
    throw WorkloadError("workload defines " + std::to_string(workload_.programs.size()) +
                        " programs for " + std::to_string(topo_.core_count()) + " cores");
  }
  links_.reserve(topo_.links().size());
  for (const DirectedLink& l : topo_.links()) {
    link_lookup_.emplace(l, static_cast<std::uint32_t>(links_.size()));
    links_.push_back(LinkRt{l});
  }
  cores_.resize(topo_.core_count());
  handles_.resize(topo_.core_count());
  tasks_.resize(topo_.core_count());
}

std::uint32_t Engine::link_index(CoreId from, CoreId to) const {
  const auto it = link_lookup_.find(DirectedLink{from, to});
  FSLSIM_CHECK(it != link_lookup_.end(), "no link " + std::to_string(from) + "->" + std::to_string(to));
  return it->second;
}

void Engine::schedule(std::uint64_t time, EvKind kind, std::uint32_t core, std::uint64_t gen) {
  events_.push(Event{time, seq_++, kind, core, gen});
}

void Engine::trace_line(const char* kind, const std::string& subject, const std::string& detail) {
  if (!trace_) return;
  *trace_ << now_ << ' ' << trace_seq_++ << ' ' << kind << ' ' << subject << ' ' << detail << '\n';
}

void Engine::pause_compute(CoreRt& c) {
  if (!c.compute_running) return;
  const std::uint64_t ran = now_ - c.compute_resumed_at;
  c.cyc_compute += ran;
  FSLSIM_CHECK(c.compute_remaining >= ran, "compute accounting underflow");
  c.compute_remaining -= ran;
  c.compute_running = false;
  ++c.gen;  // invalidate the scheduled completion
}

bool Engine::try_take_mailbox(CoreRt& c) {
  for (auto it = c.mailbox.begin(); it != c.mailbox.end(); ++it) {
    if (!c.recv_filter || it->src == *c.recv_filter) {
      c.recv_result = std::move(*it);
      c.recv_result_ready = true;
      c.mailbox.erase(it);
      return true;
    }
  }
  return false;
}

void Engine::resume_program(std::uint32_t ci) {
  CoreRt& c = cores_[ci];
  FSLSIM_CHECK(c.pstate != PState::Done && c.pstate != PState::Running, "bad program resume");
  c.pstate = PState::Running;
  const std::coroutine_handle<> h = c.continuation;
  FSLSIM_CHECK(h && !h.done(), "resuming a finished program");
  h.resume();
  const SimTask::Handle th = tasks_[ci].handle();
  if (th.promise().exception) std::rethrow_exception(th.promise().exception);
  if (th.done()) {
    c.pstate = PState::Done;
    if (trace_) trace_line("core-resume", "core" + std::to_string(ci), "program-complete");
  } else {
    FSLSIM_CHECK(c.pstate != PState::Running, "program suspended without registering an operation");
  }
}

void Engine::start_tx_word(std::uint32_t ci) {
  CoreRt& c = cores_[ci];
  pause_compute(c);
  c.word_in_flight = true;
  c.cyc_tx += cfg_.cycles_per_word;
  schedule(now_ + cfg_.cycles_per_word, EvKind::WordArrival, ci, 0);
}

void Engine::dispatch(std::uint32_t ci) {
  CoreRt& c = cores_[ci];
  for (;;) {
    if (c.in_handler) return;       // interrupts are serialized
    if (c.word_in_flight) return;   // word pushes are atomic
    // A relay forward belongs to the handler that produced it: it goes out
    // before the next pending interrupt is serviced, like an ISR issuing
    // blocking writes before returning. A stalled relay push does yield to
    // pending interrupts, though; without that, counter-flowing relays on
    // two neighboring cores could wedge each other forever.
    const bool relay_front = !c.tx.empty() && !c.tx.front()->program_origin;
    if (relay_front && !c.stalled_for_space) {
      start_tx_word(ci);
      return;
    }
    if (!c.irqs.empty()) {
      // Interrupt entry; pulls the frame out of the FIFO before the
      // overhead window so upstream senders can land stalled words.
      pause_compute(c);
      FramePtr f = c.irqs.front();
      c.irqs.pop_front();
      c.in_handler = true;
      c.handler_frame = f;
      c.cyc_handler += cfg_.interrupt_overhead_cycles;
      schedule(now_ + cfg_.interrupt_overhead_cycles, EvKind::HandlerComplete, ci, 0);
      drain_fifo(f);
      return;
    }
    if (c.stalled_for_space) return;  // blocking write waiting on downstream drain
    if (!c.tx.empty()) {
      start_tx_word(ci);
      return;
    }
    switch (c.pstate) {
      case PState::Compute:
        if (!c.compute_running) {
          c.compute_running = true;
          c.compute_resumed_at = now_;
          schedule(now_ + c.compute_remaining, EvKind::CoreResume, ci, ++c.gen);
        }
        return;
      case PState::AwaitRecv:
        if (try_take_mailbox(c)) {
          resume_program(ci);
          continue;  // the program advanced; pick its next activity
        }
        return;
      default:
        return;  // AwaitSend resumes from land_word; Done/NotStarted idle
    }
  }
}

void Engine::land_word(FramePtr f) {
  LinkRt& link = links_[f->link];
  FSLSIM_CHECK(link.fifo_words < cfg_.fifo_depth_words, "link FIFO overflow");
  link.fifo_words++;
  link.words_carried++;
  f->words_landed++;
  if (trace_)
    trace_line("word-arrival",
             "link" + std::to_string(link.ends.from) + "->" + std::to_string(link.ends.to),
             "word=" + std::to_string(f->words_landed) + "/" + std::to_string(f->words.size()) +
                 " frame=" + std::to_string(f->msg.src) + "->" + std::to_string(f->msg.dst));
  if (f->words_landed < f->words.size()) return;

  // Frame complete: the sender's pipeline moves on and the receiver is
  // interrupted.
  CoreRt& sender = cores_[link.ends.from];
  FSLSIM_CHECK(!sender.tx.empty() && sender.tx.front() == f, "transmit pipeline out of order");
  sender.tx.pop_front();
  f->hops_taken++;
  const bool program_origin = f->program_origin;
  CoreRt& receiver = cores_[link.ends.to];
  receiver.irqs.push_back(f);
  if (program_origin && sender.pstate == PState::AwaitSend) {
    resume_program(link.ends.from);
  }
  dispatch(link.ends.to);
}

void Engine::drain_fifo(FramePtr f) {
  LinkRt& link = links_[f->link];
  FSLSIM_CHECK(link.fifo_words >= f->words.size(), "FIFO drain underflow");
  link.fifo_words -= static_cast<std::uint32_t>(f->words.size());
  if (trace_)
    trace_line("link-free",
             "link" + std::to_string(link.ends.from) + "->" + std::to_string(link.ends.to),
             "freed=" + std::to_string(f->words.size()) + " occupancy=" + std::to_string(link.fifo_words));
  if (link.sender_stalled) {
    link.sender_stalled = false;
    CoreRt& sender = cores_[link.ends.from];
    sender.stalled_for_space = false;
    FSLSIM_CHECK(!sender.tx.empty(), "stalled sender without a frame");
    land_word(sender.tx.front());
    dispatch(link.ends.from);
  }
}

void Engine::on_word_arrival(std::uint32_t ci) {
  CoreRt& c = cores_[ci];
  FSLSIM_CHECK(c.word_in_flight, "word arrival without a push in flight");
  c.word_in_flight = false;
  FSLSIM_CHECK(!c.tx.empty(), "word arrival with empty pipeline");
  FramePtr f = c.tx.front();
  LinkRt& link = links_[f->link];
  if (link.fifo_words >= cfg_.fifo_depth_words) {
    c.stalled_for_space = true;
    link.sender_stalled = true;
    if (trace_)
      trace_line("word-arrival",
               "link" + std::to_string(link.ends.from) + "->" + std::to_string(link.ends.to),
               "stalled fifo-full");
  } else {
    land_word(f);
  }
  dispatch(ci);
}

void Engine::on_handler_complete(std::uint32_t ci) {
  CoreRt& c = cores_[ci];
  FSLSIM_CHECK(c.in_handler, "handler completion without a handler entry");
  c.in_handler = false;
  FramePtr f = std::move(c.handler_frame);
  c.handler_frame = nullptr;
  if (f->msg.dst == ci) {
    c.mailbox.push_back(f->msg);
    messages_delivered_++;
    if (hop_histogram_.size() <= f->hops_taken) hop_histogram_.resize(f->hops_taken + 1, 0);
    hop_histogram_[f->hops_taken]++;
    if (trace_)
      trace_line("handler-complete", "core" + std::to_string(ci),
               "deliver src=" + std::to_string(f->msg.src) + " hops=" + std::to_string(f->hops_taken));
  } else {
    const CoreId next = next_hop(topo_, ci, f->msg.dst);
    f->link = link_index(ci, next);
    f->words_landed = 0;
    f->program_origin = false;
    if (trace_) {
      trace_line("handler-complete", "core" + std::to_string(ci),
                 "forward next=" + std::to_string(next));
    }
    c.tx.push_back(std::move(f));
  }
  dispatch(ci);
}

void Engine::on_core_resume(std::uint32_t ci) {
  CoreRt& c = cores_[ci];
  FSLSIM_CHECK(c.compute_running, "compute completion without compute running");
  c.compute_running = false;
  c.cyc_compute += now_ - c.compute_resumed_at;
  c.compute_remaining = 0;
  if (trace_)
    trace_line("core-resume", "core" + std::to_string(ci), "compute-complete");
  resume_program(ci);
  dispatch(ci);
}

void Engine::op_send(CoreId core, CoreId dst, std::vector<Word> payload, std::coroutine_handle<> k) {
  CoreRt& c = cores_[core];
  if (dst >= topo_.core_count()) throw WorkloadError("send destination out of range");
  if (dst == core) throw WorkloadError("core " + std::to_string(core) + " cannot send to itself");
  auto f = std::make_shared<Frame>();
  f->msg = Message{core, dst, std::move(payload)};
  f->words = frame_message(f->msg);
  if (f->words.size() > cfg_.fifo_depth_words) {
    throw WorkloadError("frame of " + std::to_string(f->words.size()) +
                        " words exceeds fifo_depth_words=" + std::to_string(cfg_.fifo_depth_words));
  }
  const CoreId next = next_hop(topo_, core, dst);
  f->link = link_index(core, next);
  f->program_origin = true;
  c.tx.push_back(std::move(f));
  c.pstate = PState::AwaitSend;
  c.continuation = k;
  messages_sent_++;
}

bool Engine::op_recv_ready(CoreId core, std::optional<CoreId> from) {
  CoreRt& c = cores_[core];
  c.recv_filter = from;
  return try_take_mailbox(c);
}

void Engine::op_recv_wait(CoreId core, std::optional<CoreId> from, std::coroutine_handle<> k) {
  CoreRt& c = cores_[core];
  c.recv_filter = from;
  c.pstate = PState::AwaitRecv;
  c.continuation = k;
}

void Engine::op_compute(CoreId core, std::uint64_t cycles, std::coroutine_handle<> k) {
  CoreRt& c = cores_[core];
  c.pstate = PState::Compute;
  c.compute_remaining = cycles;
  c.compute_running = false;
  c.continuation = k;
}

Message Engine::take_recv_result(CoreId core) {
  CoreRt& c = cores_[core];
  FSLSIM_CHECK(c.recv_result_ready, "recv result not ready");
  c.recv_result_ready = false;
  return std::move(c.recv_result);
}

Metrics Engine::run() {
  const std::uint32_t n = topo_.core_count();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!workload_.programs[i]) {
      cores_[i].pstate = PState::Done;
      continue;
    }
    handles_[i].engine_ = this;
    handles_[i].id_ = i;
    tasks_[i] = workload_.programs[i](handles_[i]);
    cores_[i].continuation = tasks_[i].handle();
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cores_[i].pstate == PState::NotStarted) resume_program(i);
  }
  for (std::uint32_t i = 0; i < n; ++i) dispatch(i);

  while (!events_.empty()) {
    const Event e = events_.top();
    events_.pop();
    if (e.kind == EvKind::CoreResume && e.gen != cores_[e.core].gen) continue;  // preempted
    FSLSIM_CHECK(e.time >= now_, "event time went backwards");
    now_ = e.time;
    if (++events_processed_ > cfg_.max_events) {
      throw SimError("event count exceeded max_events=" + std::to_string(cfg_.max_events));
    }
    switch (e.kind) {
      case EvKind::WordArrival: on_word_arrival(e.core); break;
      case EvKind::HandlerComplete: on_handler_complete(e.core); break;
      case EvKind::CoreResume: on_core_resume(e.core); break;
    }
  }

  std::vector<std::uint32_t> blocked;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (cores_[i].pstate != PState::Done) blocked.push_back(i);
  }
  if (!blocked.empty()) {
    std::ostringstream dump;
    dump << "deadlock: no pending events but " << blocked.size() << " core(s) blocked:";
    for (const std::uint32_t i : blocked) {
      dump << " core" << i << "=";
      switch (cores_[i].pstate) {
        case PState::AwaitRecv:
          dump << "recv";
          if (cores_[i].recv_filter) dump << "(from=" << *cores_[i].recv_filter << ")";
          break;
        case PState::AwaitSend: dump << "send"; break;
        case PState::Compute: dump << "compute"; break;
        default: dump << "unknown"; break;
      }
    }
    throw DeadlockError(dump.str());
  }
  FSLSIM_CHECK(messages_sent_ == messages_delivered_,
               "message conservation violated: sent=" + std::to_string(messages_sent_) +
                   " delivered=" + std::to_string(messages_delivered_));

  Metrics m;
  m.total_cycles = now_;
  m.total_seconds = static_cast<double>(now_) / static_cast<double>(cfg_.clock_hz);
  m.links = topo_.links();
  m.link_words.reserve(links_.size());
  for (const LinkRt& l : links_) m.link_words.push_back(l.words_carried);
  m.core_cycles.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    CoreCycleBreakdown& b = m.core_cycles[i];
    b.compute = cores_[i].cyc_compute;
    b.tx = cores_[i].cyc_tx;
    b.handler = cores_[i].cyc_handler;
    FSLSIM_CHECK(b.busy() <= m.total_cycles, "core busy cycles exceed run length");
    b.blocked = m.total_cycles - b.busy();
  }
  m.messages_sent = messages_sent_;
  m.messages_delivered = messages_delivered_;
  m.hop_histogram = hop_histogram_;
  m.events_processed = events_processed_;
  return m;
}

// --- awaiters ---------------------------------------------------------------

void CoreHandle::SendAwaiter::await_suspend(std::coroutine_handle<> k) {
  engine->op_send(core, dst, std::move(payload), k);
}

std::uint64_t CoreHandle::SendAwaiter::await_resume() const noexcept { return engine->now(); }

bool CoreHandle::RecvAwaiter::await_ready() { return engine->op_recv_ready(core, from); }

void CoreHandle::RecvAwaiter::await_suspend(std::coroutine_handle<> k) {
  engine->op_recv_wait(core, from, k);
}

Message CoreHandle::RecvAwaiter::await_resume() { return engine->take_recv_result(core); }

void CoreHandle::ComputeAwaiter::await_suspend(std::coroutine_handle<> k) {
  engine->op_compute(core, cycles, k);
}

std::uint32_t CoreHandle::core_count() const { return engine_->core_count(); }
std::uint64_t CoreHandle::now() const { return engine_->now(); }
const SimConfig& CoreHandle::config() const { return engine_->config(); }

Metrics run(const SimConfig& cfg, const Topology& topology, const WorkloadProgram& workload,
            std::ostream* trace) {
  Engine engine(cfg, topology, workload, trace);
  return engine.run();
}

std::uint64_t unloaded_latency(const SimConfig& cfg, const Topology& topology, CoreId src,
                               CoreId dest, std::uint32_t frame_words) {
  const std::uint64_t hops = hop_count(topology, src, dest);
  const std::uint64_t per_hop = static_cast<std::uint64_t>(frame_words) * cfg.cycles_per_word +
                                cfg.interrupt_overhead_cycles;
  return hops * per_hop;
}

}  // namespace fslsim
