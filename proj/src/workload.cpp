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

#include "fslsim/workload.hpp"

#include <span>
#include <string>

#include "fslsim/error.hpp"

namespace fslsim {

std::vector<RowRange> partition_rows(std::uint32_t row_count, std::uint32_t parties) {
  if (parties < 1) throw WorkloadError("partition requires at least one party");
  std::vector<RowRange> ranges(parties);
  const std::uint32_t base = row_count / parties;
  const std::uint32_t extra = row_count % parties;
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < parties; ++i) {
    const std::uint32_t size = base + (i < extra ? 1 : 0);
    ranges[i] = RowRange{next, next + size};
    next += size;
  }
  return ranges;
}

std::uint64_t matmul_values_sent(std::uint32_t m, std::uint32_t k, std::uint32_t p,
                                 std::uint32_t parties) {
  const auto parts = partition_rows(m, parties);
  std::uint64_t total = 0;
  for (std::uint32_t w = 1; w < parties; ++w) {
    if (parts[w].empty()) continue;
    total += static_cast<std::uint64_t>(parts[w].count()) * k;  // A block out
    total += static_cast<std::uint64_t>(k) * p;                 // B copy out
    total += static_cast<std::uint64_t>(parts[w].count()) * p;  // result rows back
  }
  return total;
}

std::pair<Matrix, Matrix> matmul_operands(std::uint32_t size, std::uint64_t seed) {
  std::mt19937 rng(static_cast<std::uint32_t>(seed) + size * 0x9E3779B9u);
  Matrix a = random_matrix(size, size, rng);
  Matrix b = random_matrix(size, size, rng);
  return {std::move(a), std::move(b)};
}

namespace {

struct MatmulShared {
  Matrix a;
  Matrix b;
  std::vector<RowRange> parts;
  CodecMode mode = CodecMode::Decimal;
  std::uint32_t mac_cycles = 1;
  std::uint32_t values_per_frame = 1;
  std::shared_ptr<Matrix> result;
};

std::vector<std::vector<Word>> pack_values(std::span<const double> values, std::uint32_t tag,
                                           CodecMode mode, std::uint32_t per_frame) {
  std::vector<std::vector<Word>> frames;
  frames.reserve((values.size() + per_frame - 1) / per_frame);
  std::vector<Word> payload;
  for (std::size_t i = 0; i < values.size(); ++i) {
    append_value(payload, values[i], tag, mode);
    if (payload.size() / kValuePayloadWords == per_frame || i + 1 == values.size()) {
      frames.push_back(std::move(payload));
      payload.clear();
    }
  }
  return frames;
}

SimTask run_master(CoreHandle& core, std::shared_ptr<MatmulShared> sh) {
  const Matrix& a = sh->a;
  const Matrix& b = sh->b;
  const std::uint32_t k = a.cols;
  const std::uint32_t p = b.cols;
  const std::uint32_t parties = core.core_count();

  // Distribute: each working core gets its rows of A and a full copy of B.
  for (CoreId w = 1; w < parties; ++w) {
    const RowRange range = sh->parts[w];
    if (range.empty()) continue;
    std::vector<double> block;
    block.reserve(static_cast<std::size_t>(range.count()) * k);
    for (std::uint32_t i = range.begin; i < range.end; ++i) {
      for (std::uint32_t j = 0; j < k; ++j) block.push_back(a.at(i, j));
    }
    for (auto& payload : pack_values(block, kTagMatrixA, sh->mode, sh->values_per_frame)) {
      co_await core.send(w, std::move(payload));
    }
    for (auto& payload : pack_values(b.values, kTagMatrixB, sh->mode, sh->values_per_frame)) {
      co_await core.send(w, std::move(payload));
    }
  }

  // Master's own block, straight from the operands.
  Matrix& c = *sh->result;
  const RowRange own = sh->parts[0];
  for (std::uint32_t i = own.begin; i < own.end; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      co_await core.compute(static_cast<std::uint64_t>(k) * sh->mac_cycles);
      double sum = 0.0;
      for (std::uint32_t kk = 0; kk < k; ++kk) sum += a.at(i, kk) * b.at(kk, j);
      c.at(i, j) = sum;
    }
  }

  // Gather result rows, worker by worker.
  for (CoreId w = 1; w < parties; ++w) {
    const RowRange range = sh->parts[w];
    if (range.empty()) continue;
    const std::size_t expected = static_cast<std::size_t>(range.count()) * p;
    std::vector<double> received;
    received.reserve(expected);
    while (received.size() < expected) {
      const Message msg = co_await core.recv_from(w);
      std::size_t offset = 0;
      while (offset < msg.payload.size()) {
        const DecodedValue dv = read_value(msg.payload, offset, sh->mode);
        if (sh->mode == CodecMode::Decimal && dv.tag != kTagResult) {
          throw WorkloadError("master expected result values from core " + std::to_string(w) +
                              ", got tag " + std::to_string(dv.tag));
        }
        received.push_back(dv.value);
      }
    }
    if (received.size() != expected) {
      throw WorkloadError("result row count mismatch from core " + std::to_string(w));
    }
    std::size_t idx = 0;
    for (std::uint32_t i = range.begin; i < range.end; ++i) {
      for (std::uint32_t j = 0; j < p; ++j) c.at(i, j) = received[idx++];
    }
  }
}

SimTask run_worker(CoreHandle& core, std::shared_ptr<MatmulShared> sh) {
  const RowRange range = sh->parts[core.id()];
  if (range.empty()) co_return;
  const std::uint32_t k = sh->a.cols;
  const std::uint32_t p = sh->b.cols;

  std::vector<double> a_block;
  a_block.reserve(static_cast<std::size_t>(range.count()) * k);
  while (a_block.size() < static_cast<std::size_t>(range.count()) * k) {
    const Message msg = co_await core.recv_from(0);
    std::size_t offset = 0;
    while (offset < msg.payload.size()) {
      const DecodedValue dv = read_value(msg.payload, offset, sh->mode);
      if (sh->mode == CodecMode::Decimal && dv.tag != kTagMatrixA) {
        throw WorkloadError("worker expected A-block values");
      }
      a_block.push_back(dv.value);
    }
  }
  std::vector<double> b_vals;
  b_vals.reserve(static_cast<std::size_t>(k) * p);
  while (b_vals.size() < static_cast<std::size_t>(k) * p) {
    const Message msg = co_await core.recv_from(0);
    std::size_t offset = 0;
    while (offset < msg.payload.size()) {
      const DecodedValue dv = read_value(msg.payload, offset, sh->mode);
      if (sh->mode == CodecMode::Decimal && dv.tag != kTagMatrixB) {
        throw WorkloadError("worker expected B values");
      }
      b_vals.push_back(dv.value);
    }
  }

  // Each output element is computed with k multiply-accumulates and streamed
  // straight back (bulk mode batches full frames before sending).
  std::vector<Word> pending;
  const std::size_t flush_words =
      static_cast<std::size_t>(sh->values_per_frame) * kValuePayloadWords;
  for (std::uint32_t i = 0; i < range.count(); ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      co_await core.compute(static_cast<std::uint64_t>(k) * sh->mac_cycles);
      double sum = 0.0;
      for (std::uint32_t kk = 0; kk < k; ++kk) {
        sum += a_block[static_cast<std::size_t>(i) * k + kk] * b_vals[static_cast<std::size_t>(kk) * p + j];
      }
      append_value(pending, sum, kTagResult, sh->mode);
      if (pending.size() >= flush_words) {
        co_await core.send(0, std::move(pending));
        pending = {};
      }
    }
  }
  if (!pending.empty()) co_await core.send(0, std::move(pending));
}

}  // namespace

MatmulProgram build_matmul_program(const Matrix& a, const Matrix& b, const Topology& topology,
                                   const SimConfig& cfg) {
  if (a.cols != b.rows) {
    throw WorkloadError("shape mismatch: " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                        " * " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
  }
  const std::uint32_t largest = std::max({a.rows, a.cols, b.cols});
  if (largest > cfg.max_matrix_dim) {
    throw WorkloadError("matrix dimension " + std::to_string(largest) +
                        " exceeds max_matrix_dim=" + std::to_string(cfg.max_matrix_dim));
  }

  auto sh = std::make_shared<MatmulShared>();
  sh->a = a;
  sh->b = b;
  sh->parts = partition_rows(a.rows, topology.core_count());
  sh->mode = cfg.codec_mode;
  sh->mac_cycles = cfg.mac_cycles;
  sh->values_per_frame =
      cfg.frame_mode == FrameMode::PerElement
          ? 1
          : std::max<std::uint32_t>(1, (cfg.fifo_depth_words - 2) /
                                           static_cast<std::uint32_t>(kValuePayloadWords));
  sh->result = std::make_shared<Matrix>(Matrix::zero(a.rows, b.cols));

  MatmulProgram out;
  out.result = sh->result;
  out.program.programs.resize(topology.core_count());
  out.program.programs[0] = [sh](CoreHandle& core) { return run_master(core, sh); };
  for (CoreId w = 1; w < topology.core_count(); ++w) {
    out.program.programs[w] = [sh](CoreHandle& core) { return run_worker(core, sh); };
  }
  return out;
}

}  // namespace fslsim
