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
#include <memory>
#include <utility>
#include <vector>

#include "fslsim/config.hpp"
#include "fslsim/engine.hpp"
#include "fslsim/matrix.hpp"
#include "fslsim/topology.hpp"

namespace fslsim {

// Parallel matrix multiplication, master/worker style: core 0 owns the
// operands, sends each worker its block of A rows plus a full copy of B,
// computes its own block, then gathers the result rows. Row ownership
// depends only on (rows, core count), so the product is identical on every
// topology; only the communication cost differs.

struct RowRange {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;  // exclusive
  std::uint32_t count() const { return end - begin; }
  bool empty() const { return begin == end; }
  friend bool operator==(const RowRange&, const RowRange&) = default;
};

/// Splits [0, row_count) into `parties` contiguous ranges whose sizes differ
/// by at most one; leading ranges take the remainder.
std::vector<RowRange> partition_rows(std::uint32_t row_count, std::uint32_t parties);

/// Workload phases carried in the value tag words.
inline constexpr std::uint32_t kTagMatrixA = 1;
inline constexpr std::uint32_t kTagMatrixB = 2;
inline constexpr std::uint32_t kTagResult = 3;

struct MatmulProgram {
  WorkloadProgram program;
  /// Filled with the assembled product when the master program finishes.
  std::shared_ptr<Matrix> result;
};

/// Builds the per-core programs for A*B on the given topology. Core 0 is
/// the master (the hub on a star). Throws WorkloadError on incompatible
/// shapes or when a dimension exceeds cfg.max_matrix_dim.
MatmulProgram build_matmul_program(const Matrix& a, const Matrix& b, const Topology& topology,
                                   const SimConfig& cfg);

/// Closed-form number of values moved by the matmul program: each working
/// core receives its A block and all of B and returns its result rows.
/// Equals the engine's message count in per-element frame mode.
std::uint64_t matmul_values_sent(std::uint32_t m, std::uint32_t k, std::uint32_t p,
                                 std::uint32_t parties);

/// Deterministic square operand pair for a sweep point; values are uniform
/// in [-100, 100) from a generator seeded by (seed, size).
std::pair<Matrix, Matrix> matmul_operands(std::uint32_t size, std::uint64_t seed);

}  // namespace fslsim
