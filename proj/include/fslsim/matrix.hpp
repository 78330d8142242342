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
#include <random>
#include <vector>

#include "fslsim/codec.hpp"

namespace fslsim {

/// Dense row-major matrix of doubles.
struct Matrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<double> values;

  static Matrix zero(std::uint32_t rows, std::uint32_t cols) {
    return Matrix{rows, cols, std::vector<double>(static_cast<std::size_t>(rows) * cols, 0.0)};
  }
  static Matrix identity(std::uint32_t n);

  double& at(std::uint32_t i, std::uint32_t j) { return values[static_cast<std::size_t>(i) * cols + j]; }
  double at(std::uint32_t i, std::uint32_t j) const {
    return values[static_cast<std::size_t>(i) * cols + j];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// Sequential triple-loop product in double precision; the correctness
/// oracle for the distributed computation. Throws WorkloadError on shape
/// mismatch.
Matrix matmul_reference(const Matrix& a, const Matrix& b);

/// Matrix with entries drawn from [lo, hi) using raw 32-bit generator draws,
/// so the values are identical on every platform for a given seed.
Matrix random_matrix(std::uint32_t rows, std::uint32_t cols, std::mt19937& rng, double lo = -100.0,
                     double hi = 100.0);

struct VerifyResult {
  bool pass = false;
  double max_abs_error = 0.0;
  double bound = 0.0;
};

/// Compares a simulated product against the reference. RawBits mode demands
/// exact equality; Decimal mode allows inner_dim * 2 * vmax * 5e-7 per
/// element (linear propagation of the codec's quantization error).
VerifyResult verify_result(const Matrix& simulated, const Matrix& reference, CodecMode mode,
                           std::uint32_t inner_dim, double vmax);

}  // namespace fslsim
