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

#include "fslsim/matrix.hpp"

#include <cmath>

#include "fslsim/error.hpp"

namespace fslsim {

Matrix Matrix::identity(std::uint32_t n) {
  Matrix m = zero(n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

Matrix matmul_reference(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw WorkloadError("shape mismatch: " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                        " * " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
  }
  Matrix c = Matrix::zero(a.rows, b.cols);
  for (std::uint32_t i = 0; i < a.rows; ++i) {
    for (std::uint32_t j = 0; j < b.cols; ++j) {
      double sum = 0.0;
      for (std::uint32_t k = 0; k < a.cols; ++k) sum += a.at(i, k) * b.at(k, j);
      c.at(i, j) = sum;
    }
  }
  return c;
}

Matrix random_matrix(std::uint32_t rows, std::uint32_t cols, std::mt19937& rng, double lo,
                     double hi) {
  Matrix m = Matrix::zero(rows, cols);
  const double span = hi - lo;
  for (double& v : m.values) {
    v = lo + span * (static_cast<double>(rng()) / 4294967296.0);
  }
  return m;
}

VerifyResult verify_result(const Matrix& simulated, const Matrix& reference, CodecMode mode,
                           std::uint32_t inner_dim, double vmax) {
  if (simulated.rows != reference.rows || simulated.cols != reference.cols) {
    throw WorkloadError("verify_result: shape mismatch");
  }
  VerifyResult out;
  out.bound = mode == CodecMode::RawBits ? 0.0 : inner_dim * 2.0 * vmax * 5e-7;
  for (std::size_t i = 0; i < simulated.values.size(); ++i) {
    out.max_abs_error = std::max(out.max_abs_error,
                                 std::abs(simulated.values[i] - reference.values[i]));
  }
  out.pass = out.max_abs_error <= out.bound;
  return out;
}

}  // namespace fslsim
