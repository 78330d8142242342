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

#include <doctest.h>

#include <random>

#include "fslsim/error.hpp"
#include "fslsim/workload.hpp"

using namespace fslsim;

namespace {

Matrix run_matmul(const Matrix& a, const Matrix& b, const Topology& t, const SimConfig& cfg,
                  Metrics* out_metrics = nullptr) {
  MatmulProgram mm = build_matmul_program(a, b, t, cfg);
  const Metrics m = run(cfg, t, mm.program);
  if (out_metrics) *out_metrics = m;
  return *mm.result;
}

}  // namespace

TEST_CASE("partition_rows splits contiguously with sizes differing by at most one") {
  CHECK(partition_rows(8, 7) ==
        std::vector<RowRange>{{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  CHECK(partition_rows(7, 7) ==
        std::vector<RowRange>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
  const auto sparse = partition_rows(3, 7);
  CHECK(sparse[0].count() == 1);
  CHECK(sparse[2].count() == 1);
  for (std::size_t i = 3; i < 7; ++i) CHECK(sparse[i].empty());

  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t rows = rng() % 60;
    const std::uint32_t parties = 1 + rng() % 12;
    const auto parts = partition_rows(rows, parties);
    REQUIRE(parts.size() == parties);
    std::uint32_t next = 0, lo = rows, hi = 0;
    for (const RowRange& r : parts) {
      CHECK(r.begin == next);
      next = r.end;
      lo = std::min(lo, r.count());
      hi = std::max(hi, r.count());
    }
    CHECK(next == rows);
    CHECK(hi - lo <= 1);
  }
  CHECK_THROWS_AS(partition_rows(4, 0), WorkloadError);
}

TEST_CASE("matmul_reference") {
  const Matrix a{2, 2, {1, 2, 3, 4}};
  const Matrix b{2, 2, {5, 6, 7, 8}};
  CHECK(matmul_reference(a, b) == Matrix{2, 2, {19, 22, 43, 50}});

  std::mt19937 rng(1);
  const Matrix m = random_matrix(3, 3, rng);
  CHECK(matmul_reference(Matrix::identity(3), m) == m);
  CHECK(matmul_reference(m, Matrix::zero(3, 3)) == Matrix::zero(3, 3));

  CHECK_THROWS_AS(matmul_reference(Matrix::zero(2, 3), Matrix::zero(2, 3)), WorkloadError);
}

TEST_CASE("random_matrix is deterministic and bounded") {
  std::mt19937 r1(77), r2(77);
  const Matrix a = random_matrix(5, 4, r1);
  const Matrix b = random_matrix(5, 4, r2);
  CHECK(a == b);
  for (const double v : a.values) {
    CHECK(v >= -100.0);
    CHECK(v < 100.0);
  }
}

TEST_CASE("verify_result bounds") {
  Matrix ref = Matrix::zero(2, 2);
  Matrix sim = ref;
  CHECK(verify_result(sim, ref, CodecMode::RawBits, 2, 100.0).pass);
  sim.at(0, 0) = 1e-9;
  CHECK_FALSE(verify_result(sim, ref, CodecMode::RawBits, 2, 100.0).pass);

  const VerifyResult v = verify_result(sim, ref, CodecMode::Decimal, 8, 100.0);
  CHECK(v.bound == doctest::Approx(8 * 2 * 100.0 * 5e-7));
  CHECK(v.pass);
}

TEST_CASE("simulated matmul matches the sequential reference on a star") {
  SimConfig cfg;
  const Topology star = Topology::star(8);
  const auto [a, b] = matmul_operands(8, 42);
  const Matrix ref = matmul_reference(a, b);

  SUBCASE("decimal mode stays within the propagation bound") {
    Metrics m;
    const Matrix c = run_matmul(a, b, star, cfg, &m);
    const VerifyResult v = verify_result(c, ref, CodecMode::Decimal, 8, 100.0);
    CHECK(v.pass);
    CHECK(m.messages_sent == m.messages_delivered);
    // one message per value: 7 workers * (1 row * 8 + 64) + 7 * 8 result rows
    CHECK(m.messages_sent == matmul_values_sent(8, 8, 8, 8));
    CHECK(m.messages_sent == 560);
  }

  SUBCASE("raw-bits mode is exact") {
    cfg.codec_mode = CodecMode::RawBits;
    const Matrix c = run_matmul(a, b, star, cfg);
    CHECK(c == ref);
  }
}

TEST_CASE("result is identical across topologies") {
  SimConfig cfg;
  const auto [a, b] = matmul_operands(8, 7);
  const Matrix on_ring = run_matmul(a, b, Topology::ring(8), cfg);
  const Matrix on_star = run_matmul(a, b, Topology::star(8), cfg);
  const Matrix on_cube = run_matmul(a, b, Topology::hypercube(3), cfg);
  CHECK(on_ring == on_star);
  CHECK(on_star == on_cube);
}

TEST_CASE("single-core run degenerates to sequential compute") {
  SimConfig cfg;
  const Topology solo = Topology::custom(TopologyKind::Star, 1, {}, CoreId{0});
  const auto [a, b] = matmul_operands(4, 3);
  Metrics m;
  const Matrix c = run_matmul(a, b, solo, cfg, &m);
  CHECK(c == matmul_reference(a, b));  // no codec on the master's own rows
  CHECK(m.messages_sent == 0);
  CHECK(m.total_cycles == 4ull * 4 * 4 * cfg.mac_cycles);
}

TEST_CASE("non-square shapes and empty workers") {
  SimConfig cfg;
  const Topology star = Topology::star(8);
  std::mt19937 rng(15);
  const Matrix a = random_matrix(3, 5, rng);
  const Matrix b = random_matrix(5, 2, rng);
  Metrics m;
  const Matrix c = run_matmul(a, b, star, cfg, &m);
  const VerifyResult v = verify_result(c, matmul_reference(a, b), CodecMode::Decimal, 5, 100.0);
  CHECK(v.pass);
  // rows go to the master and workers 1..2; workers 3..7 move nothing
  CHECK(m.messages_sent == matmul_values_sent(3, 5, 2, 8));
}

TEST_CASE("bulk frame mode moves the same values in fewer messages") {
  SimConfig cfg;
  cfg.frame_mode = FrameMode::Bulk;  // (16 - 2) / 2 = 7 values per frame
  const Topology star = Topology::star(8);
  const auto [a, b] = matmul_operands(8, 42);
  Metrics m;
  const Matrix c = run_matmul(a, b, star, cfg, &m);
  CHECK(verify_result(c, matmul_reference(a, b), CodecMode::Decimal, 8, 100.0).pass);
  CHECK(m.messages_sent < 560);
}

TEST_CASE("compute cycles are charged per multiply-accumulate") {
  SimConfig cfg;
  const Topology star = Topology::star(8);
  const auto [a, b] = matmul_operands(8, 1);
  Metrics m;
  run_matmul(a, b, star, cfg, &m);
  CHECK(m.total_compute_cycles() == 8ull * 8 * 8 * cfg.mac_cycles);
}

TEST_CASE("oversized matrices are rejected") {
  SimConfig cfg;
  cfg.max_matrix_dim = 8;
  const auto [a, b] = matmul_operands(16, 42);
  CHECK_THROWS_AS(build_matmul_program(a, b, Topology::star(8), cfg), WorkloadError);
  CHECK_THROWS_AS(
      build_matmul_program(Matrix::zero(2, 3), Matrix::zero(2, 3), Topology::star(8), cfg),
      WorkloadError);
}
