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
#include <iosfwd>
#include <string>
#include <string_view>

#include "fslsim/codec.hpp"

namespace fslsim {

enum class FrameMode {
  PerElement,  // one message per value
  Bulk,        // as many values per message as the FIFO depth allows
};

std::string to_string(FrameMode mode);

/// All timing and capacity parameters of a run. Defaults model a 100 MHz
/// soft-core system whose links move one 32-bit word every two cycles
/// (200 MB/s, inside the 300 MB/s link ceiling).
struct SimConfig {
  std::uint64_t clock_hz = 100'000'000;
  std::uint32_t cycles_per_word = 2;
  std::uint32_t interrupt_overhead_cycles = 40;
  std::uint32_t fifo_depth_words = 16;
  std::uint32_t mac_cycles = 10;
  CodecMode codec_mode = CodecMode::Decimal;
  FrameMode frame_mode = FrameMode::PerElement;
  std::uint32_t max_matrix_dim = 512;
  std::uint64_t max_events = 4'000'000'000ULL;

  /// Throws ConfigError when a field is out of range or the implied link
  /// throughput 4 * clock_hz / cycles_per_word exceeds 400 MB/s.
  void validate() const;

  /// Applies one "key=value" assignment. Throws ConfigError on unknown keys
  /// or unparsable values.
  void apply(std::string_view assignment);
};

/// Reads flat "key=value" lines ('#' starts a comment) into cfg.
void load_config_file(const std::string& path, SimConfig& cfg);
void load_config_stream(std::istream& in, SimConfig& cfg, const std::string& origin);

}  // namespace fslsim
