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

#include "fslsim/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "fslsim/error.hpp"

namespace fslsim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_unsigned(std::string_view key, std::string_view value) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ConfigError("bad value for " + std::string(key) + ": '" + std::string(value) + "'");
  }
  return out;
}

}  // namespace

std::string to_string(FrameMode mode) {
  return mode == FrameMode::PerElement ? "element" : "bulk";
}

void SimConfig::validate() const {
  if (clock_hz < 1) throw ConfigError("clock_hz must be >= 1");
  if (cycles_per_word < 1) throw ConfigError("cycles_per_word must be >= 1");
  if (interrupt_overhead_cycles < 1) throw ConfigError("interrupt_overhead_cycles must be >= 1");
  if (mac_cycles < 1) throw ConfigError("mac_cycles must be >= 1");
  if (fifo_depth_words < 4) throw ConfigError("fifo_depth_words must be >= 4 (one value frame)");
  if (max_matrix_dim < 1) throw ConfigError("max_matrix_dim must be >= 1");
  // 4 bytes per word; keep the implied link rate at or below 400 MB/s.
  if (4 * clock_hz > 400'000'000ULL * cycles_per_word) {
    throw ConfigError("link throughput 4*clock_hz/cycles_per_word exceeds 400 MB/s");
  }
}

void SimConfig::apply(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected key=value, got '" + std::string(assignment) + "'");
  }
  const std::string_view key = trim(assignment.substr(0, eq));
  const std::string_view value = trim(assignment.substr(eq + 1));
  if (key == "clock_hz") {
    clock_hz = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "cycles_per_word") {
    cycles_per_word = parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "interrupt_overhead_cycles") {
    interrupt_overhead_cycles = parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "fifo_depth_words") {
    fifo_depth_words = parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "mac_cycles") {
    mac_cycles = parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "max_matrix_dim") {
    max_matrix_dim = parse_unsigned<std::uint32_t>(key, value);
  } else if (key == "max_events") {
    max_events = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "codec_mode") {
    const auto mode = codec_mode_from_string(value);
    if (!mode) throw ConfigError("codec_mode must be 'decimal' or 'rawbits'");
    codec_mode = *mode;
  } else if (key == "frame_mode") {
    if (value == "element") {
      frame_mode = FrameMode::PerElement;
    } else if (value == "bulk") {
      frame_mode = FrameMode::Bulk;
    } else {
      throw ConfigError("frame_mode must be 'element' or 'bulk'");
    }
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void load_config_stream(std::istream& in, SimConfig& cfg, const std::string& origin) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    try {
      cfg.apply(s);
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void load_config_file(const std::string& path, SimConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  load_config_stream(in, cfg, path);
}

}  // namespace fslsim
