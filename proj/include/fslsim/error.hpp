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

#include <stdexcept>
#include <string>

namespace fslsim {

/// Base class for all simulator errors.
class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TopologyError : public SimError {
 public:
  using SimError::SimError;
};

/// Requested core count / dimension outside the buildable range.
class InvalidSizeError : public TopologyError {
 public:
  using TopologyError::TopologyError;
};

/// Topology would exceed the 16-in/16-out per-core link limit.
class FanOutLimitError : public TopologyError {
 public:
  using TopologyError::TopologyError;
};

class RoutingError : public SimError {
 public:
  using SimError::SimError;
};

class CodecError : public SimError {
 public:
  using SimError::SimError;
};

class ConfigError : public SimError {
 public:
  using SimError::SimError;
};

class WorkloadError : public SimError {
 public:
  using SimError::SimError;
};

/// Raised when the event queue runs dry while cores are still waiting.
class DeadlockError : public SimError {
 public:
  using SimError::SimError;
};

namespace detail {
[[noreturn]] inline void check_failed(const std::string& what) { throw SimError(what); }
}  // namespace detail

/// Always-on internal invariant check (not compiled out like assert).
#define FSLSIM_CHECK(cond, msg)                     \
  do {                                              \
    if (!(cond)) ::fslsim::detail::check_failed(msg); \
  } while (0)

}  // namespace fslsim
