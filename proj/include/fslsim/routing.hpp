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
#include <vector>

#include "fslsim/topology.hpp"

namespace fslsim {

/// A source-to-destination path, both endpoints inclusive.
struct Route {
  std::vector<CoreId> path;
  std::uint32_t hops() const { return static_cast<std::uint32_t>(path.size()) - 1; }
};

/// Shortest-arc ring step. Routes clockwise (increasing id) when the
/// clockwise distance is at most half the ring; clockwise wins the tie at
/// exactly n/2. Throws RoutingError when current == dest.
CoreId next_hop_ring(std::uint32_t n, CoreId current, CoreId dest);

/// Star step: spokes send everything to the hub; the hub sends directly to
/// the destination spoke.
CoreId next_hop_star(CoreId hub, CoreId current, CoreId dest);

/// Dimension-order (e-cube) step: flips the lowest-order bit in which
/// current and dest differ.
CoreId next_hop_hypercube(std::uint32_t dim, CoreId current, CoreId dest);

/// Dispatch to the kind-specific step function.
CoreId next_hop(const Topology& t, CoreId current, CoreId dest);

/// Full path obtained by iterating next_hop; src == dest yields [src].
Route route(const Topology& t, CoreId src, CoreId dest);

/// Number of link traversals on route(t, src, dest).
std::uint32_t hop_count(const Topology& t, CoreId src, CoreId dest);

}  // namespace fslsim
