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

#include "fslsim/routing.hpp"

#include <string>

#include "fslsim/error.hpp"

namespace fslsim {

namespace {

void require_pair(std::uint32_t n, CoreId current, CoreId dest) {
  if (current >= n || dest >= n) {
    throw RoutingError("core id out of range: current=" + std::to_string(current) +
                       " dest=" + std::to_string(dest) + " n=" + std::to_string(n));
  }
  if (current == dest) throw RoutingError("no next hop: already at destination");
}

}  // namespace

CoreId next_hop_ring(std::uint32_t n, CoreId current, CoreId dest) {
  require_pair(n, current, dest);
  const std::uint32_t clockwise = (dest + n - current) % n;
  // 2k <= n: clockwise arc is shortest or tied; ties break clockwise.
  if (2 * clockwise <= n) return (current + 1) % n;
  return (current + n - 1) % n;
}

CoreId next_hop_star(CoreId hub, CoreId current, CoreId dest) {
  if (current == dest) throw RoutingError("no next hop: already at destination");
  return current == hub ? dest : hub;
}

CoreId next_hop_hypercube(std::uint32_t dim, CoreId current, CoreId dest) {
  require_pair(1u << dim, current, dest);
  const std::uint32_t diff = current ^ dest;
  const std::uint32_t low_bit = diff & (~diff + 1);
  return current ^ low_bit;
}

CoreId next_hop(const Topology& t, CoreId current, CoreId dest) {
  if (current >= t.core_count() || dest >= t.core_count()) {
    throw RoutingError("core id out of range for topology of " +
                       std::to_string(t.core_count()) + " cores");
  }
  switch (t.kind()) {
    case TopologyKind::Ring: return next_hop_ring(t.core_count(), current, dest);
    case TopologyKind::Star: return next_hop_star(t.hub().value_or(0), current, dest);
    case TopologyKind::Hypercube: return next_hop_hypercube(t.dimension(), current, dest);
  }
  throw RoutingError("unknown topology kind");
}

Route route(const Topology& t, CoreId src, CoreId dest) {
  if (src >= t.core_count() || dest >= t.core_count()) {
    throw RoutingError("core id out of range for topology of " +
                       std::to_string(t.core_count()) + " cores");
  }
  Route r;
  r.path.push_back(src);
  CoreId at = src;
  while (at != dest) {
    at = next_hop(t, at, dest);
    r.path.push_back(at);
    FSLSIM_CHECK(r.path.size() <= t.core_count(), "routing loop detected");
  }
  return r;
}

std::uint32_t hop_count(const Topology& t, CoreId src, CoreId dest) {
  return route(t, src, dest).hops();
}

}  // namespace fslsim
