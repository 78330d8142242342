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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fslsim {

/// Static core identifier; cores are numbered densely from 0 to N-1.
using CoreId = std::uint32_t;

enum class TopologyKind { Ring, Star, Hypercube };

std::string to_string(TopologyKind kind);
std::optional<TopologyKind> topology_kind_from_string(std::string_view name);

/// One FSL channel: a unidirectional point-to-point word stream between two
/// cores. Bidirectional adjacency is always realized as two opposite links.
struct DirectedLink {
  CoreId from = 0;
  CoreId to = 0;
  friend auto operator<=>(const DirectedLink&, const DirectedLink&) = default;
};

enum class ViolationKind {
  SelfLink,
  DuplicateLink,
  MissingReverseLink,
  DegreeCap,
  Disconnected,
  BadCoreId,
  BadShape,
};

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

/// Immutable directed-link graph over statically numbered cores.
///
/// Factories enforce the construction preconditions and always produce graphs
/// that pass validate(). custom() assembles an arbitrary link set without
/// checks so that defective graphs can be probed with validate().
class Topology {
 public:
  static constexpr std::uint32_t kMaxLinksPerCore = 16;  // 16 in + 16 out FSL interfaces
  static constexpr std::uint32_t kMaxStarCores = 17;     // hub + 16 spokes
  static constexpr std::uint32_t kDefaultMaxCubeDim = 4; // scale policy, not a hard limit

  /// Ring of n >= 3 cores; ids increase clockwise, i.e. the clockwise
  /// successor of core i is (i+1) mod n.
  static Topology ring(std::uint32_t n);

  /// Star with hub fixed at core 0 and n-1 spokes; 2 <= n <= 17.
  static Topology star(std::uint32_t n);

  /// Hypercube of 2^dim cores; cores are adjacent iff their ids differ in
  /// exactly one bit. dim is capped at max_dim (default 4) as a scale policy.
  static Topology hypercube(std::uint32_t dim, std::uint32_t max_dim = kDefaultMaxCubeDim);

  /// Unchecked assembly, for tests and ad-hoc graphs. Pair with validate().
  static Topology custom(TopologyKind kind, std::uint32_t n, std::vector<DirectedLink> links,
                         std::optional<CoreId> hub = std::nullopt);

  TopologyKind kind() const { return kind_; }
  std::uint32_t core_count() const { return n_; }
  std::optional<CoreId> hub() const { return hub_; }
  /// Hypercube dimension; 0 for other kinds.
  std::uint32_t dimension() const { return dim_; }

  /// All links, sorted by (from, to).
  const std::vector<DirectedLink>& links() const { return links_; }
  bool has_link(CoreId from, CoreId to) const;

  /// Out-neighbors of c in ascending id order. Throws on out-of-range id.
  const std::vector<CoreId>& neighbors(CoreId c) const;
  std::uint32_t out_degree(CoreId c) const;
  std::uint32_t in_degree(CoreId c) const;

  ValidationReport validate() const;

 private:
  Topology(TopologyKind kind, std::uint32_t n, std::vector<DirectedLink> links,
           std::optional<CoreId> hub, std::uint32_t dim);

  TopologyKind kind_;
  std::uint32_t n_;
  std::uint32_t dim_ = 0;
  std::optional<CoreId> hub_;
  std::vector<DirectedLink> links_;              // sorted, unique
  std::vector<std::vector<CoreId>> adjacency_;   // out-neighbors per core, ascending
};

}  // namespace fslsim
