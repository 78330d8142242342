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

#include "fslsim/topology.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "fslsim/error.hpp"

namespace fslsim {

std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Ring: return "ring";
    case TopologyKind::Star: return "star";
    case TopologyKind::Hypercube: return "cube";
  }
  return "unknown";
}

std::optional<TopologyKind> topology_kind_from_string(std::string_view name) {
  if (name == "ring") return TopologyKind::Ring;
  if (name == "star") return TopologyKind::Star;
  if (name == "cube" || name == "hypercube") return TopologyKind::Hypercube;
  return std::nullopt;
}

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

Topology::Topology(TopologyKind kind, std::uint32_t n, std::vector<DirectedLink> links,
                   std::optional<CoreId> hub, std::uint32_t dim)
    : kind_(kind), n_(n), dim_(dim), hub_(hub), links_(std::move(links)) {
  std::sort(links_.begin(), links_.end());
  links_.erase(std::unique(links_.begin(), links_.end()), links_.end());
  adjacency_.resize(n_);
  for (const DirectedLink& l : links_) {
    if (l.from < n_) adjacency_[l.from].push_back(l.to);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Topology Topology::ring(std::uint32_t n) {
  if (n < 3) throw InvalidSizeError("ring requires at least 3 cores, got " + std::to_string(n));
  std::vector<DirectedLink> links;
  links.reserve(2 * n);
  for (CoreId i = 0; i < n; ++i) {
    const CoreId next = (i + 1) % n;
    links.push_back({i, next});
    links.push_back({next, i});
  }
  return Topology(TopologyKind::Ring, n, std::move(links), std::nullopt, 0);
}

Topology Topology::star(std::uint32_t n) {
  if (n < 2) throw InvalidSizeError("star requires at least 2 cores, got " + std::to_string(n));
  if (n > kMaxStarCores) {
    throw FanOutLimitError("star with " + std::to_string(n) + " cores needs " +
                           std::to_string(n - 1) + " hub links; the per-core limit is " +
                           std::to_string(kMaxLinksPerCore));
  }
  std::vector<DirectedLink> links;
  links.reserve(2 * (n - 1));
  for (CoreId k = 1; k < n; ++k) {
    links.push_back({0, k});
    links.push_back({k, 0});
  }
  return Topology(TopologyKind::Star, n, std::move(links), CoreId{0}, 0);
}

Topology Topology::hypercube(std::uint32_t dim, std::uint32_t max_dim) {
  if (dim < 1) throw InvalidSizeError("hypercube requires dimension >= 1");
  if (dim > max_dim) {
    throw InvalidSizeError("hypercube dimension " + std::to_string(dim) +
                           " exceeds the configured cap of " + std::to_string(max_dim));
  }
  const std::uint32_t n = 1u << dim;
  std::vector<DirectedLink> links;
  links.reserve(static_cast<std::size_t>(dim) * n);
  for (CoreId i = 0; i < n; ++i) {
    for (std::uint32_t b = 0; b < dim; ++b) {
      links.push_back({i, i ^ (1u << b)});
    }
  }
  return Topology(TopologyKind::Hypercube, n, std::move(links), std::nullopt, dim);
}

Topology Topology::custom(TopologyKind kind, std::uint32_t n, std::vector<DirectedLink> links,
                          std::optional<CoreId> hub) {
  std::uint32_t dim = 0;
  if (kind == TopologyKind::Hypercube && n > 0 && std::has_single_bit(n)) {
    dim = static_cast<std::uint32_t>(std::bit_width(n) - 1);
  }
  return Topology(kind, n, std::move(links), hub, dim);
}

bool Topology::has_link(CoreId from, CoreId to) const {
  return std::binary_search(links_.begin(), links_.end(), DirectedLink{from, to});
}

const std::vector<CoreId>& Topology::neighbors(CoreId c) const {
  if (c >= n_) throw TopologyError("core id " + std::to_string(c) + " out of range");
  return adjacency_[c];
}

std::uint32_t Topology::out_degree(CoreId c) const {
  return static_cast<std::uint32_t>(neighbors(c).size());
}

std::uint32_t Topology::in_degree(CoreId c) const {
  if (c >= n_) throw TopologyError("core id " + std::to_string(c) + " out of range");
  std::uint32_t deg = 0;
  for (const DirectedLink& l : links_) deg += (l.to == c) ? 1 : 0;
  return deg;
}

ValidationReport Topology::validate() const {
  ValidationReport report;
  auto add = [&report](ViolationKind kind, std::string detail) {
    report.violations.push_back({kind, std::move(detail)});
  };

  std::vector<std::uint32_t> out_deg(n_, 0), in_deg(n_, 0);
  const DirectedLink* prev = nullptr;
  for (const DirectedLink& l : links_) {
    if (l.from >= n_ || l.to >= n_) {
      add(ViolationKind::BadCoreId,
          "link " + std::to_string(l.from) + "->" + std::to_string(l.to) + " references a core >= n");
      continue;
    }
    if (l.from == l.to) add(ViolationKind::SelfLink, "self-link at core " + std::to_string(l.from));
    if (prev && *prev == l) {
      add(ViolationKind::DuplicateLink,
          "duplicate link " + std::to_string(l.from) + "->" + std::to_string(l.to));
    }
    prev = &l;
    out_deg[l.from]++;
    in_deg[l.to]++;
    if (!has_link(l.to, l.from)) {
      add(ViolationKind::MissingReverseLink,
          "link " + std::to_string(l.from) + "->" + std::to_string(l.to) + " has no reverse link");
    }
  }
  for (CoreId c = 0; c < n_; ++c) {
    if (out_deg[c] > kMaxLinksPerCore || in_deg[c] > kMaxLinksPerCore) {
      add(ViolationKind::DegreeCap,
          "core " + std::to_string(c) + " has out-degree " + std::to_string(out_deg[c]) +
              ", in-degree " + std::to_string(in_deg[c]) + " (limit " +
              std::to_string(kMaxLinksPerCore) + ")");
    }
  }

  // Reachability over directed out-links from core 0.
  if (n_ > 0) {
    std::vector<bool> seen(n_, false);
    std::deque<CoreId> frontier{0};
    seen[0] = true;
    while (!frontier.empty()) {
      const CoreId c = frontier.front();
      frontier.pop_front();
      for (CoreId d : adjacency_[c]) {
        if (d < n_ && !seen[d]) {
          seen[d] = true;
          frontier.push_back(d);
        }
      }
    }
    for (CoreId c = 0; c < n_; ++c) {
      if (!seen[c]) add(ViolationKind::Disconnected, "core " + std::to_string(c) + " unreachable from core 0");
    }
  }

  switch (kind_) {
    case TopologyKind::Star:
      if (!hub_ || *hub_ != 0) add(ViolationKind::BadShape, "star hub must be core 0");
      if (n_ > kMaxStarCores) {
        add(ViolationKind::BadShape,
            "star size " + std::to_string(n_) + " exceeds the " + std::to_string(kMaxStarCores) +
                "-core limit");
      }
      break;
    case TopologyKind::Hypercube:
      if (n_ == 0 || !std::has_single_bit(n_)) {
        add(ViolationKind::BadShape, "hypercube core count must be a power of two");
      } else {
        for (CoreId i = 0; i < n_; ++i) {
          for (CoreId j = 0; j < n_; ++j) {
            const bool adjacent = has_link(i, j);
            const bool hamming1 = std::popcount(i ^ j) == 1;
            if (adjacent != hamming1 && i != j) {
              add(ViolationKind::BadShape,
                  "cube adjacency mismatch between cores " + std::to_string(i) + " and " +
                      std::to_string(j));
            }
          }
        }
      }
      break;
    case TopologyKind::Ring:
      if (n_ >= 3) {
        for (CoreId i = 0; i < n_; ++i) {
          const CoreId next = (i + 1) % n_;
          if (!has_link(i, next) || !has_link(next, i)) {
            add(ViolationKind::BadShape,
                "ring adjacency missing between cores " + std::to_string(i) + " and " +
                    std::to_string(next));
          }
        }
      }
      break;
  }
  return report;
}

}  // namespace fslsim
