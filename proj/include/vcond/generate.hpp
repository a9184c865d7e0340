/* Copyright 2026 The viralcond authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "vcond/graph.hpp"

namespace vcond {

// Generator families. Random families carry their seed so that a spec value
// fully determines the produced graph, bit for bit.

struct Ring {
  NodeId nodes;
};

struct RandomRegular {
  NodeId nodes;
  int degree;
  std::uint64_t seed;
};

struct CompleteBipartite {
  NodeId left;
  NodeId right;
};

struct Petersen {};

struct Grid2d {
  NodeId rows;
  NodeId cols;
};

/// Fixed-edge-count Erdos-Renyi model: exactly `links` distinct pairs.
struct ErdosRenyiNl {
  NodeId nodes;
  std::int64_t links;
  std::uint64_t seed;
};

/// Growth with degree-proportional attachment, m links per new node, from
/// an (m+1)-clique. m is the integer bringing the final link count closest
/// to `links_target`; the achieved count is reported by GenerationLog.
struct PreferentialAttachment {
  NodeId nodes;
  std::int64_t links_target;
  std::uint64_t seed;
};

using NetworkSpec = std::variant<Ring, RandomRegular, CompleteBipartite,
                                 Petersen, Grid2d, ErdosRenyiNl,
                                 PreferentialAttachment>;

/// Side information about a generator run.
struct GenerationLog {
  long sample_attempts = 0;   // full resamples before a connected graph
  long rewired_edges = 0;     // connectivity repairs applied to the last sample
  std::int64_t achieved_links = 0;
};

/// Builds the requested family. Every output is connected and satisfies the
/// Graph invariants; seeded families are reproducible bit for bit.
/// Throws ValidationError for infeasible parameters, GenerationError when a
/// bounded-retry construction fails.
Graph generate(const NetworkSpec& spec, GenerationLog* log = nullptr);

/// Parses "family:params" strings, e.g. "ring:1000", "grid2d:30,30",
/// "erdos_renyi_nl:1000,2009". Random families take their seed from `seed`
/// and reject a missing one.
NetworkSpec parse_network_spec(std::string_view text,
                               std::optional<std::uint64_t> seed = std::nullopt);

/// Canonical "family:params" string for a spec (seed excluded).
std::string describe(const NetworkSpec& spec);

/// True for families that consume the seed.
bool is_random_family(const NetworkSpec& spec);

}  // namespace vcond
