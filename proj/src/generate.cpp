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

#include "vcond/generate.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <vector>

namespace vcond {
namespace {

// Draws uniformly from [0, n). Rejection keeps the draw unbiased and
// independent of the standard library's distribution implementation, so a
// seed pins the graph across toolchains.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = rng();
  while (x < threshold) x = rng();
  return x % n;
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::swap(values[i - 1], values[bounded(rng, i)]);
  }
}

std::vector<std::vector<NodeId>> adjacency_lists(NodeId n,
                                                 const std::vector<Edge>& edges) {
  std::vector<std::vector<NodeId>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

// Component label per node, BFS over edge lists.
std::vector<int> component_labels(NodeId n, const std::vector<Edge>& edges,
                                  int& component_count) {
  const auto adj = adjacency_lists(n, edges);
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  component_count = 0;
  for (NodeId start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] != -1) continue;
    label[static_cast<std::size_t>(start)] = component_count;
    std::vector<NodeId> stack{start};
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      for (const NodeId v : adj[static_cast<std::size_t>(u)]) {
        if (label[static_cast<std::size_t>(v)] == -1) {
          label[static_cast<std::size_t>(v)] = component_count;
          stack.push_back(v);
        }
      }
    }
    ++component_count;
  }
  return label;
}

// True if endpoints of edges[skip] stay connected when that edge is removed.
bool is_cycle_edge(NodeId n, const std::vector<Edge>& edges, std::size_t skip) {
  const auto [src, dst] = edges[skip];
  const auto adj = adjacency_lists(n, edges);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> stack{src};
  seen[static_cast<std::size_t>(src)] = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (const NodeId v : adj[static_cast<std::size_t>(u)]) {
      if (u == src && v == dst) continue;  // skip one instance of the edge
      if (v == dst) return true;
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

Graph build_ring(const Ring& spec) {
  if (spec.nodes < 3) {
    throw ValidationError("ring needs at least 3 nodes");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.nodes));
  for (NodeId i = 0; i < spec.nodes; ++i) {
    edges.emplace_back(i, (i + 1) % spec.nodes);
  }
  return Graph(spec.nodes, std::move(edges));
}

Graph build_complete_bipartite(const CompleteBipartite& spec) {
  if (spec.left < 1 || spec.right < 1) {
    throw ValidationError("complete_bipartite needs both sides non-empty");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(spec.left) *
                static_cast<std::size_t>(spec.right));
  for (NodeId i = 0; i < spec.left; ++i) {
    for (NodeId j = 0; j < spec.right; ++j) {
      edges.emplace_back(i, spec.left + j);
    }
  }
  return Graph(spec.left + spec.right, std::move(edges));
}

Graph build_petersen() {
  // Outer 5-cycle, inner pentagram, five spokes.
  std::vector<Edge> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(edges));
}

Graph build_grid2d(const Grid2d& spec) {
  if (spec.rows < 1 || spec.cols < 1 ||
      static_cast<std::int64_t>(spec.rows) * spec.cols < 2) {
    throw ValidationError("grid2d needs at least 2 nodes");
  }
  // Open boundary: no wrap-around edges.
  std::vector<Edge> edges;
  auto id = [&](NodeId r, NodeId c) { return r * spec.cols + c; };
  for (NodeId r = 0; r < spec.rows; ++r) {
    for (NodeId c = 0; c < spec.cols; ++c) {
      if (c + 1 < spec.cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < spec.rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return Graph(spec.rows * spec.cols, std::move(edges));
}

Graph build_random_regular(const RandomRegular& spec) {
  const NodeId n = spec.nodes;
  const int k = spec.degree;
  if (n < 2 || k < 1 || k >= n) {
    throw ValidationError("random_regular needs 1 <= k < N");
  }
  if ((static_cast<std::int64_t>(n) * k) % 2 != 0) {
    throw ValidationError("random_regular needs N*k even");
  }

  std::mt19937_64 rng(spec.seed);
  constexpr int kMaxAttempts = 1000;
  // Pairing model: shuffle the k*N stubs, pair them up, reject pairings
  // with self-loops or repeated edges, then reject disconnected graphs.
  std::vector<NodeId> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    stubs.clear();
    for (NodeId v = 0; v < n; ++v) {
      for (int j = 0; j < k; ++j) stubs.push_back(v);
    }
    shuffle(rng, stubs);

    std::set<Edge> edge_set;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      NodeId u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        simple = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!edge_set.emplace(u, v).second) {
        simple = false;
        break;
      }
    }
    if (!simple) continue;

    Graph g(n, std::vector<Edge>(edge_set.begin(), edge_set.end()));
    if (is_connected(g)) return g;
  }
  throw GenerationError("random_regular: no simple connected pairing after " +
                        std::to_string(kMaxAttempts) + " attempts");
}

std::vector<Edge> sample_distinct_pairs(std::mt19937_64& rng, NodeId n,
                                        std::int64_t links) {
  std::set<Edge> pairs;
  while (static_cast<std::int64_t>(pairs.size()) < links) {
    auto u = static_cast<NodeId>(bounded(rng, static_cast<std::uint64_t>(n)));
    auto v = static_cast<NodeId>(bounded(rng, static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    pairs.emplace(u, v);
  }
  return {pairs.begin(), pairs.end()};
}

Graph build_erdos_renyi(const ErdosRenyiNl& spec, GenerationLog* log) {
  const NodeId n = spec.nodes;
  const std::int64_t links = spec.links;
  const std::int64_t max_links = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n < 2) throw ValidationError("erdos_renyi_nl needs at least 2 nodes");
  if (links < n - 1 || links > max_links) {
    throw ValidationError(
        "erdos_renyi_nl needs N-1 <= L <= N(N-1)/2 for a connected graph");
  }

  std::mt19937_64 rng(spec.seed);

  // First try plain resampling. At sparse parameter ranges (mean degree near
  // log N or below) a uniform G(N, L) sample is almost never connected, so
  // after the attempt budget the last sample is repaired by rewiring: a
  // cycle edge is removed and replaced with an edge joining two components,
  // preserving N and L exactly.
  constexpr int kResampleAttempts = 100;
  std::vector<Edge> edges;
  long attempts = 0;
  int components = 0;
  std::vector<int> labels;
  for (int attempt = 0; attempt < kResampleAttempts; ++attempt) {
    edges = sample_distinct_pairs(rng, n, links);
    ++attempts;
    labels = component_labels(n, edges, components);
    if (components == 1) break;
  }

  long rewires = 0;
  while (components > 1) {
    // Smallest component gets attached; ties resolved by label order.
    std::vector<std::int64_t> size(static_cast<std::size_t>(components), 0);
    for (const int c : labels) ++size[static_cast<std::size_t>(c)];
    const int smallest = static_cast<int>(
        std::min_element(size.begin(), size.end()) - size.begin());

    std::vector<NodeId> inside, outside;
    for (NodeId v = 0; v < n; ++v) {
      (labels[static_cast<std::size_t>(v)] == smallest ? inside : outside)
          .push_back(v);
    }

    // Any edge on a cycle can move without disconnecting its component;
    // one always exists while L >= N and the graph is disconnected.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    shuffle(rng, order);
    std::size_t removable = edges.size();
    for (const std::size_t idx : order) {
      if (is_cycle_edge(n, edges, idx)) {
        removable = idx;
        break;
      }
    }
    if (removable == edges.size()) {
      throw GenerationError("erdos_renyi_nl: no cycle edge available for repair");
    }

    NodeId a = inside[bounded(rng, inside.size())];
    NodeId b = outside[bounded(rng, outside.size())];
    if (a > b) std::swap(a, b);
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(removable));
    edges.emplace_back(a, b);
    ++rewires;
    labels = component_labels(n, edges, components);
  }

  if (log) {
    log->sample_attempts = attempts;
    log->rewired_edges = rewires;
    log->achieved_links = links;
  }
  return Graph(n, std::move(edges));
}

Graph build_preferential_attachment(const PreferentialAttachment& spec,
                                    GenerationLog* log) {
  const NodeId n = spec.nodes;
  if (n < 2) {
    throw ValidationError("preferential_attachment needs at least 2 nodes");
  }
  if (spec.links_target < n - 1) {
    throw ValidationError(
        "preferential_attachment needs links_target >= N-1 (tree minimum)");
  }

  // Links for a given per-step attachment count m, growing from an
  // (m+1)-clique: m(m+1)/2 + (N-m-1)m. Pick the m closest to the target;
  // an exact match usually does not exist.
  auto links_for = [&](std::int64_t m) {
    return m * (m + 1) / 2 + (static_cast<std::int64_t>(n) - m - 1) * m;
  };
  std::int64_t m = 1;
  std::int64_t best_gap = std::abs(links_for(1) - spec.links_target);
  for (std::int64_t candidate = 2; candidate < n; ++candidate) {
    const std::int64_t gap = std::abs(links_for(candidate) - spec.links_target);
    if (gap < best_gap) {
      m = candidate;
      best_gap = gap;
    }
    if (links_for(candidate) > spec.links_target && gap > best_gap) break;
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<Edge> edges;
  // Degree-proportional sampling via the repeated-endpoints list.
  std::vector<NodeId> endpoints;
  for (NodeId u = 0; u < m + 1; ++u) {
    for (NodeId v = static_cast<NodeId>(u + 1); v < m + 1; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (NodeId next = static_cast<NodeId>(m + 1); next < n; ++next) {
    targets.clear();
    while (static_cast<std::int64_t>(targets.size()) < m) {
      const NodeId pick = endpoints[bounded(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (const NodeId t : targets) {
      edges.emplace_back(t, next);
      endpoints.push_back(t);
      endpoints.push_back(next);
    }
  }

  if (log) {
    log->sample_attempts = 1;
    log->achieved_links = static_cast<std::int64_t>(edges.size());
  }
  return Graph(n, std::move(edges));
}

struct SpecParts {
  std::string family;
  std::vector<std::int64_t> params;
};

SpecParts split_spec(std::string_view text) {
  SpecParts parts;
  const auto colon = text.find(':');
  parts.family = std::string(text.substr(0, colon));
  if (colon == std::string_view::npos) return parts;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    std::int64_t value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || end != token.data() + token.size()) {
      throw ValidationError("invalid generator parameter '" +
                            std::string(token) + "'");
    }
    parts.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return parts;
}

std::uint64_t require_seed(const std::string& family,
                           std::optional<std::uint64_t> seed) {
  if (!seed) {
    throw ValidationError("generator '" + family + "' requires a seed");
  }
  return *seed;
}

void require_params(const SpecParts& parts, std::size_t count) {
  if (parts.params.size() != count) {
    throw ValidationError("generator '" + parts.family + "' expects " +
                          std::to_string(count) + " parameter(s)");
  }
}

NodeId as_node_count(std::int64_t value) {
  if (value < 1 || value > 100000000) {
    throw ValidationError("node count out of range");
  }
  return static_cast<NodeId>(value);
}

}  // namespace

Graph generate(const NetworkSpec& spec, GenerationLog* log) {
  if (log) *log = GenerationLog{};
  Graph g = std::visit(
      [&](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ring>) {
          return build_ring(s);
        } else if constexpr (std::is_same_v<T, RandomRegular>) {
          return build_random_regular(s);
        } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
          return build_complete_bipartite(s);
        } else if constexpr (std::is_same_v<T, Petersen>) {
          return build_petersen();
        } else if constexpr (std::is_same_v<T, Grid2d>) {
          return build_grid2d(s);
        } else if constexpr (std::is_same_v<T, ErdosRenyiNl>) {
          return build_erdos_renyi(s, log);
        } else {
          return build_preferential_attachment(s, log);
        }
      },
      spec);
  if (log && log->achieved_links == 0) {
    log->achieved_links = g.edge_count();
  }
  return g;
}

NetworkSpec parse_network_spec(std::string_view text,
                               std::optional<std::uint64_t> seed) {
  const SpecParts parts = split_spec(text);
  if (parts.family == "ring") {
    require_params(parts, 1);
    return Ring{as_node_count(parts.params[0])};
  }
  if (parts.family == "random_regular") {
    require_params(parts, 2);
    return RandomRegular{as_node_count(parts.params[0]),
                         static_cast<int>(parts.params[1]),
                         require_seed(parts.family, seed)};
  }
  if (parts.family == "complete_bipartite") {
    require_params(parts, 2);
    return CompleteBipartite{as_node_count(parts.params[0]),
                             as_node_count(parts.params[1])};
  }
  if (parts.family == "petersen") {
    require_params(parts, 0);
    return Petersen{};
  }
  if (parts.family == "grid2d") {
    require_params(parts, 2);
    return Grid2d{as_node_count(parts.params[0]),
                  as_node_count(parts.params[1])};
  }
  if (parts.family == "erdos_renyi_nl") {
    require_params(parts, 2);
    return ErdosRenyiNl{as_node_count(parts.params[0]), parts.params[1],
                        require_seed(parts.family, seed)};
  }
  if (parts.family == "preferential_attachment") {
    require_params(parts, 2);
    return PreferentialAttachment{as_node_count(parts.params[0]),
                                  parts.params[1],
                                  require_seed(parts.family, seed)};
  }
  throw ValidationError("unknown generator family '" + parts.family + "'");
}

std::string describe(const NetworkSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ring>) {
          return "ring:" + std::to_string(s.nodes);
        } else if constexpr (std::is_same_v<T, RandomRegular>) {
          return "random_regular:" + std::to_string(s.nodes) + "," +
                 std::to_string(s.degree);
        } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
          return "complete_bipartite:" + std::to_string(s.left) + "," +
                 std::to_string(s.right);
        } else if constexpr (std::is_same_v<T, Petersen>) {
          return "petersen";
        } else if constexpr (std::is_same_v<T, Grid2d>) {
          return "grid2d:" + std::to_string(s.rows) + "," +
                 std::to_string(s.cols);
        } else if constexpr (std::is_same_v<T, ErdosRenyiNl>) {
          return "erdos_renyi_nl:" + std::to_string(s.nodes) + "," +
                 std::to_string(s.links);
        } else {
          return "preferential_attachment:" + std::to_string(s.nodes) + "," +
                 std::to_string(s.links_target);
        }
      },
      spec);
}

bool is_random_family(const NetworkSpec& spec) {
  return std::holds_alternative<RandomRegular>(spec) ||
         std::holds_alternative<ErdosRenyiNl>(spec) ||
         std::holds_alternative<PreferentialAttachment>(spec);
}

}  // namespace vcond
