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

#include "vcond/graph.hpp"

#include <algorithm>
#include <vector>

namespace vcond {

Graph::Graph(NodeId node_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : node_count_(node_count), labels_(std::move(labels)) {
  if (node_count < 1) {
    throw ValidationError("graph must have at least one node");
  }
  if (!labels_.empty() &&
      labels_.size() != static_cast<std::size_t>(node_count)) {
    throw ValidationError("label count does not match node count");
  }

  for (auto& [u, v] : edges) {
    if (u < 0 || u >= node_count || v < 0 || v >= node_count) {
      throw ValidationError("edge endpoint out of range");
    }
    if (u == v) {
      std::string name = labels_.empty()
                             ? std::to_string(u)
                             : labels_[static_cast<std::size_t>(u)];
      throw ValidationError("self-loop at node '" + name + "'");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  degrees_.assign(static_cast<std::size_t>(node_count), 0);
  for (const auto& [u, v] : edges_) {
    ++degrees_[static_cast<std::size_t>(u)];
    ++degrees_[static_cast<std::size_t>(v)];
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(2 * edges_.size());
  for (const auto& [u, v] : edges_) {
    triplets.emplace_back(u, v, 1.0);
    triplets.emplace_back(v, u, 1.0);
  }
  adjacency_.resize(node_count, node_count);
  adjacency_.setFromTriplets(triplets.begin(), triplets.end());
  adjacency_.makeCompressed();
}

std::string Graph::node_name(NodeId node) const {
  if (has_labels()) return labels_[static_cast<std::size_t>(node)];
  return std::to_string(node);
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats stats;
  stats.min_degree = stats.max_degree = g.degree(0);
  double degree_sum = 0.0;
  double inverse_sum = 0.0;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const int d = g.degree(i);
    if (d == 0) {
      throw ValidationError("isolated node '" + g.node_name(i) + "'");
    }
    stats.min_degree = std::min(stats.min_degree, d);
    stats.max_degree = std::max(stats.max_degree, d);
    degree_sum += d;
    inverse_sum += 1.0 / d;
  }
  stats.mean_degree = degree_sum / g.node_count();
  stats.inverse_degree_mean = inverse_sum / g.node_count();
  return stats;
}

bool is_connected(const Graph& g) {
  const NodeId n = g.node_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  NodeId reached = 1;
  const auto& adj = g.adjacency();
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (Eigen::SparseMatrix<double>::InnerIterator it(adj, u); it; ++it) {
      const auto v = static_cast<NodeId>(it.row());
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

void require_connected(const Graph& g, const std::string& what) {
  if (g.edge_count() == 0) {
    throw ValidationError(what + " has no edges");
  }
  if (!is_connected(g)) {
    throw ValidationError(what + " is disconnected");
  }
}

}  // namespace vcond
