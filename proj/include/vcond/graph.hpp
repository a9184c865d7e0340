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

#include <Eigen/SparseCore>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vcond/errors.hpp"

namespace vcond {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable simple undirected graph.
///
/// The constructor canonicalizes the edge list (endpoints ordered, edges
/// sorted, duplicates collapsed) and rejects self-loops and out-of-range
/// endpoints. After construction the object never changes, so it is safe
/// to share across threads.
class Graph {
public:
  /// `labels`, when non-empty, must have one entry per node; it preserves
  /// the original node tokens of an edge-list file.
  Graph(NodeId node_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  NodeId node_count() const noexcept { return node_count_; }
  std::int64_t edge_count() const noexcept {
    return static_cast<std::int64_t>(edges_.size());
  }

  /// Canonical edge list: (u, v) with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  int degree(NodeId node) const { return degrees_[static_cast<std::size_t>(node)]; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }

  /// Symmetric 0/1 adjacency matrix, compressed column-major.
  const Eigen::SparseMatrix<double>& adjacency() const noexcept { return adjacency_; }

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Label of a node if the graph carries labels, otherwise its index.
  std::string node_name(NodeId node) const;

private:
  NodeId node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> degrees_;
  std::vector<std::string> labels_;
  Eigen::SparseMatrix<double> adjacency_;
};

/// Mean degree, mean inverse degree, and the degree range of a graph.
struct DegreeStats {
  double mean_degree = 0.0;
  double inverse_degree_mean = 0.0;  // sigma = (1/N) sum 1/d_i
  int min_degree = 0;
  int max_degree = 0;

  bool regular() const noexcept { return min_degree == max_degree; }
};

/// Exact arithmetic means over the degree sequence.
/// Throws ValidationError naming the node if any degree is zero.
DegreeStats degree_stats(const Graph& g);

/// True iff a traversal from node 0 reaches all nodes.
bool is_connected(const Graph& g);

/// Throws ValidationError if the graph is disconnected or has no edges.
/// `what` names the input in the error message.
void require_connected(const Graph& g, const std::string& what = "graph");

}  // namespace vcond
