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

#include "vcond/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace vcond {

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> index_of;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;  // blank or comment-only line
    if (!(fields >> b)) {
      throw ParseError("expected two node tokens, got one", line_number);
    }
    if (fields >> extra) {
      throw ParseError("expected two node tokens, got more", line_number);
    }

    auto intern = [&](const std::string& token) {
      auto [it, inserted] =
          index_of.try_emplace(token, static_cast<NodeId>(labels.size()));
      if (inserted) labels.push_back(token);
      return it->second;
    };
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    if (u == v) {
      throw ValidationError("self-loop at node '" + a + "' (line " +
                            std::to_string(line_number) + ")");
    }
    edges.emplace_back(u, v);
  }

  if (labels.empty()) {
    throw ValidationError("edge list is empty");
  }
  const auto node_count = static_cast<NodeId>(labels.size());
  return Graph(node_count, std::move(edges), std::move(labels));
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "'");
  }
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& header_comments) {
  for (const auto& comment : header_comments) {
    out << "# " << comment << '\n';
  }
  for (const auto& [u, v] : g.edges()) {
    out << g.node_name(u) << ' ' << g.node_name(v) << '\n';
  }
}

}  // namespace vcond
