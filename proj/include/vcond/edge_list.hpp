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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vcond/graph.hpp"

namespace vcond {

/// Parses an edge-list text stream: one edge per line as two
/// whitespace-separated tokens, '#' starting a comment, blank lines
/// ignored. Tokens are opaque strings mapped to contiguous node indices
/// in first-appearance order; the mapping is kept as graph labels.
/// Duplicate edges collapse; self-loops and empty input are rejected.
Graph load_edge_list(std::istream& in);

/// load_edge_list() on a file; throws IoError if it cannot be opened.
Graph load_edge_list_file(const std::filesystem::path& path);

/// Writes a graph back out in the same edge-list format (canonical edge
/// order, labels if present). `header_comments` lines are emitted first,
/// each prefixed with "# ".
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& header_comments = {});

}  // namespace vcond
