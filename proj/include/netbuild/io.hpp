// Copyright 2026 The netbuild Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETBUILD_IO_HPP
#define NETBUILD_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "netbuild/graph.hpp"

namespace netbuild {

using Label = std::uint64_t;

struct LabeledGraph {
  Graph graph;
  /// Dense id -> label from the input file.
  std::vector<Label> labels;
  /// Node count before largest-component extraction.
  std::size_t loaded_nodes = 0;
  std::size_t loaded_edges = 0;
};

/// SNAP-style edge list: one "a b" pair of non-negative integers per line,
/// '#' comment lines and blank lines ignored, extra columns ignored. Labels
/// are mapped densely in ascending order; self-loops and repeated edges are
/// dropped, and so are labels that only occur in self-loops. With `giant`
/// only the largest connected component is kept. Throws InputError on a
/// malformed line (with its number) or when no edge survives cleaning.
LabeledGraph parse_edge_list(std::istream& in, bool giant = false);
LabeledGraph load_edge_list(const std::filesystem::path& path, bool giant = false);

/// Writes "a b" lines in ascending edge order, preceded by '#' comments.
void write_edge_list(std::ostream& out, const Graph& g,
                     const std::vector<std::string>& comments = {});

}  // namespace netbuild

#endif  // NETBUILD_IO_HPP
