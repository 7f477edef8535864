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

#include "netbuild/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "netbuild/error.hpp"
#include "netbuild/metrics.hpp"

namespace netbuild {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r' || c == ','; }

// Reads one unsigned integer token starting at `pos`, skipping leading
// separators. Returns false if no well-formed token is there.
bool read_label(const std::string& line, std::size_t& pos, Label& out) {
  while (pos < line.size() && is_blank(line[pos])) ++pos;
  const char* first = line.data() + pos;
  const char* last = line.data() + line.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr == first) return false;
  if (ptr != last && !is_blank(*ptr)) return false;
  pos = static_cast<std::size_t>(ptr - line.data());
  return true;
}

}  // namespace

LabeledGraph parse_edge_list(std::istream& in, bool giant) {
  std::vector<std::pair<Label, Label>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = 0;
    while (pos < line.size() && is_blank(line[pos])) ++pos;
    if (pos == line.size() || line[pos] == '#' || line[pos] == '%') continue;
    Label a = 0, b = 0;
    if (!read_label(line, pos, a) || !read_label(line, pos, b)) {
      throw InputError("malformed edge at line " + std::to_string(line_no) + ": '" + line + "'");
    }
    if (a != b) raw.emplace_back(a, b);
  }
  if (raw.empty()) throw InputError("empty graph after cleaning");

  std::vector<Label> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto dense = [&](Label x) {
    return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) edges.emplace_back(dense(a), dense(b));

  LabeledGraph out{Graph::from_edges(labels.size(), edges), std::move(labels)};
  out.loaded_nodes = out.graph.node_count();
  out.loaded_edges = out.graph.edge_count();
  if (giant) {
    Component c = largest_connected_component(out.graph);
    std::vector<Label> kept;
    kept.reserve(c.original_ids.size());
    for (NodeId v : c.original_ids) kept.push_back(out.labels[v]);
    out.graph = std::move(c.graph);
    out.labels = std::move(kept);
  }
  return out;
}

LabeledGraph load_edge_list(const std::filesystem::path& path, bool giant) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_edge_list(in, giant);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

}  // namespace netbuild
