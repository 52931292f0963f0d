// Copyright 2026 The vckern Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vckern/graph.hpp"

namespace vckern {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedGraph {
  Graph graph;
  /// Self-loops plus duplicate edges that were normalized away.
  int dropped_edges = 0;
  /// original_ids[v] is the id vertex v carried in the input file.
  std::vector<std::int64_t> original_ids;
};

/// DIMACS `.col`/`.clq`: `c` comments, one `p edge <n> <m>` header, then
/// `e <u> <v>` lines with 1-based endpoints.
ParsedGraph parse_dimacs(std::string_view text);
ParsedGraph parse_dimacs(std::istream& in);

/// Whitespace edge list `<u> <v>` with arbitrary non-negative ids and `#`
/// comments. Ids are compacted to 0..n-1 in order of first appearance.
ParsedGraph parse_edge_list(std::string_view text);
ParsedGraph parse_edge_list(std::istream& in);

/// Canonical DIMACS: header then edges sorted by (u, v), u < v, 1-based.
std::string write_dimacs(const Graph& g);

}  // namespace vckern
