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

#include "vckern/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <unordered_map>

namespace vckern {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, int line) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

template <typename LineFn>
void for_each_line(std::string_view text, LineFn&& fn) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    fn(text.substr(pos, end - pos), ++line_no);
    pos = end + 1;
  }
}

std::string slurp(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

ParsedGraph parse_dimacs(std::string_view text) {
  bool have_header = false;
  std::int64_t n = 0;
  std::vector<Edge> edges;
  for_each_line(text, [&](std::string_view line, int line_no) {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'p edge <n> <m>'");
      n = parse_int(tokens[2], line_no);
      parse_int(tokens[3], line_no);
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      have_header = true;
      return;
    }
    if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "missing 'p' header before edges");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const std::int64_t u = parse_int(tokens[1], line_no);
      const std::int64_t v = parse_int(tokens[2], line_no);
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
      }
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      return;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
  });
  if (!have_header) throw ParseError(0, "missing 'p' header");

  ParsedGraph out;
  out.graph = Graph(static_cast<int>(n), edges, &out.dropped_edges);
  out.original_ids.resize(n);
  for (std::int64_t v = 0; v < n; ++v) out.original_ids[v] = v + 1;
  return out;
}

ParsedGraph parse_dimacs(std::istream& in) { return parse_dimacs(slurp(in)); }

ParsedGraph parse_edge_list(std::string_view text) {
  ParsedGraph out;
  std::unordered_map<std::int64_t, int> ids;
  std::vector<Edge> edges;
  auto intern = [&](std::int64_t raw) {
    auto [it, inserted] = ids.emplace(raw, static_cast<int>(out.original_ids.size()));
    if (inserted) out.original_ids.push_back(raw);
    return it->second;
  };
  for_each_line(text, [&](std::string_view line, int line_no) {
    const auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') return;
    if (tokens.size() < 2) throw ParseError(line_no, "expected '<u> <v>'");
    const std::int64_t u = parse_int(tokens[0], line_no);
    const std::int64_t v = parse_int(tokens[1], line_no);
    if (u < 0 || v < 0) throw ParseError(line_no, "negative vertex id");
    const int lu = intern(u);
    const int lv = intern(v);
    edges.emplace_back(lu, lv);
  });
  out.graph = Graph(static_cast<int>(out.original_ids.size()), edges, &out.dropped_edges);
  return out;
}

ParsedGraph parse_edge_list(std::istream& in) { return parse_edge_list(slurp(in)); }

std::string write_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

}  // namespace vckern
