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

#include "vckern/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>

#include "vckern/io.hpp"

namespace vckern {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

void shuffle(std::vector<int>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(items[i - 1], items[j]);
  }
}

std::vector<VertexSet> generate_partition(int n, int parts, std::uint64_t seed) {
  if (parts < 1) throw std::invalid_argument("partition needs at least one part");
  if (n < parts) {
    throw std::invalid_argument("cannot split " + std::to_string(n) + " vertices into " +
                                std::to_string(parts) + " nonempty parts");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(seed);
  shuffle(order, rng);

  std::vector<VertexSet> out(parts, VertexSet(n));
  int pos = 0;
  for (int i = 0; i < parts; ++i) {
    const int size = n / parts + (i < n % parts ? 1 : 0);
    for (int j = 0; j < size; ++j) out[i].insert(order[pos++]);
  }
  return out;
}

Graph random_graph(int n, int m, std::uint64_t seed) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (n < 0 || m < 0 || m > pairs) {
    throw std::invalid_argument("random_graph: cannot place " + std::to_string(m) +
                                " edges on " + std::to_string(n) + " vertices");
  }
  SplitMix64 rng(seed);
  std::set<Edge> chosen;
  std::vector<Edge> edges;
  while (static_cast<int>(edges.size()) < m) {
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (chosen.insert({u, v}).second) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph random_graph_density(int n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Config

void BenchConfig::validate() const {
  if (balance.has_value() == balance_ratio.has_value()) {
    throw std::invalid_argument("exactly one of --balance and --balance-ratio is required");
  }
  if (balance && *balance < 0) throw std::invalid_argument("--balance must be >= 0");
  if (balance_ratio && !(*balance_ratio >= 0.0)) {
    throw std::invalid_argument("--balance-ratio must be >= 0");
  }
  if (!(time_limit_s >= 0.0)) throw std::invalid_argument("--time-limit must be >= 0");
  if (lambda < 0) throw std::invalid_argument("--lambda must be >= 0");
  if (instances.empty()) throw std::invalid_argument("at least one --instance is required");
  if (methods.empty()) throw std::invalid_argument("at least one --method is required");
}

int BenchConfig::tolerance_for(int n) const {
  if (balance) return *balance;
  return static_cast<int>(std::lround(*balance_ratio * n));
}

// ---------------------------------------------------------------------------
// Runs

Model build_model(const Graph& g, Method method, const std::vector<VertexSet>& parts,
                  int tolerance, std::int64_t lambda) {
  Model model(g, IntDomain{0, g.num_vertices()});
  post_vertex_cover_model(model, MethodConfig::make(method, lambda));
  post_balance(model, parts, tolerance);
  return model;
}

RunRecord run_instance(const Graph& g, std::string instance, Method method,
                       const RunOptions& opts) {
  const auto parts = generate_partition(g.num_vertices(), 4, opts.seed);
  Model model = build_model(g, method, parts, opts.tolerance, opts.lambda);
  SearchConfig search;
  search.time_limit_s = opts.time_limit_s;
  search.node_limit = opts.node_limit;
  const SearchResult result = minimize_search(model, search);

  RunRecord rec;
  rec.instance = std::move(instance);
  rec.method = method;
  rec.solved = result.complete;
  if (result.best) rec.best = result.best->size();
  rec.time_to_best_s = result.time_to_best_s;
  rec.nodes_to_best = result.nodes_to_best;
  rec.total_nodes = result.nodes;
  rec.total_time_s = result.total_time_s;
  return rec;
}

void fill_gaps(std::vector<RunRecord>& records) {
  std::map<std::string, int> smallest;
  for (const RunRecord& r : records) {
    if (!r.best) continue;
    auto [it, inserted] = smallest.emplace(r.instance, *r.best);
    if (!inserted) it->second = std::min(it->second, *r.best);
  }
  for (RunRecord& r : records) {
    r.gap.reset();
    if (r.best) r.gap = *r.best - smallest.at(r.instance);
  }
}

std::vector<RunRecord> run_benchmark(const BenchConfig& cfg) {
  cfg.validate();
  std::vector<RunRecord> records;
  for (const std::string& path : cfg.instances) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance '" + path + "'");
    const ParsedGraph parsed =
        cfg.format == InstanceFormat::kDimacs ? parse_dimacs(in) : parse_edge_list(in);
    RunOptions opts;
    opts.tolerance = cfg.tolerance_for(parsed.graph.num_vertices());
    opts.seed = cfg.seed;
    opts.time_limit_s = cfg.time_limit_s;
    opts.lambda = cfg.lambda;
    for (Method m : cfg.methods) records.push_back(run_instance(parsed.graph, path, m, opts));
  }
  fill_gaps(records);
  return records;
}

std::string instance_class(std::string_view instance) {
  const std::string stem = std::filesystem::path(std::string(instance)).stem().string();
  return stem.substr(0, 3);
}

// ---------------------------------------------------------------------------
// Reports

namespace {

constexpr std::string_view kCsvHeader =
    "instance,method,solved,best,gap,time_to_best_s,nodes_to_best,total_nodes,total_time_s";

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c != '\r') {
      fields.back() += c;
    }
  }
  if (quoted) throw ParseError(line_no, "unterminated quote");
  return fields;
}

template <typename T>
T parse_number(const std::string& s, int line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line_no, "bad number '" + s + "'");
  }
  return value;
}

std::optional<int> parse_optional_int(const std::string& s, int line_no) {
  if (s.empty()) return std::nullopt;
  return parse_number<int>(s, line_no);
}

}  // namespace

void emit_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << kCsvHeader << '\n';
  for (const RunRecord& r : records) {
    out << csv_field(r.instance) << ',' << method_name(r.method) << ','
        << (r.solved ? "true" : "false") << ',' << (r.best ? std::to_string(*r.best) : "")
        << ',' << (r.gap ? std::to_string(*r.gap) : "") << ','
        << format_double(r.time_to_best_s) << ',' << r.nodes_to_best << ','
        << r.total_nodes << ',' << format_double(r.total_time_s) << '\n';
  }
}

std::vector<RunRecord> parse_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ParseError(0, "empty CSV");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw ParseError(line_no, "unexpected CSV header");
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_csv_line(line, line_no);
    if (f.size() != 9) throw ParseError(line_no, "expected 9 fields");
    RunRecord r;
    r.instance = f[0];
    const auto method = parse_method(f[1]);
    if (!method) throw ParseError(line_no, "unknown method '" + f[1] + "'");
    r.method = *method;
    if (f[2] != "true" && f[2] != "false") throw ParseError(line_no, "bad solved flag");
    r.solved = f[2] == "true";
    r.best = parse_optional_int(f[3], line_no);
    r.gap = parse_optional_int(f[4], line_no);
    r.time_to_best_s = parse_number<double>(f[5], line_no);
    r.nodes_to_best = parse_number<std::int64_t>(f[6], line_no);
    r.total_nodes = parse_number<std::int64_t>(f[7], line_no);
    r.total_time_s = parse_number<double>(f[8], line_no);
    records.push_back(std::move(r));
  }
  return records;
}

void emit_table(std::ostream& out, const std::vector<RunRecord>& records) {
  struct Cell {
    int count = 0;
    int unsolved = 0;
    int with_gap = 0;
    double gap = 0.0;
    double cpu = 0.0;
    double nodes = 0.0;
  };
  std::map<std::string, std::map<Method, Cell>> table;
  std::set<Method> methods;
  for (const RunRecord& r : records) {
    Cell& c = table[instance_class(r.instance)][r.method];
    methods.insert(r.method);
    ++c.count;
    c.unsolved += r.solved ? 0 : 1;
    if (r.gap) {
      ++c.with_gap;
      c.gap += *r.gap;
    }
    c.cpu += r.time_to_best_s;
    c.nodes += static_cast<double>(r.nodes_to_best);
  }

  out << "# #s: unsolved runs, gap: mean gap to the smallest cover found,\n"
      << "# cpu/#nd: mean seconds and nodes until the best solution.\n"
      << "# Nodes count branching decisions only.\n";
  out << std::left << std::setw(6) << "class" << std::right;
  for (Method m : methods) out << " | " << std::setw(34) << method_name(m);
  out << '\n' << std::setw(6) << "";
  for (std::size_t i = 0; i < methods.size(); ++i) {
    out << " | " << std::setw(4) << "#s" << std::setw(9) << "gap" << std::setw(9) << "cpu"
        << std::setw(12) << "#nd";
  }
  out << '\n';
  out << std::fixed;
  for (const auto& [cls, row] : table) {
    out << std::left << std::setw(6) << cls << std::right;
    for (Method m : methods) {
      const auto it = row.find(m);
      if (it == row.end()) {
        out << " | " << std::setw(34) << "-";
        continue;
      }
      const Cell& c = it->second;
      out << " | " << std::setw(4) << c.unsolved << std::setw(9) << std::setprecision(2)
          << (c.with_gap ? c.gap / c.with_gap : 0.0) << std::setw(9) << std::setprecision(1)
          << c.cpu / c.count << std::setw(12) << std::setprecision(0) << c.nodes / c.count;
    }
    out << '\n';
  }
  out.unsetf(std::ios::fixed);
}

}  // namespace vckern
