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

// Balanced vertex cover benchmark: instances, runs, and reports.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vckern/cp.hpp"
#include "vckern/graph.hpp"
#include "vckern/propagator.hpp"
#include "vckern/vertex_set.hpp"

namespace vckern {

/// SplitMix64, usable as a UniformRandomBitGenerator.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Fisher-Yates with SplitMix64::below, identical on every platform.
void shuffle(std::vector<int>& items, SplitMix64& rng);

/// Shuffles 0..n-1 and cuts it into `parts` consecutive chunks; the first
/// n % parts chunks get one extra vertex. Throws std::invalid_argument when
/// n < parts.
std::vector<VertexSet> generate_partition(int n, int parts, std::uint64_t seed);

/// m distinct edges drawn uniformly. Throws if m exceeds n(n-1)/2.
Graph random_graph(int n, int m, std::uint64_t seed);

/// Each pair is an edge independently with probability p.
Graph random_graph_density(int n, double p, std::uint64_t seed);

enum class InstanceFormat { kDimacs, kEdgeList };

struct BenchConfig {
  std::vector<std::string> instances;
  InstanceFormat format = InstanceFormat::kDimacs;
  std::vector<Method> methods;
  std::optional<int> balance;
  std::optional<double> balance_ratio;
  std::uint64_t seed = 0;
  double time_limit_s = 300.0;
  std::int64_t lambda = kDefaultLambda;
  std::string out;

  /// Throws std::invalid_argument unless exactly one balance mode is set and
  /// every numeric field is in range.
  void validate() const;
  /// The tolerance b for an instance with n vertices.
  int tolerance_for(int n) const;
};

struct RunRecord {
  std::string instance;
  Method method = Method::kFull;
  /// The search space was exhausted within the limits.
  bool solved = false;
  std::optional<int> best;
  /// best minus the smallest best of the batch on the same instance.
  std::optional<int> gap;
  double time_to_best_s = 0.0;
  std::int64_t nodes_to_best = 0;
  std::int64_t total_nodes = 0;
  double total_time_s = 0.0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct RunOptions {
  int tolerance = 0;
  std::uint64_t seed = 0;
  double time_limit_s = 300.0;
  std::int64_t lambda = kDefaultLambda;
  std::optional<std::int64_t> node_limit;
};

/// K in [0, n], S over V, the balance constraint over `parts` and the
/// VertexCover model of `method`. The graph must outlive the model.
Model build_model(const Graph& g, Method method, const std::vector<VertexSet>& parts,
                  int tolerance, std::int64_t lambda);

/// One run with a 4-partition drawn from `opts.seed`. `gap` is left empty.
RunRecord run_instance(const Graph& g, std::string instance, Method method,
                       const RunOptions& opts);

/// Fills `gap` of every record that has a `best`.
void fill_gaps(std::vector<RunRecord>& records);

/// Loads every instance and runs every method on it. Parse errors throw.
std::vector<RunRecord> run_benchmark(const BenchConfig& cfg);

/// Instance class for the text table: first three characters of the file stem.
std::string instance_class(std::string_view instance);

void emit_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_csv(std::istream& in);
void emit_table(std::ostream& out, const std::vector<RunRecord>& records);

}  // namespace vckern
