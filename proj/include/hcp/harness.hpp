// Copyright 2026 The hcp Authors
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

// Sweep, golden replay and scaling measurements built on the solver and the
// brute-force oracles.

#ifndef HCP_HARNESS_HPP_
#define HCP_HARNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hcp/graph.hpp"
#include "hcp/solver.hpp"

namespace hcp {

/// Outcome of one graph in a sweep.
struct GraphVerdictRecord {
  std::string graph;  // graph6
  Verdict oracle_verdict = Verdict::kNonHamiltonian;
  Verdict decider_verdict = Verdict::kNonHamiltonian;
  bool agreement = false;
  /// Decider cycle when the decider says yes, otherwise the oracle's cycle
  /// (if any).
  std::optional<std::vector<VertexId>> certificate;
  int cm_singleton_iterations = 0;
  /// Filled only when timing is requested, so reports stay reproducible.
  std::optional<double> runtime_us;
  /// The decider claimed a cycle that failed re-verification.
  bool invalid_cycle = false;
  /// length(PS[D]) = n+1, i.e. the backward search was attempted.
  bool sink_complete = false;
};

struct SweepReport {
  int n = 0;
  std::uint64_t graph_count = 0;
  std::uint64_t agree_yes = 0;
  std::uint64_t agree_no = 0;
  std::uint64_t false_negative = 0;
  std::uint64_t invalid_cycle = 0;
  /// False negatives split by cause: PS[D] too short, or the backward
  /// search found no legal parent.
  std::uint64_t gate_misses = 0;
  std::uint64_t search_misses = 0;
  int max_singleton_iterations = 0;
  double wall_time_seconds = 0.0;

  void add(const GraphVerdictRecord& r);
  void merge(const SweepReport& other);
};

struct SweepOptions {
  bool parallel = true;
  /// Worker threads for the parallel sweep; 0 keeps the OpenMP default.
  int jobs = 0;
  /// Permit n = 7.
  bool allow_large = false;
  bool timing = false;
};

/// Solves g from vertex 1, runs the oracle and classifies the pair.
GraphVerdictRecord evaluate_graph(const Graph& g, bool timing = false);

/// Every connected labeled graph with n_from <= n <= n_to, in ascending n
/// and then ascending edge-mask order. Records are handed to `sink` in that
/// order regardless of scheduling. Returns one report per n.
std::vector<SweepReport> sweep(int n_from, int n_to, const SweepOptions& options = {},
                               const std::function<void(const GraphVerdictRecord&)>& sink = {});

/// Totals over several per-n reports (n is set to 0).
SweepReport combine(const std::vector<SweepReport>& reports);

std::string to_json_line(const GraphVerdictRecord& r);
/// Closing summary line of a sweep report.
std::string summary_json_line(const std::vector<SweepReport>& reports, bool timing);

// ---------------------------------------------------------------------------
// Golden replays of the worked examples.

struct GoldenResult {
  std::string id;
  bool pass = false;
  std::size_t checked = 0;
  std::size_t expected = 0;
  /// Empty on success.
  std::string divergence;
  /// The replayed transcript.
  std::vector<std::string> transcript;
};

std::vector<std::string> golden_ids();
/// Throws std::invalid_argument for an unknown id.
GoldenResult golden_trace(std::string_view id);
/// Edge-list text of the graph a golden replays.
std::string golden_graph_text(std::string_view id);

/// First expected line that does not occur, in order, within actual.
/// Reports the closest actual line for the same left-hand side if there is
/// one. nullopt when every expected line is found.
std::optional<std::string> first_divergence(const std::vector<std::string>& expected,
                                            const std::vector<std::string>& actual,
                                            std::size_t* matched = nullptr);

// ---------------------------------------------------------------------------
// Semantic audits.

/// Compares the declarative basic-path sets with the computed table for
/// every hologram vertex of every connected graph in range.
struct SemanticsAudit {
  std::uint64_t graphs = 0;
  std::uint64_t vertices_compared = 0;
  std::uint64_t matches = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first_mismatch;
};
SemanticsAudit audit_basic_path_sets(int n_from, int n_to);

/// Source-to-sink basic path in the hologram versus oracle Hamiltonicity.
struct HologramEquivalence {
  std::uint64_t graphs = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::string> first_mismatch;
};
HologramEquivalence check_hologram_equivalence(int n_from, int n_to);

// ---------------------------------------------------------------------------
// Scaling on complete graphs.

struct ProbeRow {
  int n = 0;
  double runtime_seconds = 0.0;
  int max_singleton_iterations = 0;
  std::size_t cm_calls = 0;
  bool hamiltonian = false;
};

struct ProbeResult {
  std::vector<ProbeRow> rows;
  /// Least-squares slope of log(runtime) against log(n).
  double slope = 0.0;
};

Graph complete_graph(int n);
/// Each runtime is the mean over enough repetitions to last min_seconds.
ProbeResult scaling_probe(const std::vector<int>& ns, double min_seconds = 0.05);

std::string to_json_line(const ProbeRow& row);

}  // namespace hcp

#endif  // HCP_HARNESS_HPP_
