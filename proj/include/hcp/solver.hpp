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

#ifndef HCP_SOLVER_HPP_
#define HCP_SOLVER_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcp/cm.hpp"
#include "hcp/graph.hpp"
#include "hcp/hologram.hpp"
#include "hcp/path_set.hpp"

namespace hcp {

enum class Verdict { kHamiltonian, kNonHamiltonian };

/// Which legal parent the backward search takes when several qualify.
enum class TieBreak { kAscending, kDescending };

std::string to_string(Verdict v);
std::string to_string(TieBreak t);

struct SolveOptions {
  TieBreak tie_break = TieBreak::kAscending;
  /// Collect the per-iteration "PS[<u,k>] = ..." transcript.
  bool record_trace = false;
  /// Also interleave every CM deletion/replenish event into the transcript.
  bool record_cm_events = false;
  /// Fill each level with the OpenMP kernel instead of the serial one. Both
  /// produce identical tables and transcripts.
  bool parallel_levels = false;
};

struct SolveStats {
  std::size_t cm_calls = 0;
  /// Largest singleton-sweep pass count of any single CM call.
  int max_singleton_iterations = 0;
  long long total_singleton_iterations = 0;
  double runtime_seconds = 0.0;
};

struct SolveOutcome {
  Verdict verdict = Verdict::kNonHamiltonian;
  /// start, v1, ..., v_{n-1}, start; present iff verdict is hamiltonian.
  std::optional<std::vector<VertexId>> cycle;
  PathSetTable table;
  SolveStats stats;
  std::vector<std::string> trace;
};

/// Fills PS[] level by level (levels 1..n-1, then the sink). This is the
/// serial reference; fill_path_sets_parallel must agree with it exactly.
PathSetTable fill_path_sets(const Hologram& h, const Graph& g, const SolveOptions& options = {},
                            SolveStats* stats = nullptr, std::vector<std::string>* trace = nullptr);

/// Same result as fill_path_sets with the vertices of each level processed
/// concurrently. Level k only reads levels < k, so the frozen lower levels
/// are shared read-only.
PathSetTable fill_path_sets_parallel(const Hologram& h, const Graph& g,
                                     const SolveOptions& options = {},
                                     SolveStats* stats = nullptr,
                                     std::vector<std::string>* trace = nullptr);

/// Backward search from `target` towards the source. Returns the vertex
/// sequence source..target (the sink maps back to the start vertex), or an
/// empty vector when some step has no legal parent.
std::vector<VertexId> fhc(const PathSetTable& table, HologramVertex target, const Hologram& h,
                          const Graph& g, TieBreak tie_break = TieBreak::kAscending,
                          std::vector<std::string>* trace = nullptr);

/// Full path-set pipeline plus backward search on a built hologram. Never
/// reports hamiltonian without a cycle that passes verify_cycle.
SolveOutcome phg_bp(const Hologram& h, const Graph& g, const SolveOptions& options = {});

/// Independent checks; directions of directed edges are respected. A cycle
/// needs at least three vertices.
bool verify_cycle(const Graph& g, std::span<const VertexId> seq);
bool verify_path(const Graph& g, std::span<const VertexId> seq);

/// build_hologram + phg_bp. Graphs with fewer than three vertices have no
/// cycle and skip the pipeline. Throws
/// std::invalid_argument for a disconnected graph.
SolveOutcome solve_cycle(const Graph& g, VertexId start = 1, const SolveOptions& options = {});

struct PathOutcome {
  bool traceable = false;
  std::vector<VertexId> path;
  VertexId start = 0;
};

/// Hamiltonian path mode: runs the pipeline from every start vertex in turn
/// and backward-searches each level n-1 vertex whose path set spans 0..n-1.
PathOutcome solve_path(const Graph& g, const SolveOptions& options = {});

}  // namespace hcp

#endif  // HCP_SOLVER_HPP_
