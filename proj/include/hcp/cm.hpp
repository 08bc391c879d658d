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

// Consistency maintenance: the operator that decides whether a vertex u can
// be appended to the path set of one of its hologram parents, and what is
// left of that path set once every path revisiting u has been cut away.

#ifndef HCP_CM_HPP_
#define HCP_CM_HPP_

#include <optional>
#include <string>
#include <vector>

#include "hcp/graph.hpp"
#include "hcp/hologram.hpp"
#include "hcp/path_set.hpp"

namespace hcp {

/// Path set of every hologram vertex, indexed like Hologram::index().
class PathSetTable {
 public:
  PathSetTable() = default;
  /// Empty table laid out for a hologram of order n started at `start`.
  PathSetTable(int n, VertexId start);
  explicit PathSetTable(const Hologram& h) : PathSetTable(h.order(), h.start()) {}

  int order() const { return n_; }
  VertexId start() const { return start_; }

  bool has(HologramVertex v) const;
  /// Throws ContractViolation when v has no entry.
  const PathSet& at(HologramVertex v) const;
  void set(HologramVertex v, PathSet ps);

  /// "PS[<u,k>] = {...}" for every filled entry, level then id ascending.
  std::vector<std::string> render() const;

  friend bool operator==(const PathSetTable&, const PathSetTable&) = default;

 private:
  std::optional<std::size_t> slot(HologramVertex v) const;

  int n_ = 0;
  VertexId start_ = 1;
  std::vector<std::optional<PathSet>> entries_;
};

/// What one cm() call did, in order.
struct CmTrace {
  /// Every vertex removed from the working copy, in deletion order.
  std::vector<HologramVertex> deletions;
  /// Action-field members kept because another survivor still supports them.
  std::vector<HologramVertex> replenished;
  /// One fragment per deletion burst (a seed deletion plus its cascade).
  std::vector<std::vector<HologramVertex>> deleted_fragments;
  /// Passes of the singleton sweep that removed at least one vertex.
  int singleton_loop_iterations = 0;
  /// Human-readable event log, one event per line; filled only while
  /// `recording` is set.
  std::vector<std::string> events;
  bool recording = false;

  std::string to_text() const;
};

/// Left action field deleting-replenishing. `w` has just been removed from
/// level j; walks leftwards deleting every vertex whose only right-hand
/// support was removed. May leave empty levels.
void lafdr(PathSet& pstemp, VertexId w, Level j, const Graph& g, CmTrace* trace = nullptr);

/// Mirror of lafdr walking rightwards with out-neighbourhoods; stops at the
/// end level.
void rafdr(PathSet& pstemp, VertexId w, Level j, const Graph& g, CmTrace* trace = nullptr);

/// No-legal-path test. pstemp ends at level k-1. Looks at the highest level
/// below k-1 holding more than one vertex and returns true iff every member
/// w there is blocked, i.e. PS[<w,i>] prefix-intersected with pstemp has an
/// empty level. Returns false when no such level exists.
bool check(const PathSet& pstemp, const PathSetTable& table, Level k);

struct CmResult {
  PathSet path_set;
  CmTrace trace;
};

/// Consistency maintenance of u joining the parent path set `parent`
/// (= PS[<v,k-1>]). Removes every other occurrence of u, then repeatedly
/// removes duplicates of singleton levels, cascading each removal through
/// lafdr/rafdr. Returns the invalid sentinel as soon as a level empties or
/// check() reports no legal path; otherwise the remainder joined with u.
/// The table is read (levels < k) but never written.
CmResult cm(const PathSet& parent, VertexId u, Level k, const Graph& g,
            const PathSetTable& table, bool record_events = false);

}  // namespace hcp

#endif  // HCP_CM_HPP_
