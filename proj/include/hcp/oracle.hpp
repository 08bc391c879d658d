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

// Brute-force ground truth, independent of the path-set machinery.

#ifndef HCP_ORACLE_HPP_
#define HCP_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "hcp/graph.hpp"
#include "hcp/hologram.hpp"
#include "hcp/path_set.hpp"

namespace hcp {

/// Backtracking search for a Hamiltonian cycle through start, returned as
/// start, v1, ..., start. Exhaustive: nullopt means no cycle exists. Graphs
/// with fewer than three vertices have none.
std::optional<std::vector<VertexId>> oracle_hamiltonian_cycle(const Graph& g, VertexId start = 1);

/// Directed Hamiltonian circuits from start back to start; the two
/// orientations of an undirected cycle count separately. Subset DP, n <= 20;
/// zero below three vertices.
std::uint64_t oracle_count_cycles(const Graph& g, VertexId start = 1);

/// Same count by plain enumeration; for cross-checking the DP.
std::uint64_t oracle_count_cycles_backtracking(const Graph& g, VertexId start = 1);

inline constexpr int kMaxBasicPathOrder = 6;

/// Declarative path set of target: every basic path of the hologram that
/// ends at target (starting from the source or from any vertex on a lower
/// level, never repeating an original vertex) is enumerated, the longest
/// ones are kept and their vertices are united level by level. {{u}} when
/// nothing reaches target. Throws std::invalid_argument above
/// kMaxBasicPathOrder.
PathSet oracle_basic_path_sets(const Hologram& h, HologramVertex target);

/// True iff the hologram has a basic path from the source to the sink.
bool hologram_has_spanning_path(const Hologram& h);

}  // namespace hcp

#endif  // HCP_ORACLE_HPP_
