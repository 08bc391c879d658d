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

#ifndef HCP_HOLOGRAM_HPP_
#define HCP_HOLOGRAM_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "hcp/graph.hpp"

namespace hcp {

/// Vertex <u, k> of a path hologram: original vertex u on segment level k.
struct HologramVertex {
  VertexId u = 0;
  Level level = 0;

  friend bool operator==(const HologramVertex&, const HologramVertex&) = default;
  std::string to_string() const;
};

/// Layered DAG with levels 0..L (L = n). Level 0 holds only the source
/// <s,0>, level L only the sink <s,L>, and every other level holds <u,k> for
/// each u != s. Edges always go from level k to level k+1.
///
/// Parent and child lists are stored per vertex as sets of original ids; the
/// level of a parent is implied (k-1), which keeps lookups O(deg).
class Hologram {
 public:
  int order() const { return n_; }
  int levels() const { return n_; }
  VertexId start() const { return start_; }
  HologramVertex source() const { return {start_, 0}; }
  HologramVertex sink() const { return {start_, n_}; }

  bool contains(HologramVertex v) const;

  /// Original ids w with an edge <w,k-1> -> v.
  const VertexSet& parent_ids(HologramVertex v) const { return parents_[index(v)]; }
  /// Original ids w with an edge v -> <w,k+1>.
  const VertexSet& child_ids(HologramVertex v) const { return children_[index(v)]; }

  std::vector<HologramVertex> parents(HologramVertex v) const;
  std::vector<HologramVertex> children(HologramVertex v) const;

  std::size_t vertex_count() const { return parents_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// All vertices ordered by level, then by id.
  std::vector<HologramVertex> vertices() const;

  /// Dense index in 0..vertex_count()-1, following vertices() order.
  std::size_t index(HologramVertex v) const;

 private:
  friend Hologram build_hologram(const Graph& g, VertexId start, bool allow_disconnected);

  void add_edge(HologramVertex from, HologramVertex to);

  int n_ = 0;
  VertexId start_ = 1;
  std::size_t edge_count_ = 0;
  std::vector<VertexSet> parents_;
  std::vector<VertexSet> children_;
};

/// Generates the path hologram of g with initial vertex <start,0>. Undirected
/// edges contribute both orientations, directed edges only their own.
/// Throws std::invalid_argument for a bad start or a disconnected graph
/// (unless allow_disconnected).
Hologram build_hologram(const Graph& g, VertexId start = 1, bool allow_disconnected = false);

/// Deterministic Graphviz rendering; one rank per level.
std::string hologram_to_dot(const Hologram& h);

}  // namespace hcp

#endif  // HCP_HOLOGRAM_HPP_
