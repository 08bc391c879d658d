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

#ifndef HCP_GRAPH_HPP_
#define HCP_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hcp/vertex_set.hpp"

namespace hcp {

enum class GraphKind { kUndirected, kDirected, kMixed };
enum class EdgeKind { kUndirected, kDirected };
enum class Direction { kIn, kOut };

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  EdgeKind kind = EdgeKind::kUndirected;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raised for malformed edge-list or graph6 input. `line()` is 1-based, or 0
/// when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Finite simple graph with 1-indexed vertices. Undirected edges are stored
/// once with their kind tag; both adjacency directions see them.
class Graph {
 public:
  explicit Graph(int n = 0, GraphKind kind = GraphKind::kUndirected);

  /// Throws std::invalid_argument on out-of-range ids, self-loops, duplicate
  /// edges, or an edge kind the graph kind does not admit.
  void add_edge(VertexId u, VertexId v, EdgeKind kind = EdgeKind::kUndirected);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  GraphKind kind() const { return kind_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexSet& out_neighbors(VertexId v) const { return out_[index(v)]; }
  const VertexSet& in_neighbors(VertexId v) const { return in_[index(v)]; }

  /// True when the graph can be traversed from u to v in one step.
  bool has_arc(VertexId u, VertexId v) const;

  /// Number of edges incident to v (each edge counted once).
  int degree(VertexId v) const { return degree_[index(v)]; }
  /// max |N(v)| for undirected graphs; max(|N+(v)|, |N-(v)|) otherwise.
  int max_degree() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::size_t index(VertexId v) const;

  int n_;
  GraphKind kind_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<int> degree_;
};

VertexSet neighbors(const Graph& g, VertexId v, Direction direction);

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// Connectivity treating every edge as undirected. The empty graph (n = 0) is
/// not connected; n = 1 is.
bool is_connected(const Graph& g);

/// Build a graph from either input format; edge lists are recognised by their
/// U/D/M header, anything else is decoded as graph6.
Graph parse_graph_text(std::string_view text);

// ---------------------------------------------------------------------------
// Exhaustive enumeration of connected labeled graphs.
//
// An edge mask assigns bit b to the b-th vertex pair in graph6 order
// (0,1), (0,2), (1,2), (0,3), ... using 0-based vertices.

inline constexpr int kMaxGuardedOrder = 7;
inline constexpr int kMaxMaskOrder = 11;  // n(n-1)/2 must fit in 64 bits

Graph graph_from_edge_mask(int n, std::uint64_t mask);
bool edge_mask_connected(int n, std::uint64_t mask);

/// Edge masks of every connected labeled graph on n vertices, ascending.
/// n outside 1..kMaxGuardedOrder needs allow_large (and n <= kMaxMaskOrder).
std::vector<std::uint64_t> connected_edge_masks(int n, bool allow_large = false);

/// Single-consumer stream over connected labeled graphs in ascending mask
/// order.
class ConnectedGraphStream {
 public:
  explicit ConnectedGraphStream(int n, bool allow_large = false);
  std::optional<Graph> next();
  /// Edge mask of the graph most recently returned by next().
  std::uint64_t current_mask() const { return current_; }

 private:
  int n_;
  std::uint64_t next_mask_ = 0;
  std::uint64_t limit_;
  std::uint64_t current_ = 0;
};

}  // namespace hcp

#endif  // HCP_GRAPH_HPP_
