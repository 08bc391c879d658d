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

#ifndef HCP_TESTS_FIXTURES_HPP_
#define HCP_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <vector>

#include "hcp/graph.hpp"
#include "hcp/path_set.hpp"

namespace hcp::testing {

inline Graph g1() { return parse_edge_list("U 4 5\n1 3\n1 4\n2 3\n2 4\n3 4\n"); }
inline Graph g2() { return parse_edge_list("U 4 4\n1 4\n2 4\n3 4\n2 3\n"); }
inline Graph ex3() {
  return parse_edge_list("U 8 9\n1 2\n1 4\n2 3\n3 4\n3 7\n6 7\n7 8\n5 6\n5 8\n");
}
inline Graph ex5e() { return parse_edge_list("U 5 8\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n"); }

inline Graph complete(int n) {
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (VertexId u = 1; u <= n; ++u) g.add_edge(u, u % n + 1);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (VertexId v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

// Levels base, base+1, ...; the end vertex is the smallest member of the
// last level.
inline PathSet make_ps(Level base, std::initializer_list<std::initializer_list<VertexId>> levels) {
  std::vector<VertexSet> sets;
  for (const auto& level : levels) sets.emplace_back(level);
  const VertexId end = sets.empty() || sets.back().empty() ? 0 : sets.back().front();
  return PathSet(base, std::move(sets), end);
}

}  // namespace hcp::testing

#endif  // HCP_TESTS_FIXTURES_HPP_
