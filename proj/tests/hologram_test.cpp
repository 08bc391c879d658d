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

#include "hcp/hologram.hpp"

#include <gtest/gtest.h>

#include <regex>

#include "fixtures.hpp"

namespace hcp {
namespace {

using testing::g1;

std::size_t expected_edges(const Graph& g, VertexId s) {
  const auto n = static_cast<std::size_t>(g.order());
  const auto deg = static_cast<std::size_t>(g.degree(s));
  return 2 * deg + 2 * (n - 2) * (g.size() - deg);
}

TEST(BuildHologramTest, ExampleGraphSizes) {
  const Hologram h = build_hologram(g1(), 1);
  EXPECT_EQ(h.vertex_count(), 11u);
  EXPECT_EQ(h.edge_count(), 16u);
  EXPECT_EQ(h.levels(), 4);
  EXPECT_EQ(h.source(), (HologramVertex{1, 0}));
  EXPECT_EQ(h.sink(), (HologramVertex{1, 4}));

  const Hologram k5 = build_hologram(testing::complete(5), 1);
  EXPECT_EQ(k5.vertex_count(), 18u);
  EXPECT_EQ(k5.edge_count(), 44u);
}

TEST(BuildHologramTest, ParentsAndChildren) {
  const Hologram h = build_hologram(g1(), 1);
  EXPECT_EQ(h.parent_ids({2, 2}), (VertexSet{3, 4}));
  EXPECT_EQ(h.parents({2, 2}), (std::vector<HologramVertex>{{3, 1}, {4, 1}}));
  EXPECT_EQ(h.parent_ids({3, 2}), (VertexSet{2, 4}));
  EXPECT_TRUE(h.parent_ids({2, 1}).empty());
  EXPECT_TRUE(h.parents(h.source()).empty());
  EXPECT_EQ(h.children(h.source()), (std::vector<HologramVertex>{{3, 1}, {4, 1}}));
  EXPECT_TRUE(h.children(h.sink()).empty());
  EXPECT_TRUE(h.child_ids({3, 1}).contains(2));
  EXPECT_EQ(h.parent_ids(h.sink()), (VertexSet{3, 4}));
}

TEST(BuildHologramTest, StartOnlyAtEndLevels) {
  const Hologram h = build_hologram(g1(), 2);
  EXPECT_FALSE(h.contains({2, 1}));
  EXPECT_FALSE(h.contains({1, 0}));
  EXPECT_TRUE(h.contains({2, 0}));
  EXPECT_TRUE(h.contains({2, 4}));
  EXPECT_TRUE(h.contains({1, 3}));
  EXPECT_FALSE(h.contains({1, 4}));
  EXPECT_EQ(h.vertex_count(), 11u);
  EXPECT_EQ(h.edge_count(), expected_edges(g1(), 2));
}

TEST(BuildHologramTest, DirectedEdgeReplicatedOneWay) {
  Graph g(5, GraphKind::kDirected);
  g.add_edge(1, 2, EdgeKind::kDirected);
  g.add_edge(2, 3, EdgeKind::kDirected);
  g.add_edge(3, 4, EdgeKind::kDirected);
  g.add_edge(4, 5, EdgeKind::kDirected);
  g.add_edge(5, 1, EdgeKind::kDirected);
  const Hologram h = build_hologram(g, 1);
  int forward = 0;
  int backward = 0;
  for (const HologramVertex& v : h.vertices()) {
    for (const HologramVertex& c : h.children(v)) {
      if (v.u == 2 && c.u == 3) ++forward;
      if (v.u == 3 && c.u == 2) ++backward;
    }
  }
  EXPECT_EQ(forward, 3);
  EXPECT_EQ(backward, 0);
  EXPECT_EQ(h.edge_count(), 1u + 1u + 3u * 3u);
}

TEST(BuildHologramTest, Errors) {
  EXPECT_THROW(build_hologram(g1(), 0), std::invalid_argument);
  EXPECT_THROW(build_hologram(g1(), 5), std::invalid_argument);
  Graph split(4);
  split.add_edge(1, 2);
  split.add_edge(3, 4);
  EXPECT_THROW(build_hologram(split, 1), std::invalid_argument);
  EXPECT_NO_THROW(build_hologram(split, 1, true));
}

TEST(BuildHologramTest, TinyOrders) {
  const Hologram one = build_hologram(Graph(1), 1);
  EXPECT_EQ(one.vertex_count(), 2u);
  EXPECT_EQ(one.edge_count(), 0u);
  const Hologram two = build_hologram(testing::complete(2), 1);
  EXPECT_EQ(two.vertex_count(), 3u);
  EXPECT_EQ(two.edge_count(), 2u);
}

TEST(BuildHologramTest, LayeredAndIndexed) {
  const Hologram h = build_hologram(testing::ex3(), 1);
  const auto vertices = h.vertices();
  ASSERT_EQ(vertices.size(), h.vertex_count());
  std::size_t edges = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    EXPECT_EQ(h.index(vertices[i]), i);
    for (const HologramVertex& c : h.children(vertices[i])) {
      EXPECT_EQ(c.level, vertices[i].level + 1);
      ++edges;
    }
  }
  EXPECT_EQ(edges, h.edge_count());
}

TEST(BuildHologramTest, SizeFormulasOverAllSmallGraphs) {
  for (int n = 3; n <= 6; ++n) {
    for (std::uint64_t mask : connected_edge_masks(n)) {
      const Graph g = graph_from_edge_mask(n, mask);
      const Hologram h = build_hologram(g, 1);
      ASSERT_EQ(h.vertex_count(), static_cast<std::size_t>((n - 1) * (n - 1) + 2));
      ASSERT_EQ(h.edge_count(), expected_edges(g, 1)) << encode_graph6(g);
    }
  }
}

TEST(HologramDotTest, DeterministicAndComplete) {
  const Hologram k3 = build_hologram(testing::complete(3), 1);
  const std::string dot = hologram_to_dot(k3);
  EXPECT_EQ(dot, hologram_to_dot(build_hologram(testing::complete(3), 1)));
  const std::regex node(R"("\d+_\d+" \[label)");
  EXPECT_EQ(std::distance(std::sregex_iterator(dot.begin(), dot.end(), node), std::sregex_iterator()), 6);

  const std::string g1_dot = hologram_to_dot(build_hologram(g1(), 1));
  const std::regex edge(R"("\d+_\d+" -> "\d+_\d+")");
  EXPECT_EQ(std::distance(std::sregex_iterator(g1_dot.begin(), g1_dot.end(), edge),
                          std::sregex_iterator()),
            16);
  EXPECT_NE(g1_dot.find("rank=same"), std::string::npos);
}

}  // namespace
}  // namespace hcp
