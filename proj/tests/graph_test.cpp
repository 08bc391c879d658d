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

#include "hcp/graph.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

namespace hcp {
namespace {

using testing::g1;

TEST(ParseEdgeListTest, ReadsExampleGraph) {
  const Graph g = g1();
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 5u);
  EXPECT_EQ(g.out_neighbors(1), (VertexSet{3, 4}));
  EXPECT_EQ(g.out_neighbors(2), (VertexSet{3, 4}));
  EXPECT_EQ(g.out_neighbors(3), (VertexSet{1, 2, 4}));
  EXPECT_EQ(g.max_degree(), 3);
}

TEST(ParseEdgeListTest, SingleVertex) {
  const Graph g = parse_edge_list("U 1 0\n");
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0u);
}

TEST(ParseEdgeListTest, CommentsAreSkipped) {
  const Graph g = parse_edge_list("# triangle\nU 3 3\n1 2\n# middle\n2 3\n1 3\n");
  EXPECT_EQ(g, testing::complete(3));
}

TEST(ParseEdgeListTest, ErrorsNameTheLine) {
  const auto line_of = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("U 3 3\n1 2\n1 2\n2 3\n"), 3);
  EXPECT_EQ(line_of("U 3 1\n1 4\n"), 2);
  EXPECT_EQ(line_of("U 3 1\n2 2\n"), 2);
  EXPECT_EQ(line_of("X 3 1\n1 2\n"), 1);
  EXPECT_GT(line_of("U 3 2\n1 2\n"), 0);
  EXPECT_THROW(parse_edge_list("U 3\n"), ParseError);
  EXPECT_THROW(parse_edge_list("M 3 1\n1 2\n"), ParseError);
}

TEST(ParseEdgeListTest, DirectedAndMixed) {
  const Graph d = parse_edge_list("D 3 2\n1 2\n2 3\n");
  EXPECT_EQ(d.kind(), GraphKind::kDirected);
  EXPECT_TRUE(d.has_arc(1, 2));
  EXPECT_FALSE(d.has_arc(2, 1));
  EXPECT_EQ(neighbors(parse_edge_list("D 2 1\n1 2\n"), 2, Direction::kOut), VertexSet{});

  const Graph m = parse_edge_list("M 3 2\n1 2 U\n2 3 D\n");
  EXPECT_TRUE(m.has_arc(2, 1));
  EXPECT_TRUE(m.has_arc(2, 3));
  EXPECT_FALSE(m.has_arc(3, 2));
}

TEST(ParseEdgeListTest, SerializeRoundTrip) {
  for (const Graph& g : {g1(), testing::ex3(), parse_edge_list("M 4 3\n1 2 U\n2 3 D\n4 3 D\n"),
                         parse_edge_list("D 3 3\n1 2\n2 1\n2 3\n")}) {
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(NeighborsTest, Directions) {
  EXPECT_EQ(neighbors(g1(), 1, Direction::kOut), (VertexSet{3, 4}));
  EXPECT_EQ(neighbors(g1(), 3, Direction::kIn), (VertexSet{1, 2, 4}));
  const Graph g = testing::ex5e();
  for (VertexId v = 1; v <= g.order(); ++v) {
    EXPECT_EQ(neighbors(g, v, Direction::kIn), neighbors(g, v, Direction::kOut));
  }
}

TEST(Graph6Test, DecodesKnownCodes) {
  EXPECT_EQ(parse_graph6("Bw"), testing::complete(3));
  const Graph one = parse_graph6("@");
  EXPECT_EQ(one.order(), 1);
  EXPECT_EQ(one.size(), 0u);
  EXPECT_EQ(encode_graph6(testing::complete(3)), "Bw");
  EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), testing::complete(3));
}

TEST(Graph6Test, RejectsBadInput) {
  EXPECT_THROW(parse_graph6("B"), ParseError);
  EXPECT_THROW(parse_graph6("B w"), ParseError);
  EXPECT_THROW(parse_graph6("Bww"), ParseError);
  EXPECT_THROW(parse_graph6(""), ParseError);
}

TEST(Graph6Test, RoundTripRandomGraphs) {
  std::mt19937 rng(7);
  EXPECT_EQ(parse_graph6(encode_graph6(g1())), g1());
  for (int n : {1, 2, 5, 9, 40, 63, 64, 70}) {
    Graph g(n);
    std::bernoulli_distribution coin(0.3);
    for (VertexId u = 1; u <= n; ++u) {
      for (VertexId v = u + 1; v <= n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    EXPECT_EQ(parse_graph6(encode_graph6(g)), g) << "n=" << n;
  }
}

TEST(ParseGraphTextTest, DetectsFormat) {
  EXPECT_EQ(parse_graph_text("Bw\n"), testing::complete(3));
  EXPECT_EQ(parse_graph_text("U 3 3\n1 2\n1 3\n2 3\n"), testing::complete(3));
}

TEST(ConnectivityTest, Basics) {
  EXPECT_TRUE(is_connected(g1()));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_FALSE(is_connected(Graph(0)));
  EXPECT_TRUE(is_connected(parse_edge_list("D 3 2\n1 2\n3 2\n")));
}

// Independent filter: every mask over the full space, BFS on the decoded
// graph.
std::uint64_t brute_force_connected(int n) {
  const int pairs = n * (n - 1) / 2;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    if (is_connected(graph_from_edge_mask(n, mask))) ++count;
  }
  return count;
}

TEST(EnumerationTest, CountsMatchBruteForce) {
  EXPECT_EQ(connected_edge_masks(1).size(), 1u);
  EXPECT_EQ(connected_edge_masks(3).size(), 4u);
  EXPECT_EQ(connected_edge_masks(4).size(), 38u);
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(connected_edge_masks(n).size(), brute_force_connected(n)) << "n=" << n;
  }
  EXPECT_EQ(connected_edge_masks(6).size(), 26704u);
}

TEST(EnumerationTest, YieldsExactlyTheConnectedGraphsInOrder) {
  const auto masks = connected_edge_masks(5);
  EXPECT_TRUE(std::is_sorted(masks.begin(), masks.end()));
  for (std::uint64_t mask : masks) {
    const Graph g = graph_from_edge_mask(5, mask);
    EXPECT_TRUE(is_connected(g));
    EXPECT_GE(g.size(), 4u);
    EXPECT_EQ(edge_mask_connected(5, mask), true);
  }
}

TEST(EnumerationTest, StreamMatchesVector) {
  ConnectedGraphStream stream(4);
  std::vector<std::uint64_t> seen;
  while (auto g = stream.next()) {
    EXPECT_EQ(*g, graph_from_edge_mask(4, stream.current_mask()));
    seen.push_back(stream.current_mask());
  }
  EXPECT_EQ(seen, connected_edge_masks(4));
}

TEST(EnumerationTest, GuardRejectsLargeOrders) {
  EXPECT_THROW(connected_edge_masks(8), std::invalid_argument);
  EXPECT_THROW(connected_edge_masks(0), std::invalid_argument);
  EXPECT_THROW(ConnectedGraphStream(8), std::invalid_argument);
}

TEST(EnumerationTest, MaskBitsFollowGraph6Order) {
  // bit 0 = (1,2), bit 1 = (1,3), bit 2 = (2,3)
  EXPECT_EQ(graph_from_edge_mask(3, 0b111), testing::complete(3));
  EXPECT_EQ(encode_graph6(graph_from_edge_mask(3, 0b111)), "Bw");
  const Graph g = graph_from_edge_mask(3, 0b010);
  EXPECT_TRUE(g.has_arc(1, 3));
  EXPECT_EQ(g.size(), 1u);
}

}  // namespace
}  // namespace hcp
