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

#include "hcp/oracle.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hcp/solver.hpp"

namespace hcp {
namespace {

using testing::make_ps;

TEST(OracleCycleTest, FindsVerifiedCycles) {
  for (const Graph& g : {testing::g1(), testing::complete(5), testing::ex5e(),
                         testing::cycle_graph(7)}) {
    const auto cycle = oracle_hamiltonian_cycle(g);
    ASSERT_TRUE(cycle) << encode_graph6(g);
    EXPECT_TRUE(verify_cycle(g, *cycle));
    EXPECT_EQ(cycle->front(), 1);
  }
  const auto from3 = oracle_hamiltonian_cycle(testing::g1(), 3);
  ASSERT_TRUE(from3);
  EXPECT_EQ(from3->front(), 3);
}

TEST(OracleCycleTest, RejectsNonHamiltonian) {
  EXPECT_FALSE(oracle_hamiltonian_cycle(testing::g2()));
  EXPECT_FALSE(oracle_hamiltonian_cycle(testing::star(4)));
  EXPECT_FALSE(oracle_hamiltonian_cycle(testing::ex3()));
  EXPECT_FALSE(oracle_hamiltonian_cycle(Graph(1)));
  EXPECT_FALSE(oracle_hamiltonian_cycle(testing::complete(2)));
  Graph two_triangles(5);
  for (auto [u, v] : {std::pair{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 3}}) {
    two_triangles.add_edge(u, v);
  }
  EXPECT_FALSE(oracle_hamiltonian_cycle(two_triangles));
}

TEST(OracleCountTest, KnownCounts) {
  EXPECT_EQ(oracle_count_cycles(testing::complete(5)), 24u);
  EXPECT_EQ(oracle_count_cycles(testing::g1()), 2u);
  EXPECT_EQ(oracle_count_cycles(testing::cycle_graph(4)), 2u);
  EXPECT_EQ(oracle_count_cycles(testing::ex5e()), 4u);
  EXPECT_EQ(oracle_count_cycles(testing::g2()), 0u);
  EXPECT_EQ(oracle_count_cycles(testing::complete(7)), 720u);
  EXPECT_EQ(oracle_count_cycles(testing::complete(2)), 0u);
}

TEST(OracleCountTest, DynamicProgrammingMatchesBacktracking) {
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t mask : connected_edge_masks(n)) {
      const Graph g = graph_from_edge_mask(n, mask);
      const std::uint64_t count = oracle_count_cycles(g);
      ASSERT_EQ(count, oracle_count_cycles_backtracking(g)) << encode_graph6(g);
      ASSERT_EQ(count > 0, oracle_hamiltonian_cycle(g).has_value());
    }
  }
  std::mt19937 rng(5);
  std::bernoulli_distribution coin(0.6);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + trial % 2;
    Graph g(n);
    for (VertexId u = 1; u <= n; ++u) {
      for (VertexId v = u + 1; v <= n; ++v) {
        if (coin(rng)) g.add_edge(u, v);
      }
    }
    const std::uint64_t count = oracle_count_cycles(g);
    ASSERT_EQ(count, oracle_count_cycles_backtracking(g)) << encode_graph6(g);
    ASSERT_EQ(count > 0, oracle_hamiltonian_cycle(g).has_value()) << encode_graph6(g);
  }
}

TEST(BasicPathSetsTest, ExampleVertices) {
  const Hologram h = build_hologram(testing::g1(), 1);
  EXPECT_EQ(oracle_basic_path_sets(h, {2, 2}).to_string(), "{{1},{3,4},{2}}");
  EXPECT_EQ(oracle_basic_path_sets(h, {3, 1}).to_string(), "{{1},{3}}");
  EXPECT_EQ(oracle_basic_path_sets(h, {2, 1}).to_string(), "{{2}}");
  EXPECT_EQ(oracle_basic_path_sets(h, h.source()).to_string(), "{{1}}");
  EXPECT_EQ(oracle_basic_path_sets(h, h.sink()).to_string(), "{{1},{3,4},{2},{3,4},{1}}");
}

TEST(BasicPathSetsTest, GuardsLargeOrders) {
  const Hologram h = build_hologram(testing::complete(7), 1);
  EXPECT_THROW(oracle_basic_path_sets(h, {2, 2}), std::invalid_argument);
}

TEST(HologramPathTest, MatchesOracleOnExamples) {
  EXPECT_TRUE(hologram_has_spanning_path(build_hologram(testing::g1(), 1)));
  EXPECT_FALSE(hologram_has_spanning_path(build_hologram(testing::g2(), 1)));
  EXPECT_TRUE(hologram_has_spanning_path(build_hologram(testing::ex5e(), 1)));
}

}  // namespace
}  // namespace hcp
