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

#include "hcp/harness.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include "fixtures.hpp"
#include "hcp/oracle.hpp"

namespace hcp {
namespace {

std::vector<std::string> sweep_lines(int from, int to, bool parallel) {
  SweepOptions options;
  options.parallel = parallel;
  std::vector<std::string> lines;
  const auto reports =
      sweep(from, to, options, [&](const GraphVerdictRecord& r) { lines.push_back(to_json_line(r)); });
  lines.push_back(summary_json_line(reports, false));
  return lines;
}

TEST(SweepTest, OrderThree) {
  std::vector<GraphVerdictRecord> records;
  const auto reports = sweep(3, 3, {}, [&](const GraphVerdictRecord& r) { records.push_back(r); });
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_EQ(reports[0].graph_count, 4u);
  EXPECT_EQ(reports[0].agree_yes, 1u);
  EXPECT_EQ(reports[0].agree_no, 3u);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records.back().graph, encode_graph6(testing::complete(3)));
  EXPECT_EQ(records.back().decider_verdict, Verdict::kHamiltonian);
}

TEST(SweepTest, OrderFour) {
  std::vector<GraphVerdictRecord> records;
  const auto reports = sweep(4, 4, {}, [&](const GraphVerdictRecord& r) { records.push_back(r); });
  EXPECT_EQ(reports[0].graph_count, 38u);
  EXPECT_EQ(reports[0].invalid_cycle, 0u);
  EXPECT_EQ(reports[0].false_negative, 0u);
  const std::string g1 = encode_graph6(testing::g1());
  bool seen = false;
  for (const auto& r : records) {
    if (r.graph != g1) continue;
    seen = true;
    EXPECT_TRUE(r.agreement);
    EXPECT_EQ(r.oracle_verdict, Verdict::kHamiltonian);
  }
  EXPECT_TRUE(seen);
}

TEST(SweepTest, TinyOrdersAreNonHamiltonian) {
  const auto reports = sweep(1, 2);
  ASSERT_EQ(reports.size(), 2u);
  for (const auto& r : reports) {
    EXPECT_EQ(r.graph_count, 1u);
    EXPECT_EQ(r.agree_no, 1u);
  }
}

TEST(SweepTest, ReportIsDeterministicAndParallelMatchesSerial) {
  const auto serial = sweep_lines(3, 5, false);
  EXPECT_EQ(serial, sweep_lines(3, 5, false));
  EXPECT_EQ(serial, sweep_lines(3, 5, true));
  EXPECT_EQ(serial.size(), 4u + 38u + 728u + 1u);
}

TEST(SweepTest, GuardAndArguments) {
  EXPECT_THROW(sweep(8, 8), std::invalid_argument);
  EXPECT_THROW(sweep(4, 3), std::invalid_argument);
  EXPECT_THROW(sweep(0, 3), std::invalid_argument);
}

TEST(SweepTest, CertificatesVerify) {
  sweep(3, 5, {}, [](const GraphVerdictRecord& r) {
    const Graph g = parse_graph6(r.graph);
    if (r.oracle_verdict == Verdict::kHamiltonian || r.decider_verdict == Verdict::kHamiltonian) {
      ASSERT_TRUE(r.certificate) << r.graph;
      ASSERT_TRUE(verify_cycle(g, *r.certificate)) << r.graph;
    } else {
      EXPECT_FALSE(r.certificate);
    }
    EXPECT_EQ(r.agreement, r.oracle_verdict == r.decider_verdict);
  });
}

TEST(RecordTest, JsonShape) {
  const GraphVerdictRecord r = evaluate_graph(testing::g1());
  const auto line = to_json_line(r);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  const auto j = nlohmann::json::parse(line);
  EXPECT_EQ(j["graph"], encode_graph6(testing::g1()));
  EXPECT_EQ(j["oracle_verdict"], "hamiltonian");
  EXPECT_EQ(j["agreement"], true);
  EXPECT_EQ(j["certificate"], nlohmann::json::array({1, 4, 2, 3, 1}));
  EXPECT_TRUE(j["runtime_us"].is_null());
  EXPECT_EQ(line.rfind("{\"graph\":", 0), 0u);

  EXPECT_TRUE(evaluate_graph(testing::g1(), true).runtime_us.has_value());
}

TEST(RecordTest, SummaryComesLastAndAddsUp) {
  const auto lines = sweep_lines(3, 4, true);
  const auto summary = nlohmann::json::parse(lines.back());
  EXPECT_EQ(lines.back().rfind("{\"summary\":true", 0), 0u);
  EXPECT_EQ(summary["graph_count"], 42);
  EXPECT_EQ(summary["per_n"].size(), 2u);
  EXPECT_TRUE(summary["wall_time_s"].is_null());
}

TEST(ReportTest, MergeAndCombine) {
  SweepReport a;
  a.n = 3;
  a.graph_count = 2;
  a.agree_yes = 1;
  a.max_singleton_iterations = 1;
  SweepReport b;
  b.n = 4;
  b.graph_count = 3;
  b.false_negative = 1;
  b.search_misses = 1;
  const SweepReport total = combine({a, b});
  EXPECT_EQ(total.graph_count, 5u);
  EXPECT_EQ(total.agree_yes, 1u);
  EXPECT_EQ(total.false_negative, 1u);
  EXPECT_EQ(total.search_misses, 1u);
  EXPECT_EQ(total.max_singleton_iterations, 1);
}

TEST(GoldenTest, AllExamplesReplay) {
  const auto ids = golden_ids();
  EXPECT_EQ(ids, (std::vector<std::string>{"ex1", "ex2", "ex3-cm", "ex4", "ex5e"}));
  for (const std::string& id : ids) {
    const GoldenResult r = golden_trace(id);
    EXPECT_TRUE(r.pass) << id << "\n" << r.divergence;
    EXPECT_EQ(r.checked, r.expected);
  }
  EXPECT_THROW(golden_trace("ex9"), std::invalid_argument);
  EXPECT_EQ(parse_graph_text(golden_graph_text("ex1")), testing::g1());
}

TEST(GoldenTest, DivergenceNamesBothLines) {
  const std::vector<std::string> expected{"PS[<1,0>] = {{1}}", "PS[<2,1>] = {{2}}"};
  const std::vector<std::string> actual{"level 0", "PS[<1,0>] = {{1}}", "PS[<2,1>] = {{1},{2}}"};
  std::size_t matched = 99;
  const auto report = first_divergence(expected, actual, &matched);
  ASSERT_TRUE(report);
  EXPECT_EQ(matched, 1u);
  EXPECT_NE(report->find("expected line 2: PS[<2,1>] = {{2}}"), std::string::npos);
  EXPECT_NE(report->find("actual line 3: PS[<2,1>] = {{1},{2}}"), std::string::npos);
  EXPECT_FALSE(first_divergence(expected, {"x", expected[0], "y", expected[1]}));
}

TEST(AuditTest, HologramEquivalenceHolds) {
  const HologramEquivalence eq = check_hologram_equivalence(3, 5);
  EXPECT_EQ(eq.graphs, 770u);
  EXPECT_EQ(eq.mismatches, 0u);
}

TEST(AuditTest, BasicPathSemanticsIsMeasured) {
  const SemanticsAudit audit = audit_basic_path_sets(3, 4);
  EXPECT_EQ(audit.graphs, 42u);
  EXPECT_EQ(audit.matches + audit.mismatches, audit.vertices_compared);
  EXPECT_GT(audit.matches, 0u);
}

TEST(ProbeTest, CompleteGraphs) {
  EXPECT_EQ(complete_graph(5), testing::complete(5));
  const ProbeResult probe = scaling_probe({4, 6, 8}, 0.0);
  ASSERT_EQ(probe.rows.size(), 3u);
  for (const ProbeRow& row : probe.rows) {
    EXPECT_TRUE(row.hamiltonian);
    EXPECT_LE(row.max_singleton_iterations, 1);
  }
  const auto j = nlohmann::json::parse(to_json_line(probe.rows[0]));
  EXPECT_EQ(j["n"], 4);
}

}  // namespace
}  // namespace hcp
