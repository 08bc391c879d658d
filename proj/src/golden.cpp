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

#include <algorithm>
#include <map>
#include <stdexcept>

#include "hcp/harness.hpp"
#include "hcp/oracle.hpp"

namespace hcp {

namespace {

struct Golden {
  const char* graph;
  std::vector<std::string> expected;
};

std::string dashed(const std::vector<VertexId>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(seq[i]);
  }
  return out;
}

const std::map<std::string, Golden, std::less<>>& goldens() {
  static const std::map<std::string, Golden, std::less<>> table = {
      {"ex1",
       {"U 4 5\n1 3\n1 4\n2 3\n2 4\n3 4\n",
        {
            "PS[<1,0>] = {{1}}",
            "PS[<2,1>] = {{2}}",
            "PS[<3,1>] = {{1},{3}}",
            "PS[<4,1>] = {{1},{4}}",
            "CM(PS[<3,1>], <2,2>) = {{1},{3},{2}}",
            "CM(PS[<4,1>], <2,2>) = {{1},{4},{2}}",
            "PS[<2,2>] = {{1},{3,4},{2}}",
            "CM(PS[<2,1>], <3,2>) = {{2},{3}}",
            "PS[<3,2>] = {{1},{4},{3}}",
            "PS[<4,2>] = {{1},{3},{4}}",
            "CM(PS[<3,2>], <2,3>) = {{1},{4},{3},{2}}",
            "PS[<2,3>] = {{1},{3,4},{3,4},{2}}",
            "CM(PS[<2,2>], <3,3>) = {{1},{4},{2},{3}}",
            "CM(PS[<4,2>], <3,3>) = {{}}",
            "PS[<3,3>] = {{1},{4},{2},{3}}",
            "PS[<4,3>] = {{1},{3},{2},{4}}",
            "PS[<1,4>] = {{1},{3,4},{2},{3,4},{1}}",
            "FHC select <3,3>: PStemp = {{1},{4},{2},{3}}",
            "FHC select <2,2>: PStemp = {{1},{4},{2}}",
            "FHC select <4,1>: PStemp = {{1},{4}}",
            "verdict hamiltonian",
            "cycle[asc] 1-4-2-3-1",
            "cycle[desc] 1-3-2-4-1",
            "oracle cycles = 2",
        }}},
      {"ex2",
       {"U 4 4\n1 4\n2 4\n3 4\n2 3\n",
        {
            "PS[<1,0>] = {{1}}",
            "PS[<2,1>] = {{2}}",
            "PS[<3,1>] = {{3}}",
            "PS[<2,3>] = {{1},{4},{3},{2}}",
            "PS[<3,3>] = {{1},{4},{2},{3}}",
            "PS[<4,3>] = {{4}}",
            "PS[<1,4>] = {{4},{1}}",
            "verdict non_hamiltonian",
            "path 1-4-3-2",
            "oracle cycles = 0",
        }}},
      {"ex3-cm",
       {"U 8 9\n1 2\n1 4\n2 3\n3 4\n3 7\n6 7\n7 8\n5 6\n5 8\n",
        {
            "PS[<5,4>] = {{3,6,8},{7},{6,8},{5}}",
            "  | delete 6@3 (duplicate of 6)",
            "  | state {{3,6,8},{7},{8},{5}}",
            "  | delete 6@1 (duplicate of 6)",
            "  | state {{3,8},{7},{8},{5}}",
            "  | singleton pass 1: {8}@3",
            "  | delete 8@1 (duplicate of singleton 8@3)",
            "  | state {{3},{7},{8},{5}}",
            "  | result {{3},{7},{8},{5},{6}}",
            "CM(PS[<5,4>], <6,5>) = {{3},{7},{8},{5},{6}}",
            "singleton passes = 1",
            "PS[<7,4>] = {{6,8},{5},{6,8},{7}}",
            "  | delete 6@3 (duplicate of 6)",
            "  | delete 6@1 (duplicate of 6)",
            "  | state {{8},{5},{8},{7}}",
            "  | singleton pass 1: {8}@3",
            "  | delete 8@1 (duplicate of singleton 8@3)",
            "  | empty segment set -> {{},{5},{8},{7}}",
            "  | result {{}}",
            "CM(PS[<7,4>], <6,5>) = {{}}",
            "singleton passes = 1",
        }}},
      {"ex4",
       {"U 5 10\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n3 5\n4 5\n",
        {
            "PS[<1,0>] = {{1}}",
            "CM(PS[<1,0>], <2,1>) = {{1},{2}}",
            "PS[<2,1>] = {{1},{2}}",
            "PS[<3,1>] = {{1},{3}}",
            "PS[<4,1>] = {{1},{4}}",
            "PS[<5,1>] = {{1},{5}}",
            "CM(PS[<3,1>], <2,2>) = {{1},{3},{2}}",
            "LPM(PS[<2,2>]) = {{1},{3},{2}}",
            "LPM(PS[<2,2>]) = {{1},{3,4},{2}}",
            "PS[<2,2>] = {{1},{3,4,5},{2}}",
            "PS[<3,2>] = {{1},{2,4,5},{3}}",
            "PS[<4,2>] = {{1},{2,3,5},{4}}",
            "PS[<5,2>] = {{1},{2,3,4},{5}}",
            "CM(PS[<3,2>], <2,3>) = {{1},{4,5},{3},{2}}",
            "LPM(PS[<2,3>]) = {{1},{4,5},{3},{2}}",
            "LPM(PS[<2,3>]) = {{1},{3,4,5},{3,4},{2}}",
            "PS[<2,3>] = {{1},{3,4,5},{3,4,5},{2}}",
            "PS[<3,3>] = {{1},{2,4,5},{2,4,5},{3}}",
            "PS[<4,3>] = {{1},{2,3,5},{2,3,5},{4}}",
            "PS[<5,3>] = {{1},{2,3,4},{2,3,4},{5}}",
            "CM(PS[<3,3>], <2,4>) = {{1},{4,5},{4,5},{3},{2}}",
            "LPM(PS[<2,4>]) = {{1},{4,5},{4,5},{3},{2}}",
            "LPM(PS[<2,4>]) = {{1},{3,4,5},{3,4,5},{3,4},{2}}",
            "PS[<2,4>] = {{1},{3,4,5},{3,4,5},{3,4,5},{2}}",
            "PS[<3,4>] = {{1},{2,4,5},{2,4,5},{2,4,5},{3}}",
            "PS[<4,4>] = {{1},{2,3,5},{2,3,5},{2,3,5},{4}}",
            "PS[<5,4>] = {{1},{2,3,4},{2,3,4},{2,3,4},{5}}",
            "PS[<1,5>] = {{1},{2,3,4,5},{2,3,4,5},{2,3,4,5},{2,3,4,5},{1}}",
            "FHC select <2,4>: PStemp = {{1},{3,4,5},{3,4,5},{3,4,5},{2}}",
            "FHC select <3,3>: PStemp = {{1},{4,5},{4,5},{3}}",
            "FHC select <4,2>: PStemp = {{1},{5},{4}}",
            "FHC select <5,1>: PStemp = {{1},{5}}",
            "verdict hamiltonian",
            "cycle[asc] 1-5-4-3-2-1",
            "cycle[desc] 1-2-3-4-5-1",
            "max singleton iterations = 0",
            "oracle cycles = 24",
        }}},
      {"ex5e",
       {"U 5 8\n1 2\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n3 4\n",
        {
            "PS[<1,0>] = {{1}}",
            "PS[<2,1>] = {{1},{2}}",
            "PS[<3,1>] = {{1},{3}}",
            "PS[<4,1>] = {{1},{4}}",
            "PS[<5,1>] = {{1},{5}}",
            "PS[<2,2>] = {{1},{3,4,5},{2}}",
            "PS[<3,2>] = {{1},{2,4},{3}}",
            "PS[<4,2>] = {{1},{2,3},{4}}",
            "PS[<5,2>] = {{1},{2},{5}}",
            "PS[<2,3>] = {{1},{3,4},{3,4},{2}}",
            "PS[<3,3>] = {{1},{2,4,5},{2,4},{3}}",
            "PS[<4,3>] = {{1},{2,3,5},{2,3},{4}}",
            "PS[<5,3>] = {{1},{3,4},{2},{5}}",
            "PS[<2,4>] = {{2}}",
            "PS[<3,4>] = {{1},{5},{2},{4},{3}}",
            "PS[<4,4>] = {{1},{5},{2},{3},{4}}",
            "PS[<5,4>] = {{1},{3,4},{3,4},{2},{5}}",
            "PS[<1,5>] = {{1},{3,4,5},{2,3,4},{2,3,4},{3,4,5},{1}}",
            "verdict hamiltonian",
            "cycle[asc] 1-5-2-4-3-1",
            "cycle[desc] 1-3-4-2-5-1",
            "oracle cycles = 4",
        }}},
  };
  return table;
}

const Golden& lookup(std::string_view id) {
  const auto& table = goldens();
  const auto it = table.find(id);
  if (it == table.end()) throw std::invalid_argument("unknown example id '" + std::string(id) + "'");
  return it->second;
}

std::vector<std::string> replay_cm_pair(const Graph& g) {
  std::vector<std::string> out;
  const SolveOutcome solved = solve_cycle(g);
  for (VertexId v : {5, 7}) {
    const HologramVertex parent{v, 4};
    const PathSet& ps = solved.table.at(parent);
    out.push_back("PS[" + parent.to_string() + "] = " + ps.to_string());
    const CmResult result = cm(ps, 6, 5, g, solved.table, true);
    for (const std::string& e : result.trace.events) out.push_back("  | " + e);
    out.push_back("CM(PS[" + parent.to_string() + "], <6,5>) = " + result.path_set.to_string());
    out.push_back("singleton passes = " + std::to_string(result.trace.singleton_loop_iterations));
  }
  return out;
}

std::vector<std::string> replay_pipeline(std::string_view id, const Graph& g) {
  SolveOptions options;
  options.record_trace = true;
  SolveOutcome asc = solve_cycle(g, 1, options);
  std::vector<std::string> out = std::move(asc.trace);
  out.push_back("verdict " + to_string(asc.verdict));
  if (asc.cycle) out.push_back("cycle[asc] " + dashed(*asc.cycle));
  options.record_trace = false;
  options.tie_break = TieBreak::kDescending;
  const SolveOutcome desc = solve_cycle(g, 1, options);
  if (desc.cycle) out.push_back("cycle[desc] " + dashed(*desc.cycle));
  if (id == "ex2") {
    const PathOutcome path = solve_path(g);
    if (path.traceable) out.push_back("path " + dashed(path.path));
  }
  if (id == "ex4") {
    out.push_back("max singleton iterations = " + std::to_string(asc.stats.max_singleton_iterations));
  }
  out.push_back("oracle cycles = " + std::to_string(oracle_count_cycles(g, 1)));
  return out;
}

std::string key_of(const std::string& line) {
  const auto eq = line.find(" = ");
  return eq == std::string::npos ? line : line.substr(0, eq);
}

}  // namespace

std::optional<std::string> first_divergence(const std::vector<std::string>& expected,
                                            const std::vector<std::string>& actual,
                                            std::size_t* matched) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto it = std::find(actual.begin() + static_cast<std::ptrdiff_t>(pos), actual.end(),
                              expected[i]);
    if (it != actual.end()) {
      pos = static_cast<std::size_t>(it - actual.begin()) + 1;
      continue;
    }
    if (matched) *matched = i;
    std::string report = "expected line " + std::to_string(i + 1) + ": " + expected[i];
    const std::string key = key_of(expected[i]);
    for (std::size_t j = pos; j < actual.size(); ++j) {
      if (key_of(actual[j]) == key) {
        report += "\n  actual line " + std::to_string(j + 1) + ": " + actual[j];
        return report;
      }
    }
    report += "\n  no corresponding line after transcript line " + std::to_string(pos);
    return report;
  }
  if (matched) *matched = expected.size();
  return std::nullopt;
}

std::vector<std::string> golden_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, golden] : goldens()) ids.push_back(id);
  return ids;
}

std::string golden_graph_text(std::string_view id) { return lookup(id).graph; }

GoldenResult golden_trace(std::string_view id) {
  const Golden& golden = lookup(id);
  const Graph g = parse_edge_list(golden.graph);
  GoldenResult result;
  result.id = std::string(id);
  result.expected = golden.expected.size();
  result.transcript = id == "ex3-cm" ? replay_cm_pair(g) : replay_pipeline(id, g);
  const auto divergence = first_divergence(golden.expected, result.transcript, &result.checked);
  result.pass = !divergence;
  if (divergence) result.divergence = *divergence;
  return result;
}

}  // namespace hcp
