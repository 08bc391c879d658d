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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "hcp/oracle.hpp"

#ifdef HCP_HAVE_OPENMP
#include <omp.h>
#endif

namespace hcp {

using json = nlohmann::ordered_json;

namespace {

constexpr std::size_t kSweepChunk = 4096;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json verdict_json(Verdict v) { return to_string(v); }

}  // namespace

void SweepReport::add(const GraphVerdictRecord& r) {
  ++graph_count;
  if (r.invalid_cycle) ++invalid_cycle;
  const bool oracle_yes = r.oracle_verdict == Verdict::kHamiltonian;
  const bool decider_yes = r.decider_verdict == Verdict::kHamiltonian && !r.invalid_cycle;
  if (decider_yes) {
    ++agree_yes;
  } else if (oracle_yes) {
    ++false_negative;
    ++(r.sink_complete ? search_misses : gate_misses);
  } else {
    ++agree_no;
  }
  max_singleton_iterations = std::max(max_singleton_iterations, r.cm_singleton_iterations);
}

void SweepReport::merge(const SweepReport& other) {
  graph_count += other.graph_count;
  agree_yes += other.agree_yes;
  agree_no += other.agree_no;
  false_negative += other.false_negative;
  invalid_cycle += other.invalid_cycle;
  gate_misses += other.gate_misses;
  search_misses += other.search_misses;
  max_singleton_iterations = std::max(max_singleton_iterations, other.max_singleton_iterations);
  wall_time_seconds += other.wall_time_seconds;
}

GraphVerdictRecord evaluate_graph(const Graph& g, bool timing) {
  GraphVerdictRecord record;
  record.graph = encode_graph6(g);

  const auto t0 = std::chrono::steady_clock::now();
  const SolveOutcome outcome = solve_cycle(g, 1);
  if (timing) record.runtime_us = seconds_since(t0) * 1e6;

  record.decider_verdict = outcome.verdict;
  record.cm_singleton_iterations = outcome.stats.max_singleton_iterations;
  if (g.order() >= 3) {
    const PathSet& sink = outcome.table.at({1, g.order()});
    record.sink_complete = sink.length() == static_cast<std::size_t>(g.order()) + 1;
  }

  const auto oracle = oracle_hamiltonian_cycle(g, 1);
  record.oracle_verdict = oracle ? Verdict::kHamiltonian : Verdict::kNonHamiltonian;

  if (outcome.verdict == Verdict::kHamiltonian) {
    record.invalid_cycle = !outcome.cycle || !verify_cycle(g, *outcome.cycle);
    if (!record.invalid_cycle && !oracle) {
      throw std::logic_error("oracle missed the verified cycle of " + record.graph);
    }
    record.certificate = record.invalid_cycle ? oracle : outcome.cycle;
  } else {
    record.certificate = oracle;
  }
  record.agreement = !record.invalid_cycle && record.decider_verdict == record.oracle_verdict;
  return record;
}

std::vector<SweepReport> sweep(int n_from, int n_to, const SweepOptions& options,
                               const std::function<void(const GraphVerdictRecord&)>& sink) {
  if (n_from < 1 || n_to < n_from) throw std::invalid_argument("bad sweep range");
  std::vector<SweepReport> reports;
  for (int n = n_from; n <= n_to; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::uint64_t> masks = connected_edge_masks(n, options.allow_large);
    SweepReport report;
    report.n = n;
    std::vector<GraphVerdictRecord> chunk;
    for (std::size_t begin = 0; begin < masks.size(); begin += kSweepChunk) {
      const std::size_t end = std::min(masks.size(), begin + kSweepChunk);
      chunk.assign(end - begin, {});
      const auto count = static_cast<long>(end - begin);
      if (options.parallel) {
#ifdef HCP_HAVE_OPENMP
        const int threads = options.jobs > 0 ? options.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
        for (long j = 0; j < count; ++j) {
          const auto idx = static_cast<std::size_t>(j);
          chunk[idx] = evaluate_graph(graph_from_edge_mask(n, masks[begin + idx]), options.timing);
        }
      } else {
        for (long j = 0; j < count; ++j) {
          const auto idx = static_cast<std::size_t>(j);
          chunk[idx] = evaluate_graph(graph_from_edge_mask(n, masks[begin + idx]), options.timing);
        }
      }
      for (const GraphVerdictRecord& r : chunk) {
        report.add(r);
        if (sink) sink(r);
      }
    }
    report.wall_time_seconds = seconds_since(t0);
    reports.push_back(report);
  }
  return reports;
}

SweepReport combine(const std::vector<SweepReport>& reports) {
  SweepReport total;
  for (const SweepReport& r : reports) total.merge(r);
  return total;
}

std::string to_json_line(const GraphVerdictRecord& r) {
  json j;
  j["graph"] = r.graph;
  j["oracle_verdict"] = verdict_json(r.oracle_verdict);
  j["decider_verdict"] = verdict_json(r.decider_verdict);
  j["agreement"] = r.agreement;
  j["certificate"] = r.certificate ? json(*r.certificate) : json(nullptr);
  j["cm_singleton_iterations"] = r.cm_singleton_iterations;
  j["runtime_us"] = r.runtime_us ? json(*r.runtime_us) : json(nullptr);
  return j.dump();
}

namespace {

json report_json(const SweepReport& r, bool timing) {
  json j;
  if (r.n > 0) j["n"] = r.n;
  j["graph_count"] = r.graph_count;
  j["agree_yes"] = r.agree_yes;
  j["agree_no"] = r.agree_no;
  j["false_negative"] = r.false_negative;
  j["invalid_cycle"] = r.invalid_cycle;
  j["gate_misses"] = r.gate_misses;
  j["search_misses"] = r.search_misses;
  j["max_singleton_iterations"] = r.max_singleton_iterations;
  j["wall_time_s"] = timing ? json(r.wall_time_seconds) : json(nullptr);
  return j;
}

}  // namespace

std::string summary_json_line(const std::vector<SweepReport>& reports, bool timing) {
  json j;
  j["summary"] = true;
  j.update(report_json(combine(reports), timing));
  json per_n = json::array();
  for (const SweepReport& r : reports) per_n.push_back(report_json(r, timing));
  j["per_n"] = std::move(per_n);
  return j.dump();
}

SemanticsAudit audit_basic_path_sets(int n_from, int n_to) {
  SemanticsAudit audit;
  for (int n = std::max(n_from, 3); n <= n_to; ++n) {
    for (std::uint64_t mask : connected_edge_masks(n)) {
      const Graph g = graph_from_edge_mask(n, mask);
      const Hologram h = build_hologram(g, 1);
      const PathSetTable table = fill_path_sets(h, g);
      ++audit.graphs;
      for (const HologramVertex& v : h.vertices()) {
        ++audit.vertices_compared;
        const PathSet declarative = oracle_basic_path_sets(h, v);
        const PathSet& computed = table.at(v);
        if (declarative == computed) {
          ++audit.matches;
          continue;
        }
        ++audit.mismatches;
        if (!audit.first_mismatch) {
          audit.first_mismatch = encode_graph6(g) + " " + v.to_string() + ": basic paths " +
                                 declarative.to_string() + ", computed " + computed.to_string();
        }
      }
    }
  }
  return audit;
}

HologramEquivalence check_hologram_equivalence(int n_from, int n_to) {
  HologramEquivalence result;
  for (int n = std::max(n_from, 3); n <= n_to; ++n) {
    for (std::uint64_t mask : connected_edge_masks(n)) {
      const Graph g = graph_from_edge_mask(n, mask);
      ++result.graphs;
      const bool spanning = hologram_has_spanning_path(build_hologram(g, 1));
      const bool hamiltonian = oracle_hamiltonian_cycle(g, 1).has_value();
      if (spanning == hamiltonian) continue;
      ++result.mismatches;
      if (!result.first_mismatch) result.first_mismatch = encode_graph6(g);
    }
  }
  return result;
}

Graph complete_graph(int n) {
  Graph g(n, GraphKind::kUndirected);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

ProbeResult scaling_probe(const std::vector<int>& ns, double min_seconds) {
  ProbeResult result;
  for (int n : ns) {
    if (n < 3) throw std::invalid_argument("scaling probe needs n >= 3");
    const Graph g = complete_graph(n);
    ProbeRow row;
    row.n = n;
    int runs = 0;
    const auto t0 = std::chrono::steady_clock::now();
    do {
      const SolveOutcome outcome = solve_cycle(g, 1);
      row.max_singleton_iterations = outcome.stats.max_singleton_iterations;
      row.cm_calls = outcome.stats.cm_calls;
      row.hamiltonian = outcome.verdict == Verdict::kHamiltonian;
      ++runs;
    } while (seconds_since(t0) < min_seconds);
    row.runtime_seconds = seconds_since(t0) / runs;
    result.rows.push_back(row);
  }
  if (result.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const ProbeRow& r : result.rows) {
      const double x = std::log(static_cast<double>(r.n));
      const double y = std::log(r.runtime_seconds);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double m = static_cast<double>(result.rows.size());
    result.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return result;
}

std::string to_json_line(const ProbeRow& row) {
  json j;
  j["n"] = row.n;
  j["runtime_s"] = row.runtime_seconds;
  j["max_singleton_iterations"] = row.max_singleton_iterations;
  j["cm_calls"] = row.cm_calls;
  j["hamiltonian"] = row.hamiltonian;
  return j.dump();
}

}  // namespace hcp
