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

#include "hcp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#ifdef HCP_HAVE_OPENMP
#include <omp.h>
#endif

namespace hcp {

std::string to_string(Verdict v) {
  return v == Verdict::kHamiltonian ? "hamiltonian" : "non_hamiltonian";
}

std::string to_string(TieBreak t) { return t == TieBreak::kAscending ? "asc" : "desc"; }

namespace {

struct VertexWork {
  PathSet ps;
  std::vector<std::string> lines;
  SolveStats stats;
};

std::string ps_name(HologramVertex v) { return "PS[" + v.to_string() + "]"; }

// Computes PS[<u,i>] from the frozen levels below i.
VertexWork process_vertex(const Hologram& h, const Graph& g, const PathSetTable& table,
                          HologramVertex target, const SolveOptions& options) {
  VertexWork work;
  work.ps = init_path_set(target.u, target.level);
  const bool sink = target == h.sink();
  for (VertexId v : h.parent_ids(target)) {
    const HologramVertex parent{v, target.level - 1};
    const PathSet& parent_ps = table.at(parent);
    PathSet candidate;
    if (sink) {
      // The sink closes the cycle; joining it is unconditional.
      candidate = join(parent_ps, target.u);
      if (options.record_trace) {
        work.lines.push_back("JOIN(" + ps_name(parent) + ", " + target.to_string() +
                             ") = " + candidate.to_string());
      }
    } else {
      CmResult result = cm(parent_ps, target.u, target.level, g, table,
                           options.record_trace && options.record_cm_events);
      ++work.stats.cm_calls;
      work.stats.total_singleton_iterations += result.trace.singleton_loop_iterations;
      work.stats.max_singleton_iterations =
          std::max(work.stats.max_singleton_iterations, result.trace.singleton_loop_iterations);
      candidate = std::move(result.path_set);
      if (options.record_trace) {
        for (const std::string& event : result.trace.events) work.lines.push_back("  | " + event);
        work.lines.push_back("CM(" + ps_name(parent) + ", " + target.to_string() +
                             ") = " + candidate.to_string());
      }
    }
    work.ps = lpm(work.ps, candidate);
    if (options.record_trace) {
      work.lines.push_back("LPM(" + ps_name(target) + ") = " + work.ps.to_string());
    }
  }
  if (options.record_trace) work.lines.push_back(ps_name(target) + " = " + work.ps.to_string());
  return work;
}

void merge_stats(SolveStats* into, const SolveStats& from) {
  if (!into) return;
  into->cm_calls += from.cm_calls;
  into->total_singleton_iterations += from.total_singleton_iterations;
  into->max_singleton_iterations =
      std::max(into->max_singleton_iterations, from.max_singleton_iterations);
}

void commit(PathSetTable& table, HologramVertex v, VertexWork&& work, SolveStats* stats,
            std::vector<std::string>* trace) {
  merge_stats(stats, work.stats);
  if (trace) trace->insert(trace->end(), work.lines.begin(), work.lines.end());
  table.set(v, std::move(work.ps));
}

std::vector<HologramVertex> level_vertices(const Hologram& h, Level i) {
  std::vector<HologramVertex> out;
  for (VertexId u = 1; u <= h.order(); ++u) {
    if (u != h.start()) out.push_back({u, i});
  }
  return out;
}

PathSetTable seed_table(const Hologram& h, const SolveOptions& options,
                        std::vector<std::string>* trace) {
  PathSetTable table(h);
  table.set(h.source(), init_path_set(h.start(), 0));
  if (options.record_trace && trace) {
    trace->push_back("level 0");
    trace->push_back(ps_name(h.source()) + " = " + table.at(h.source()).to_string());
  }
  return table;
}

void finish_sink(const Hologram& h, const Graph& g, PathSetTable& table,
                 const SolveOptions& options, SolveStats* stats,
                 std::vector<std::string>* trace) {
  if (options.record_trace && trace) trace->push_back("level " + std::to_string(h.levels()));
  commit(table, h.sink(), process_vertex(h, g, table, h.sink(), options), stats,
         options.record_trace ? trace : nullptr);
}

}  // namespace

PathSetTable fill_path_sets(const Hologram& h, const Graph& g, const SolveOptions& options,
                            SolveStats* stats, std::vector<std::string>* trace) {
  if (!options.record_trace) trace = nullptr;
  PathSetTable table = seed_table(h, options, trace);
  for (Level i = 1; i < h.levels(); ++i) {
    if (trace) trace->push_back("level " + std::to_string(i));
    for (HologramVertex v : level_vertices(h, i)) {
      commit(table, v, process_vertex(h, g, table, v, options), stats, trace);
    }
  }
  finish_sink(h, g, table, options, stats, trace);
  return table;
}

PathSetTable fill_path_sets_parallel(const Hologram& h, const Graph& g,
                                     const SolveOptions& options, SolveStats* stats,
                                     std::vector<std::string>* trace) {
  if (!options.record_trace) trace = nullptr;
  PathSetTable table = seed_table(h, options, trace);
  for (Level i = 1; i < h.levels(); ++i) {
    if (trace) trace->push_back("level " + std::to_string(i));
    const std::vector<HologramVertex> vertices = level_vertices(h, i);
    std::vector<VertexWork> results(vertices.size());
    const auto count = static_cast<long>(vertices.size());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < count; ++j) {
      const auto idx = static_cast<std::size_t>(j);
      results[idx] = process_vertex(h, g, table, vertices[idx], options);
    }
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      commit(table, vertices[j], std::move(results[j]), stats, trace);
    }
  }
  finish_sink(h, g, table, options, stats, trace);
  return table;
}

std::vector<VertexId> fhc(const PathSetTable& table, HologramVertex target, const Hologram& h,
                          const Graph& g, TieBreak tie_break, std::vector<std::string>* trace) {
  (void)g;
  const PathSet& target_ps = table.at(target);
  if (!target_ps.valid() || target_ps.base() != 0) return {};

  PathSet pstemp = target_ps;
  std::vector<VertexId> backward{target.u};
  VertexSet used{target.u, h.start()};
  HologramVertex current = target;
  if (trace) trace->push_back("FHC start " + target.to_string() + ": PStemp = " + pstemp.to_string());

  for (Level i = target.level - 1; i >= 1; --i) {
    const VertexSet candidates = (h.parent_ids(current) & pstemp.at(i)) - used;
    std::vector<VertexId> order = candidates.to_vector();
    if (tie_break == TieBreak::kDescending) std::reverse(order.begin(), order.end());

    bool chosen = false;
    for (VertexId v : order) {
      const PathSet& parent_ps = table.at({v, i});
      if (!parent_ps.valid() || parent_ps.base() != 0) continue;
      PrefixIntersection next = prefix_intersect(pstemp, parent_ps, i);
      if (next.has_empty_level) continue;
      pstemp = std::move(next.value);
      backward.push_back(v);
      used.insert(v);
      current = {v, i};
      chosen = true;
      if (trace) {
        trace->push_back("FHC select " + current.to_string() + ": PStemp = " + pstemp.to_string());
      }
      break;
    }
    if (!chosen) {
      if (trace) trace->push_back("FHC no legal parent of " + current.to_string());
      return {};
    }
  }
  backward.push_back(h.start());
  return {backward.rbegin(), backward.rend()};
}

SolveOutcome phg_bp(const Hologram& h, const Graph& g, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SolveOutcome outcome;
  std::vector<std::string>* trace = options.record_trace ? &outcome.trace : nullptr;
  outcome.table = options.parallel_levels
                      ? fill_path_sets_parallel(h, g, options, &outcome.stats, trace)
                      : fill_path_sets(h, g, options, &outcome.stats, trace);

  const PathSet& sink_ps = outcome.table.at(h.sink());
  if (sink_ps.length() == static_cast<std::size_t>(h.levels()) + 1) {
    std::vector<VertexId> cycle = fhc(outcome.table, h.sink(), h, g, options.tie_break, trace);
    if (!cycle.empty() && verify_cycle(g, cycle)) {
      outcome.verdict = Verdict::kHamiltonian;
      outcome.cycle = std::move(cycle);
    } else if (trace && !cycle.empty()) {
      trace->push_back("FHC result rejected by verification");
    }
  }
  outcome.stats.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return outcome;
}

bool verify_cycle(const Graph& g, std::span<const VertexId> seq) {
  const int n = g.order();
  if (n < 3 || seq.size() != static_cast<std::size_t>(n) + 1 || seq.front() != seq.back()) {
    return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const VertexId v = seq[i];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.has_arc(seq[i], seq[i + 1])) return false;
  }
  return true;
}

bool verify_path(const Graph& g, std::span<const VertexId> seq) {
  const int n = g.order();
  if (n < 1 || seq.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (VertexId v : seq) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.has_arc(seq[i], seq[i + 1])) return false;
  }
  return true;
}

SolveOutcome solve_cycle(const Graph& g, VertexId start, const SolveOptions& options) {
  if (start < 1 || start > g.order()) {
    throw std::invalid_argument("start vertex " + std::to_string(start) + " out of range");
  }
  if (!is_connected(g)) throw std::invalid_argument("solve_cycle requires a connected graph");
  if (g.order() < 3) return {};
  return phg_bp(build_hologram(g, start), g, options);
}

PathOutcome solve_path(const Graph& g, const SolveOptions& options) {
  if (!is_connected(g)) throw std::invalid_argument("solve_path requires a connected graph");
  const int n = g.order();
  if (n == 1) return {true, {1}, 1};

  SolveOptions fill_options = options;
  fill_options.record_trace = false;
  for (VertexId s = 1; s <= n; ++s) {
    const Hologram h = build_hologram(g, s);
    const PathSetTable table = fill_options.parallel_levels
                                   ? fill_path_sets_parallel(h, g, fill_options)
                                   : fill_path_sets(h, g, fill_options);
    for (VertexId w = 1; w <= n; ++w) {
      if (w == s) continue;
      const HologramVertex target{w, n - 1};
      const PathSet& ps = table.at(target);
      if (!ps.valid() || ps.base() != 0) continue;
      std::vector<VertexId> path = fhc(table, target, h, g, options.tie_break);
      if (!path.empty() && verify_path(g, path)) return {true, std::move(path), s};
    }
  }
  return {};
}

}  // namespace hcp
