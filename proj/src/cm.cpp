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

#include "hcp/cm.hpp"

#include <sstream>

namespace hcp {

// ---------------------------------------------------------------------------
// PathSetTable

PathSetTable::PathSetTable(int n, VertexId start) : n_(n), start_(start) {
  if (n < 1 || start < 1 || start > n) throw std::invalid_argument("bad path set table layout");
  entries_.resize(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1) + 2);
}

std::optional<std::size_t> PathSetTable::slot(HologramVertex v) const {
  if (v.u < 1 || v.u > n_ || v.level < 0 || v.level > n_) return std::nullopt;
  if (v.level == 0 || v.level == n_) {
    if (v.u != start_) return std::nullopt;
    return v.level == 0 ? 0 : entries_.size() - 1;
  }
  if (v.u == start_) return std::nullopt;
  const auto rank = static_cast<std::size_t>(v.u < start_ ? v.u - 1 : v.u - 2);
  return 1 + static_cast<std::size_t>(v.level - 1) * static_cast<std::size_t>(n_ - 1) + rank;
}

bool PathSetTable::has(HologramVertex v) const {
  const auto s = slot(v);
  return s && entries_[*s].has_value();
}

const PathSet& PathSetTable::at(HologramVertex v) const {
  const auto s = slot(v);
  if (!s || !entries_[*s]) throw ContractViolation("path set table has no entry for " + v.to_string());
  return *entries_[*s];
}

void PathSetTable::set(HologramVertex v, PathSet ps) {
  const auto s = slot(v);
  if (!s) throw ContractViolation("path set table cannot hold " + v.to_string());
  entries_[*s] = std::move(ps);
}

std::vector<std::string> PathSetTable::render() const {
  std::vector<std::string> lines;
  const auto emit = [&](HologramVertex v) {
    if (has(v)) lines.push_back("PS[" + v.to_string() + "] = " + at(v).to_string());
  };
  emit({start_, 0});
  for (Level k = 1; k < n_; ++k) {
    for (VertexId u = 1; u <= n_; ++u) {
      if (u != start_) emit({u, k});
    }
  }
  emit({start_, n_});
  return lines;
}

// ---------------------------------------------------------------------------
// CmTrace

std::string CmTrace::to_text() const {
  std::ostringstream out;
  for (const std::string& line : events) out << line << '\n';
  return out.str();
}

namespace {

std::string at_level(VertexId v, Level i) { return std::to_string(v) + "@" + std::to_string(i); }

void note_cascade_delete(CmTrace* trace, const char* op, VertexId q, Level i) {
  if (!trace) return;
  trace->deletions.push_back({q, i});
  if (!trace->deleted_fragments.empty()) trace->deleted_fragments.back().push_back({q, i});
  if (trace->recording) trace->events.push_back(std::string(op) + ": delete " + at_level(q, i));
}

void note_replenished(CmTrace* trace, const char* op, const VertexSet& kept, Level i) {
  if (!trace) return;
  for (VertexId q : kept) {
    trace->replenished.push_back({q, i});
    if (trace->recording) trace->events.push_back(std::string(op) + ": replenish " + at_level(q, i));
  }
}

// Shared walk for both action-field operators. `step` is -1 (leftwards) or
// +1 (rightwards); `limit` is the last level the walk may reach.
void action_field_walk(PathSet& ps, VertexId w, Level j, const Graph& g, int step, Level limit,
                       const char* op, CmTrace* trace) {
  if (j == limit) return;
  const auto field = [&](VertexId x) -> const VertexSet& {
    return step < 0 ? g.in_neighbors(x) : g.out_neighbors(x);
  };

  Level i = j;
  VertexSet s1 = field(w) & ps.at(i + step);
  VertexSet s2;
  for (VertexId y : ps.at(i)) s2 |= field(y) & ps.at(i + step);

  while (i != limit) {
    VertexSet doomed = s1 - s2;
    note_replenished(trace, op, s1 & s2, i + step);
    if (doomed.empty()) return;
    i += step;
    VertexSet& level = ps.at(i);
    s1.clear();
    s2.clear();
    for (VertexId q : doomed) {
      level.erase(q);
      note_cascade_delete(trace, op, q, i);
      if (i != limit) s1 |= field(q) & ps.at(i + step);
    }
    if (i != limit) {
      for (VertexId y : level) s2 |= field(y) & ps.at(i + step);
    }
  }
}

}  // namespace

void lafdr(PathSet& pstemp, VertexId w, Level j, const Graph& g, CmTrace* trace) {
  action_field_walk(pstemp, w, j, g, -1, pstemp.base(), "lafdr", trace);
}

void rafdr(PathSet& pstemp, VertexId w, Level j, const Graph& g, CmTrace* trace) {
  action_field_walk(pstemp, w, j, g, +1, pstemp.end_level(), "rafdr", trace);
}

bool check(const PathSet& pstemp, const PathSetTable& table, Level k) {
  if (!pstemp.valid()) return false;
  for (Level i = k - 2; i >= pstemp.base(); --i) {
    const VertexSet& level = pstemp.at(i);
    if (level.size() <= 1) continue;
    for (VertexId w : level) {
      if (!prefix_intersection_has_empty(pstemp, table.at({w, i}), i)) return false;
    }
    return true;
  }
  return false;
}

namespace {

class CmRun {
 public:
  CmRun(const PathSet& parent, VertexId u, Level k, const Graph& g, const PathSetTable& table,
        bool record)
      : work_(parent), u_(u), k_(k), g_(g), table_(table), record_(record) {
    trace_.recording = record;
  }

  CmResult run() {
    const Level top = k_ - 1;
    const Level base = work_.base();

    // Stage 1: every earlier occurrence of u, highest level first.
    for (Level i = top - 1; i >= base; --i) {
      if (!work_.at(i).contains(u_)) continue;
      log("delete " + at_level(u_, i) + " (duplicate of " + std::to_string(u_) + ")");
      if (!remove(u_, i)) return fail();
    }

    // Stage 2: singleton sweep. A pass scans levels top-1 .. base; the first
    // singleton with duplicates elsewhere has them removed, and the sweep
    // restarts. Stops after a pass that removes nothing.
    for (int pass = 1;; ++pass) {
      bool deleted = false;
      for (Level j = top - 1; j >= base && !deleted; --j) {
        if (work_.at(j).size() != 1) continue;
        const VertexId z = work_.at(j).front();
        for (Level i = top - 1; i >= base; --i) {
          if (i == j || !work_.at(i).contains(z)) continue;
          if (!deleted) {
            deleted = true;
            ++trace_.singleton_loop_iterations;
            log("singleton pass " + std::to_string(pass) + ": {" + std::to_string(z) + "}@" +
                std::to_string(j));
          }
          log("delete " + at_level(z, i) + " (duplicate of singleton " + at_level(z, j) + ")");
          if (!remove(z, i)) return fail();
        }
      }
      if (!deleted) break;
    }

    if (work_.has_empty_level() || check(work_, table_, k_)) return fail();
    CmResult result{join(work_, u_), std::move(trace_)};
    if (record_) result.trace.events.push_back("result " + result.path_set.to_string());
    return result;
  }

 private:
  // Deletes z from level i and cascades; false when the remainder is dead.
  bool remove(VertexId z, Level i) {
    work_.at(i).erase(z);
    trace_.deletions.push_back({z, i});
    trace_.deleted_fragments.push_back({{z, i}});
    if (work_.at(i).empty()) {
      log("empty segment set -> " + work_.to_string());
      return false;
    }
    CmTrace* t = &trace_;
    lafdr(work_, z, i, g_, t);
    rafdr(work_, z, i, g_, t);
    if (work_.has_empty_level()) {
      log("empty segment set -> " + work_.to_string());
      return false;
    }
    if (check(work_, table_, k_)) {
      log("check: no legal path in " + work_.to_string());
      return false;
    }
    log("state " + work_.to_string());
    return true;
  }

  CmResult fail() {
    if (record_) trace_.events.push_back("result {{}}");
    return {PathSet::invalid(), std::move(trace_)};
  }

  void log(std::string line) {
    if (record_) trace_.events.push_back(std::move(line));
  }

  PathSet work_;
  VertexId u_;
  Level k_;
  const Graph& g_;
  const PathSetTable& table_;
  bool record_;
  CmTrace trace_;
};

}  // namespace

CmResult cm(const PathSet& parent, VertexId u, Level k, const Graph& g,
            const PathSetTable& table, bool record_events) {
  if (!parent.valid()) return {PathSet::invalid(), {}};
  if (parent.end_level() != k - 1) {
    throw ContractViolation("cm: parent path set " + parent.to_string() + " does not end at level " +
                            std::to_string(k - 1));
  }
  if (parent.end_vertex() == u) throw ContractViolation("cm: u equals the parent's end vertex");
  return CmRun(parent, u, k, g, table, record_events).run();
}

}  // namespace hcp
