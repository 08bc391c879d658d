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

#include <stdexcept>
#include <string>

namespace hcp {

namespace {

class CycleSearch {
 public:
  CycleSearch(const Graph& g, VertexId start)
      : g_(g), n_(g.order()), start_(start), visited_(static_cast<std::size_t>(n_) + 1, 0) {}

  std::optional<std::vector<VertexId>> run() {
    for (VertexId v = 1; v <= n_; ++v) {
      if (g_.out_neighbors(v).empty() || g_.in_neighbors(v).empty()) return std::nullopt;
    }
    path_.push_back(start_);
    visited_[static_cast<std::size_t>(start_)] = 1;
    if (!extend()) return std::nullopt;
    path_.push_back(start_);
    return path_;
  }

 private:
  bool extend() {
    const VertexId last = path_.back();
    if (static_cast<int>(path_.size()) == n_) return g_.has_arc(last, start_);
    for (VertexId next : g_.out_neighbors(last)) {
      if (visited_[static_cast<std::size_t>(next)]) continue;
      visited_[static_cast<std::size_t>(next)] = 1;
      path_.push_back(next);
      if (!stranded() && extend()) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(next)] = 0;
    }
    return false;
  }

  // Some unvisited vertex can no longer be entered or left.
  bool stranded() const {
    const VertexId last = path_.back();
    for (VertexId v = 1; v <= n_; ++v) {
      if (visited_[static_cast<std::size_t>(v)]) continue;
      bool can_enter = false;
      for (VertexId w : g_.in_neighbors(v)) {
        if (w == last || !visited_[static_cast<std::size_t>(w)]) {
          can_enter = true;
          break;
        }
      }
      bool can_leave = false;
      for (VertexId w : g_.out_neighbors(v)) {
        if (w == start_ || !visited_[static_cast<std::size_t>(w)]) {
          can_leave = true;
          break;
        }
      }
      if (!can_enter || !can_leave) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  VertexId start_;
  std::vector<char> visited_;
  std::vector<VertexId> path_;
};

void check_start(const Graph& g, VertexId start) {
  if (start < 1 || start > g.order()) {
    throw std::invalid_argument("start vertex " + std::to_string(start) + " out of range");
  }
}

}  // namespace

std::optional<std::vector<VertexId>> oracle_hamiltonian_cycle(const Graph& g, VertexId start) {
  check_start(g, start);
  if (g.order() < 3) return std::nullopt;
  return CycleSearch(g, start).run();
}

std::uint64_t oracle_count_cycles(const Graph& g, VertexId start) {
  check_start(g, start);
  const int n = g.order();
  if (n < 3) return 0;
  if (n > 20) throw std::invalid_argument("oracle_count_cycles supports n <= 20");

  // Vertices other than start get bits 0..n-2.
  std::vector<VertexId> ids;
  for (VertexId v = 1; v <= n; ++v) {
    if (v != start) ids.push_back(v);
  }
  const int m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  std::vector<std::uint64_t> ways((full + 1) * static_cast<std::size_t>(m), 0);
  const auto cell = [&](std::size_t mask, int last) -> std::uint64_t& {
    return ways[mask * static_cast<std::size_t>(m) + static_cast<std::size_t>(last)];
  };
  for (int j = 0; j < m; ++j) {
    if (g.has_arc(start, ids[static_cast<std::size_t>(j)])) cell(std::size_t{1} << j, j) = 1;
  }
  for (std::size_t mask = 1; mask <= full; ++mask) {
    for (int j = 0; j < m; ++j) {
      const std::uint64_t here = cell(mask, j);
      if (here == 0) continue;
      const VertexId from = ids[static_cast<std::size_t>(j)];
      for (int t = 0; t < m; ++t) {
        if (mask & (std::size_t{1} << t)) continue;
        if (g.has_arc(from, ids[static_cast<std::size_t>(t)])) cell(mask | (std::size_t{1} << t), t) += here;
      }
    }
  }
  std::uint64_t total = 0;
  for (int j = 0; j < m; ++j) {
    if (g.has_arc(ids[static_cast<std::size_t>(j)], start)) total += cell(full, j);
  }
  return total;
}

std::uint64_t oracle_count_cycles_backtracking(const Graph& g, VertexId start) {
  check_start(g, start);
  const int n = g.order();
  if (n < 3) return 0;
  std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);
  visited[static_cast<std::size_t>(start)] = 1;
  std::uint64_t count = 0;
  const auto walk = [&](auto&& self, VertexId last, int depth) -> void {
    if (depth == n) {
      if (g.has_arc(last, start)) ++count;
      return;
    }
    for (VertexId next : g.out_neighbors(last)) {
      if (visited[static_cast<std::size_t>(next)]) continue;
      visited[static_cast<std::size_t>(next)] = 1;
      self(self, next, depth + 1);
      visited[static_cast<std::size_t>(next)] = 0;
    }
  };
  walk(walk, start, 1);
  return count;
}

PathSet oracle_basic_path_sets(const Hologram& h, HologramVertex target) {
  if (h.order() > kMaxBasicPathOrder) {
    throw std::invalid_argument("oracle_basic_path_sets is limited to n <= " +
                                std::to_string(kMaxBasicPathOrder));
  }
  if (!h.contains(target)) throw std::invalid_argument("no hologram vertex " + target.to_string());

  Level best = target.level;
  std::vector<VertexSet> unions(static_cast<std::size_t>(target.level) + 1);
  std::vector<VertexId> stack(static_cast<std::size_t>(target.level) + 1, 0);
  std::uint32_t used = target == h.sink() ? 0u : (1u << target.u);

  const auto record = [&](Level low) {
    if (low < best) {
      best = low;
      for (VertexSet& s : unions) s.clear();
    }
    if (low != best) return;
    for (Level i = low; i <= target.level; ++i) {
      unions[static_cast<std::size_t>(i)].insert(stack[static_cast<std::size_t>(i)]);
    }
  };
  const auto descend = [&](auto&& self, HologramVertex at) -> void {
    stack[static_cast<std::size_t>(at.level)] = at.u;
    record(at.level);
    if (at.level == 0) return;
    for (VertexId w : h.parent_ids(at)) {
      if (used & (1u << w)) continue;
      used |= 1u << w;
      self(self, HologramVertex{w, at.level - 1});
      used &= ~(1u << w);
    }
  };
  descend(descend, target);

  std::vector<VertexSet> sets(unions.begin() + best, unions.end());
  return PathSet(best, std::move(sets), target.u);
}

bool hologram_has_spanning_path(const Hologram& h) {
  const int n = h.order();
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  const auto walk = [&](auto&& self, HologramVertex at) -> bool {
    if (at == h.sink()) return true;
    for (VertexId w : h.child_ids(at)) {
      const HologramVertex next{w, at.level + 1};
      if (next == h.sink()) return true;
      if (used[static_cast<std::size_t>(w)]) continue;
      used[static_cast<std::size_t>(w)] = 1;
      const bool found = self(self, next);
      used[static_cast<std::size_t>(w)] = 0;
      if (found) return true;
    }
    return false;
  };
  return walk(walk, h.source());
}

}  // namespace hcp
