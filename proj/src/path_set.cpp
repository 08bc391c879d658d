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

#include "hcp/path_set.hpp"

#include <algorithm>
#include <utility>

namespace hcp {

PathSet PathSet::single(VertexId u, Level k) { return PathSet(k, {VertexSet{u}}, u); }

PathSet::PathSet(Level base, std::vector<VertexSet> sets, VertexId end_vertex)
    : base_(base), end_vertex_(end_vertex), sets_(std::move(sets)) {
  if (sets_.empty()) {
    base_ = 0;
    end_vertex_ = 0;
  }
}

const VertexSet& PathSet::at(Level i) const {
  if (!spans(i)) {
    throw ContractViolation("path set " + to_string() + " has no level " + std::to_string(i));
  }
  return sets_[static_cast<std::size_t>(i - base_)];
}

VertexSet& PathSet::at(Level i) {
  if (!spans(i)) {
    throw ContractViolation("path set " + to_string() + " has no level " + std::to_string(i));
  }
  return sets_[static_cast<std::size_t>(i - base_)];
}

bool PathSet::has_empty_level() const {
  return std::any_of(sets_.begin(), sets_.end(), [](const VertexSet& s) { return s.empty(); });
}

std::string PathSet::to_string() const {
  if (!valid()) return "{{}}";
  std::string out = "{";
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    if (i > 0) out += ',';
    out += sets_[i].to_string();
  }
  out += '}';
  return out;
}

PathSet join(const PathSet& ps, VertexId u) {
  if (!ps.valid()) return PathSet::invalid();
  std::vector<VertexSet> sets;
  sets.reserve(ps.length() + 1);
  for (Level i = ps.base(); i <= ps.end_level(); ++i) sets.push_back(ps.at(i));
  sets.push_back(VertexSet{u});
  return PathSet(ps.base(), std::move(sets), u);
}

PathSet lpm(const PathSet& ps, const PathSet& pstemp) {
  if (!pstemp.valid()) return ps;
  if (!ps.valid()) return pstemp;
  if (ps.end_level() != pstemp.end_level() || ps.end_vertex() != pstemp.end_vertex()) {
    throw ContractViolation("lpm on path sets of different vertices: " + ps.to_string() +
                            " vs " + pstemp.to_string());
  }
  if (pstemp.length() < ps.length()) return ps;
  if (pstemp.length() > ps.length()) return pstemp;
  PathSet merged = ps;
  for (Level i = ps.base(); i <= ps.end_level(); ++i) merged.at(i) |= pstemp.at(i);
  return merged;
}

VertexSet left_action_field(const PathSet& ps, VertexId v, Level i, const Graph& g) {
  if (!ps.spans(i) || i == ps.base()) return {};
  return g.in_neighbors(v) & ps.at(i - 1);
}

VertexSet right_action_field(const PathSet& ps, VertexId v, Level i, const Graph& g) {
  if (!ps.spans(i) || i == ps.end_level()) return {};
  return g.out_neighbors(v) & ps.at(i + 1);
}

PrefixIntersection prefix_intersect(const PathSet& pstemp, const PathSet& ps_v, Level i) {
  PrefixIntersection result;
  if (!pstemp.valid() || !pstemp.spans(i)) {
    result.has_empty_level = true;
    return result;
  }
  std::vector<VertexSet> sets;
  sets.reserve(static_cast<std::size_t>(i - pstemp.base() + 1));
  for (Level j = pstemp.base(); j <= i; ++j) {
    VertexSet level = ps_v.spans(j) ? (pstemp.at(j) & ps_v.at(j)) : VertexSet{};
    if (level.empty()) result.has_empty_level = true;
    sets.push_back(std::move(level));
  }
  result.value = PathSet(pstemp.base(), std::move(sets), ps_v.valid() ? ps_v.end_vertex() : 0);
  return result;
}

bool prefix_intersection_has_empty(const PathSet& pstemp, const PathSet& ps_v, Level i) {
  if (!pstemp.valid() || !pstemp.spans(i)) return true;
  for (Level j = i; j >= pstemp.base(); --j) {
    if (!ps_v.spans(j) || !pstemp.at(j).intersects(ps_v.at(j))) return true;
  }
  return false;
}

}  // namespace hcp
