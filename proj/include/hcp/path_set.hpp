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

#ifndef HCP_PATH_SET_HPP_
#define HCP_PATH_SET_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcp/graph.hpp"
#include "hcp/vertex_set.hpp"

namespace hcp {

/// A broken operator precondition (mismatched path sets, missing table
/// entries, ...). Indicates a bug in the caller, not bad user input.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Per-level vertex unions over the longest basic paths ending at one
/// hologram vertex.
///
/// A valid path set covers the absolute levels base()..end_level(); the set
/// at level i is at(i), so two path sets with the same end level line up
/// level by level without any offset bookkeeping. The invalid variant is the
/// "no basic path through this parent" sentinel, rendered "{{}}".
///
/// Operators that work on a scratch copy (consistency maintenance, backward
/// search) may leave empty levels behind; has_empty_level() reports them.
class PathSet {
 public:
  /// The invalid sentinel.
  PathSet() = default;
  static PathSet invalid() { return {}; }

  /// {{u}} at level k.
  static PathSet single(VertexId u, Level k);

  /// Explicit construction; sets[0] sits at level `base`.
  PathSet(Level base, std::vector<VertexSet> sets, VertexId end_vertex);

  bool valid() const { return !sets_.empty(); }
  Level base() const { return base_; }
  Level end_level() const { return base_ + static_cast<Level>(sets_.size()) - 1; }
  VertexId end_vertex() const { return end_vertex_; }
  /// Number of levels; 0 for the sentinel.
  std::size_t length() const { return sets_.size(); }

  /// True when level i lies within base()..end_level().
  bool spans(Level i) const { return valid() && i >= base_ && i <= end_level(); }

  const VertexSet& at(Level i) const;
  VertexSet& at(Level i);

  bool has_empty_level() const;

  /// "{{a,b},{c},...}" with levels and members ascending.
  std::string to_string() const;

  friend bool operator==(const PathSet& a, const PathSet& b) = default;

 private:
  Level base_ = 0;
  VertexId end_vertex_ = 0;
  std::vector<VertexSet> sets_;
};

inline PathSet init_path_set(VertexId u, Level k) { return PathSet::single(u, k); }

/// Appends level end_level()+1 = {u}. The sentinel absorbs.
PathSet join(const PathSet& ps, VertexId u);

/// Longest-path merge: keep the longer operand, union equal-length operands
/// level by level. Throws ContractViolation if two valid operands disagree on
/// the end vertex or end level.
PathSet lpm(const PathSet& ps, const PathSet& pstemp);

/// N-(v) ∩ ps[i-1]; empty at the base level.
VertexSet left_action_field(const PathSet& ps, VertexId v, Level i, const Graph& g);

/// N+(v) ∩ ps[i+1]; empty at the end level.
VertexSet right_action_field(const PathSet& ps, VertexId v, Level i, const Graph& g);

struct PrefixIntersection {
  /// Levels pstemp.base()..i, possibly with empty sets.
  PathSet value;
  bool has_empty_level = false;
};

/// Level-wise intersection of pstemp and ps_v over levels i down to
/// pstemp.base(). Levels of ps_v below its own base count as empty.
PrefixIntersection prefix_intersect(const PathSet& pstemp, const PathSet& ps_v, Level i);

/// Same test as prefix_intersect(...).has_empty_level, stopping at the first
/// empty level without building the result.
bool prefix_intersection_has_empty(const PathSet& pstemp, const PathSet& ps_v, Level i);

inline std::size_t length(const PathSet& ps) { return ps.length(); }

}  // namespace hcp

#endif  // HCP_PATH_SET_HPP_
