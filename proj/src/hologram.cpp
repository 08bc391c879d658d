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

#include "hcp/hologram.hpp"

#include <sstream>
#include <stdexcept>

namespace hcp {

std::string HologramVertex::to_string() const {
  return "<" + std::to_string(u) + "," + std::to_string(level) + ">";
}

bool Hologram::contains(HologramVertex v) const {
  if (v.u < 1 || v.u > n_ || v.level < 0 || v.level > n_) return false;
  if (v.level == 0 || v.level == n_) return v.u == start_;
  return v.u != start_;
}

std::size_t Hologram::index(HologramVertex v) const {
  if (!contains(v)) throw std::out_of_range("hologram has no vertex " + v.to_string());
  if (v.level == 0) return 0;
  if (v.level == n_) return parents_.size() - 1;
  const auto rank = static_cast<std::size_t>(v.u < start_ ? v.u - 1 : v.u - 2);
  return 1 + static_cast<std::size_t>(v.level - 1) * static_cast<std::size_t>(n_ - 1) + rank;
}

std::vector<HologramVertex> Hologram::parents(HologramVertex v) const {
  std::vector<HologramVertex> out;
  for (VertexId w : parent_ids(v)) out.push_back({w, v.level - 1});
  return out;
}

std::vector<HologramVertex> Hologram::children(HologramVertex v) const {
  std::vector<HologramVertex> out;
  for (VertexId w : child_ids(v)) out.push_back({w, v.level + 1});
  return out;
}

std::vector<HologramVertex> Hologram::vertices() const {
  std::vector<HologramVertex> out;
  out.reserve(vertex_count());
  out.push_back(source());
  for (Level k = 1; k < n_; ++k) {
    for (VertexId u = 1; u <= n_; ++u) {
      if (u != start_) out.push_back({u, k});
    }
  }
  out.push_back(sink());
  return out;
}

void Hologram::add_edge(HologramVertex from, HologramVertex to) {
  VertexSet& kids = children_[index(from)];
  if (kids.contains(to.u)) return;
  kids.insert(to.u);
  parents_[index(to)].insert(from.u);
  ++edge_count_;
}

Hologram build_hologram(const Graph& g, VertexId start, bool allow_disconnected) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("hologram needs a graph with at least one vertex");
  if (start < 1 || start > n) {
    throw std::invalid_argument("start vertex " + std::to_string(start) + " out of range 1.." +
                                std::to_string(n));
  }
  if (!allow_disconnected && !is_connected(g)) {
    throw std::invalid_argument("hologram construction requires a connected graph");
  }

  Hologram h;
  h.n_ = n;
  h.start_ = start;
  const std::size_t count = static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1) + 2;
  h.parents_.assign(count, VertexSet{});
  h.children_.assign(count, VertexSet{});

  const Level last = n;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v : g.out_neighbors(u)) {
      if (u == start) {
        h.add_edge({start, 0}, {v, 1});
      } else if (v == start) {
        h.add_edge({u, last - 1}, {start, last});
      } else {
        for (Level k = 1; k <= last - 2; ++k) h.add_edge({u, k}, {v, k + 1});
      }
    }
  }
  return h;
}

std::string hologram_to_dot(const Hologram& h) {
  std::ostringstream out;
  const auto name = [](HologramVertex v) {
    return "\"" + std::to_string(v.u) + "_" + std::to_string(v.level) + "\"";
  };
  out << "digraph hologram {\n";
  out << "  rankdir=LR;\n";
  out << "  // L=" << h.levels() << " start=" << h.start() << " |V_H|=" << h.vertex_count()
      << " |E_H|=" << h.edge_count() << "\n";
  const auto vertices = h.vertices();
  std::size_t i = 0;
  for (Level k = 0; k <= h.levels(); ++k) {
    out << "  { rank=same;";
    for (; i < vertices.size() && vertices[i].level == k; ++i) {
      out << ' ' << name(vertices[i]) << " [label=\"<" << vertices[i].u << ',' << k << ">\"];";
    }
    out << " }\n";
  }
  for (HologramVertex v : vertices) {
    for (HologramVertex w : h.children(v)) out << "  " << name(v) << " -> " << name(w) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hcp
