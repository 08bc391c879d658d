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

#include "hcp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hcp {

Graph::Graph(int n, GraphKind kind)
    : n_(n),
      kind_(kind),
      out_(static_cast<std::size_t>(std::max(n, 0)) + 1),
      in_(static_cast<std::size_t>(std::max(n, 0)) + 1),
      degree_(static_cast<std::size_t>(std::max(n, 0)) + 1, 0) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

std::size_t Graph::index(VertexId v) const {
  if (v < 1 || v > n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range 1.." +
                            std::to_string(n_));
  }
  return static_cast<std::size_t>(v);
}

void Graph::add_edge(VertexId u, VertexId v, EdgeKind kind) {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw std::invalid_argument("vertex id out of range in edge " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (kind_ == GraphKind::kUndirected && kind != EdgeKind::kUndirected) {
    throw std::invalid_argument("directed edge in an undirected graph");
  }
  if (kind_ == GraphKind::kDirected && kind != EdgeKind::kDirected) {
    throw std::invalid_argument("undirected edge in a directed graph");
  }
  for (const Edge& e : edges_) {
    const bool same_pair = (e.u == u && e.v == v) || (e.u == v && e.v == u);
    if (!same_pair) continue;
    // Opposite arcs (u,v) and (v,u) are distinct; anything else on the pair
    // would be a parallel edge.
    const bool opposite_arcs = e.kind == EdgeKind::kDirected && kind == EdgeKind::kDirected &&
                               e.u == v && e.v == u;
    if (!opposite_arcs) {
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
  }
  edges_.push_back({u, v, kind});
  out_[index(u)].insert(v);
  in_[index(v)].insert(u);
  if (kind == EdgeKind::kUndirected) {
    out_[index(v)].insert(u);
    in_[index(u)].insert(v);
  }
  ++degree_[index(u)];
  ++degree_[index(v)];
}

bool Graph::has_arc(VertexId u, VertexId v) const { return out_neighbors(u).contains(v); }

int Graph::max_degree() const {
  int best = 0;
  for (VertexId v = 1; v <= n_; ++v) {
    const auto in = static_cast<int>(in_[index(v)].size());
    const auto out = static_cast<int>(out_[index(v)].size());
    best = std::max({best, in, out});
  }
  return best;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.kind_ != b.kind_ || a.edges_.size() != b.edges_.size()) return false;
  return a.out_ == b.out_ && a.in_ == b.in_;
}

VertexSet neighbors(const Graph& g, VertexId v, Direction direction) {
  return direction == Direction::kIn ? g.in_neighbors(v) : g.out_neighbors(v);
}

// ---------------------------------------------------------------------------
// Edge-list format

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

long parse_int(std::string_view word, int line, const char* what) {
  long value = 0;
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(word) + "'");
  }
  return value;
}

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    ++number;
    std::string_view line = text.substr(start, stop - start);
    const auto words = split_words(line);
    if (!words.empty() && words.front().front() != '#') lines.push_back({number, line});
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return lines;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header '<K> <n> <m>'");
  const auto header = split_words(lines.front().text);
  const int header_line = lines.front().number;
  if (header.size() != 3) throw ParseError(header_line, "header must be '<K> <n> <m>'");

  GraphKind kind;
  if (header[0] == "U") {
    kind = GraphKind::kUndirected;
  } else if (header[0] == "D") {
    kind = GraphKind::kDirected;
  } else if (header[0] == "M") {
    kind = GraphKind::kMixed;
  } else {
    throw ParseError(header_line, "graph kind must be U, D or M");
  }
  const long n = parse_int(header[1], header_line, "vertex count");
  const long m = parse_int(header[2], header_line, "edge count");
  if (n < 1) throw ParseError(header_line, "vertex count must be at least 1");
  if (m < 0) throw ParseError(header_line, "edge count must be non-negative");
  if (static_cast<long>(lines.size()) - 1 != m) {
    const int where = lines.size() > static_cast<std::size_t>(m) + 1
                          ? lines[static_cast<std::size_t>(m) + 1].number
                          : lines.back().number;
    throw ParseError(where, "expected " + std::to_string(m) + " edge lines, found " +
                                std::to_string(lines.size() - 1));
  }

  Graph g(static_cast<int>(n), kind);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto words = split_words(lines[i].text);
    const int number = lines[i].number;
    EdgeKind edge_kind =
        kind == GraphKind::kDirected ? EdgeKind::kDirected : EdgeKind::kUndirected;
    if (kind == GraphKind::kMixed) {
      if (words.size() != 3) throw ParseError(number, "mixed edge must be 'u v U|D'");
      if (words[2] == "U") {
        edge_kind = EdgeKind::kUndirected;
      } else if (words[2] == "D") {
        edge_kind = EdgeKind::kDirected;
      } else {
        throw ParseError(number, "edge tag must be U or D");
      }
    } else if (words.size() != 2) {
      throw ParseError(number, "edge must be 'u v'");
    }
    const long u = parse_int(words[0], number, "vertex");
    const long v = parse_int(words[1], number, "vertex");
    if (u < 1 || u > n || v < 1 || v > n) {
      throw ParseError(number, "vertex id out of range 1.." + std::to_string(n));
    }
    try {
      g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), edge_kind);
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  const char tag = g.kind() == GraphKind::kUndirected ? 'U'
                   : g.kind() == GraphKind::kDirected ? 'D'
                                                      : 'M';
  out << tag << ' ' << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.kind() == GraphKind::kMixed) out << ' ' << (e.kind == EdgeKind::kDirected ? 'D' : 'U');
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view strip(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\n' ||
                           text.front() == '\r' || text.front() == '\t')) {
    text.remove_prefix(1);
  }
  while (!text.empty() && (text.back() == ' ' || text.back() == '\n' || text.back() == '\r' ||
                           text.back() == '\t')) {
    text.remove_suffix(1);
  }
  return text;
}

int sextet(char c) {
  if (c < 63 || c > 126) throw ParseError(0, std::string("invalid graph6 character '") + c + "'");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = strip(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (text.empty()) throw ParseError(0, "empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError(0, "truncated graph6 size field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError(0, "truncated graph6 size field");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
  }
  if (n < 1) throw ParseError(0, "graph6 graphs must have at least one vertex");

  const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t needed = (pairs + 5) / 6;
  if (text.size() - pos != needed) {
    throw ParseError(0, "graph6 payload has " + std::to_string(text.size() - pos) +
                            " characters, expected " + std::to_string(needed));
  }

  Graph g(static_cast<int>(n));
  std::size_t bit = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i, ++bit) {
      const int value = sextet(text[pos + bit / 6]);
      if ((value >> (5 - bit % 6)) & 1) {
        g.add_edge(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1));
      }
    }
  }
  // Padding bits must be zero.
  for (; bit < needed * 6; ++bit) {
    if ((sextet(text[pos + bit / 6]) >> (5 - bit % 6)) & 1) {
      throw ParseError(0, "graph6 padding bits are not zero");
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  if (g.kind() != GraphKind::kUndirected) {
    throw std::invalid_argument("graph6 encodes undirected graphs only");
  }
  const auto n = static_cast<long>(g.order());
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + 63);
  } else if (n <= 258047) {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int acc = 0;
  int bits = 0;
  for (long j = 1; j < n; ++j) {
    for (long i = 0; i < j; ++i) {
      acc = (acc << 1) |
            (g.has_arc(static_cast<VertexId>(i + 1), static_cast<VertexId>(j + 1)) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + 63);
  return out;
}

Graph parse_graph_text(std::string_view text) {
  for (const Line& line : content_lines(text)) {
    const auto words = split_words(line.text);
    const bool header = words.size() == 3 && (words[0] == "U" || words[0] == "D" ||
                                              words[0] == "M");
    if (header) return parse_edge_list(text);
    return parse_graph6(line.text);
  }
  throw ParseError(1, "empty input");
}

// ---------------------------------------------------------------------------
// Connectivity and enumeration

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  std::vector<VertexId> stack{1};
  seen[1] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const VertexSet* adj : {&g.out_neighbors(v), &g.in_neighbors(v)}) {
      for (VertexId w : *adj) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
  }
  return reached == n;
}

namespace {

void check_enumeration_order(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("enumeration order must be at least 1");
  if (n > kMaxMaskOrder) {
    throw std::invalid_argument("enumeration supports at most " +
                                std::to_string(kMaxMaskOrder) + " vertices");
  }
  if (n > kMaxGuardedOrder && !allow_large) {
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the guarded range 1.." +
                                std::to_string(kMaxGuardedOrder) +
                                "; pass the override to enumerate anyway");
  }
}

std::uint64_t mask_limit(int n) {
  const int pairs = n * (n - 1) / 2;
  return pairs == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs);
}

}  // namespace

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

bool edge_mask_connected(int n, std::uint64_t mask) {
  std::uint32_t adj[kMaxMaskOrder] = {};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
    }
  }
  const std::uint32_t all = (n == 32) ? ~0U : ((1U << n) - 1);
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

std::vector<std::uint64_t> connected_edge_masks(int n, bool allow_large) {
  check_enumeration_order(n, allow_large);
  std::vector<std::uint64_t> masks;
  const std::uint64_t limit = mask_limit(n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (edge_mask_connected(n, mask)) masks.push_back(mask);
  }
  return masks;
}

ConnectedGraphStream::ConnectedGraphStream(int n, bool allow_large) : n_(n), limit_(0) {
  check_enumeration_order(n, allow_large);
  limit_ = mask_limit(n);
}

std::optional<Graph> ConnectedGraphStream::next() {
  while (next_mask_ < limit_) {
    const std::uint64_t mask = next_mask_++;
    if (edge_mask_connected(n_, mask)) {
      current_ = mask;
      return graph_from_edge_mask(n_, mask);
    }
  }
  return std::nullopt;
}

}  // namespace hcp
