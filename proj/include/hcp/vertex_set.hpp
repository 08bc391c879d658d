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

#ifndef HCP_VERTEX_SET_HPP_
#define HCP_VERTEX_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace hcp {

/// 1-based vertex label of an original graph.
using VertexId = int;

/// Segment level inside a path hologram.
using Level = int;

/// Set of vertex ids backed by a dynamic bitset. Iteration is always in
/// ascending id order, which keeps every rendered trace deterministic.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;
    const_iterator(const std::vector<std::uint64_t>* words, std::size_t pos)
        : words_(words), pos_(pos) {
      advance_to_set_bit();
    }

    VertexId operator*() const { return static_cast<VertexId>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      advance_to_set_bit();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void advance_to_set_bit();

    const std::vector<std::uint64_t>* words_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);

  void insert(VertexId v);
  void erase(VertexId v);
  void clear() { words_.clear(); }
  bool contains(VertexId v) const;

  std::size_t size() const;
  bool empty() const;
  /// Smallest member; only meaningful when !empty().
  VertexId front() const;
  /// Largest member; only meaningful when !empty().
  VertexId back() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b);

  const_iterator begin() const { return {&words_, 0}; }
  const_iterator end() const { return {&words_, words_.size() * 64}; }

  std::vector<VertexId> to_vector() const;
  /// Renders as "{a,b,c}".
  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

inline void VertexSet::const_iterator::advance_to_set_bit() {
  const std::size_t limit = words_->size() * 64;
  while (pos_ < limit) {
    const std::uint64_t word = (*words_)[pos_ / 64] >> (pos_ % 64);
    if (word != 0) {
      pos_ += static_cast<std::size_t>(std::countr_zero(word));
      return;
    }
    pos_ = (pos_ / 64 + 1) * 64;
  }
  pos_ = limit;
}

}  // namespace hcp

#endif  // HCP_VERTEX_SET_HPP_
