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

#include "hcp/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace hcp {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) {
  for (VertexId v : ids) insert(v);
}

void VertexSet::insert(VertexId v) {
  if (v < 0) throw std::out_of_range("VertexSet: negative vertex id");
  const auto idx = static_cast<std::size_t>(v);
  if (idx / 64 >= words_.size()) words_.resize(idx / 64 + 1, 0);
  words_[idx / 64] |= std::uint64_t{1} << (idx % 64);
}

void VertexSet::erase(VertexId v) {
  if (!contains(v)) return;
  const auto idx = static_cast<std::size_t>(v);
  words_[idx / 64] &= ~(std::uint64_t{1} << (idx % 64));
  trim();
}

bool VertexSet::contains(VertexId v) const {
  if (v < 0) return false;
  const auto idx = static_cast<std::size_t>(v);
  if (idx / 64 >= words_.size()) return false;
  return (words_[idx / 64] >> (idx % 64)) & 1U;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const { return words_.empty(); }

VertexId VertexSet::front() const { return *begin(); }

VertexId VertexSet::back() const {
  if (words_.empty()) return 0;
  const std::uint64_t top = words_.back();
  return static_cast<VertexId>((words_.size() - 1) * 64 + 63 -
                               static_cast<std::size_t>(std::countl_zero(top)));
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t theirs = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~theirs) return false;
  }
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) { return a.words_ == b.words_; }

std::vector<VertexId> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (VertexId v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace hcp
