// Copyright 2026 The vckern Authors
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

#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace vckern {

/// Dense subset of the vertex universe 0..universe()-1.
///
/// Membership is a packed bit vector; the cardinality is cached and kept in
/// sync by every mutating operation. Binary operations require both operands
/// to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->next(pos_ + 1);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    s.fill();
    return s;
  }

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(int v) const {
    assert(v >= 0 && v < universe_);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
  }

  /// Returns true when the set changed.
  bool insert(int v) {
    assert(v >= 0 && v < universe_);
    Word& w = words_[v / kWordBits];
    const Word bit = Word{1} << (v % kWordBits);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  bool erase(int v) {
    assert(v >= 0 && v < universe_);
    Word& w = words_[v / kWordBits];
    const Word bit = Word{1} << (v % kWordBits);
    if (!(w & bit)) return false;
    w &= ~bit;
    --count_;
    return true;
  }

  void clear() {
    for (Word& w : words_) w = 0;
    count_ = 0;
  }

  void fill() {
    for (Word& w : words_) w = ~Word{0};
    trim();
    count_ = universe_;
  }

  /// First member >= from, or universe() if there is none.
  int next(int from) const {
    if (from >= universe_) return universe_;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w != 0) {
        const int v = static_cast<int>(wi * kWordBits) + std::countr_zero(w);
        return v < universe_ ? v : universe_;
      }
      if (++wi == words_.size()) return universe_;
      w = words_[wi];
    }
  }

  Iterator begin() const { return Iterator(this, next(0)); }
  Iterator end() const { return Iterator(this, universe_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    recount();
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    recount();
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    recount();
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement within the universe.
  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    c.recount();
    return c;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  int intersection_size(const VertexSet& o) const {
    assert(o.universe_ == universe_);
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty()) {
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }
  }
  void recount() {
    count_ = 0;
    for (Word w : words_) count_ += std::popcount(w);
  }

  int universe_ = 0;
  int count_ = 0;
  std::vector<Word> words_;
};

}  // namespace vckern
