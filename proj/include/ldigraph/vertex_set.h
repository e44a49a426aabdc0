// Copyright 2026 The ldigraph Authors
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

#ifndef LDIGRAPH_VERTEX_SET_H_
#define LDIGRAPH_VERTEX_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace ldigraph {

using Vertex = int;

// A subset of {0, ..., universe-1} stored as a fixed-width bit vector.
// Binary operations require both operands to share the same universe.
class VertexSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    Vertex operator*() const { return v_; }
    Iterator& operator++() {
      v_ = set_->NextAfter(v_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator it = *this;
      ++*this;
      return it;
    }
    bool operator==(const Iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet Full(int universe);
  static VertexSet FromVector(int universe, const std::vector<Vertex>& members);
  // Only the low `universe` bits of `mask` are used; universe must be <= 64.
  static VertexSet FromMask(int universe, uint64_t mask);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return (words_[v >> 6] >> (v & 63)) & 1;
  }
  void insert(Vertex v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  // Smallest member, or -1 when empty.
  Vertex front() const { return NextAfter(-1); }
  // Smallest member greater than v, or -1.
  Vertex NextAfter(Vertex v) const;

  Iterator begin() const { return Iterator(this, front()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<Vertex> ToVector() const;
  // Low 64 bits; meaningful as the whole set only when universe <= 64.
  uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  VertexSet Complement() const;
  bool IsSubsetOf(const VertexSet& other) const;
  bool Intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  VertexSet& operator^=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  bool operator==(const VertexSet& o) const = default;
  // Orders sets by their sorted member lists (lexicographic), so that maps
  // keyed by VertexSet iterate deterministically in a human-meaningful order.
  std::strong_ordering operator<=>(const VertexSet& o) const;

  // "{0,3,7}"
  std::string ToString() const;

 private:
  int universe_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace ldigraph

#endif  // LDIGRAPH_VERTEX_SET_H_
