// Copyright 2026 The ddcluster Authors
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

#ifndef DDCLUSTER_VERTEX_SET_HPP_
#define DDCLUSTER_VERTEX_SET_HPP_

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ddc {

using Vertex = std::int32_t;
using Weight = std::int64_t;

// Fixed-universe bitset over vertices [0, universe). Used both as the DP state
// ("vertices still available") and as a plain vertex collection.
//
// Ordering: a < b iff at the smallest vertex index where they differ, `a` does
// not contain the vertex. This is lexicographic order on the characteristic
// vector read from vertex 0 upward.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Vertex universe)
      : universe_(universe), words_(WordCount(universe), 0) {}

  static VertexSet Full(Vertex universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.TrimTail();
    return s;
  }

  Vertex universe() const { return universe_; }

  bool test(Vertex v) const {
    assert(v >= 0 && v < universe_);
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }
  void insert(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    assert(v >= 0 && v < universe_);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  // this \ other
  void subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  }
  VertexSet& operator|=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t intersection_count(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const int bit = std::countr_zero(w);
        fn(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff) {
        const std::uint64_t lowest = diff & (~diff + 1);
        return (a.words_[i] & lowest) == 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(universe_);
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static std::size_t WordCount(Vertex universe) {
    return (static_cast<std::size_t>(universe) + 63) / 64;
  }
  void TrimTail() {
    const int rem = universe_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  Vertex universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace ddc

#endif  // DDCLUSTER_VERTEX_SET_HPP_
