// Copyright 2026 The Burnlab Authors
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

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "burnlab/graph.hpp"

namespace burnlab {

// Fixed-universe bitset over vertex ids. Unlike boost::dynamic_bitset it
// offers fused and-popcount / and-not tests, which the search loops need
// without allocating temporaries.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool full() const { return count() == n_; }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  // |this \ other|
  std::size_t count_minus(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
    return c;
  }

  // this \ mask ⊆ other \ mask
  bool subset_outside(const VertexSet& other, const VertexSet& mask) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~mask.words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  // Smallest element not in this set, or universe() when full.
  Vertex first_missing() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (~words_[i] != 0) {
        auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_one(words_[i])));
        return v < n_ ? v : static_cast<Vertex>(n_);
      }
    }
    return static_cast<Vertex>(n_);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1) {
        f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      }
    }
  }

  template <class F>
  void for_each_missing(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (std::uint64_t w = ~words_[i]; w != 0; w &= w - 1) {
        auto v = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        if (v >= n_) return;
        f(v);
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace burnlab
