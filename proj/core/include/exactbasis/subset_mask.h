// Copyright 2026 The Authors.
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

#ifndef EXACTBASIS_SUBSET_MASK_H_
#define EXACTBASIS_SUBSET_MASK_H_

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/container/inlined_vector.h"
#include "absl/types/span.h"

namespace exactbasis {

// Elements of a ground set of size n are the dense indices 0..n-1.
using ElementId = int;

// Characteristic vector of a subset of a ground set {0, ..., size-1}.
class SubsetMask {
 public:
  SubsetMask() = default;
  explicit SubsetMask(int size);

  static SubsetMask FromElements(int size, absl::Span<const ElementId> elements);
  static SubsetMask Full(int size);
  // Bits of `bits` become elements 0..63 (size must be <= 64).
  static SubsetMask FromBits(int size, uint64_t bits);

  int size() const { return size_; }
  int num_words() const { return static_cast<int>(words_.size()); }
  uint64_t word(int i) const { return words_[i]; }
  // Low 64 bits; only meaningful when size() <= 64.
  uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

  bool Contains(ElementId e) const {
    return (words_[e >> 6] >> (e & 63)) & 1u;
  }
  void Insert(ElementId e) { words_[e >> 6] |= uint64_t{1} << (e & 63); }
  void Erase(ElementId e) { words_[e >> 6] &= ~(uint64_t{1} << (e & 63)); }
  void Set(ElementId e, bool value) {
    if (value) {
      Insert(e);
    } else {
      Erase(e);
    }
  }

  int Count() const;
  bool Empty() const;
  bool IsSubsetOf(const SubsetMask& other) const;
  bool Intersects(const SubsetMask& other) const;

  // Elements in ascending order.
  std::vector<ElementId> Elements() const;

  template <typename F>
  void ForEach(F&& f) const {
    for (int w = 0; w < num_words(); ++w) {
      uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<ElementId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  SubsetMask& operator|=(const SubsetMask& other);
  SubsetMask& operator&=(const SubsetMask& other);
  SubsetMask& operator^=(const SubsetMask& other);
  // Set difference.
  SubsetMask& operator-=(const SubsetMask& other);

  friend SubsetMask operator|(SubsetMask a, const SubsetMask& b) {
    return a |= b;
  }
  friend SubsetMask operator&(SubsetMask a, const SubsetMask& b) {
    return a &= b;
  }
  friend SubsetMask operator^(SubsetMask a, const SubsetMask& b) {
    return a ^= b;
  }
  friend SubsetMask operator-(SubsetMask a, const SubsetMask& b) {
    return a -= b;
  }
  SubsetMask Complement() const;

  friend bool operator==(const SubsetMask& a, const SubsetMask& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  // Arbitrary strict total order, for use as a map key.
  friend bool operator<(const SubsetMask& a, const SubsetMask& b);

  template <typename H>
  friend H AbslHashValue(H h, const SubsetMask& m) {
    return H::combine(std::move(h), m.size_, m.words_);
  }

  // "{0,2,5}".
  std::string ToString() const;

 private:
  int size_ = 0;
  absl::InlinedVector<uint64_t, 2> words_;
};

}  // namespace exactbasis

#endif  // EXACTBASIS_SUBSET_MASK_H_
