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

#include "exactbasis/subset_mask.h"

#include <algorithm>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace exactbasis {

SubsetMask::SubsetMask(int size) : size_(size), words_((size + 63) / 64, 0) {}

SubsetMask SubsetMask::FromElements(int size,
                                    absl::Span<const ElementId> elements) {
  SubsetMask mask(size);
  for (ElementId e : elements) mask.Insert(e);
  return mask;
}

SubsetMask SubsetMask::Full(int size) {
  SubsetMask mask(size);
  for (int w = 0; w < mask.num_words(); ++w) mask.words_[w] = ~uint64_t{0};
  if (size % 64 != 0) {
    mask.words_.back() = (uint64_t{1} << (size % 64)) - 1;
  }
  return mask;
}

SubsetMask SubsetMask::FromBits(int size, uint64_t bits) {
  SubsetMask mask(size);
  if (!mask.words_.empty()) mask.words_[0] = bits;
  return mask;
}

int SubsetMask::Count() const {
  int count = 0;
  for (uint64_t w : words_) count += std::popcount(w);
  return count;
}

bool SubsetMask::Empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

bool SubsetMask::IsSubsetOf(const SubsetMask& other) const {
  for (int i = 0; i < num_words(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool SubsetMask::Intersects(const SubsetMask& other) const {
  for (int i = 0; i < num_words(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<ElementId> SubsetMask::Elements() const {
  std::vector<ElementId> out;
  out.reserve(Count());
  ForEach([&](ElementId e) { out.push_back(e); });
  return out;
}

SubsetMask& SubsetMask::operator|=(const SubsetMask& other) {
  for (int i = 0; i < num_words(); ++i) words_[i] |= other.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator&=(const SubsetMask& other) {
  for (int i = 0; i < num_words(); ++i) words_[i] &= other.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator^=(const SubsetMask& other) {
  for (int i = 0; i < num_words(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

SubsetMask& SubsetMask::operator-=(const SubsetMask& other) {
  for (int i = 0; i < num_words(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

SubsetMask SubsetMask::Complement() const { return Full(size_) - *this; }

bool operator<(const SubsetMask& a, const SubsetMask& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  return std::lexicographical_compare(a.words_.begin(), a.words_.end(),
                                      b.words_.begin(), b.words_.end());
}

std::string SubsetMask::ToString() const {
  return absl::StrCat("{", absl::StrJoin(Elements(), ","), "}");
}

}  // namespace exactbasis
