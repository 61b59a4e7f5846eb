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

#ifndef EXACTBASIS_WEIGHTS_H_
#define EXACTBASIS_WEIGHTS_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "exactbasis/subset_mask.h"

namespace exactbasis {

// Integer weight matrix W in Z^{m x n}; column e is the weight vector of
// element e. Elements with equal columns form a weight class.
class WeightMatrix {
 public:
  struct WeightClass {
    std::vector<int64_t> alpha;
    std::vector<ElementId> elements;
  };

  WeightMatrix() = default;
  // `rows` has m rows of length n each. m may be zero.
  static absl::StatusOr<WeightMatrix> FromRows(
      int n, const std::vector<std::vector<int64_t>>& rows);

  int m() const { return m_; }
  int n() const { return n_; }
  int64_t at(int row, ElementId e) const { return entries_[row * n_ + e]; }
  // max |entry|, 0 for an empty matrix.
  int64_t delta() const { return delta_; }
  std::vector<int64_t> Row(int row) const;
  std::vector<int64_t> Column(ElementId e) const;
  std::vector<std::vector<int64_t>> Rows() const;

  // W * chi(S).
  std::vector<int64_t> Apply(const SubsetMask& s) const;

  // Nonempty classes, sorted by lexicographic order of alpha.
  const std::vector<WeightClass>& classes() const { return classes_; }
  int class_of(ElementId e) const { return class_of_[e]; }

  friend bool operator==(const WeightMatrix& a, const WeightMatrix& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int64_t> entries_;
  int64_t delta_ = 0;
  std::vector<WeightClass> classes_;
  std::vector<int> class_of_;
};

// Prescribed number of elements per weight class, indexed like
// WeightMatrix::classes().
using CountVector = std::vector<int>;

}  // namespace exactbasis

#endif  // EXACTBASIS_WEIGHTS_H_
