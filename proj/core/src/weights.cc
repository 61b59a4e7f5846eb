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

#include "exactbasis/weights.h"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace exactbasis {

absl::StatusOr<WeightMatrix> WeightMatrix::FromRows(
    int n, const std::vector<std::vector<int64_t>>& rows) {
  if (n < 0) return absl::InvalidArgumentError("negative ground size");
  WeightMatrix w;
  w.m_ = static_cast<int>(rows.size());
  w.n_ = n;
  w.entries_.reserve(static_cast<size_t>(w.m_) * n);
  for (int i = 0; i < w.m_; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      return absl::InvalidArgumentError(
          absl::StrCat("weight row ", i, " has length ", rows[i].size(),
                       ", expected ", n));
    }
    for (int64_t v : rows[i]) {
      if (v == INT64_MIN) {
        return absl::InvalidArgumentError("weight out of range");
      }
      w.entries_.push_back(v);
      w.delta_ = std::max<int64_t>(w.delta_, std::llabs(v));
    }
  }
  std::map<std::vector<int64_t>, std::vector<ElementId>> by_alpha;
  for (ElementId e = 0; e < n; ++e) by_alpha[w.Column(e)].push_back(e);
  w.class_of_.assign(n, -1);
  for (auto& [alpha, elements] : by_alpha) {
    for (ElementId e : elements) {
      w.class_of_[e] = static_cast<int>(w.classes_.size());
    }
    w.classes_.push_back({alpha, std::move(elements)});
  }
  return w;
}

std::vector<int64_t> WeightMatrix::Row(int row) const {
  return std::vector<int64_t>(entries_.begin() + row * n_,
                              entries_.begin() + (row + 1) * n_);
}

std::vector<int64_t> WeightMatrix::Column(ElementId e) const {
  std::vector<int64_t> col(m_);
  for (int i = 0; i < m_; ++i) col[i] = at(i, e);
  return col;
}

std::vector<std::vector<int64_t>> WeightMatrix::Rows() const {
  std::vector<std::vector<int64_t>> rows;
  for (int i = 0; i < m_; ++i) rows.push_back(Row(i));
  return rows;
}

std::vector<int64_t> WeightMatrix::Apply(const SubsetMask& s) const {
  std::vector<int64_t> out(m_, 0);
  s.ForEach([&](ElementId e) {
    for (int i = 0; i < m_; ++i) out[i] += at(i, e);
  });
  return out;
}

}  // namespace exactbasis
