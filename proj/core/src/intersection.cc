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

#include "exactbasis/intersection.h"

#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "exactbasis/matroid_spec.h"

namespace exactbasis {
namespace {

constexpr int kUnseen = -2;
constexpr int kRoot = -1;

class Augmenter {
 public:
  Augmenter(const Matroid& m1, const Matroid& m2)
      : m1_(m1), m2_(m2), n_(m1.ground_size()), current_(n_) {}

  void GreedyStart() {
    for (int e = 0; e < n_; ++e) {
      current_.Insert(e);
      if (!m1_.IsIndependent(current_) || !m2_.IsIndependent(current_)) {
        current_.Erase(e);
      }
    }
  }

  // One BFS; augments and returns true if a path exists. Otherwise leaves
  // the reachable set in `reached_`.
  bool Augment() {
    parent_.assign(n_, kUnseen);
    std::vector<int> queue;
    std::vector<int8_t> sink_known(n_, -1);
    auto is_sink = [&](int y) {
      if (sink_known[y] < 0) {
        current_.Insert(y);
        sink_known[y] = m2_.IsIndependent(current_) ? 1 : 0;
        current_.Erase(y);
      }
      return sink_known[y] == 1;
    };
    int found = -1;
    for (int y = 0; y < n_ && found < 0; ++y) {
      if (current_.Contains(y)) continue;
      current_.Insert(y);
      const bool source = m1_.IsIndependent(current_);
      current_.Erase(y);
      if (!source) continue;
      parent_[y] = kRoot;
      queue.push_back(y);
      if (is_sink(y)) found = y;
    }
    for (size_t head = 0; head < queue.size() && found < 0; ++head) {
      const int u = queue[head];
      if (current_.Contains(u)) {
        // u in I: arcs u -> y with I - u + y in I1.
        current_.Erase(u);
        for (int y = 0; y < n_; ++y) {
          if (y == u || current_.Contains(y) || parent_[y] != kUnseen) continue;
          current_.Insert(y);
          const bool arc = m1_.IsIndependent(current_);
          current_.Erase(y);
          if (!arc) continue;
          parent_[y] = u;
          queue.push_back(y);
          current_.Insert(u);
          const bool sink = is_sink(y);
          current_.Erase(u);
          if (sink) {
            found = y;
            break;
          }
        }
        current_.Insert(u);
      } else {
        // u not in I: arcs u -> x with I - x + u in I2.
        current_.Insert(u);
        for (int x = 0; x < n_; ++x) {
          if (x == u || !current_.Contains(x) || parent_[x] != kUnseen) continue;
          current_.Erase(x);
          const bool arc = m2_.IsIndependent(current_);
          current_.Insert(x);
          if (!arc) continue;
          parent_[x] = u;
          queue.push_back(x);
        }
        current_.Erase(u);
      }
    }
    if (found < 0) {
      reached_ = SubsetMask(n_);
      for (int v : queue) reached_.Insert(v);
      return false;
    }
    for (int v = found; v != kRoot; v = parent_[v]) {
      current_.Set(v, !current_.Contains(v));
    }
    return true;
  }

  const SubsetMask& current() const { return current_; }
  const SubsetMask& reached() const { return reached_; }

 private:
  const Matroid& m1_;
  const Matroid& m2_;
  int n_;
  SubsetMask current_;
  SubsetMask reached_;
  std::vector<int> parent_;
};

}  // namespace

absl::StatusOr<IntersectionCertificate> MaxCommonIndependent(
    const Matroid& m1, const Matroid& m2, bool certify) {
  if (m1.ground_size() != m2.ground_size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("ground sizes differ: ", m1.ground_size(), " vs ",
                     m2.ground_size()));
  }
  const int n = m1.ground_size();
  Augmenter aug(m1, m2);
  aug.GreedyStart();
  IntersectionCertificate out;
  while (aug.Augment()) ++out.augmentations;
  out.common_set = aug.current();
  if (!m1.IsIndependent(out.common_set) || !m2.IsIndependent(out.common_set)) {
    return absl::InternalError("augmentation produced a dependent set");
  }
  if (certify && n <= kMaxCertifiedGroundSize) {
    SubsetMask u = aug.reached().Complement();
    if (Rank(m1, u) + Rank(m2, aug.reached()) != out.common_set.Count()) {
      return absl::InternalError("min-max witness equation fails");
    }
    out.partition_witness = std::move(u);
  }
  return out;
}

absl::StatusOr<Matroid> CountMatroid(const WeightMatrix& weights,
                                     const CountVector& counts) {
  const auto& classes = weights.classes();
  if (counts.size() != classes.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "count vector has ", counts.size(), " entries for ", classes.size(),
        " weight classes"));
  }
  std::vector<std::vector<ElementId>> blocks;
  for (const auto& c : classes) blocks.push_back(c.elements);
  return Compile(Partition(std::move(blocks), counts));
}

absl::StatusOr<std::optional<SubsetMask>> CommonBasisWithCounts(
    const Matroid& matroid, const CountVector& counts,
    const WeightMatrix& weights) {
  if (weights.n() != matroid.ground_size()) {
    return absl::InvalidArgumentError("weight matrix and matroid sizes differ");
  }
  const auto& classes = weights.classes();
  if (counts.size() != classes.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "count vector has ", counts.size(), " entries for ", classes.size(),
        " weight classes"));
  }
  int total = 0;
  for (size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] < 0 ||
        counts[c] > static_cast<int>(classes[c].elements.size())) {
      return absl::InvalidArgumentError(absl::StrCat(
          "count ", counts[c], " for class ", c, " outside [0, ",
          classes[c].elements.size(), "]"));
    }
    total += counts[c];
  }
  const int r = matroid.Rank();
  if (total != r) {
    return absl::InvalidArgumentError(
        absl::StrCat("counts sum to ", total, ", rank is ", r));
  }
  absl::StatusOr<Matroid> mp = CountMatroid(weights, counts);
  if (!mp.ok()) return mp.status();
  absl::StatusOr<IntersectionCertificate> cert =
      MaxCommonIndependent(matroid, *mp);
  if (!cert.ok()) return cert.status();
  if (cert->common_set.Count() != r) return std::nullopt;
  return cert->common_set;
}

}  // namespace exactbasis
