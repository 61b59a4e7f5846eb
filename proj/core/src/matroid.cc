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

#include "exactbasis/matroid.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace exactbasis {
namespace {

class PredicateOracle : public IndependenceOracle {
 public:
  PredicateOracle(int n, std::function<bool(const SubsetMask&)> predicate)
      : n_(n), predicate_(std::move(predicate)) {}
  int ground_size() const override { return n_; }
  bool IsIndependent(const SubsetMask& s) const override {
    return predicate_(s);
  }

 private:
  int n_;
  std::function<bool(const SubsetMask&)> predicate_;
};

SubsetMask Lift(const SubsetMask& s, absl::Span<const ElementId> parent_ids,
                int parent_size) {
  SubsetMask out(parent_size);
  s.ForEach([&](ElementId e) { out.Insert(parent_ids[e]); });
  return out;
}

class RestrictOracle : public IndependenceOracle {
 public:
  RestrictOracle(std::shared_ptr<const IndependenceOracle> base,
                 std::vector<ElementId> parent_ids)
      : base_(std::move(base)), parent_ids_(std::move(parent_ids)) {}
  int ground_size() const override {
    return static_cast<int>(parent_ids_.size());
  }
  bool IsIndependent(const SubsetMask& s) const override {
    return base_->IsIndependent(Lift(s, parent_ids_, base_->ground_size()));
  }

 private:
  std::shared_ptr<const IndependenceOracle> base_;
  std::vector<ElementId> parent_ids_;
};

class ContractOracle : public IndependenceOracle {
 public:
  ContractOracle(std::shared_ptr<const IndependenceOracle> base,
                 std::vector<ElementId> parent_ids, SubsetMask contracted)
      : base_(std::move(base)),
        parent_ids_(std::move(parent_ids)),
        contracted_(std::move(contracted)) {}
  int ground_size() const override {
    return static_cast<int>(parent_ids_.size());
  }
  bool IsIndependent(const SubsetMask& s) const override {
    SubsetMask lifted = Lift(s, parent_ids_, base_->ground_size());
    lifted |= contracted_;
    return base_->IsIndependent(lifted);
  }

 private:
  std::shared_ptr<const IndependenceOracle> base_;
  std::vector<ElementId> parent_ids_;
  SubsetMask contracted_;
};

class TruncateOracle : public IndependenceOracle {
 public:
  TruncateOracle(std::shared_ptr<const IndependenceOracle> base, int k)
      : base_(std::move(base)), k_(k) {}
  int ground_size() const override { return base_->ground_size(); }
  bool IsIndependent(const SubsetMask& s) const override {
    return s.Count() <= k_ && base_->IsIndependent(s);
  }

 private:
  std::shared_ptr<const IndependenceOracle> base_;
  int k_;
};

class DirectSumOracle : public IndependenceOracle {
 public:
  explicit DirectSumOracle(
      std::vector<std::shared_ptr<const IndependenceOracle>> parts)
      : parts_(std::move(parts)) {
    offsets_.push_back(0);
    for (const auto& p : parts_) {
      offsets_.push_back(offsets_.back() + p->ground_size());
    }
  }
  int ground_size() const override { return offsets_.back(); }
  bool IsIndependent(const SubsetMask& s) const override {
    for (size_t i = 0; i < parts_.size(); ++i) {
      SubsetMask part(parts_[i]->ground_size());
      bool any = false;
      for (int e = offsets_[i]; e < offsets_[i + 1]; ++e) {
        if (s.Contains(e)) {
          part.Insert(e - offsets_[i]);
          any = true;
        }
      }
      if (any && !parts_[i]->IsIndependent(part)) return false;
    }
    return true;
  }

 private:
  std::vector<std::shared_ptr<const IndependenceOracle>> parts_;
  std::vector<int> offsets_;
};

}  // namespace

Matroid::Matroid(std::shared_ptr<const IndependenceOracle> oracle)
    : oracle_(std::move(oracle)),
      ground_size_(oracle_->ground_size()),
      calls_(std::make_shared<std::atomic<int64_t>>(0)),
      rank_(std::make_shared<std::atomic<int>>(-1)) {}

int Matroid::Rank() const {
  int r = rank_->load(std::memory_order_relaxed);
  if (r < 0) {
    r = exactbasis::Rank(*this, SubsetMask::Full(ground_size_));
    rank_->store(r, std::memory_order_relaxed);
  }
  return r;
}

Matroid Matroid::WithFreshCounter() const {
  Matroid copy = *this;
  copy.calls_ = std::make_shared<std::atomic<int64_t>>(0);
  return copy;
}

Matroid Matroid::WithMinimizer(std::shared_ptr<const RankCutMinimizer> m) const {
  Matroid copy = *this;
  copy.minimizer_ = std::move(m);
  return copy;
}

Matroid FromPredicate(int ground_size,
                      std::function<bool(const SubsetMask&)> predicate) {
  return Matroid(
      std::make_shared<PredicateOracle>(ground_size, std::move(predicate)));
}

Minor Restrict(const Matroid& matroid, const SubsetMask& keep) {
  std::vector<ElementId> ids = keep.Elements();
  Matroid m(std::make_shared<RestrictOracle>(matroid.oracle(), ids));
  return Minor{std::move(m), std::move(ids)};
}

absl::StatusOr<Minor> Contract(const Matroid& matroid,
                               const SubsetMask& contract) {
  if (!matroid.IsIndependent(contract)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "contraction set ", contract.ToString(), " is not independent"));
  }
  std::vector<ElementId> ids = contract.Complement().Elements();
  Matroid m(std::make_shared<ContractOracle>(matroid.oracle(), ids, contract));
  return Minor{std::move(m), std::move(ids)};
}

Matroid Truncate(const Matroid& matroid, int k) {
  return Matroid(std::make_shared<TruncateOracle>(matroid.oracle(), k));
}

Matroid DirectSum(absl::Span<const Matroid> parts) {
  std::vector<std::shared_ptr<const IndependenceOracle>> oracles;
  oracles.reserve(parts.size());
  for (const Matroid& p : parts) oracles.push_back(p.oracle());
  return Matroid(std::make_shared<DirectSumOracle>(std::move(oracles)));
}

SubsetMask ExtendGreedily(const Matroid& matroid, SubsetMask start,
                          const SubsetMask& pool, int max_added) {
  int added = 0;
  for (ElementId e : pool.Elements()) {
    if (max_added >= 0 && added >= max_added) break;
    if (start.Contains(e)) continue;
    start.Insert(e);
    if (matroid.IsIndependent(start)) {
      ++added;
    } else {
      start.Erase(e);
    }
  }
  return start;
}

SubsetMask MaximalIndependentSubset(const Matroid& matroid,
                                    const SubsetMask& s) {
  return ExtendGreedily(matroid, SubsetMask(matroid.ground_size()), s);
}

int Rank(const Matroid& matroid, const SubsetMask& s) {
  return MaximalIndependentSubset(matroid, s).Count();
}

SubsetMask GreedyBasis(const Matroid& matroid) {
  return MaximalIndependentSubset(matroid,
                                  SubsetMask::Full(matroid.ground_size()));
}

namespace {

// Depth-first search that includes elements before excluding them, which
// yields bases in lexicographic order. An exclusion branch is entered only
// when the current set still extends to a basis from the remaining elements.
class BasisSearch {
 public:
  BasisSearch(const Matroid& m,
              const std::function<bool(const SubsetMask&)>& visit)
      : m_(m), visit_(visit), n_(m.ground_size()), r_(m.Rank()) {}

  bool Run() {
    SubsetMask current(n_);
    return Visit(0, current, 0);
  }

 private:
  bool Visit(int i, SubsetMask& current, int size) {
    if (size == r_) return visit_(current);
    if (n_ - i < r_ - size) return true;
    current.Insert(i);
    if (m_.IsIndependent(current)) {
      if (!Visit(i + 1, current, size + 1)) return false;
    }
    current.Erase(i);
    SubsetMask rest(n_);
    for (int e = i + 1; e < n_; ++e) rest.Insert(e);
    if (ExtendGreedily(m_, current, rest, r_ - size).Count() == r_) {
      if (!Visit(i + 1, current, size)) return false;
    }
    return true;
  }

  const Matroid& m_;
  const std::function<bool(const SubsetMask&)>& visit_;
  int n_;
  int r_;
};

}  // namespace

bool ForEachBasis(const Matroid& matroid,
                  const std::function<bool(const SubsetMask&)>& visit) {
  return BasisSearch(matroid, visit).Run();
}

BasisEnumeration EnumerateBases(const Matroid& matroid, int64_t cap) {
  BasisEnumeration out;
  ForEachBasis(matroid, [&](const SubsetMask& b) {
    if (static_cast<int64_t>(out.bases.size()) >= cap) {
      out.overflow = true;
      return false;
    }
    out.bases.push_back(b);
    return true;
  });
  return out;
}

absl::StatusOr<AxiomVerdict> CheckAxioms(const Matroid& matroid) {
  const int n = matroid.ground_size();
  if (n > 16) {
    return absl::FailedPreconditionError(
        absl::StrCat("axiom check needs ground size <= 16, got ", n));
  }
  const uint32_t total = uint32_t{1} << n;
  std::vector<char> indep(total);
  for (uint32_t s = 0; s < total; ++s) {
    indep[s] = matroid.IsIndependent(SubsetMask::FromBits(n, s));
  }
  AxiomVerdict verdict;
  auto fail = [&](const char* axiom, uint32_t x, uint32_t y) {
    verdict.ok = false;
    verdict.violated = axiom;
    verdict.x = SubsetMask::FromBits(n, x);
    verdict.y = SubsetMask::FromBits(n, y);
    return verdict;
  };
  if (!indep[0]) return fail("M1", 0, 0);
  for (uint32_t s = 0; s < total; ++s) {
    if (!indep[s]) continue;
    for (int e = 0; e < n; ++e) {
      const uint32_t sub = s & ~(uint32_t{1} << e);
      if (sub != s && !indep[sub]) return fail("M2", sub, s);
    }
  }
  // Largest independent subset size of every set.
  std::vector<uint8_t> best(total);
  for (uint32_t s = 0; s < total; ++s) {
    if (indep[s]) {
      best[s] = static_cast<uint8_t>(std::popcount(s));
      continue;
    }
    uint8_t b = 0;
    for (int e = 0; e < n; ++e) {
      if (s >> e & 1) b = std::max(b, best[s & ~(uint32_t{1} << e)]);
    }
    best[s] = b;
  }
  // M3 fails at X iff the elements that do not extend X contain a larger
  // independent set.
  for (uint32_t x = 0; x < total; ++x) {
    if (!indep[x]) continue;
    uint32_t blocked = x;
    for (int e = 0; e < n; ++e) {
      const uint32_t bit = uint32_t{1} << e;
      if (!(x & bit) && !indep[x | bit]) blocked |= bit;
    }
    if (best[blocked] > std::popcount(x)) {
      uint32_t y = blocked;
      while (!indep[y]) {
        for (int e = 0; e < n; ++e) {
          const uint32_t smaller = y & ~(uint32_t{1} << e);
          if ((y >> e & 1) && best[smaller] == best[y]) {
            y = smaller;
            break;
          }
        }
      }
      return fail("M3", x, y);
    }
  }
  return verdict;
}

absl::StatusOr<RankTable> RankTable::Build(const Matroid& matroid) {
  const int n = matroid.ground_size();
  if (n > kMaxGroundSize) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "rank table needs ground size <= ", kMaxGroundSize, ", got ", n));
  }
  RankTable table;
  table.n_ = n;
  const uint64_t total = uint64_t{1} << n;
  table.ranks_.assign(total, 0);
  std::vector<uint8_t>& rk = table.ranks_;
  for (uint64_t s = 1; s < total; ++s) {
    const int top = 63 - std::countl_zero(s);
    const uint64_t prefix = s & ~(uint64_t{1} << top);
    const int size = std::popcount(s);
    if (rk[prefix] == size - 1) {
      rk[s] = matroid.IsIndependent(SubsetMask::FromBits(n, s)) ? size
                                                                : size - 1;
      continue;
    }
    uint8_t r = rk[prefix];
    for (uint64_t bits = prefix; bits != 0; bits &= bits - 1) {
      const uint64_t without = s & ~(bits & (~bits + 1));
      r = std::max(r, rk[without]);
    }
    rk[s] = r;
  }
  return table;
}

}  // namespace exactbasis
