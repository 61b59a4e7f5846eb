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

// Matroids given by independence oracles.
//
// A `Matroid` is a cheap, copyable handle around an immutable oracle. Copies
// share the oracle and the oracle-call counter; `WithFreshCounter()` gives a
// handle with a private counter, which is how per-task call statistics are
// kept deterministic when work is sharded across threads. The counter uses
// relaxed atomics, so totals read while other threads are still calling are
// approximate.

#ifndef EXACTBASIS_MATROID_H_
#define EXACTBASIS_MATROID_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "exactbasis/subset_mask.h"

namespace exactbasis {

class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual int ground_size() const = 0;
  // Must be a pure, deterministic, thread-safe predicate.
  virtual bool IsIndependent(const SubsetMask& s) const = 0;
};

class Matroid;

// Separation hook for the rank inequalities x(S) <= rank(S). Implementations
// return a subset S with x(S) > rank(S), or nullopt when x satisfies every
// rank inequality.
class RankCutMinimizer {
 public:
  virtual ~RankCutMinimizer() = default;
  virtual absl::StatusOr<std::optional<SubsetMask>> FindViolatedCut(
      const Matroid& matroid, absl::Span<const mpq_class> x) const = 0;
};

class Matroid {
 public:
  explicit Matroid(std::shared_ptr<const IndependenceOracle> oracle);

  int ground_size() const { return ground_size_; }
  bool IsIndependent(const SubsetMask& s) const {
    calls_->fetch_add(1, std::memory_order_relaxed);
    return oracle_->IsIndependent(s);
  }
  // Rank of the whole ground set, computed on first use.
  int Rank() const;

  int64_t oracle_calls() const {
    return calls_->load(std::memory_order_relaxed);
  }
  Matroid WithFreshCounter() const;

  const std::shared_ptr<const IndependenceOracle>& oracle() const {
    return oracle_;
  }
  const RankCutMinimizer* minimizer() const { return minimizer_.get(); }
  Matroid WithMinimizer(std::shared_ptr<const RankCutMinimizer> m) const;

 private:
  std::shared_ptr<const IndependenceOracle> oracle_;
  int ground_size_;
  std::shared_ptr<std::atomic<int64_t>> calls_;
  std::shared_ptr<std::atomic<int>> rank_;
  std::shared_ptr<const RankCutMinimizer> minimizer_;
};

// A matroid over an explicit predicate. Intended for tests and library users;
// the predicate is trusted to be a matroid only if CheckAxioms says so.
Matroid FromPredicate(int ground_size,
                      std::function<bool(const SubsetMask&)> predicate);

// Minor re-indexed onto a dense ground set. `parent_ids[i]` is the element of
// the parent matroid that element i stands for.
struct Minor {
  Matroid matroid;
  std::vector<ElementId> parent_ids;
};

Minor Restrict(const Matroid& matroid, const SubsetMask& keep);
// Fails unless `contract` is independent.
absl::StatusOr<Minor> Contract(const Matroid& matroid,
                               const SubsetMask& contract);
// Independent sets of size at most k.
Matroid Truncate(const Matroid& matroid, int k);
// Summands occupy consecutive index ranges in order.
Matroid DirectSum(absl::Span<const Matroid> parts);

// Greedy insertion over `s` in ascending element order.
int Rank(const Matroid& matroid, const SubsetMask& s);
SubsetMask MaximalIndependentSubset(const Matroid& matroid,
                                    const SubsetMask& s);
SubsetMask GreedyBasis(const Matroid& matroid);
// Extends the independent set `start` greedily from `pool` (ascending order).
SubsetMask ExtendGreedily(const Matroid& matroid, SubsetMask start,
                          const SubsetMask& pool, int max_added = -1);

// Visits every basis in lexicographic order of its sorted element list.
// Stops early (and returns false) when `visit` returns false.
bool ForEachBasis(const Matroid& matroid,
                  const std::function<bool(const SubsetMask&)>& visit);

struct BasisEnumeration {
  std::vector<SubsetMask> bases;
  // More than `cap` bases exist; `bases` holds the first `cap`.
  bool overflow = false;
};
BasisEnumeration EnumerateBases(const Matroid& matroid, int64_t cap);

struct AxiomVerdict {
  bool ok = true;
  std::string violated;  // "M1", "M2" or "M3".
  // Counterexample: for M2, y is independent and x is a dependent subset;
  // for M3, |x| < |y| and no element of y \ x extends x.
  SubsetMask x;
  SubsetMask y;
};
// Exhaustive check of (M1)-(M3); requires ground_size <= 16.
absl::StatusOr<AxiomVerdict> CheckAxioms(const Matroid& matroid);

// Ranks of all 2^n subsets for small ground sets, indexed by bit pattern.
class RankTable {
 public:
  static constexpr int kMaxGroundSize = 24;
  static absl::StatusOr<RankTable> Build(const Matroid& matroid);

  int ground_size() const { return n_; }
  int rank(uint64_t bits) const { return ranks_[bits]; }
  bool independent(uint64_t bits) const {
    return ranks_[bits] == std::popcount(bits);
  }

 private:
  int n_ = 0;
  std::vector<uint8_t> ranks_;
};

}  // namespace exactbasis

#endif  // EXACTBASIS_MATROID_H_
