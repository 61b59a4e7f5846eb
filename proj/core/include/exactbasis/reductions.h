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

// Reductions of inequality, congruence and group constraints to exact
// equalities by padding with uniform summands, the aggregation of several
// equalities into one for linear matroids, and applications built on them.

#ifndef EXACTBASIS_REDUCTIONS_H_
#define EXACTBASIS_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "exactbasis/algebraic.h"
#include "exactbasis/exact_solver.h"
#include "exactbasis/matroid_spec.h"

namespace exactbasis {

struct ConstraintSpec {
  enum class Kind { kEquality, kLessEqual, kGreaterEqual, kCongruence };
  Kind kind = Kind::kEquality;
  std::vector<int64_t> weights;
  int64_t target = 0;
  int64_t modulus = 0;  // Congruence only.

  friend bool operator==(const ConstraintSpec&, const ConstraintSpec&) = default;
};

const char* KindName(ConstraintSpec::Kind kind);

ConstraintSpec Equality(std::vector<int64_t> weights, int64_t target);
ConstraintSpec LessEqual(std::vector<int64_t> weights, int64_t target);
ConstraintSpec GreaterEqual(std::vector<int64_t> weights, int64_t target);
ConstraintSpec Congruence(std::vector<int64_t> weights, int64_t modulus,
                          int64_t target);

// Whether the basis (on the original ground set) satisfies `c`.
bool Satisfies(const ConstraintSpec& c, const SubsetMask& basis);

struct ReducedInstance {
  MatroidSpec matroid_spec;
  WeightMatrix weights;
  std::vector<int64_t> target;
  // element_map[e] is the index of original element e in the reduced
  // ground set.
  std::vector<ElementId> element_map;
};

// Every constraint becomes one equality row. Inequalities append a uniform
// summand of rank K on 2P elements, P of weight 0 and P of weight 1 in that
// row, where K = max(n, D) and P = max(n * delta, K); D is the largest slack
// target - w(B) a basis can need. This is the rank-n, 2n*delta padding
// whenever D <= n. Congruences mod p append uniform(2n, n) with n elements of
// weight -p and n of weight 0. Padding elements weigh 0 in every other row.
absl::StatusOr<ReducedInstance> ReduceConstraints(
    const MatroidSpec& spec, absl::Span<const ConstraintSpec> constraints);

// `c` must be an inequality; `others` are reduced alongside it.
absl::StatusOr<ReducedInstance> ReduceInequality(
    const MatroidSpec& spec, const ConstraintSpec& c,
    absl::Span<const ConstraintSpec> others = {});

// `c` must be a congruence.
absl::StatusOr<ReducedInstance> ReduceCongruence(
    const MatroidSpec& spec, const ConstraintSpec& c,
    absl::Span<const ConstraintSpec> others = {});

// Group Z_{m1} x ... x Z_{ml}: one congruence per factor. labels[e] and
// `target` hold one residue per factor.
absl::StatusOr<std::vector<ConstraintSpec>> ReduceGroup(
    absl::Span<const int64_t> moduli,
    const std::vector<std::vector<int64_t>>& labels,
    absl::Span<const int64_t> target);

// Original elements of a reduced basis.
SubsetMask MapBack(const ReducedInstance& reduced, const SubsetMask& basis,
                   int original_size);

struct ConstrainedReport {
  SolveReport report;  // basis, when present, is on the original ground set
  ReducedInstance reduced;
};

// Reduce, solve with the exact solver, map back and re-check every
// constraint on the original matroid.
absl::StatusOr<ConstrainedReport> SolveConstrained(
    const MatroidSpec& spec, absl::Span<const ConstraintSpec> constraints,
    const SolveOptions& options = {});

struct Aggregation {
  std::vector<int64_t> lambda;
  std::vector<int64_t> w1;
  std::vector<int64_t> w2;
  std::vector<int64_t> w;  // w1 + (2n + 1) w2
  int64_t alpha = 0;
};

// With s = ||beta - W x_round||_inf, lambda_i = (2 (gamma delta + s) + 1)^i,
// w1 = 1 - 2 x_round, w2 = lambda^T W and
// alpha = (gamma - |x_round|) + (2n + 1) lambda^T beta. A basis B then has
// w(B) = alpha iff ||chi(B) - x_round||_1 = gamma and W(B) = beta. When
// s = 0 the base is the usual 2 gamma delta + 1.
absl::StatusOr<Aggregation> AggregateTo1d(const WeightMatrix& weights,
                                          absl::Span<const int64_t> beta,
                                          absl::Span<const int> x_round,
                                          int64_t gamma);

// Rounds half up.
std::vector<int> RoundPoint(absl::Span<const mpq_class> x);

// Prime of a finite-field linear part, if any. Such matrices are only
// meaningful over their own field, so the algebraic solvers use it in place
// of the requested prime.
std::optional<int64_t> NativePrime(const MatroidSpec& spec);

struct LinearSolveOptions {
  uint64_t seed = 0;
  int retries = 3;
  uint64_t prime = kMersenne61;
};

// LP vertex, rounding, then gamma = 0..n through AggregateTo1d and the
// algebraic one-dimensional solver. Matroids without an explicit
// representation get a capability error.
absl::StatusOr<SolveReport> SolveLinear(const MatroidSpec& spec,
                                        const WeightMatrix& weights,
                                        absl::Span<const int64_t> beta,
                                        const LinearSolveOptions& options = {});

// Applications.

struct FeedbackEdgeSetResult {
  bool feasible = false;
  SubsetMask removed;  // X = E \ F
};

// Minimum-size X with W(X) <= b componentwise and E \ X acyclic; W >= 0.
absl::StatusOr<FeedbackEdgeSetResult> FeedbackEdgeSet(
    const GraphicSpec& graph, const std::vector<std::vector<int64_t>>& weights,
    absl::Span<const int64_t> budget, const SolveOptions& options = {});

struct ClosestBaseResult {
  SubsetMask basis;
  int max_distance = 0;  // max_i |B \ B_i|
};

// A basis minimizing max_i |B xor B_i| (equivalently max_i |B \ B_i|); the
// lexicographically first such basis.
absl::StatusOr<ClosestBaseResult> ClosestBase(
    const MatroidSpec& spec, const std::vector<SubsetMask>& bases,
    const SolveOptions& options = {});

struct FairMatchingResult {
  bool feasible = false;
  std::vector<std::pair<int, int>> matching;  // (left, right)
};

// Maximum matchings of the bipartite graph whose matched right vertices hit
// group i at least quotas[i] times. groups[b] lists the groups of right
// vertex b.
absl::StatusOr<FairMatchingResult> FairMatching(
    int left_size, int right_size, const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::vector<int>>& groups,
    absl::Span<const int64_t> quotas, const SolveOptions& options = {});

// A basis whose labels sum to `target` in Z_{m1} x ... x Z_{ml}.
absl::StatusOr<ConstrainedReport> GroupBase(
    const MatroidSpec& spec, absl::Span<const int64_t> moduli,
    const std::vector<std::vector<int64_t>>& labels,
    absl::Span<const int64_t> target, const SolveOptions& options = {});

}  // namespace exactbasis

#endif  // EXACTBASIS_REDUCTIONS_H_
