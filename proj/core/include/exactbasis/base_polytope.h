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

// Exact LP over the base polytope
//
//   P_B(M) = { x >= 0 : x(S) <= rank(S) for all S, x(E) = rank(E) }
//
// intersected with { x : W x = beta }, with rank inequalities generated
// lazily by separation.

#ifndef EXACTBASIS_BASE_POLYTOPE_H_
#define EXACTBASIS_BASE_POLYTOPE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "exactbasis/matroid.h"
#include "exactbasis/weights.h"

namespace exactbasis {

using RationalPoint = std::vector<mpq_class>;

struct RankCut {
  SubsetMask subset;
  int rhs = 0;
};

// Rank-cut separation with a rank table built on first use, so repeated
// calls on one matroid pay for the table once.
//
// Policy: ground sets of at most 16 elements are always searched
// exhaustively; up to RankTable::kMaxGroundSize the matroid's minimizer is
// preferred when present; beyond that a minimizer is required.
class Separator {
 public:
  explicit Separator(const Matroid& matroid) : matroid_(matroid) {}

  // A subset S maximizing x(S) - rank(S) if that maximum is positive.
  absl::StatusOr<std::optional<RankCut>> Find(absl::Span<const mpq_class> x);

 private:
  absl::StatusOr<std::optional<RankCut>> Exhaustive(
      absl::Span<const mpq_class> x);

  Matroid matroid_;
  std::optional<RankTable> table_;
};

absl::StatusOr<std::optional<RankCut>> Separate(const Matroid& matroid,
                                                absl::Span<const mpq_class> x);

struct LpOutcome {
  enum class Status { kVertex, kInfeasible };
  Status status = Status::kInfeasible;
  RationalPoint point;
  // Accumulated rank cuts that hold with equality at `point`.
  std::vector<RankCut> tight_cuts;
  std::vector<mpq_class> objective_used;
  // n minus the rank of the constraints tight at `point`; 0 at a vertex.
  int face_dimension = 0;
  int64_t pivots = 0;
  int cuts_added = 0;
};

// A vertex of P_B(M) intersected with {Wx = beta}, found by maximizing a
// seeded random objective with lazily separated rank cuts.
absl::StatusOr<LpOutcome> LpVertex(const Matroid& matroid,
                                   const WeightMatrix& weights,
                                   absl::Span<const int64_t> beta,
                                   uint64_t seed);

// Exact rank of integer-valued rows over the rationals.
int ExactRank(const std::vector<std::vector<mpq_class>>& rows, int cols);

struct FaceRounding {
  SubsetMask basis;
  mpq_class distance;  // ||chi(basis) - x||_1
  int face_dimension = 0;
};

// Among the bases on the minimal face of P_B(M) containing x, one closest
// to x in L1 distance. Requires x in P_B(M) and at most 20 elements.
absl::StatusOr<FaceRounding> RoundToFaceBasis(const Matroid& matroid,
                                              absl::Span<const mpq_class> x);

}  // namespace exactbasis

#endif  // EXACTBASIS_BASE_POLYTOPE_H_
