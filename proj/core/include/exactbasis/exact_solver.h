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

// Exact-weight bases: LP vertex, a proximity window around it, and one
// matroid intersection per candidate count vector.

#ifndef EXACTBASIS_EXACT_SOLVER_H_
#define EXACTBASIS_EXACT_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "exactbasis/base_polytope.h"
#include "exactbasis/matroid.h"
#include "exactbasis/weights.h"

namespace exactbasis {

struct SolveStats {
  int64_t oracle_calls = 0;
  int64_t lp_pivots = 0;
  int64_t lp_cuts = 0;
  int64_t candidates_enumerated = 0;
  int64_t candidates_tested = 0;
};

struct SolveReport {
  enum class Status { kFound, kInfeasible, kWindowExhausted };
  Status status = Status::kInfeasible;
  std::optional<SubsetMask> basis;
  SolveStats stats;
  int64_t window_radius_used = 0;
};

const char* StatusName(SolveReport::Status status);

// ceil((2 m delta)^(13 m)), saturated at INT64_MAX.
int64_t ProximityRadius(int m, int64_t delta);

// Same quantity as an exact integer.
mpz_class ProximityBound(int m, int64_t delta);

// Refuses to materialize more candidates than this.
inline constexpr int64_t kMaxCandidates = 20'000'000;

// Count vectors l (indexed like weights.classes()) with
// |l_c - x(E_c)| <= radius, 0 <= l_c <= |E_c|, sum l = rank and
// sum alpha_c l_c = beta, sorted by sum |l_c - x(E_c)| and then
// lexicographically.
absl::StatusOr<std::vector<CountVector>> CandidateCounts(
    absl::Span<const mpq_class> x, const WeightMatrix& weights, int rank,
    absl::Span<const int64_t> beta, int64_t radius);

struct SolveOptions {
  std::optional<int64_t> radius_override;
  uint64_t seed = 0;
  // Worker threads for candidate testing; the report does not depend on it.
  int jobs = 1;
};

absl::StatusOr<SolveReport> Solve(const Matroid& matroid,
                                  const WeightMatrix& weights,
                                  absl::Span<const int64_t> beta,
                                  const SolveOptions& options = {});

inline constexpr int kMaxBruteForceGroundSize = 20;

// First basis in enumeration order with W(B) = beta.
absl::StatusOr<SolveReport> BruteForceSolve(const Matroid& matroid,
                                            const WeightMatrix& weights,
                                            absl::Span<const int64_t> beta);

// Basis of the right size, accepted by the oracle, with W(B) = beta.
bool IsExactBasis(const Matroid& matroid, const WeightMatrix& weights,
                  absl::Span<const int64_t> beta, const SubsetMask& basis);

}  // namespace exactbasis

#endif  // EXACTBASIS_EXACT_SOLVER_H_
