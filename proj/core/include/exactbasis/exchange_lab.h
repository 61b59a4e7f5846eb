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

// Exchange arguments for weighted matroids, made constructive, together with
// brute-force checkers for the sensitivity and proximity bounds and the two
// bipartite-matching instances on which those bounds fail for intersections.

#ifndef EXACTBASIS_EXCHANGE_LAB_H_
#define EXACTBASIS_EXCHANGE_LAB_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "exactbasis/matroid.h"
#include "exactbasis/matroid_spec.h"
#include "exactbasis/weights.h"

namespace exactbasis {

// Given (I \ A) u B independent, returns B' of B with |B'| = |a_prime| and
// (I \ a_prime) u B' independent.
absl::StatusOr<SubsetMask> Downsize(const Matroid& matroid, const SubsetMask& i,
                                    const SubsetMask& a, const SubsetMask& b,
                                    const SubsetMask& a_prime);

// The converse direction: A' of A with |A'| = |b_prime| and
// (I \ A') u b_prime independent.
absl::StatusOr<SubsetMask> DownsizeToward(const Matroid& matroid,
                                          const SubsetMask& i,
                                          const SubsetMask& a,
                                          const SubsetMask& b,
                                          const SubsetMask& b_prime);

struct ExchangePair {
  enum class Gap { kAHeavier, kALighter };
  SubsetMask a_side;
  SubsetMask b_side;
  bool unicolor = false;
  Gap gap = Gap::kAHeavier;
};

// Unicolor A' of A and B' of B with (A \ A') u B' independent,
// |A'| (2D+1)^4 >= k - |w(A) - w(B)| and w(a) >= w(b) across the pair
// (w(a) <= w(b) for kALighter). D is the largest |w|.
absl::StatusOr<ExchangePair> UnicolorExchange(
    const Matroid& matroid, absl::Span<const int64_t> w, const SubsetMask& a,
    const SubsetMask& b, ExchangePair::Gap gap = ExchangePair::Gap::kAHeavier);

// Same construction stopped before the two unicolor restrictions.
absl::StatusOr<ExchangePair> DominatingExchange(
    const Matroid& matroid, absl::Span<const int64_t> w, const SubsetMask& a,
    const SubsetMask& b, ExchangePair::Gap gap = ExchangePair::Gap::kAHeavier);

// Smallest |A| for which OneDimRescue is guaranteed: (2D+1)^5 + mu.
int64_t RescueThreshold(int64_t delta, int64_t mu);

// An independent A' != A with |A'| = |A| and w(A') = w(A), built from two
// opposite unicolor exchanges and a class-count matroid intersection.
// FailedPrecondition when |A| is below RescueThreshold.
absl::StatusOr<SubsetMask> OneDimRescue(const Matroid& matroid,
                                        absl::Span<const int64_t> w,
                                        const SubsetMask& a,
                                        const SubsetMask& b);

struct BoundReport {
  std::string instance_id;
  mpq_class observed;
  mpz_class proven_bound;
  mpq_class ratio;  // observed / bound, 0 when the bound is 0
  bool pass = true;
  // No exact basis exists, so there was nothing to measure.
  bool vacuous = false;
};

// (2 m D)^(12 m) * ||W(B) - W(A)||_1.
mpz_class SensitivityBound(const WeightMatrix& weights, const SubsetMask& a,
                           const SubsetMask& b);

inline constexpr int kMaxLabGroundSize = 16;

// min |A' xor B| over bases A' with W(A') = W(A), against SensitivityBound.
absl::StatusOr<BoundReport> MinSymdiffExact(const Matroid& matroid,
                                            const WeightMatrix& weights,
                                            const SubsetMask& a,
                                            const SubsetMask& b);

struct SymdiffSweep {
  int64_t pairs = 0;
  int64_t passed = 0;
  mpq_class max_ratio;
  int64_t max_observed = 0;
  // The pair with the largest ratio (the first such pair in enumeration
  // order), or the first pair when every bound is 0.
  BoundReport worst;
};

// MinSymdiffExact over every ordered pair of bases, sharing the enumeration.
absl::StatusOr<SymdiffSweep> MinSymdiffAllPairs(const Matroid& matroid,
                                                const WeightMatrix& weights);

// min ||x - chi(A')||_1 over exact bases A' for the given point, against
// ProximityBound.
absl::StatusOr<BoundReport> ProximityAt(const Matroid& matroid,
                                        const WeightMatrix& weights,
                                        absl::Span<const int64_t> beta,
                                        absl::Span<const mpq_class> x);

// ProximityAt for the LP vertex found with `seed`.
absl::StatusOr<BoundReport> ProximityExact(const Matroid& matroid,
                                           const WeightMatrix& weights,
                                           absl::Span<const int64_t> beta,
                                           uint64_t seed);

enum class LowerBoundKind { kSensitivity, kProximity };

// Bipartite matching instance as two partition matroids on the edges.
struct LowerBoundInstance {
  LowerBoundKind kind;
  int n = 0;
  MatroidSpec left;   // degree <= 1 at left vertices
  MatroidSpec right;  // degree <= 1 at right vertices
  std::vector<int64_t> weights;
  int64_t target = 0;
  // Sensitivity: the two perfect matchings. Proximity: the unique exact one.
  std::vector<SubsetMask> claimed_bases;
  // Proximity only.
  std::vector<mpq_class> fractional_vertex;
  mpq_class claimed_distance;
};

// Sensitivity needs even n >= 2, proximity a multiple of 4 that is >= 8.
absl::StatusOr<LowerBoundInstance> MakeLowerBoundInstance(LowerBoundKind kind,
                                                          int n);

struct LowerBoundCheck {
  std::vector<SubsetMask> common_bases;  // all of them, sorted
  std::vector<SubsetMask> exact_bases;   // those with w = target
  mpq_class observed_distance;
  bool vertex_verified = false;
  bool ok = false;
};

// Recomputes every claim of the instance by enumeration.
absl::StatusOr<LowerBoundCheck> VerifyLowerBound(const LowerBoundInstance& inst);

}  // namespace exactbasis

#endif  // EXACTBASIS_EXCHANGE_LAB_H_
