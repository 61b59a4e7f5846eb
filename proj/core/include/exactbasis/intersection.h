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

// Maximum-cardinality matroid intersection by shortest augmenting paths in
// the exchange graph.

#ifndef EXACTBASIS_INTERSECTION_H_
#define EXACTBASIS_INTERSECTION_H_

#include <optional>

#include "absl/status/statusor.h"
#include "exactbasis/matroid.h"
#include "exactbasis/weights.h"

namespace exactbasis {

struct IntersectionCertificate {
  SubsetMask common_set;
  // U with |common_set| = rank1(U) + rank2(E \ U). Only filled when
  // certification was requested and n <= kMaxCertifiedGroundSize.
  std::optional<SubsetMask> partition_witness;
  int augmentations = 0;
};

inline constexpr int kMaxCertifiedGroundSize = 20;

// Arcs x -> y when I - x + y is independent in m1, y -> x when it is
// independent in m2; paths run from {y : I + y in I1} to {y : I + y in I2}.
// Arcs are generated lazily while the BFS expands, in ascending element
// order, so the augmenting path and the result are deterministic.
//
// The witness is read off the last search: with R the elements reachable
// from the sources, U = E \ R. It is checked against the rank functions
// before it is returned.
absl::StatusOr<IntersectionCertificate> MaxCommonIndependent(
    const Matroid& m1, const Matroid& m2, bool certify = false);

// The partition matroid on the weight classes of `weights` with capacity
// counts[c] for class c.
absl::StatusOr<Matroid> CountMatroid(const WeightMatrix& weights,
                                     const CountVector& counts);

// A basis of `matroid` with exactly counts[c] elements from weight class c,
// or nullopt if there is none. Counts must sum to the rank and fit their
// classes.
absl::StatusOr<std::optional<SubsetMask>> CommonBasisWithCounts(
    const Matroid& matroid, const CountVector& counts,
    const WeightMatrix& weights);

}  // namespace exactbasis

#endif  // EXACTBASIS_INTERSECTION_H_
