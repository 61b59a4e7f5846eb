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

// Randomized exact-weight bases of linear matroids. By Cauchy-Binet,
//
//   det(A diag(t_e y^(w_e + delta)) A^T) = sum_B det(A_B)^2 prod_B t_e y^(w(B) + delta r),
//
// so the coefficient of y^(beta + delta r) is nonzero for random t (with
// high probability) exactly when some basis weighs beta. Witnesses come
// from self-reduction; a returned basis is always checked by the oracle.

#ifndef EXACTBASIS_ALGEBRAIC_H_
#define EXACTBASIS_ALGEBRAIC_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "exactbasis/matroid.h"
#include "exactbasis/matroid_spec.h"
#include "exactbasis/prime_field.h"

namespace exactbasis {

// Full-row-rank matrix over F_q whose column matroid is the represented one.
struct Representation {
  uint64_t q = kMersenne61;
  int rows = 0;
  int cols = 0;
  std::vector<uint64_t> entries;  // row-major
  uint64_t at(int i, int j) const { return entries[i * cols + j]; }
};

// Supports linear, graphic (signed incidence), uniform (Vandermonde),
// partition, direct sums, restrictions and contractions. Transversal specs
// have no explicit representation here. Prime-field specs are represented
// over their own field, so `q` must equal their prime.
absl::StatusOr<Representation> RepresentationOf(const MatroidSpec& spec,
                                                uint64_t q = kMersenne61);

struct GeneratingPolynomial {
  uint64_t q = kMersenne61;
  int rank = 0;
  int64_t delta = 0;
  // coefficients[d] multiplies y^d; the weight of that term is d - delta*rank.
  std::vector<uint64_t> coefficients;

  // Weights whose coefficient is nonzero, ascending.
  std::vector<int64_t> SupportWeights() const;
  bool HasWeight(int64_t weight) const;
};

// `weights` has one entry per column. The per-element scalars are drawn from
// SubSeed(seed, "algebraic-scalars").
absl::StatusOr<GeneratingPolynomial> GeneratingPoly(
    const Representation& rep, absl::Span<const int64_t> weights,
    uint64_t seed);

struct AlgebraicOutcome {
  std::optional<SubsetMask> basis;
  // Attempts made, including the successful one.
  int attempts = 0;
};

// A basis of weight `beta`, or nullopt if the coefficient vanished in every
// one of `retries` attempts. Fails with an internal error if the coefficient
// was nonzero but self-reduction kept producing unverifiable sets.
absl::StatusOr<AlgebraicOutcome> ExactBasis1d(const Matroid& matroid,
                                              const Representation& rep,
                                              absl::Span<const int64_t> weights,
                                              int64_t beta, uint64_t seed,
                                              int retries = 3);

}  // namespace exactbasis

#endif  // EXACTBASIS_ALGEBRAIC_H_
