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

// Declarative matroid descriptions and their compilation into oracles.

#ifndef EXACTBASIS_MATROID_SPEC_H_
#define EXACTBASIS_MATROID_SPEC_H_

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "absl/status/statusor.h"
#include "exactbasis/matroid.h"

namespace exactbasis {

struct MatroidSpec;

struct UniformSpec {
  int n = 0;
  int r = 0;
  friend bool operator==(const UniformSpec&, const UniformSpec&) = default;
};

struct PartitionSpec {
  std::vector<std::vector<ElementId>> blocks;
  std::vector<int> capacities;
  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

// Edge i is element i. Self-loops are allowed and always dependent.
struct GraphicSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const GraphicSpec&, const GraphicSpec&) = default;
};

struct LinearSpec {
  enum class Field { kRational, kPrime };
  Field field = Field::kRational;
  int64_t prime = 0;  // Only for kPrime.
  int rows = 0;
  int cols = 0;
  // Row-major; entries over a prime field are integers reduced on compile.
  std::vector<mpq_class> entries;
  const mpq_class& at(int i, int j) const { return entries[i * cols + j]; }
  friend bool operator==(const LinearSpec&, const LinearSpec&) = default;
};

// Element j may be matched to any left vertex in adjacency[j].
struct TransversalSpec {
  int left_size = 0;
  std::vector<std::vector<int>> adjacency;
  friend bool operator==(const TransversalSpec&,
                         const TransversalSpec&) = default;
};

struct DirectSumSpec {
  std::vector<MatroidSpec> parts;
  friend bool operator==(const DirectSumSpec&, const DirectSumSpec&);
};

// Element i of the restriction is the i-th smallest element of `keep`.
struct RestrictionSpec {
  std::shared_ptr<const MatroidSpec> base;
  std::vector<ElementId> keep;
  friend bool operator==(const RestrictionSpec&, const RestrictionSpec&);
};

// Remaining elements keep their relative order.
struct ContractionSpec {
  std::shared_ptr<const MatroidSpec> base;
  std::vector<ElementId> contract;
  friend bool operator==(const ContractionSpec&, const ContractionSpec&);
};

struct MatroidSpec {
  using Kind = std::variant<UniformSpec, PartitionSpec, GraphicSpec,
                            LinearSpec, TransversalSpec, DirectSumSpec,
                            RestrictionSpec, ContractionSpec>;
  Kind kind;

  // Ground size implied by the description (no validation).
  int GroundSize() const;
  const char* KindName() const;
  friend bool operator==(const MatroidSpec& a, const MatroidSpec& b) {
    return a.kind == b.kind;
  }
};

MatroidSpec Uniform(int n, int r);
MatroidSpec Partition(std::vector<std::vector<ElementId>> blocks,
                      std::vector<int> capacities);
MatroidSpec Graphic(int vertex_count, std::vector<std::pair<int, int>> edges);
MatroidSpec RationalLinear(int rows, int cols, std::vector<mpq_class> entries);
MatroidSpec PrimeLinear(int64_t prime, int rows, int cols,
                        std::vector<mpq_class> entries);
MatroidSpec Transversal(int left_size, std::vector<std::vector<int>> adjacency);
MatroidSpec DirectSumOf(std::vector<MatroidSpec> parts);
MatroidSpec RestrictionOf(MatroidSpec base, std::vector<ElementId> keep);
MatroidSpec ContractionOf(MatroidSpec base, std::vector<ElementId> contract);

// Validates `spec` and builds its oracle. Errors name the violated
// invariant. Families with fast rank-cut separation get a minimizer attached.
absl::StatusOr<Matroid> Compile(const MatroidSpec& spec);

}  // namespace exactbasis

#endif  // EXACTBASIS_MATROID_SPEC_H_
