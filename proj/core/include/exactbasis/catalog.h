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

// A fixed catalog of small matroids and seeded random instance generators.

#ifndef EXACTBASIS_CATALOG_H_
#define EXACTBASIS_CATALOG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "exactbasis/matroid_spec.h"
#include "exactbasis/rng.h"
#include "exactbasis/weights.h"

namespace exactbasis {

// Bumped whenever an entry changes, so experiment logs stay comparable.
inline constexpr const char* kCatalogVersion = "small-catalog-v1";

struct CatalogEntry {
  std::string name;
  MatroidSpec spec;
};

// Uniform, graphic, partition, GF(5) linear and transversal matroids with at
// most 14 elements.
std::vector<CatalogEntry> SmallCatalog();

enum class SpecFamily {
  kUniform,
  kPartition,
  kGraphic,
  kRationalLinear,
  kPrimeLinear,
  kTransversal,
  kDirectSum,
  kRestriction,
  kContraction,
};

inline constexpr SpecFamily kAllFamilies[] = {
    SpecFamily::kUniform,        SpecFamily::kPartition,
    SpecFamily::kGraphic,        SpecFamily::kRationalLinear,
    SpecFamily::kPrimeLinear,    SpecFamily::kTransversal,
    SpecFamily::kDirectSum,      SpecFamily::kRestriction,
    SpecFamily::kContraction,
};

const char* FamilyName(SpecFamily family);

// A valid spec of the given family on exactly n elements.
MatroidSpec RandomSpec(Rng& rng, SpecFamily family, int n);

// m rows with entries in [-delta, delta]; delta itself is attained when n > 0.
std::vector<std::vector<int64_t>> RandomWeightRows(Rng& rng, int m, int n,
                                                   int64_t delta);

struct RandomInstance {
  MatroidSpec spec;
  WeightMatrix weights;
  std::vector<int64_t> beta;
};

// Target is the weight of a random basis half of the time and a random
// vector in the attainable box otherwise.
RandomInstance RandomExactInstance(Rng& rng, SpecFamily family, int n, int m,
                                   int64_t delta);

}  // namespace exactbasis

#endif  // EXACTBASIS_CATALOG_H_
