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

// Fast rank-cut separation for structured families. Each minimizer returns a
// subset S maximizing x(S) - rank(S) when that maximum is positive. The
// graphic minimizer returns one connected violated set, which attains the
// maximum violation over connected edge sets.

#ifndef EXACTBASIS_CUT_MINIMIZERS_H_
#define EXACTBASIS_CUT_MINIMIZERS_H_

#include <memory>
#include <utility>
#include <vector>

#include "exactbasis/matroid.h"

namespace exactbasis {

std::shared_ptr<const RankCutMinimizer> MakeUniformMinimizer(int rank);

// block_of[e] is the block index of e.
std::shared_ptr<const RankCutMinimizer> MakePartitionMinimizer(
    std::vector<int> block_of, std::vector<int> capacities);

std::shared_ptr<const RankCutMinimizer> MakeGraphicMinimizer(
    int vertex_count, std::vector<std::pair<int, int>> edges);

// Separates each summand independently and returns the union of the
// violated parts.
std::shared_ptr<const RankCutMinimizer> MakeDirectSumMinimizer(
    std::vector<Matroid> parts);

}  // namespace exactbasis

#endif  // EXACTBASIS_CUT_MINIMIZERS_H_
