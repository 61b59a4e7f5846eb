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

#include "exactbasis/catalog.h"

#include <algorithm>
#include <memory>
#include <utility>

#include "absl/strings/str_cat.h"
#include "exactbasis/matroid.h"

namespace exactbasis {
namespace {

using Edges = std::vector<std::pair<int, int>>;

Edges Complete(int v) {
  Edges e;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) e.emplace_back(i, j);
  }
  return e;
}

Edges Cycle(int v) {
  Edges e;
  for (int i = 0; i < v; ++i) e.emplace_back(i, (i + 1) % v);
  return e;
}

Edges Wheel(int spokes) {
  Edges e;
  for (int i = 1; i <= spokes; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % spokes + 1);
  }
  return e;
}

Edges Grid(int rows, int cols) {
  Edges e;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  }
  return e;
}

Edges CompleteBipartite(int a, int b) {
  Edges e;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return e;
}

int VertexCount(const Edges& edges) {
  int v = 0;
  for (auto [a, b] : edges) v = std::max({v, a + 1, b + 1});
  return v;
}

MatroidSpec GraphicOf(const Edges& edges) {
  return Graphic(VertexCount(edges), edges);
}

MatroidSpec FixedGf5(uint64_t seed, int rows, int cols) {
  Rng rng(SubSeed(seed, "catalog-gf5"));
  std::vector<mpq_class> entries;
  for (int i = 0; i < rows * cols; ++i) entries.emplace_back(UniformInt(rng, 0, 4));
  return PrimeLinear(5, rows, cols, std::move(entries));
}

std::vector<int> RandomSubset(Rng& rng, int n, int k) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int i = 0; i < k; ++i) {
    std::swap(all[i], all[UniformInt(rng, i, n - 1)]);
  }
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<CatalogEntry> SmallCatalog() {
  std::vector<CatalogEntry> out;
  for (auto [n, r] : std::vector<std::pair<int, int>>{
           {4, 2}, {6, 1}, {6, 3}, {8, 2}, {8, 4}, {10, 3}, {12, 2}, {14, 2}}) {
    out.push_back({absl::StrCat("uniform-", n, "-", r), Uniform(n, r)});
  }
  out.push_back({"graphic-K4", GraphicOf(Complete(4))});
  out.push_back({"graphic-K5", GraphicOf(Complete(5))});
  out.push_back({"graphic-C6", GraphicOf(Cycle(6))});
  out.push_back({"graphic-W4", GraphicOf(Wheel(4))});
  out.push_back({"graphic-W5", GraphicOf(Wheel(5))});
  out.push_back({"graphic-K33", GraphicOf(CompleteBipartite(3, 3))});
  out.push_back({"graphic-grid-2x4", GraphicOf(Grid(2, 4))});
  out.push_back({"graphic-grid-3x3", GraphicOf(Grid(3, 3))});
  {
    Edges theta = {{0, 1}, {0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 0}};
    out.push_back({"graphic-multi", GraphicOf(theta)});
  }
  {
    Edges prism = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                   {0, 3}, {1, 4}, {2, 5}};
    out.push_back({"graphic-prism", GraphicOf(prism)});
  }
  {
    Edges two_triangles = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                           {2, 3}, {0, 5}, {1, 4}, {0, 4}, {2, 5}, {1, 3},
                           {0, 2}, {3, 5}};
    out.push_back({"graphic-dense-6", GraphicOf(two_triangles)});
  }
  out.push_back({"partition-2x3", Partition({{0, 1, 2}, {3, 4, 5}}, {1, 2})});
  out.push_back({"partition-3x3",
                 Partition({{0, 3, 6}, {1, 4, 7}, {2, 5, 8}}, {1, 1, 2})});
  out.push_back(
      {"partition-mixed",
       Partition({{0, 1}, {2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}}, {1, 2, 2})});
  out.push_back({"gf5-3x7", FixedGf5(1, 3, 7)});
  out.push_back({"gf5-3x10", FixedGf5(2, 3, 10)});
  out.push_back({"gf5-4x9", FixedGf5(3, 4, 9)});
  out.push_back({"gf5-4x12", FixedGf5(4, 4, 12)});
  out.push_back({"gf5-2x14", FixedGf5(5, 2, 14)});
  out.push_back({"transversal-path",
                 Transversal(3, {{0}, {0, 1}, {1}, {1, 2}, {2}, {0, 2}})});
  out.push_back({"transversal-dense",
                 Transversal(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2},
                                 {1, 3}, {0}, {2}, {1, 2, 3}, {0, 3}})});
  out.push_back({"transversal-sparse",
                 Transversal(3, {{0}, {0}, {1}, {1}, {2}, {2}, {0, 1, 2}})});
  return out;
}

const char* FamilyName(SpecFamily family) {
  switch (family) {
    case SpecFamily::kUniform:
      return "uniform";
    case SpecFamily::kPartition:
      return "partition";
    case SpecFamily::kGraphic:
      return "graphic";
    case SpecFamily::kRationalLinear:
      return "linear-rational";
    case SpecFamily::kPrimeLinear:
      return "linear-prime";
    case SpecFamily::kTransversal:
      return "transversal";
    case SpecFamily::kDirectSum:
      return "direct_sum";
    case SpecFamily::kRestriction:
      return "restriction";
    case SpecFamily::kContraction:
      return "contraction";
  }
  return "unknown";
}

MatroidSpec RandomSpec(Rng& rng, SpecFamily family, int n) {
  switch (family) {
    case SpecFamily::kUniform:
      return Uniform(n, static_cast<int>(UniformInt(rng, 0, n)));
    case SpecFamily::kPartition: {
      const int k = static_cast<int>(UniformInt(rng, 1, std::max(1, std::min(n, 4))));
      std::vector<std::vector<ElementId>> blocks(k);
      for (int e = 0; e < n; ++e) blocks[UniformInt(rng, 0, k - 1)].push_back(e);
      std::vector<int> caps;
      for (const auto& b : blocks) {
        caps.push_back(static_cast<int>(UniformInt(rng, 0, b.size())));
      }
      return Partition(std::move(blocks), std::move(caps));
    }
    case SpecFamily::kGraphic: {
      const int v = static_cast<int>(UniformInt(rng, 2, std::max(2, std::min(7, n))));
      Edges edges;
      for (int i = 0; i < n; ++i) {
        const int a = static_cast<int>(UniformInt(rng, 0, v - 1));
        int b = static_cast<int>(UniformInt(rng, 0, v - 1));
        // Loops are rare but legal.
        if (a == b && UniformInt(rng, 0, 9) != 0) b = (a + 1) % v;
        edges.emplace_back(a, b);
      }
      return Graphic(v, std::move(edges));
    }
    case SpecFamily::kRationalLinear: {
      const int rows = static_cast<int>(UniformInt(rng, 1, std::max(1, std::min(n, 5))));
      std::vector<mpq_class> entries;
      for (int i = 0; i < rows * n; ++i) {
        entries.emplace_back(UniformInt(rng, -2, 2));
      }
      return RationalLinear(rows, n, std::move(entries));
    }
    case SpecFamily::kPrimeLinear: {
      static constexpr int64_t kPrimes[] = {2, 3, 5, 7};
      const int64_t p = kPrimes[UniformInt(rng, 0, 3)];
      const int rows = static_cast<int>(UniformInt(rng, 1, std::max(1, std::min(n, 5))));
      std::vector<mpq_class> entries;
      for (int i = 0; i < rows * n; ++i) {
        entries.emplace_back(UniformInt(rng, 0, p - 1));
      }
      return PrimeLinear(p, rows, n, std::move(entries));
    }
    case SpecFamily::kTransversal: {
      const int left = static_cast<int>(UniformInt(rng, 1, std::max(1, n)));
      std::vector<std::vector<int>> adj(n);
      for (auto& a : adj) {
        for (int v = 0; v < left; ++v) {
          if (UniformInt(rng, 0, 9) < 3) a.push_back(v);
        }
      }
      return Transversal(left, std::move(adj));
    }
    case SpecFamily::kDirectSum: {
      static constexpr SpecFamily kParts[] = {
          SpecFamily::kUniform, SpecFamily::kPartition, SpecFamily::kGraphic,
          SpecFamily::kPrimeLinear, SpecFamily::kTransversal};
      const int left = static_cast<int>(UniformInt(rng, 0, n));
      std::vector<MatroidSpec> parts;
      parts.push_back(RandomSpec(rng, kParts[UniformInt(rng, 0, 4)], left));
      parts.push_back(RandomSpec(rng, kParts[UniformInt(rng, 0, 4)], n - left));
      return DirectSumOf(std::move(parts));
    }
    case SpecFamily::kRestriction: {
      const int extra = static_cast<int>(UniformInt(rng, 1, 3));
      MatroidSpec base = RandomSpec(
          rng, UniformInt(rng, 0, 1) ? SpecFamily::kGraphic : SpecFamily::kRationalLinear,
          n + extra);
      return RestrictionOf(std::move(base), RandomSubset(rng, n + extra, n));
    }
    case SpecFamily::kContraction: {
      const int extra = static_cast<int>(UniformInt(rng, 1, 3));
      MatroidSpec base = RandomSpec(
          rng, UniformInt(rng, 0, 1) ? SpecFamily::kGraphic : SpecFamily::kRationalLinear,
          n + extra);
      // Contract a random subset of a random basis.
      absl::StatusOr<Matroid> compiled = Compile(base);
      std::vector<ElementId> order = RandomSubset(rng, n + extra, n + extra);
      for (int i = n + extra - 1; i > 0; --i) {
        std::swap(order[i], order[UniformInt(rng, 0, i)]);
      }
      SubsetMask basis(n + extra);
      for (ElementId e : order) {
        basis.Insert(e);
        if (!compiled->IsIndependent(basis)) basis.Erase(e);
      }
      std::vector<ElementId> contract;
      for (ElementId e : order) {
        if (basis.Contains(e) && static_cast<int>(contract.size()) < extra) {
          contract.push_back(e);
        }
      }
      std::sort(contract.begin(), contract.end());
      // Pad with deleted elements when the basis is smaller than `extra`.
      const int missing = extra - static_cast<int>(contract.size());
      if (missing > 0) {
        std::vector<ElementId> keep;
        for (ElementId e = 0; e < n + extra; ++e) {
          if (!std::binary_search(contract.begin(), contract.end(), e)) {
            keep.push_back(e);
          }
        }
        keep.resize(keep.size() - missing);
        std::vector<ElementId> keep_all = keep;
        for (ElementId c : contract) keep_all.push_back(c);
        std::sort(keep_all.begin(), keep_all.end());
        std::vector<ElementId> idx;
        for (ElementId c : contract) {
          idx.push_back(static_cast<ElementId>(
              std::lower_bound(keep_all.begin(), keep_all.end(), c) -
              keep_all.begin()));
        }
        return ContractionOf(RestrictionOf(std::move(base), keep_all),
                             std::move(idx));
      }
      return ContractionOf(std::move(base), std::move(contract));
    }
  }
  return Uniform(n, 0);
}

std::vector<std::vector<int64_t>> RandomWeightRows(Rng& rng, int m, int n,
                                                   int64_t delta) {
  std::vector<std::vector<int64_t>> rows(m, std::vector<int64_t>(n));
  int64_t seen = 0;
  for (auto& row : rows) {
    for (auto& v : row) {
      v = UniformInt(rng, -delta, delta);
      seen = std::max(seen, v < 0 ? -v : v);
    }
  }
  if (m > 0 && n > 0 && seen < delta) {
    rows[UniformInt(rng, 0, m - 1)][UniformInt(rng, 0, n - 1)] =
        UniformInt(rng, 0, 1) ? delta : -delta;
  }
  return rows;
}

RandomInstance RandomExactInstance(Rng& rng, SpecFamily family, int n, int m,
                                   int64_t delta) {
  RandomInstance out;
  out.spec = RandomSpec(rng, family, n);
  out.weights = *WeightMatrix::FromRows(n, RandomWeightRows(rng, m, n, delta));
  Matroid matroid = *Compile(out.spec);
  const int r = matroid.Rank();
  if (UniformInt(rng, 0, 1) == 0) {
    // Weight of a random basis: greedy over a shuffled order.
    std::vector<ElementId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[UniformInt(rng, 0, i)]);
    SubsetMask basis(n);
    for (ElementId e : order) {
      basis.Insert(e);
      if (!matroid.IsIndependent(basis)) basis.Erase(e);
    }
    out.beta = out.weights.Apply(basis);
  } else {
    for (int i = 0; i < m; ++i) {
      out.beta.push_back(UniformInt(rng, -delta * r, delta * r));
    }
  }
  return out;
}

}  // namespace exactbasis
