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

#include "exactbasis/algebraic.h"

#include <set>

#include <gtest/gtest.h>

#include "exactbasis/catalog.h"

namespace exactbasis {
namespace {

Matroid MustCompile(const MatroidSpec& spec) {
  absl::StatusOr<Matroid> m = Compile(spec);
  EXPECT_TRUE(m.ok()) << m.status();
  return *m;
}

MatroidSpec Triangle() { return Graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

MatroidSpec K4() {
  return Graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

std::set<int64_t> BasisWeights(const Matroid& m,
                               const std::vector<int64_t>& w) {
  std::set<int64_t> out;
  ForEachBasis(m, [&](const SubsetMask& b) {
    int64_t s = 0;
    b.ForEach([&](ElementId e) { s += w[e]; });
    out.insert(s);
    return true;
  });
  return out;
}

TEST(RepresentationTest, RanksMatchOracles) {
  Rng rng(8);
  for (SpecFamily family : kAllFamilies) {
    if (family == SpecFamily::kTransversal || family == SpecFamily::kPrimeLinear) {
      continue;
    }
    for (int trial = 0; trial < 20; ++trial) {
      MatroidSpec spec = RandomSpec(rng, family, 7);
      if (family == SpecFamily::kDirectSum) {
        // Direct sums may contain transversal or prime-field parts.
        if (!RepresentationOf(spec).ok()) continue;
      }
      absl::StatusOr<Representation> rep = RepresentationOf(spec);
      ASSERT_TRUE(rep.ok()) << FamilyName(family) << " " << rep.status();
      Matroid m = MustCompile(spec);
      const PrimeField f(rep->q);
      for (uint64_t bits = 0; bits < 128; ++bits) {
        std::vector<uint64_t> sub;
        const int k = std::popcount(bits);
        for (int i = 0; i < rep->rows; ++i) {
          for (int j = 0; j < 7; ++j) {
            if (bits >> j & 1) sub.push_back(rep->at(i, j));
          }
        }
        EXPECT_EQ(f.Rank(sub, rep->rows, k), Rank(m, SubsetMask::FromBits(7, bits)))
            << FamilyName(family);
      }
    }
  }
}

TEST(RepresentationTest, TransversalIsUnsupported) {
  EXPECT_EQ(RepresentationOf(Transversal(1, {{0}})).status().code(),
            absl::StatusCode::kUnimplemented);
}

TEST(RepresentationTest, PrimeFieldNeedsItsOwnPrime) {
  MatroidSpec spec = PrimeLinear(7, 1, 2, {1, 3});
  EXPECT_FALSE(RepresentationOf(spec).ok());
  EXPECT_TRUE(RepresentationOf(spec, 7).ok());
}

TEST(GeneratingPolyTest, TriangleSupport) {
  absl::StatusOr<Representation> rep = RepresentationOf(Triangle());
  ASSERT_TRUE(rep.ok());
  const std::vector<int64_t> w = {0, 1, 1};
  absl::StatusOr<GeneratingPolynomial> p = GeneratingPoly(*rep, w, 1);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->SupportWeights(), (std::vector<int64_t>{1, 2}));
  EXPECT_LE(p->coefficients.size(), static_cast<size_t>(2 * p->delta * p->rank + 1));
}

TEST(GeneratingPolyTest, K4UnitWeightsAcrossSeeds) {
  absl::StatusOr<Representation> rep = RepresentationOf(K4());
  ASSERT_TRUE(rep.ok());
  const std::vector<int64_t> w(6, 1);
  for (uint64_t seed = 0; seed < 5; ++seed) {
    absl::StatusOr<GeneratingPolynomial> p = GeneratingPoly(*rep, w, seed);
    ASSERT_TRUE(p.ok());
    EXPECT_EQ(p->SupportWeights(), std::vector<int64_t>{3});
  }
  EXPECT_EQ(EnumerateBases(MustCompile(K4()), 100).bases.size(), 16u);
}

TEST(GeneratingPolyTest, UniqueBasisGivesMonomial) {
  MatroidSpec spec = RationalLinear(3, 3, {1, 2, 0, 0, 1, 1, 1, 0, 1});
  absl::StatusOr<Representation> rep = RepresentationOf(spec);
  ASSERT_TRUE(rep.ok());
  const std::vector<int64_t> w = {2, -1, 1};
  absl::StatusOr<GeneratingPolynomial> p = GeneratingPoly(*rep, w, 3);
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->SupportWeights(), std::vector<int64_t>{2});
}

TEST(GeneratingPolyTest, RankDeficientRepresentationRejected) {
  Representation rep;
  rep.rows = 2;
  rep.cols = 2;
  rep.entries = {1, 1, 2, 2};
  const std::vector<int64_t> w = {0, 0};
  EXPECT_EQ(GeneratingPoly(rep, w, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(GeneratingPolyTest, SmallFieldHasTooFewPoints) {
  MatroidSpec spec = PrimeLinear(3, 2, 3, {1, 0, 1, 0, 1, 1});
  absl::StatusOr<Representation> rep = RepresentationOf(spec, 3);
  ASSERT_TRUE(rep.ok());
  const std::vector<int64_t> w = {1, 1, 1};
  EXPECT_EQ(GeneratingPoly(*rep, w, 0).status().code(),
            absl::StatusCode::kUnimplemented);
}

TEST(ExactBasis1dTest, TriangleExamples) {
  Matroid tri = MustCompile(Triangle());
  absl::StatusOr<Representation> rep = RepresentationOf(Triangle());
  ASSERT_TRUE(rep.ok());
  const std::vector<int64_t> w = {0, 1, 1};
  absl::StatusOr<AlgebraicOutcome> out = ExactBasis1d(tri, *rep, w, 2, 0);
  ASSERT_TRUE(out.ok()) << out.status();
  ASSERT_TRUE(out->basis.has_value());
  EXPECT_EQ(out->basis->ToString(), "{1,2}");
  out = ExactBasis1d(tri, *rep, w, 0, 0);
  ASSERT_TRUE(out.ok());
  EXPECT_FALSE(out->basis.has_value());
  EXPECT_EQ(out->attempts, 3);
  out = ExactBasis1d(tri, *rep, w, 1, 0);
  ASSERT_TRUE(out.ok());
  ASSERT_TRUE(out->basis.has_value());
  EXPECT_EQ(out->basis->Count(), 2);
}

TEST(ExactBasis1dTest, DeterministicGivenSeed) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    MatroidSpec spec = RandomSpec(rng, SpecFamily::kRationalLinear, 8);
    Matroid m = MustCompile(spec);
    absl::StatusOr<Representation> rep = RepresentationOf(spec);
    ASSERT_TRUE(rep.ok());
    std::vector<int64_t> w = RandomWeightRows(rng, 1, 8, 2)[0];
    for (int64_t beta = -4; beta <= 4; ++beta) {
      absl::StatusOr<AlgebraicOutcome> a = ExactBasis1d(m, *rep, w, beta, 9);
      absl::StatusOr<AlgebraicOutcome> b = ExactBasis1d(m, *rep, w, beta, 9);
      ASSERT_TRUE(a.ok() && b.ok());
      EXPECT_EQ(a->basis, b->basis);
    }
  }
}

TEST(ExactBasis1dTest, AgreesWithEnumeration) {
  Rng rng(31);
  int checks = 0;
  int misses = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = static_cast<int>(UniformInt(rng, 1, 10));
    const int r = static_cast<int>(UniformInt(rng, 1, std::min(n, 5)));
    std::vector<mpq_class> entries;
    for (int i = 0; i < r * n; ++i) entries.emplace_back(UniformInt(rng, -2, 2));
    MatroidSpec spec = RationalLinear(r, n, entries);
    Matroid m = MustCompile(spec);
    absl::StatusOr<Representation> rep = RepresentationOf(spec);
    ASSERT_TRUE(rep.ok());
    const int64_t delta = UniformInt(rng, 1, 2);
    std::vector<int64_t> w = RandomWeightRows(rng, 1, n, delta)[0];
    const std::set<int64_t> truth = BasisWeights(m, w);
    const int64_t span = delta * m.Rank();
    absl::StatusOr<GeneratingPolynomial> poly = GeneratingPoly(*rep, w, trial);
    ASSERT_TRUE(poly.ok());
    for (int64_t s : poly->SupportWeights()) {
      EXPECT_TRUE(truth.count(s)) << "support outside attainable weights";
    }
    for (int64_t beta = -span; beta <= span; ++beta) {
      absl::StatusOr<AlgebraicOutcome> out = ExactBasis1d(m, *rep, w, beta, trial);
      ASSERT_TRUE(out.ok()) << out.status();
      ++checks;
      if (out->basis.has_value()) {
        EXPECT_TRUE(truth.count(beta));
        int64_t got = 0;
        out->basis->ForEach([&](ElementId e) { got += w[e]; });
        EXPECT_EQ(got, beta);
        EXPECT_TRUE(m.IsIndependent(*out->basis));
      } else if (truth.count(beta)) {
        ++misses;
      }
    }
  }
  EXPECT_EQ(misses, 0) << "of " << checks;
}

// 10^9 + 7 has no large smooth subgroup, so coefficients come from full
// interpolation rather than the Fourier average.
TEST(ExactBasis1dTest, InterpolationFallbackAgrees) {
  const uint64_t q = 1000000007;
  Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = static_cast<int>(UniformInt(rng, 2, 7));
    const int r = static_cast<int>(UniformInt(rng, 1, std::min(n, 4)));
    std::vector<mpq_class> entries;
    for (int i = 0; i < r * n; ++i) entries.emplace_back(UniformInt(rng, -2, 2));
    MatroidSpec spec = RationalLinear(r, n, entries);
    Matroid m = MustCompile(spec);
    absl::StatusOr<Representation> rep = RepresentationOf(spec, q);
    if (!rep.ok()) continue;  // rank can drop modulo q
    std::vector<int64_t> w = RandomWeightRows(rng, 1, n, 2)[0];
    const std::set<int64_t> truth = BasisWeights(m, w);
    for (int64_t beta = -2 * r; beta <= 2 * r; ++beta) {
      absl::StatusOr<AlgebraicOutcome> out = ExactBasis1d(m, *rep, w, beta, trial);
      ASSERT_TRUE(out.ok()) << out.status();
      if (out->basis.has_value()) {
        int64_t got = 0;
        out->basis->ForEach([&](ElementId e) { got += w[e]; });
        EXPECT_EQ(got, beta);
      } else {
        EXPECT_FALSE(truth.count(beta)) << "missed weight " << beta;
      }
    }
  }
}

}  // namespace
}  // namespace exactbasis
