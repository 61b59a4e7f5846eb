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

#include "exactbasis/matroid.h"

#include <gtest/gtest.h>

#include "exactbasis/matroid_spec.h"
#include "exactbasis/rng.h"

namespace exactbasis {
namespace {

Matroid MustCompile(const MatroidSpec& spec) {
  absl::StatusOr<Matroid> m = Compile(spec);
  EXPECT_TRUE(m.ok()) << m.status();
  return *m;
}

MatroidSpec K4() {
  return Graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST(SubsetMaskTest, SetAlgebra) {
  SubsetMask a = SubsetMask::FromElements(70, {0, 3, 65});
  SubsetMask b = SubsetMask::FromElements(70, {3, 69});
  EXPECT_EQ((a | b).Count(), 4);
  EXPECT_EQ((a & b).Elements(), std::vector<ElementId>{3});
  EXPECT_EQ((a - b).ToString(), "{0,65}");
  EXPECT_EQ(a.Complement().Count(), 67);
  EXPECT_TRUE((a & b).IsSubsetOf(a));
  EXPECT_FALSE(a.IsSubsetOf(b));
}

TEST(MatroidTest, K4HasSixteenBases) {
  Matroid k4 = MustCompile(K4());
  EXPECT_EQ(k4.Rank(), 3);
  BasisEnumeration all = EnumerateBases(k4, 1000);
  EXPECT_FALSE(all.overflow);
  EXPECT_EQ(all.bases.size(), 16u);
  BasisEnumeration capped = EnumerateBases(k4, 5);
  EXPECT_TRUE(capped.overflow);
  EXPECT_EQ(capped.bases.size(), 5u);
}

TEST(MatroidTest, UniformBasisCountIsBinomial) {
  for (int n = 0; n <= 8; ++n) {
    for (int r = 0; r <= n; ++r) {
      Matroid u = MustCompile(Uniform(n, r));
      int64_t binom = 1;
      for (int i = 0; i < r; ++i) binom = binom * (n - i) / (i + 1);
      EXPECT_EQ(static_cast<int64_t>(EnumerateBases(u, 1 << 20).bases.size()),
                binom)
          << n << " " << r;
    }
  }
}

TEST(MatroidTest, InvalidSpecsAreRejected) {
  EXPECT_FALSE(Compile(Uniform(3, 4)).ok());
  EXPECT_FALSE(Compile(Uniform(3, -1)).ok());
  EXPECT_FALSE(Compile(Partition({{0, 1}, {1, 2}}, {1, 1})).ok());
  EXPECT_FALSE(Compile(Graphic(2, {{0, 2}})).ok());
  EXPECT_FALSE(Compile(Transversal(1, {{1}})).ok());
}

TEST(MatroidTest, AxiomCheckerFlagsNonMatroid) {
  // Independent sets: subsets of {0,1} and {2}; fails augmentation.
  Matroid bad = FromPredicate(3, [](const SubsetMask& s) {
    return s.IsSubsetOf(SubsetMask::FromElements(3, {0, 1})) ||
           s.IsSubsetOf(SubsetMask::FromElements(3, {2}));
  });
  absl::StatusOr<AxiomVerdict> v = CheckAxioms(bad);
  ASSERT_TRUE(v.ok());
  EXPECT_FALSE(v->ok);
  EXPECT_EQ(v->violated, "M3");
  Matroid not_hereditary = FromPredicate(2, [](const SubsetMask& s) {
    return s.Count() != 1;
  });
  v = CheckAxioms(not_hereditary);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v->violated, "M2");
}

TEST(MatroidTest, CompiledFamiliesSatisfyAxioms) {
  std::vector<MatroidSpec> specs = {
      K4(),
      Uniform(6, 3),
      Partition({{0, 1, 2}, {3, 4}}, {2, 1}),
      RationalLinear(2, 4, {1, 0, 1, 1, 0, 1, 1, 2}),
      PrimeLinear(2, 3, 5, {1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1, 0}),
      Transversal(2, {{0}, {0, 1}, {1}, {}}),
      DirectSumOf({Uniform(3, 1), K4()}),
      RestrictionOf(K4(), {0, 1, 3}),
      ContractionOf(K4(), {0}),
  };
  for (const MatroidSpec& spec : specs) {
    Matroid m = MustCompile(spec);
    absl::StatusOr<AxiomVerdict> v = CheckAxioms(m);
    ASSERT_TRUE(v.ok());
    EXPECT_TRUE(v->ok) << spec.KindName() << " " << v->violated;
  }
}

TEST(MatroidTest, LinearMatroidOverRationalsAndPrimes) {
  // Columns (1,1) and (1,-1) are independent over Q but parallel over F_2.
  Matroid q = MustCompile(RationalLinear(2, 2, {1, 1, 1, -1}));
  Matroid f2 = MustCompile(PrimeLinear(2, 2, 2, {1, 1, 1, -1}));
  EXPECT_EQ(q.Rank(), 2);
  EXPECT_EQ(f2.Rank(), 1);
}

TEST(MatroidTest, LargeEntriesFallBackToExactArithmetic) {
  mpq_class big("123456789012345678901234567890");
  Matroid m = MustCompile(
      RationalLinear(2, 3, {big, big + 1, 1, big - 1, big, 1}));
  EXPECT_EQ(m.Rank(), 2);
  EXPECT_FALSE(m.IsIndependent(SubsetMask::FromElements(3, {0, 1, 2})));
  EXPECT_TRUE(m.IsIndependent(SubsetMask::FromElements(3, {0, 1})));
}

TEST(MatroidTest, MinorsAndTruncation) {
  Matroid k4 = MustCompile(K4());
  absl::StatusOr<Minor> c = Contract(k4, SubsetMask::FromElements(6, {0}));
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->matroid.ground_size(), 5);
  EXPECT_EQ(c->matroid.Rank(), 2);
  EXPECT_EQ(c->parent_ids, (std::vector<ElementId>{1, 2, 3, 4, 5}));
  Minor r = Restrict(k4, SubsetMask::FromElements(6, {0, 1, 3}));
  EXPECT_EQ(r.matroid.Rank(), 2);  // a triangle
  Matroid t = Truncate(k4, 2);
  EXPECT_EQ(t.Rank(), 2);
  EXPECT_EQ(EnumerateBases(t, 100).bases.size(), 15u);
  absl::StatusOr<Minor> bad =
      Contract(k4, SubsetMask::FromElements(6, {0, 1, 3}));
  EXPECT_FALSE(bad.ok());
}

TEST(MatroidTest, RankTableMatchesGreedyRank) {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = static_cast<int>(UniformInt(rng, 1, 9));
    std::vector<mpq_class> entries;
    for (int i = 0; i < 3 * n; ++i) entries.emplace_back(UniformInt(rng, -1, 1));
    Matroid m = MustCompile(RationalLinear(3, n, entries));
    absl::StatusOr<RankTable> table = RankTable::Build(m);
    ASSERT_TRUE(table.ok());
    for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
      ASSERT_EQ(table->rank(bits), Rank(m, SubsetMask::FromBits(n, bits)));
    }
  }
}

TEST(MatroidTest, WithFreshCounterIsolatesCalls) {
  Matroid k4 = MustCompile(K4());
  Matroid fresh = k4.WithFreshCounter();
  const int64_t before = k4.oracle_calls();
  fresh.IsIndependent(SubsetMask(6));
  EXPECT_EQ(fresh.oracle_calls(), 1);
  EXPECT_EQ(k4.oracle_calls(), before);
}

MatroidSpec Triangle() { return Graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(MatroidExamplesTest, Independence) {
  EXPECT_FALSE(MustCompile(Uniform(4, 2)).IsIndependent(
      SubsetMask::FromElements(4, {0, 1, 2})));
  EXPECT_TRUE(MustCompile(Triangle()).IsIndependent(SubsetMask::FromElements(3, {0, 1})));
  Matroid lin = MustCompile(RationalLinear(2, 3, {1, 0, 1, 0, 1, 1}));
  EXPECT_FALSE(lin.IsIndependent(SubsetMask::Full(3)));
  EXPECT_TRUE(lin.IsIndependent(SubsetMask::FromElements(3, {0, 2})));
}

TEST(MatroidExamplesTest, Rank) {
  EXPECT_EQ(Rank(MustCompile(Uniform(4, 2)), SubsetMask::FromElements(4, {0})), 1);
  EXPECT_EQ(Rank(MustCompile(Triangle()), SubsetMask::Full(3)), 2);
  EXPECT_EQ(Rank(MustCompile(Partition({{0, 1}, {2, 3}}, {1, 1})),
                 SubsetMask::FromElements(4, {0, 1})),
            1);
}

TEST(MatroidExamplesTest, Greedy) {
  EXPECT_EQ(GreedyBasis(MustCompile(Uniform(4, 2))).Elements(),
            (std::vector<ElementId>{0, 1}));
  EXPECT_EQ(GreedyBasis(MustCompile(Triangle())).Elements(),
            (std::vector<ElementId>{0, 1}));
  EXPECT_EQ(GreedyBasis(MustCompile(DirectSumOf({Uniform(2, 1), Uniform(2, 1)})))
                .Elements(),
            (std::vector<ElementId>{0, 2}));
}

TEST(MatroidExamplesTest, Enumerate) {
  BasisEnumeration u = EnumerateBases(MustCompile(Uniform(3, 1)), 10);
  ASSERT_EQ(u.bases.size(), 3u);
  for (int e = 0; e < 3; ++e) {
    EXPECT_EQ(u.bases[e].Elements(), std::vector<ElementId>{static_cast<ElementId>(e)});
  }
  BasisEnumeration t = EnumerateBases(MustCompile(Triangle()), 10);
  ASSERT_EQ(t.bases.size(), 3u);
  std::vector<std::vector<ElementId>> got;
  for (const auto& b : t.bases) got.push_back(b.Elements());
  EXPECT_EQ(got, (std::vector<std::vector<ElementId>>{{0, 1}, {0, 2}, {1, 2}}));
}

// {} {0} {1} {0,1} {2,3}: {2,3} is accepted but {2} is not.
TEST(MatroidExamplesTest, AxiomsHeredityFailure) {
  Matroid m = FromPredicate(4, [](const SubsetMask& s) {
    const uint64_t b = s.low_bits();
    return b == 0 || b == 1 || b == 2 || b == 3 || b == 12;
  });
  absl::StatusOr<AxiomVerdict> v = CheckAxioms(m);
  ASSERT_TRUE(v.ok());
  EXPECT_FALSE(v->ok);
  EXPECT_EQ(v->violated, "M2");
  EXPECT_TRUE(m.IsIndependent(v->y));
  EXPECT_FALSE(m.IsIndependent(v->x));
  EXPECT_TRUE(v->x.IsSubsetOf(v->y));
}

TEST(MatroidExamplesTest, AxiomsRankOnePasses) {
  Matroid m = FromPredicate(2, [](const SubsetMask& s) { return s.Count() <= 1; });
  absl::StatusOr<AxiomVerdict> v = CheckAxioms(m);
  ASSERT_TRUE(v.ok());
  EXPECT_TRUE(v->ok);
  EXPECT_TRUE(CheckAxioms(MustCompile(Uniform(4, 2)))->ok);
}

}  // namespace
}  // namespace exactbasis
