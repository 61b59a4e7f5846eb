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

#include "exactbasis/base_polytope.h"

#include <gtest/gtest.h>

#include "exactbasis/matroid_spec.h"
#include "exactbasis/rng.h"
#include "exactbasis/simplex.h"

namespace exactbasis {
namespace {

Matroid MustCompile(const MatroidSpec& spec) {
  absl::StatusOr<Matroid> m = Compile(spec);
  EXPECT_TRUE(m.ok()) << m.status();
  return *m;
}

WeightMatrix MustWeights(int n, std::vector<std::vector<int64_t>> rows) {
  absl::StatusOr<WeightMatrix> w = WeightMatrix::FromRows(n, rows);
  EXPECT_TRUE(w.ok()) << w.status();
  return *w;
}

// max x(S) - rank(S) over all S by brute force.
mpq_class MaxViolation(const Matroid& m, const std::vector<mpq_class>& x) {
  const int n = m.ground_size();
  mpq_class best = 0;
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    SubsetMask s = SubsetMask::FromBits(n, bits);
    mpq_class v = -Rank(m, s);
    s.ForEach([&](ElementId e) { v += x[e]; });
    if (v > best) best = v;
  }
  return best;
}

TEST(SimplexTest, SmallBoundedProgram) {
  // max x + y, x + 2y <= 4, 3x + y <= 6, 0 <= x, y <= 10.
  BoundedSimplex lp;
  lp.AddColumn(0, mpq_class(10), 1);
  lp.AddColumn(0, mpq_class(10), 1);
  lp.AddLessEqualRow({{0, 1}, {1, 2}}, 4);
  lp.AddLessEqualRow({{0, 3}, {1, 1}}, 6);
  ASSERT_EQ(lp.Solve(), BoundedSimplex::Result::kOptimal);
  EXPECT_EQ(lp.value(0), mpq_class(8, 5));
  EXPECT_EQ(lp.value(1), mpq_class(6, 5));
  ASSERT_EQ(lp.AddLessEqualRowAndReoptimize({{1, 1}}, 1),
            BoundedSimplex::Result::kOptimal);
  EXPECT_EQ(lp.value(0), mpq_class(5, 3));
  EXPECT_EQ(lp.value(1), 1);
  EXPECT_EQ(lp.AddLessEqualRowAndReoptimize({{0, -1}}, -3),
            BoundedSimplex::Result::kInfeasible);
}

TEST(SimplexTest, InfeasibleEquality) {
  BoundedSimplex lp;
  lp.AddColumn(0, mpq_class(1), 1);
  lp.AddEqualityRow({{0, 1}}, 2);
  EXPECT_EQ(lp.Solve(), BoundedSimplex::Result::kInfeasible);
}

TEST(SimplexTest, UnboundedDetected) {
  BoundedSimplex lp;
  lp.AddColumn(0, std::nullopt, 1);
  lp.AddColumn(0, std::nullopt, 0);
  lp.AddEqualityRow({{0, 1}, {1, -1}}, 0);
  EXPECT_EQ(lp.Solve(), BoundedSimplex::Result::kUnbounded);
}

TEST(SeparationTest, ExhaustiveAndMinimizersAgree) {
  Rng rng(11);
  std::vector<MatroidSpec> specs = {
      Uniform(7, 3),
      Partition({{0, 1, 2}, {3, 4}, {5, 6}}, {1, 2, 1}),
      Graphic(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 4}}),
      DirectSumOf({Uniform(3, 2), Graphic(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}})}),
  };
  for (const MatroidSpec& spec : specs) {
    Matroid m = MustCompile(spec);
    ASSERT_NE(m.minimizer(), nullptr) << spec.KindName();
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<mpq_class> x(m.ground_size());
      for (auto& v : x) {
        v = mpq_class(UniformInt(rng, 0, 6), 6);
        v.canonicalize();
      }
      const mpq_class expected = MaxViolation(m, x);
      absl::StatusOr<std::optional<RankCut>> exhaustive = Separate(m, x);
      ASSERT_TRUE(exhaustive.ok());
      absl::StatusOr<std::optional<SubsetMask>> hook =
          m.minimizer()->FindViolatedCut(m, x);
      ASSERT_TRUE(hook.ok());
      if (expected == 0) {
        EXPECT_FALSE(exhaustive->has_value());
        EXPECT_FALSE(hook->has_value());
        continue;
      }
      ASSERT_TRUE(exhaustive->has_value());
      ASSERT_TRUE(hook->has_value()) << spec.KindName();
      mpq_class got = -(*exhaustive)->rhs;
      (*exhaustive)->subset.ForEach([&](ElementId e) { got += x[e]; });
      EXPECT_EQ(got, expected);
      mpq_class hook_violation = -Rank(m, **hook);
      (*hook)->ForEach([&](ElementId e) { hook_violation += x[e]; });
      EXPECT_GT(hook_violation, 0) << spec.KindName();
      if (spec.KindName() != std::string("graphic") &&
          spec.KindName() != std::string("direct_sum")) {
        EXPECT_EQ(hook_violation, expected) << spec.KindName();
      }
    }
  }
}

TEST(LpVertexTest, UniformOneDimensional) {
  Matroid u = MustCompile(Uniform(3, 1));
  WeightMatrix w = MustWeights(3, {{0, 1, 2}});
  const std::vector<mpq_class> a = {0, 1, 0};
  const std::vector<mpq_class> b = {mpq_class(1, 2), 0, mpq_class(1, 2)};
  bool saw_a = false, saw_b = false;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const std::vector<int64_t> beta = {1};
    absl::StatusOr<LpOutcome> out = LpVertex(u, w, beta, seed);
    ASSERT_TRUE(out.ok()) << out.status();
    ASSERT_EQ(out->status, LpOutcome::Status::kVertex);
    EXPECT_EQ(out->face_dimension, 0);
    if (out->point == a) saw_a = true;
    else if (out->point == b) saw_b = true;
    else ADD_FAILURE() << "unexpected vertex";
  }
  EXPECT_TRUE(saw_a || saw_b);
}

TEST(LpVertexTest, InfeasibleTarget) {
  Matroid u = MustCompile(Uniform(4, 2));
  WeightMatrix w = MustWeights(4, {{0, 1, 1, 2}});
  const std::vector<int64_t> beta = {5};
  absl::StatusOr<LpOutcome> out = LpVertex(u, w, beta, 1);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out->status, LpOutcome::Status::kInfeasible);
}

TEST(LpVertexTest, RandomInstancesGiveFeasibleVertices) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(UniformInt(rng, 2, 8));
    std::vector<mpq_class> entries;
    for (int i = 0; i < 3 * n; ++i) entries.emplace_back(UniformInt(rng, -1, 1));
    Matroid m = MustCompile(RationalLinear(3, n, entries));
    std::vector<std::vector<int64_t>> rows(2, std::vector<int64_t>(n));
    for (auto& row : rows) {
      for (auto& v : row) v = UniformInt(rng, -2, 2);
    }
    WeightMatrix w = MustWeights(n, rows);
    // Target from a random basis so the LP is feasible.
    BasisEnumeration bases = EnumerateBases(m, 1000);
    const SubsetMask& basis =
        bases.bases[UniformInt(rng, 0, bases.bases.size() - 1)];
    const std::vector<int64_t> beta = w.Apply(basis);
    absl::StatusOr<LpOutcome> out = LpVertex(m, w, beta, trial);
    ASSERT_TRUE(out.ok()) << out.status();
    ASSERT_EQ(out->status, LpOutcome::Status::kVertex);
    EXPECT_EQ(MaxViolation(m, out->point), 0);
    mpq_class total = 0;
    for (const auto& v : out->point) {
      EXPECT_GE(v, 0);
      EXPECT_LE(v, 1);
      total += v;
    }
    EXPECT_EQ(total, m.Rank());
    for (int i = 0; i < 2; ++i) {
      mpq_class lhs = 0;
      for (int e = 0; e < n; ++e) lhs += out->point[e] * w.at(i, e);
      EXPECT_EQ(lhs, beta[i]);
    }
    absl::StatusOr<FaceRounding> rounded = RoundToFaceBasis(m, out->point);
    ASSERT_TRUE(rounded.ok()) << rounded.status();
    EXPECT_LE(rounded->distance, rounded->face_dimension);
  }
}

TEST(FaceRoundingTest, HalfIntegralPointOnUniform) {
  Matroid u = MustCompile(Uniform(4, 2));
  const std::vector<mpq_class> x(4, mpq_class(1, 2));
  absl::StatusOr<FaceRounding> r = RoundToFaceBasis(u, x);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->face_dimension, 3);
  EXPECT_EQ(r->distance, 2);
  EXPECT_EQ(r->basis.Count(), 2);
}

MatroidSpec Triangle() { return Graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

TEST(SeparateExamplesTest, SmallCases) {
  Matroid u = MustCompile(Uniform(2, 1));
  absl::StatusOr<std::optional<RankCut>> cut = Separate(u, std::vector<mpq_class>{1, 1});
  ASSERT_TRUE(cut.ok());
  ASSERT_TRUE(cut->has_value());
  EXPECT_EQ((*cut)->subset.Elements(), (std::vector<ElementId>{0, 1}));
  EXPECT_EQ((*cut)->rhs, 1);  // x(S) - rhs = 1
  cut = Separate(u, std::vector<mpq_class>{mpq_class(1, 2), mpq_class(1, 2)});
  ASSERT_TRUE(cut.ok());
  EXPECT_FALSE(cut->has_value());
  cut = Separate(MustCompile(Triangle()), std::vector<mpq_class>{1, 1, 0});
  ASSERT_TRUE(cut.ok());
  EXPECT_FALSE(cut->has_value());
}

TEST(LpVertexExamplesTest, ForcedAndInfeasible) {
  Matroid u = MustCompile(Uniform(2, 1));
  absl::StatusOr<LpOutcome> out =
      LpVertex(u, MustWeights(2, {{0, 1}}), std::vector<int64_t>{0}, 0);
  ASSERT_TRUE(out.ok());
  ASSERT_EQ(out->status, LpOutcome::Status::kVertex);
  EXPECT_EQ(out->point, (std::vector<mpq_class>{1, 0}));
  out = LpVertex(u, MustWeights(2, {{1, 1}}), std::vector<int64_t>{3}, 0);
  ASSERT_TRUE(out.ok());
  EXPECT_EQ(out->status, LpOutcome::Status::kInfeasible);
}

TEST(FaceRoundingExamplesTest, IntegralPointIsItsOwnBasis) {
  Matroid t = MustCompile(Triangle());
  absl::StatusOr<FaceRounding> r = RoundToFaceBasis(t, std::vector<mpq_class>{1, 0, 1});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->basis.Elements(), (std::vector<ElementId>{0, 2}));
  EXPECT_EQ(r->distance, 0);
  EXPECT_EQ(r->face_dimension, 0);
}

TEST(FaceRoundingExamplesTest, SegmentOnUniform) {
  Matroid u = MustCompile(Uniform(3, 1));
  absl::StatusOr<FaceRounding> r = RoundToFaceBasis(
      u, std::vector<mpq_class>{mpq_class(1, 2), 0, mpq_class(1, 2)});
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->basis.Elements() == std::vector<ElementId>{0} ||
              r->basis.Elements() == std::vector<ElementId>{2});
  EXPECT_EQ(r->distance, 1);
  EXPECT_EQ(r->face_dimension, 1);
}

TEST(FaceRoundingExamplesTest, TriangleCentre) {
  Matroid t = MustCompile(Triangle());
  const mpq_class third(2, 3);
  absl::StatusOr<FaceRounding> r = RoundToFaceBasis(t, std::vector<mpq_class>(3, third));
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->basis.Count(), 2);
  EXPECT_EQ(r->distance, mpq_class(4, 3));
  EXPECT_EQ(r->face_dimension, 2);
}

}  // namespace
}  // namespace exactbasis
