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

#include "exactbasis/io.h"

#include <gtest/gtest.h>

#include "exactbasis/catalog.h"
#include "exactbasis/rng.h"

namespace exactbasis::io {
namespace {

constexpr char kMinimal[] = R"({
  "format_version": 1,
  "matroid": {"kind": "uniform", "n": 3, "r": 2},
  "weights": [[1, 2, 3]],
  "target": [3]
})";

TEST(ParseInstanceTest, MinimalUniform) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(kMinimal);
  ASSERT_TRUE(doc.ok()) << doc.status();
  EXPECT_EQ(doc->matroid, Uniform(3, 2));
  EXPECT_EQ(doc->weights, (std::vector<std::vector<int64_t>>{{1, 2, 3}}));
  EXPECT_EQ(doc->target, (std::vector<int64_t>{3}));
  EXPECT_FALSE(doc->constraints.has_value());
}

TEST(ParseInstanceTest, WrongRowLengthNamesTheRow) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(R"({
    "format_version": 1,
    "matroid": {"kind": "uniform", "n": 3, "r": 2},
    "weights": [[1, 2, 3], [1, 2]],
    "target": [3, 1]
  })");
  ASSERT_FALSE(doc.ok());
  EXPECT_EQ(doc.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(doc.status().message().find("weights[1]"), std::string::npos)
      << doc.status();
}

TEST(ParseInstanceTest, UnknownKind) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(R"({
    "format_version": 1,
    "matroid": {"kind": "cyclic", "n": 3},
    "weights": [], "target": []
  })");
  ASSERT_FALSE(doc.ok());
  EXPECT_NE(doc.status().message().find("unknown matroid kind"), std::string::npos)
      << doc.status();
}

TEST(ParseInstanceTest, SyntaxErrorReportsLine) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance("{\n  \"format_version\": 1,\n  oops\n}");
  ASSERT_FALSE(doc.ok());
  EXPECT_NE(doc.status().message().find("line 3"), std::string::npos) << doc.status();
}

TEST(ParseInstanceTest, OutOfRangeWeight) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(R"({
    "format_version": 1,
    "matroid": {"kind": "uniform", "n": 2, "r": 1},
    "weights": [[1, "9999999999999999"]],
    "target": [1]
  })");
  ASSERT_FALSE(doc.ok());
  EXPECT_NE(doc.status().message().find("weights[0][1]"), std::string::npos)
      << doc.status();
}

TEST(ParseInstanceTest, RejectsUnknownField) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(R"({
    "format_version": 1,
    "matroid": {"kind": "uniform", "n": 2, "r": 1},
    "weights": [[1, 1]], "target": [1], "extra": 0
  })");
  EXPECT_FALSE(doc.ok());
}

TEST(ParseInstanceTest, RejectsInvalidMatroid) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(R"({
    "format_version": 1,
    "matroid": {"kind": "uniform", "n": 2, "r": 3},
    "weights": [[1, 1]], "target": [1]
  })");
  EXPECT_FALSE(doc.ok());
}

TEST(ParseInstanceTest, ConstraintsReplaceWeights) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(R"({
    "format_version": 1,
    "matroid": {"kind": "uniform", "n": 3, "r": 1},
    "constraints": [
      {"kind": "less_equal", "weights": [1, 0, 2], "target": 1},
      {"kind": "congruence", "weights": [1, 1, 0], "modulus": 2, "target": 1}
    ]
  })");
  ASSERT_TRUE(doc.ok()) << doc.status();
  ASSERT_TRUE(doc->constraints.has_value());
  EXPECT_EQ((*doc->constraints)[0], LessEqual({1, 0, 2}, 1));
  EXPECT_EQ((*doc->constraints)[1], Congruence({1, 1, 0}, 2, 1));
}

TEST(ParseInstanceTest, ConstraintRowLengthChecked) {
  absl::StatusOr<InstanceDocument> doc = ParseInstance(R"({
    "format_version": 1,
    "matroid": {"kind": "uniform", "n": 3, "r": 1},
    "constraints": [{"kind": "equality", "weights": [1, 0], "target": 1}]
  })");
  EXPECT_FALSE(doc.ok());
}

// parse(serialize(doc)) == doc over every generated family.
TEST(RoundTripTest, GeneratedDocuments) {
  for (int i = 0; i < 180; ++i) {
    Rng rng(SubSeed(11, "io-round-trip", i));
    const SpecFamily family = kAllFamilies[i % 9];
    const int n = static_cast<int>(UniformInt(rng, 1, 12));
    RandomInstance inst = RandomExactInstance(rng, family, n, 2, 2);
    InstanceDocument doc;
    doc.matroid = inst.spec;
    doc.weights = inst.weights.Rows();
    doc.target = inst.beta;
    doc.metadata["family"] = FamilyName(family);
    if (i % 3 == 0) {
      doc.constraints = std::vector<ConstraintSpec>{
          GreaterEqual(doc.weights[0], doc.target[0]),
          Congruence(std::vector<int64_t>(n, 1), 3, 2)};
    }
    const std::string text = SerializeInstance(doc);
    absl::StatusOr<InstanceDocument> back = ParseInstance(text);
    ASSERT_TRUE(back.ok()) << FamilyName(family) << ": " << back.status() << "\n" << text;
    EXPECT_EQ(*back, doc) << text;
    EXPECT_EQ(SerializeInstance(*back), text);
  }
}

TEST(RoundTripTest, PrimeLinearEntriesAreStrings) {
  InstanceDocument doc;
  doc.matroid = PrimeLinear(7, 1, 2, {mpq_class(3), mpq_class(5)});
  doc.weights = {{1, 1}};
  doc.target = {1};
  Json j = EncodeInstance(doc);
  EXPECT_TRUE(j["matroid"]["entries"][0].is_string());
  absl::StatusOr<InstanceDocument> back = ParseInstance(j.dump());
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(*back, doc);
}

TEST(ResultTest, RoundTrip) {
  ResultDocument doc;
  doc.status = "found";
  doc.basis = std::vector<ElementId>{0, 3};
  doc.stats.oracle_calls = 17;
  doc.stats.lp_pivots = 4;
  doc.window_radius = 5;
  doc.seed = UINT64_MAX;
  doc.solver.fpt = true;
  BoundReport r;
  r.instance_id = "x";
  r.observed = mpq_class(3, 2);
  r.proven_bound = mpz_class("8192");
  r.ratio = mpq_class(3, 16384);
  r.pass = true;
  doc.bound_reports.push_back(r);
  doc.details["k"] = "v";
  const std::string text = SerializeResult(doc);
  EXPECT_NE(text.find("\"18446744073709551615\""), std::string::npos);
  EXPECT_NE(text.find("\"3/2\""), std::string::npos);
  absl::StatusOr<ResultDocument> back = ParseResult(text);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_TRUE(SameResult(*back, doc));
  EXPECT_EQ(SerializeResult(*back), text);
}

TEST(ResultTest, BasisOnlyWhenFound) {
  ResultDocument doc;
  doc.status = "infeasible";
  EXPECT_EQ(SerializeResult(doc).find("\"basis\""), std::string::npos);
}

}  // namespace
}  // namespace exactbasis::io
