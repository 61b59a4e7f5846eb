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

#include "exactbasis/cli.h"

#include <gtest/gtest.h>

#include <sstream>

#include "exactbasis/io.h"
#include "exactbasis/matroid_spec.h"

namespace exactbasis::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome RunArgs(std::vector<std::string> args) {
  args.insert(args.begin(), "exactbasis");
  std::ostringstream out, err;
  Outcome o;
  o.code = Run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string Data(const std::string& name) {
  return std::string(EXACTBASIS_TEST_DATA) + "/" + name;
}

io::ResultDocument Result(const Outcome& o) {
  absl::StatusOr<io::ResultDocument> r = io::ParseResult(o.out);
  EXPECT_TRUE(r.ok()) << r.status() << "\n" << o.out << o.err;
  return r.ok() ? *r : io::ResultDocument{};
}

TEST(CliTest, SolveFeasible) {
  Outcome o = RunArgs({"solve", "--instance", Data("triangle.json"), "--seed", "7"});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.status, "found");
  EXPECT_EQ(r.seed, 7u);
  ASSERT_TRUE(r.basis.has_value());
  EXPECT_EQ(r.basis->size(), 2u);
  EXPECT_TRUE(r.solver.fpt);
}

TEST(CliTest, BruteForceAgrees) {
  Outcome fast = RunArgs({"solve", "--instance", Data("triangle.json")});
  Outcome brute = RunArgs({"solve", "--instance", Data("triangle.json"), "--brute-force"});
  EXPECT_EQ(fast.code, brute.code);
  EXPECT_EQ(Result(fast).status, Result(brute).status);
  EXPECT_TRUE(Result(brute).solver.brute_force);
}

TEST(CliTest, InfeasibleExitsTwo) {
  Outcome o = RunArgs({"solve", "--instance", Data("triangle_infeasible.json")});
  EXPECT_EQ(o.code, kExitInfeasible);
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.status, "infeasible");
  EXPECT_FALSE(r.basis.has_value());
}

TEST(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(RunArgs({}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"solve"}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"solve", "--instance", Data("missing.json")}).code, kExitUsage);
  EXPECT_EQ(RunArgs({"lab", "lowerbound", "--kind", "proximity", "--n", "6"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"lab", "lowerbound", "--kind", "other", "--n", "8"}).code,
            kExitUsage);
  EXPECT_EQ(RunArgs({"--jobs", "0", "solve", "--instance", Data("triangle.json")}).code,
            kExitUsage);
}

TEST(CliTest, HelpExitsZero) {
  Outcome o = RunArgs({"--help"});
  EXPECT_EQ(o.code, kExitFound);
  EXPECT_NE(o.out.find("solve"), std::string::npos);
}

TEST(CliTest, ConstrainedSolve) {
  Outcome o = RunArgs({"solve", "--instance", Data("uniform_constrained.json")});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  ASSERT_TRUE(r.basis.has_value());
  // Basis {3, 4}: weights 0 + 1 <= 2 and parity 1 + 0 = 1.
  const std::vector<int64_t> le = {3, 1, 2, 0, 1};
  const std::vector<int64_t> mod = {1, 1, 0, 1, 0};
  int64_t a = 0, b = 0;
  for (ElementId e : *r.basis) {
    a += le[e];
    b += mod[e];
  }
  EXPECT_LE(a, 2);
  EXPECT_EQ(b % 2, 1);
  Outcome brute = RunArgs({"solve", "--instance", Data("uniform_constrained.json"),
                           "--brute-force"});
  EXPECT_EQ(brute.code, kExitFound);
}

TEST(CliTest, LpVertexOnTriangle) {
  Outcome o = RunArgs({"lp-vertex", "--instance", Data("triangle.json")});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.status, "vertex");
  EXPECT_EQ(r.details["face_dimension"], 0);
  ASSERT_EQ(r.details["point"].size(), 3u);
  Outcome bad = RunArgs({"lp-vertex", "--instance", Data("triangle_infeasible.json")});
  EXPECT_EQ(bad.code, kExitInfeasible);
  EXPECT_EQ(Result(bad).status, "infeasible");
}

TEST(CliTest, IntersectWithCertificate) {
  Outcome o = RunArgs({"intersect", "--first", Data("partition_a.json"), "--second",
                       Data("partition_b.json"), "--certify"});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.details["size"], 2);
  EXPECT_TRUE(r.details.contains("witness"));
}

TEST(CliTest, AlgebraicSolve) {
  Outcome o = RunArgs({"algebraic-solve", "--instance", Data("triangle.json")});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  EXPECT_TRUE(Result(o).solver.linear_algebraic);
  Outcome none = RunArgs(
      {"algebraic-solve", "--instance", Data("triangle.json"), "--beta", "5"});
  EXPECT_EQ(none.code, kExitInfeasible);
  Outcome two = RunArgs({"algebraic-solve", "--instance", Data("linear_two_rows.json")});
  EXPECT_EQ(two.code, kExitFound) << two.err;
  Outcome bad = RunArgs(
      {"algebraic-solve", "--instance", Data("triangle.json"), "--beta", "1,2"});
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(CliTest, ReduceEmitsEquivalentInstance) {
  Outcome o = RunArgs({"reduce", "--instance", Data("uniform_constrained.json")});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.status, "reduced");
  absl::StatusOr<io::InstanceDocument> reduced =
      io::ParseInstance(r.details["instance"].dump());
  ASSERT_TRUE(reduced.ok()) << reduced.status();
  EXPECT_EQ(reduced->weights.size(), 2u);
  EXPECT_EQ(RunArgs({"reduce", "--instance", Data("triangle.json")}).code, kExitUsage);
}

TEST(CliTest, LowerBoundProximityObservesSix) {
  Outcome o = RunArgs({"lab", "lowerbound", "--kind", "proximity", "--n", "8"});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.status, "pass");
  EXPECT_EQ(r.details["observed_distance"], "6");
  EXPECT_EQ(r.details["exact_bases"].size(), 1u);
  EXPECT_EQ(r.details["vertex_verified"], true);
}

TEST(CliTest, LowerBoundSensitivity) {
  Outcome o = RunArgs({"lab", "lowerbound", "--kind", "sensitivity", "--n", "6"});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.details["common_bases"].size(), 2u);
  EXPECT_EQ(r.details["observed_distance"], "6");
}

TEST(CliTest, LabSweepsPass) {
  Outcome s = RunArgs({"lab", "sensitivity", "--n-max", "6"});
  EXPECT_EQ(s.code, kExitFound) << s.err;
  io::ResultDocument rs = Result(s);
  EXPECT_EQ(rs.status, "pass");
  EXPECT_FALSE(rs.bound_reports.empty());
  Outcome p = RunArgs({"lab", "proximity", "--n-max", "8", "--trials", "2"});
  EXPECT_EQ(p.code, kExitFound) << p.err;
  EXPECT_EQ(Result(p).status, "pass");
}

TEST(CliTest, Applications) {
  Outcome fes = RunArgs({"app", "feedback-edge-set", "--instance", Data("feedback_k4.json")});
  EXPECT_EQ(fes.code, kExitFound) << fes.err;
  EXPECT_EQ(Result(fes).details["removed"].size(), 3u);

  Outcome cb = RunArgs({"app", "closest-base", "--instance", Data("feedback_k4.json"),
                        "--bases", "0,1,2;0,3,4"});
  EXPECT_EQ(cb.code, kExitFound) << cb.err;
  EXPECT_EQ(Result(cb).details["max_distance"], 1);
  EXPECT_EQ(RunArgs({"app", "closest-base", "--instance", Data("feedback_k4.json"),
                     "--bases", "0,1"}).code,
            kExitUsage);

  Outcome fm = RunArgs({"app", "fair-matching", "--instance", Data("fair_matching.json")});
  EXPECT_EQ(fm.code, kExitFound) << fm.err;
  EXPECT_EQ(Result(fm).details["matching"].size(), 2u);
  EXPECT_EQ(RunArgs({"app", "fair-matching", "--instance", Data("triangle.json")}).code,
            kExitUsage);

  Outcome gb = RunArgs({"app", "group-base", "--instance", Data("group_uniform.json"),
                        "--moduli", "2,3"});
  EXPECT_EQ(gb.code, kExitFound) << gb.err;
  EXPECT_EQ(RunArgs({"app", "group-base", "--instance", Data("group_uniform.json"),
                     "--moduli", "2"}).code,
            kExitUsage);
}

TEST(CliTest, OutputIsByteIdenticalAcrossRunsAndJobs) {
  const std::vector<std::string> base = {"solve", "--instance", Data("feedback_k4.json"),
                                         "--seed", "5"};
  Outcome a = RunArgs(base);
  Outcome b = RunArgs(base);
  std::vector<std::string> four = base;
  four.insert(four.end(), {"--jobs", "4"});
  Outcome c = RunArgs(four);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(a.code, c.code);
}

TEST(CliTest, QuickSelftest) {
  Outcome o = RunArgs({"selftest", "--scale", "0.02"});
  EXPECT_EQ(o.code, kExitFound) << o.err;
  io::ResultDocument r = Result(o);
  EXPECT_EQ(r.status, "pass");
  EXPECT_EQ(r.details["criteria"].size(), 10u);
}

}  // namespace
}  // namespace exactbasis::cli
