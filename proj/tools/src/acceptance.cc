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

#include "exactbasis/acceptance.h"

#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "exactbasis/algebraic.h"
#include "exactbasis/base_polytope.h"
#include "exactbasis/catalog.h"
#include "exactbasis/cli.h"
#include "exactbasis/exact_solver.h"
#include "exactbasis/exchange_lab.h"
#include "exactbasis/io.h"
#include "exactbasis/matroid_spec.h"
#include "exactbasis/prime_field.h"
#include "exactbasis/reductions.h"
#include "exactbasis/rng.h"

namespace exactbasis::acceptance {
namespace {

int64_t Scaled(int64_t full, double scale) {
  return std::max<int64_t>(1, static_cast<int64_t>(full * scale + 0.5));
}

SubsetMask RandomBasis(Rng& rng, const Matroid& m) {
  const int n = m.ground_size();
  std::vector<ElementId> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[UniformInt(rng, 0, i)]);
  SubsetMask b(n);
  for (ElementId e : order) {
    b.Insert(e);
    if (!m.IsIndependent(b)) b.Erase(e);
  }
  return b;
}

// Exhaustive checks of an LP vertex: feasibility, no violated rank cut, and
// a tight system of full column rank. Empty string when all hold.
std::string CheckVertex(const Matroid& m, const WeightMatrix& w,
                        absl::Span<const int64_t> beta, const LpOutcome& lp) {
  const int n = m.ground_size();
  const std::vector<mpq_class>& x = lp.point;
  if (static_cast<int>(x.size()) != n) return "point has the wrong length";
  for (int i = 0; i < w.m(); ++i) {
    mpq_class s = 0;
    for (int e = 0; e < n; ++e) s += w.at(i, e) * x[e];
    if (s != beta[i]) return absl::StrCat("row ", i, " misses its target");
  }
  for (int e = 0; e < n; ++e) {
    if (x[e] < 0 || x[e] > 1) return "coordinate outside [0, 1]";
  }
  absl::StatusOr<RankTable> table = RankTable::Build(m);
  if (!table.ok()) return std::string(table.status().message());
  const uint64_t full = (uint64_t{1} << n) - 1;
  std::vector<mpq_class> sum(full + 1);
  PrimeField f(kMersenne61);
  std::vector<uint64_t> rows;
  int row_count = 0;
  auto add_row = [&](auto&& coef) {
    for (int e = 0; e < n; ++e) rows.push_back(coef(e));
    ++row_count;
  };
  for (int i = 0; i < w.m(); ++i) {
    add_row([&](int e) { return f.FromInt(w.at(i, e)); });
  }
  for (int e = 0; e < n; ++e) {
    if (x[e] == 0) add_row([&](int j) { return uint64_t{j == e}; });
  }
  for (uint64_t bits = 1; bits <= full; ++bits) {
    sum[bits] = sum[bits & (bits - 1)] + x[std::countr_zero(bits)];
    const int r = table->rank(bits);
    if (sum[bits] > r) return absl::StrCat("violated rank cut on mask ", bits);
    if (sum[bits] == r) {
      add_row([&](int e) { return uint64_t{(bits >> e) & 1u}; });
    }
  }
  if (sum[full] != table->rank(full)) return "x(E) differs from the rank";
  if (f.Rank(rows, row_count, n) == n) return "";
  // The modular rank never exceeds the rational one; confirm over Q.
  std::vector<std::vector<mpq_class>> q(row_count, std::vector<mpq_class>(n));
  for (int i = 0; i < row_count; ++i) {
    for (int e = 0; e < n; ++e) {
      const uint64_t v = rows[static_cast<size_t>(i) * n + e];
      q[i][e] = v > kMersenne61 / 2 ? -static_cast<int64_t>(kMersenne61 - v)
                                    : static_cast<int64_t>(v);
    }
  }
  if (ExactRank(q, n) != n) return "tight system is rank deficient";
  return "";
}

Criterion OracleAndLp(const Options& o, Criterion& lp_criterion) {
  const int64_t total = Scaled(10'000, o.scale);
  int64_t disagreements = 0, found = 0, lp_vertices = 0, lp_infeasible = 0;
  std::string first_problem, first_lp_problem;
  for (int64_t i = 0; i < total; ++i) {
    Rng rng(SubSeed(o.seed, "accept-oracle", i));
    const SpecFamily family = kAllFamilies[i % 9];
    const int n = static_cast<int>(UniformInt(rng, 1, 12));
    const int rows = static_cast<int>(UniformInt(rng, 1, 2));
    const int64_t delta = UniformInt(rng, 1, 2);
    RandomInstance inst = RandomExactInstance(rng, family, n, rows, delta);
    const std::string id = absl::StrCat(FamilyName(family), " #", i);
    absl::StatusOr<Matroid> m = Compile(inst.spec);
    absl::StatusOr<SolveReport> brute =
        m.ok() ? BruteForceSolve(*m, inst.weights, inst.beta)
               : absl::StatusOr<SolveReport>(m.status());
    absl::StatusOr<SolveReport> fast =
        m.ok() ? Solve(*m, inst.weights, inst.beta,
                       SolveOptions{std::nullopt, SubSeed(o.seed, "accept-solve", i), 1})
               : absl::StatusOr<SolveReport>(m.status());
    bool ok = brute.ok() && fast.ok();
    if (ok) {
      const bool b_found = brute->status == SolveReport::Status::kFound;
      const bool f_found = fast->status == SolveReport::Status::kFound;
      ok = b_found == f_found &&
           (!f_found || IsExactBasis(*Compile(inst.spec), inst.weights,
                                     inst.beta, *fast->basis));
      found += b_found;
    }
    if (!ok) {
      ++disagreements;
      if (first_problem.empty()) first_problem = id;
      continue;
    }
    absl::StatusOr<LpOutcome> lp =
        LpVertex(*m, inst.weights, inst.beta, SubSeed(o.seed, "accept-lp", i));
    std::string problem;
    if (!lp.ok()) {
      problem = std::string(lp.status().message());
    } else if (lp->status == LpOutcome::Status::kInfeasible) {
      ++lp_infeasible;
      if (brute->status == SolveReport::Status::kFound) {
        problem = "relaxation infeasible but an exact basis exists";
      }
    } else {
      ++lp_vertices;
      problem = CheckVertex(*m, inst.weights, inst.beta, *lp);
    }
    if (!problem.empty() && first_lp_problem.empty()) {
      first_lp_problem = absl::StrCat(id, ": ", problem);
    }
  }
  lp_criterion.name = "lp_vertex_correctness";
  lp_criterion.pass = first_lp_problem.empty();
  lp_criterion.detail =
      absl::StrCat(lp_vertices, " vertices and ", lp_infeasible,
                   " infeasible relaxations checked exhaustively",
                   first_lp_problem.empty() ? "" : "; first failure: ",
                   first_lp_problem);
  Criterion c{"oracle_agreement", disagreements == 0,
              absl::StrCat(total, " instances over 9 families, ", found,
                           " feasible, ", disagreements, " disagreements",
                           first_problem.empty() ? "" : "; first: ", first_problem)};
  return c;
}

Criterion ProximityCatalog(const Options& o) {
  int64_t count = 0, passed = 0, index = 0;
  mpq_class max_ratio = 0, max_observed = 0;
  std::string worst;
  for (const CatalogEntry& entry : SmallCatalog()) {
    if (entry.spec.GroundSize() > 14) continue;
    absl::StatusOr<Matroid> m = Compile(entry.spec);
    if (!m.ok()) return {"proximity_bound", false, entry.name};
    for (int t = 0; t < 5; ++t) {
      Rng rng(SubSeed(o.seed, "accept-proximity", index++));
      WeightMatrix w = *WeightMatrix::FromRows(
          m->ground_size(), RandomWeightRows(rng, 1, m->ground_size(), 1));
      const std::vector<int64_t> beta = w.Apply(RandomBasis(rng, *m));
      absl::StatusOr<BoundReport> r = ProximityExact(
          *m, w, beta, SubSeed(o.seed, "accept-proximity-lp", index));
      ++count;
      if (!r.ok() || r->vacuous) continue;
      passed += r->pass;
      if (r->ratio > max_ratio || worst.empty()) {
        max_ratio = r->ratio;
        worst = absl::StrCat(entry.name, "/", t);
      }
      if (r->observed > max_observed) max_observed = r->observed;
    }
  }
  return {"proximity_bound", count == passed,
          absl::StrCat(passed, "/", count, " catalog instances within ",
                       ProximityBound(1, 1).get_str(), "; max distance ",
                       max_observed.get_str(), ", max ratio ", max_ratio.get_str(),
                       " at ", worst)};
}

Criterion SensitivityCatalog(const Options& o) {
  int64_t pairs = 0, passed = 0, index = 0, max_observed = 0;
  mpq_class max_ratio = 0;
  std::string worst;
  for (const CatalogEntry& entry : SmallCatalog()) {
    if (entry.spec.GroundSize() > 12) continue;
    absl::StatusOr<Matroid> m = Compile(entry.spec);
    if (!m.ok()) return {"sensitivity_bound", false, entry.name};
    for (int rows = 1; rows <= 2; ++rows) {
      for (int64_t delta = 1; delta <= 2; ++delta) {
        Rng rng(SubSeed(o.seed, "accept-sensitivity", index++));
        WeightMatrix w = *WeightMatrix::FromRows(
            m->ground_size(), RandomWeightRows(rng, rows, m->ground_size(), delta));
        absl::StatusOr<SymdiffSweep> s = MinSymdiffAllPairs(*m, w);
        if (!s.ok()) {
          return {"sensitivity_bound", false,
                  absl::StrCat(entry.name, ": ", s.status().message())};
        }
        pairs += s->pairs;
        passed += s->passed;
        if (s->max_ratio > max_ratio || worst.empty()) {
          max_ratio = s->max_ratio;
          worst = absl::StrCat(entry.name, "/m", rows, "/d", delta);
        }
        max_observed = std::max(max_observed, s->max_observed);
      }
    }
  }
  return {"sensitivity_bound", pairs == passed && pairs > 0,
          absl::StrCat(passed, "/", pairs, " basis pairs within bound; max |A'-B'| ",
                       max_observed, ", max ratio ", max_ratio.get_str(), " at ",
                       worst)};
}

Criterion LowerBounds() {
  std::vector<std::string> failures;
  auto check = [&](LowerBoundKind kind, int n) {
    const std::string id = absl::StrCat(
        kind == LowerBoundKind::kSensitivity ? "sensitivity" : "proximity", " n=", n);
    absl::StatusOr<LowerBoundInstance> inst = MakeLowerBoundInstance(kind, n);
    if (!inst.ok()) return failures.push_back(id);
    absl::StatusOr<LowerBoundCheck> c = VerifyLowerBound(*inst);
    if (!c.ok() || !c->ok) return failures.push_back(id);
    for (int64_t v : inst->weights) {
      if (v != 0 && v != 1) return failures.push_back(id);
    }
    if (kind == LowerBoundKind::kSensitivity) {
      const auto& b = c->common_bases;
      const bool good = b.size() == 2 && !b[0].Intersects(b[1]) &&
                        b[0].Count() == n / 2 && b[1].Count() == n / 2 &&
                        c->observed_distance == n;
      if (!good) failures.push_back(id);
    } else {
      mpq_class claimed(3 * n, 4);
      claimed.canonicalize();
      const bool good = c->exact_bases.size() == 1 && c->vertex_verified &&
                        c->observed_distance == claimed;
      if (!good) failures.push_back(id);
    }
  };
  for (int n = 4; n <= 12; n += 2) check(LowerBoundKind::kSensitivity, n);
  check(LowerBoundKind::kProximity, 8);
  check(LowerBoundKind::kProximity, 12);
  std::string detail = "sensitivity n=4..12 and proximity n=8,12 reproduced";
  if (!failures.empty()) {
    detail = "failed:";
    for (const auto& f : failures) absl::StrAppend(&detail, " ", f);
  }
  return {"lower_bound_instances", failures.empty(), detail};
}

MatroidSpec RandomRationalLinear(Rng& rng, int r, int n) {
  std::vector<mpq_class> entries;
  for (int i = 0; i < r * n; ++i) entries.emplace_back(UniformInt(rng, -3, 3));
  return RationalLinear(r, n, std::move(entries));
}

Criterion Algebraic(const Options& o) {
  // K4 with unit weights: every basis is a spanning tree of weight 3.
  const MatroidSpec k4 =
      Graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  Matroid k4m = *Compile(k4);
  bool k4_ok = EnumerateBases(k4m, 100).bases.size() == 16;
  absl::StatusOr<Representation> k4rep = RepresentationOf(k4);
  const std::vector<int64_t> ones(6, 1);
  for (uint64_t s = 0; s < 5 && k4rep.ok(); ++s) {
    absl::StatusOr<GeneratingPolynomial> p =
        GeneratingPoly(*k4rep, ones, SubSeed(o.seed, "accept-k4", s));
    k4_ok &= p.ok() && p->SupportWeights() == std::vector<int64_t>{3};
    absl::StatusOr<AlgebraicOutcome> hit =
        ExactBasis1d(k4m, *k4rep, ones, 3, SubSeed(o.seed, "accept-k4", s));
    k4_ok &= hit.ok() && hit->basis.has_value() && hit->basis->Count() == 3;
  }
  k4_ok &= k4rep.ok();

  const int64_t total = Scaled(1000, o.scale);
  int64_t feasible = 0, misses = 0, errors = 0;
  for (int64_t i = 0; i < total; ++i) {
    Rng rng(SubSeed(o.seed, "accept-algebraic", i));
    const int r = static_cast<int>(UniformInt(rng, 1, 5));
    const int n = static_cast<int>(UniformInt(rng, r, 10));
    const int rows = i % 2 == 0 ? 1 : 2;
    const int64_t delta = UniformInt(rng, 1, 2);
    const MatroidSpec spec = RandomRationalLinear(rng, r, n);
    Matroid m = *Compile(spec);
    WeightMatrix w = *WeightMatrix::FromRows(n, RandomWeightRows(rng, rows, n, delta));
    std::vector<int64_t> beta;
    if (UniformInt(rng, 0, 1) == 0) {
      beta = w.Apply(RandomBasis(rng, m));
    } else {
      for (int j = 0; j < rows; ++j) beta.push_back(UniformInt(rng, -r * delta, r * delta));
    }
    absl::StatusOr<SolveReport> brute = BruteForceSolve(m, w, beta);
    const uint64_t seed = SubSeed(o.seed, "accept-algebraic-run", i);
    std::optional<SubsetMask> basis;
    bool ran = false;
    if (rows == 1) {
      absl::StatusOr<Representation> rep = RepresentationOf(spec);
      if (rep.ok()) {
        absl::StatusOr<AlgebraicOutcome> out =
            ExactBasis1d(m, *rep, w.Row(0), beta[0], seed, 3);
        if (out.ok()) {
          ran = true;
          basis = out->basis;
        }
      }
    } else {
      absl::StatusOr<SolveReport> out =
          SolveLinear(spec, w, beta, LinearSolveOptions{.seed = seed, .retries = 3});
      if (out.ok()) {
        ran = true;
        basis = out->basis;
      }
    }
    if (!brute.ok() || !ran ||
        (basis.has_value() && !IsExactBasis(m, w, beta, *basis))) {
      ++errors;
      continue;
    }
    if (brute->status == SolveReport::Status::kFound) {
      ++feasible;
      misses += !basis.has_value();
    }
  }
  const bool rate_ok = misses * 1000 <= std::max<int64_t>(feasible, 1);
  return {"algebraic_solver", k4_ok && errors == 0 && rate_ok,
          absl::StrCat("K4 support {3} with 16 trees over 5 seeds: ",
                       k4_ok ? "yes" : "no", "; ", total,
                       " rational linear instances, ", feasible, " feasible, ",
                       misses, " one-sided misses, ", errors, " errors")};
}

std::vector<ConstraintSpec> RandomConstraints(Rng& rng, const Matroid& m) {
  const int n = m.ground_size();
  const SubsetMask b = RandomBasis(rng, m);
  std::vector<ConstraintSpec> out;
  if (UniformInt(rng, 0, 4) == 0) {
    // Group Z_{m1} x ... with a target near a basis sum.
    const int factors = static_cast<int>(UniformInt(rng, 1, 2));
    std::vector<int64_t> moduli, target(factors, 0);
    for (int k = 0; k < factors; ++k) moduli.push_back(UniformInt(rng, 2, 3));
    std::vector<std::vector<int64_t>> labels(n, std::vector<int64_t>(factors));
    for (int e = 0; e < n; ++e) {
      for (int k = 0; k < factors; ++k) labels[e][k] = UniformInt(rng, 0, moduli[k] - 1);
    }
    for (int k = 0; k < factors; ++k) {
      b.ForEach([&](ElementId e) { target[k] += labels[e][k]; });
      target[k] = (target[k] + UniformInt(rng, 0, 1)) % moduli[k];
    }
    absl::StatusOr<std::vector<ConstraintSpec>> g = ReduceGroup(moduli, labels, target);
    if (g.ok()) return *g;
  }
  const int count = static_cast<int>(UniformInt(rng, 1, 2));
  for (int k = 0; k < count; ++k) {
    std::vector<int64_t> w(n);
    for (auto& v : w) v = UniformInt(rng, -2, 2);
    int64_t at_b = 0;
    b.ForEach([&](ElementId e) { at_b += w[e]; });
    const int64_t t = at_b + UniformInt(rng, -1, 1);
    switch (UniformInt(rng, 0, 3)) {
      case 0: out.push_back(Equality(w, t)); break;
      case 1: out.push_back(LessEqual(w, t)); break;
      case 2: out.push_back(GreaterEqual(w, t)); break;
      default: {
        const int64_t p = std::array<int64_t, 3>{2, 3, 5}[UniformInt(rng, 0, 2)];
        // Residues are taken in [0, p).
        for (auto& v : w) v = ((v % p) + p) % p;
        int64_t r = 0;
        b.ForEach([&](ElementId e) { r += w[e]; });
        r += UniformInt(rng, 0, 1);
        out.push_back(Congruence(w, p, r % p));
      }
    }
  }
  return out;
}

Criterion Reductions(const Options& o) {
  const int64_t total = Scaled(360, o.scale);
  int64_t feasible = 0, failures = 0;
  std::string first;
  for (int64_t i = 0; i < total; ++i) {
    Rng rng(SubSeed(o.seed, "accept-reduce", i));
    const SpecFamily family = kAllFamilies[i % 9];
    const int n = static_cast<int>(UniformInt(rng, 2, 8));
    const MatroidSpec spec = RandomSpec(rng, family, n);
    Matroid m = *Compile(spec);
    const std::vector<ConstraintSpec> cs = RandomConstraints(rng, m);
    bool exists = false;
    ForEachBasis(m, [&](const SubsetMask& b) {
      for (const auto& c : cs) {
        if (!Satisfies(c, b)) return true;
      }
      exists = true;
      return false;
    });
    absl::StatusOr<ConstrainedReport> r = SolveConstrained(
        spec, cs, SolveOptions{std::nullopt, SubSeed(o.seed, "accept-reduce-solve", i), 1});
    bool ok = r.ok();
    if (ok) {
      const bool got = r->report.status == SolveReport::Status::kFound;
      ok = got == exists;
      if (got) {
        const SubsetMask& b = *r->report.basis;
        ok &= b.Count() == m.Rank() && m.IsIndependent(b);
        for (const auto& c : cs) ok &= Satisfies(c, b);
      }
      // The reduced instance keeps the original elements in place.
      for (int e = 0; e < n && ok; ++e) ok = r->reduced.element_map[e] == e;
    }
    feasible += exists;
    if (!ok) {
      ++failures;
      if (first.empty()) first = absl::StrCat(FamilyName(family), " #", i);
    }
  }
  return {"reduction_round_trip", failures == 0,
          absl::StrCat(total, " constrained instances with n <= 8, ", feasible,
                       " feasible, ", failures, " mismatches",
                       first.empty() ? "" : "; first: ", first)};
}

Criterion AggregationIdentity(const Options& o) {
  const int64_t total = Scaled(100, o.scale);
  int64_t checks = 0, failures = 0;
  for (int64_t i = 0; i < total; ++i) {
    Rng rng(SubSeed(o.seed, "accept-aggregate", i));
    const int r = static_cast<int>(UniformInt(rng, 1, 5));
    const int n = static_cast<int>(UniformInt(rng, r, 10));
    const int64_t delta = UniformInt(rng, 1, 2);
    const MatroidSpec spec = RandomRationalLinear(rng, r, n);
    Matroid m = *Compile(spec);
    WeightMatrix w = *WeightMatrix::FromRows(n, RandomWeightRows(rng, 2, n, delta));
    const std::vector<int64_t> beta = w.Apply(RandomBasis(rng, m));
    std::vector<int> x(n);
    absl::StatusOr<LpOutcome> lp = LpVertex(m, w, beta, SubSeed(o.seed, "accept-agg-lp", i));
    if (lp.ok() && lp->status == LpOutcome::Status::kVertex) {
      x = RoundPoint(lp->point);
    } else {
      for (int& v : x) v = static_cast<int>(UniformInt(rng, 0, 1));
    }
    const std::vector<ElementId> xs = [&] {
      std::vector<ElementId> v;
      for (int e = 0; e < n; ++e) {
        if (x[e]) v.push_back(e);
      }
      return v;
    }();
    const SubsetMask xmask = SubsetMask::FromElements(n, xs);
    for (int64_t gamma = 0; gamma <= n; ++gamma) {
      absl::StatusOr<Aggregation> a = AggregateTo1d(w, beta, x, gamma);
      if (!a.ok()) {
        ++failures;
        continue;
      }
      ForEachBasis(m, [&](const SubsetMask& b) {
        int64_t s = 0;
        b.ForEach([&](ElementId e) { s += a->w[e]; });
        const bool lhs = s == a->alpha;
        const bool rhs = (b ^ xmask).Count() == gamma && w.Apply(b) == beta;
        ++checks;
        failures += lhs != rhs;
        return true;
      });
    }
  }
  return {"aggregation_identity", failures == 0,
          absl::StrCat(total, " instances, ", checks, " (basis, gamma) pairs, ",
                       failures, " mismatches")};
}

std::pair<int, std::string> RunCli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> full = {"exactbasis"};
  full.insert(full.end(), args.begin(), args.end());
  const int code = cli::Run(full, out, err);
  return {code, out.str()};
}

Criterion Determinism(const Options& o) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       absl::StrCat("exactbasis-accept-", getpid(), "-", o.seed);
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const MatroidSpec& spec,
                   const WeightMatrix& w, const std::vector<int64_t>& beta) {
    io::InstanceDocument doc;
    doc.matroid = spec;
    doc.weights = w.Rows();
    doc.target = beta;
    const std::string path = (dir / name).string();
    std::ofstream(path) << io::SerializeInstance(doc);
    return path;
  };
  Rng rng(SubSeed(o.seed, "accept-determinism"));
  RandomInstance g = RandomExactInstance(rng, SpecFamily::kGraphic, 12, 2, 2);
  const std::string graphic = write("graphic.json", g.spec, g.weights, g.beta);
  const MatroidSpec lin = RandomRationalLinear(rng, 4, 9);
  WeightMatrix lw = *WeightMatrix::FromRows(9, RandomWeightRows(rng, 2, 9, 2));
  const std::vector<int64_t> lbeta = lw.Apply(RandomBasis(rng, *Compile(lin)));
  const std::string linear = write("linear.json", lin, lw, lbeta);

  const std::string seed = std::to_string(o.seed);
  const std::vector<std::vector<std::string>> commands = {
      {"--seed", seed, "solve", "--instance", graphic},
      {"--seed", seed, "--jobs", "4", "solve", "--instance", graphic},
      {"--seed", seed, "lp-vertex", "--instance", graphic},
      {"--seed", seed, "algebraic-solve", "--instance", linear},
      {"--seed", seed, "lab", "sensitivity", "--n-max", "6"},
      {"--seed", seed, "lab", "proximity", "--n-max", "8", "--trials", "2"},
      {"--seed", seed, "lab", "lowerbound", "--kind", "proximity", "--n", "8"},
  };
  int mismatches = 0;
  std::vector<std::pair<int, std::string>> firsts;
  for (const auto& c : commands) {
    const auto a = RunCli(c);
    const auto b = RunCli(c);
    mismatches += a != b || a.second.empty();
    firsts.push_back(a);
  }
  // Thread count must not change the document.
  mismatches += firsts[0] != firsts[1];

  const int64_t total = Scaled(50, o.scale);
  for (int64_t i = 0; i < total; ++i) {
    Rng r(SubSeed(o.seed, "accept-jobs", i));
    RandomInstance inst = RandomExactInstance(r, kAllFamilies[i % 9], 12, 2, 2);
    Matroid m = *Compile(inst.spec);
    std::string docs[2];
    for (int k = 0; k < 2; ++k) {
      absl::StatusOr<SolveReport> rep =
          Solve(m, inst.weights, inst.beta,
                SolveOptions{std::nullopt, o.seed, k == 0 ? 1 : 4});
      if (!rep.ok()) {
        docs[k] = std::string(rep.status().message());
        continue;
      }
      io::ResultDocument d;
      d.status = StatusName(rep->status);
      if (rep->basis) d.basis = rep->basis->Elements();
      d.stats = rep->stats;
      d.window_radius = rep->window_radius_used;
      docs[k] = io::SerializeResult(d);
    }
    mismatches += docs[0] != docs[1];
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return {"determinism", mismatches == 0,
          absl::StrCat(commands.size(), " CLI commands run twice, jobs 1 vs 4, and ",
                       total, " in-process solves; ", mismatches, " differences")};
}

Criterion Smoke(const Options& o) {
  const int n = 200;
  Rng rng(SubSeed(o.seed, "accept-smoke"));
  const int vertices = n / 3;
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < vertices; ++v) {
    edges.emplace_back(static_cast<int>(UniformInt(rng, 0, v - 1)), v);
  }
  while (static_cast<int>(edges.size()) < n) {
    const int a = static_cast<int>(UniformInt(rng, 0, vertices - 1));
    const int b = static_cast<int>(UniformInt(rng, 0, vertices - 1));
    if (a != b) edges.emplace_back(a, b);
  }
  const MatroidSpec spec = Graphic(vertices, edges);
  Matroid m = *Compile(spec);
  WeightMatrix w = *WeightMatrix::FromRows(n, RandomWeightRows(rng, 1, n, 1));
  const std::vector<int64_t> beta = w.Apply(RandomBasis(rng, m));
  const auto start = std::chrono::steady_clock::now();
  absl::StatusOr<SolveReport> r = Solve(m, w, beta, SolveOptions{std::nullopt, o.seed, 1});
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool found = r.ok() && r->status == SolveReport::Status::kFound &&
                     IsExactBasis(*Compile(spec), w, beta, *r->basis);
  Criterion c{"smoke_graphic_n200", found && secs < 60.0,
              found ? "planted target found on a 200-edge graph, limit 60 s"
                    : "solver did not return a verified basis"};
  return c;
}

}  // namespace

std::vector<Criterion> RunAll(const Options& options,
                              const std::function<void(const Criterion&)>& report) {
  std::vector<Criterion> out;
  auto timed = [&](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    Criterion c = fn();
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
    out.push_back(c);
    if (report) report(c);
  };
  Criterion lp;
  const auto start = std::chrono::steady_clock::now();
  Criterion oracle = OracleAndLp(options, lp);
  const double both =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  oracle.seconds = both;
  lp.seconds = both;
  for (Criterion* c : {&oracle, &lp}) {
    out.push_back(*c);
    if (report) report(*c);
  }
  timed([&] { return ProximityCatalog(options); });
  timed([&] { return SensitivityCatalog(options); });
  timed([&] { return LowerBounds(); });
  timed([&] { return Algebraic(options); });
  timed([&] { return Reductions(options); });
  timed([&] { return AggregationIdentity(options); });
  timed([&] { return Determinism(options); });
  timed([&] { return Smoke(options); });
  return out;
}

std::string FormatLine(const Criterion& c) {
  return absl::StrFormat("%s %s (%.2fs): %s", c.pass ? "PASS" : "FAIL", c.name,
                         c.seconds, c.detail);
}

}  // namespace exactbasis::acceptance
