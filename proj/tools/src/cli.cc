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

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "exactbasis/acceptance.h"
#include "exactbasis/algebraic.h"
#include "exactbasis/base_polytope.h"
#include "exactbasis/catalog.h"
#include "exactbasis/exact_solver.h"
#include "exactbasis/exchange_lab.h"
#include "exactbasis/intersection.h"
#include "exactbasis/io.h"
#include "exactbasis/reductions.h"
#include "exactbasis/rng.h"

namespace exactbasis::cli {
namespace {

using io::Json;
using io::ResultDocument;

int ExitFor(const absl::Status& s) {
  switch (s.code()) {
    case absl::StatusCode::kInternal:
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kUnknown:
      return kExitAlarm;
    default:
      return kExitUsage;
  }
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  uint64_t seed = 0;
  int jobs = 1;
};

int Fail(Context& ctx, const absl::Status& s) {
  ctx.err << "error: " << s << "\n";
  return ExitFor(s);
}

int Emit(Context& ctx, ResultDocument doc, int code) {
  doc.seed = ctx.seed;
  ctx.out << io::SerializeResult(doc);
  return code;
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

absl::StatusOr<io::InstanceDocument> LoadInstance(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<io::InstanceDocument> doc = io::ParseInstance(*text);
  if (!doc.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", doc.status().message()));
  }
  return doc;
}

// A bare matroid encoding or an instance document.
absl::StatusOr<MatroidSpec> LoadMatroid(const std::string& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  Json j = Json::parse(*text, nullptr, false);
  if (!j.is_discarded() && j.is_object() && j.contains("kind")) {
    absl::StatusOr<MatroidSpec> spec = io::DecodeSpec(j, "");
    if (!spec.ok()) {
      return absl::InvalidArgumentError(
          absl::StrCat(path, ": ", spec.status().message()));
    }
    return spec;
  }
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return doc.status();
  return doc->matroid;
}

absl::StatusOr<std::vector<int64_t>> ParseIntList(const std::string& text,
                                                  const char* flag) {
  std::vector<int64_t> out;
  if (text.empty()) return out;
  for (absl::string_view part : absl::StrSplit(text, ',')) {
    int64_t v;
    if (!absl::SimpleAtoi(part, &v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("--", flag, ": \"", part, "\" is not an integer"));
    }
    out.push_back(v);
  }
  return out;
}

Json Ids(const SubsetMask& s) { return s.Elements(); }

void FillReport(ResultDocument& doc, const SolveReport& r) {
  doc.status = StatusName(r.status);
  if (r.basis.has_value()) doc.basis = r.basis->Elements();
  doc.stats = r.stats;
  doc.window_radius = r.window_radius_used;
}

int CodeFor(const SolveReport& r) {
  return r.status == SolveReport::Status::kFound ? kExitFound : kExitInfeasible;
}

// Solves `doc` and re-checks the witness against freshly compiled oracles.
absl::StatusOr<SolveReport> SolveDocument(const io::InstanceDocument& doc,
                                          bool brute, const SolveOptions& opts) {
  absl::StatusOr<Matroid> m = Compile(doc.matroid);
  if (!m.ok()) return m.status();
  SolveReport report;
  if (doc.constraints.has_value()) {
    const auto& cs = *doc.constraints;
    if (brute) {
      if (m->ground_size() > kMaxBruteForceGroundSize) {
        return absl::FailedPreconditionError(absl::StrCat(
            "brute force is limited to n <= ", kMaxBruteForceGroundSize));
      }
      m->Rank();
      const Matroid counted = m->WithFreshCounter();
      report.status = SolveReport::Status::kInfeasible;
      ForEachBasis(counted, [&](const SubsetMask& b) {
        ++report.stats.candidates_tested;
        for (const auto& c : cs) {
          if (!Satisfies(c, b)) return true;
        }
        report.status = SolveReport::Status::kFound;
        report.basis = b;
        return false;
      });
      report.stats.oracle_calls = counted.oracle_calls();
    } else {
      absl::StatusOr<ConstrainedReport> r = SolveConstrained(doc.matroid, cs, opts);
      if (!r.ok()) return r.status();
      report = r->report;
    }
    if (report.basis.has_value()) {
      absl::StatusOr<Matroid> fresh = Compile(doc.matroid);
      bool ok = report.basis->Count() == fresh->Rank() &&
                fresh->IsIndependent(*report.basis);
      for (const auto& c : cs) ok &= Satisfies(c, *report.basis);
      if (!ok) return absl::InternalError("witness failed re-verification");
    }
    return report;
  }
  absl::StatusOr<WeightMatrix> w =
      WeightMatrix::FromRows(m->ground_size(), doc.weights);
  if (!w.ok()) return w.status();
  absl::StatusOr<SolveReport> r =
      brute ? BruteForceSolve(*m, *w, doc.target) : Solve(*m, *w, doc.target, opts);
  if (!r.ok()) return r.status();
  if (r->basis.has_value()) {
    absl::StatusOr<Matroid> fresh = Compile(doc.matroid);
    if (!IsExactBasis(*fresh, *w, doc.target, *r->basis)) {
      return absl::InternalError("witness failed re-verification");
    }
  }
  return r;
}

int CmdSolve(Context& ctx, const std::string& path, bool brute,
             std::optional<int64_t> radius) {
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return Fail(ctx, doc.status());
  SolveOptions opts{radius, ctx.seed, ctx.jobs};
  absl::StatusOr<SolveReport> r = SolveDocument(*doc, brute, opts);
  if (!r.ok()) return Fail(ctx, r.status());
  ResultDocument res;
  FillReport(res, *r);
  res.solver.fpt = !brute;
  res.solver.brute_force = brute;
  if (doc->constraints.has_value()) {
    res.details["constraints"] = static_cast<int64_t>(doc->constraints->size());
  }
  return Emit(ctx, std::move(res), CodeFor(*r));
}

int CmdLpVertex(Context& ctx, const std::string& path) {
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return Fail(ctx, doc.status());
  absl::StatusOr<Matroid> m = Compile(doc->matroid);
  if (!m.ok()) return Fail(ctx, m.status());
  absl::StatusOr<WeightMatrix> w =
      WeightMatrix::FromRows(m->ground_size(), doc->weights);
  if (!w.ok()) return Fail(ctx, w.status());
  m->Rank();
  const Matroid counted = m->WithFreshCounter();
  absl::StatusOr<LpOutcome> lp = LpVertex(counted, *w, doc->target, ctx.seed);
  if (!lp.ok()) return Fail(ctx, lp.status());
  ResultDocument res;
  res.stats.oracle_calls = counted.oracle_calls();
  res.stats.lp_pivots = lp->pivots;
  res.stats.lp_cuts = lp->cuts_added;
  if (lp->status == LpOutcome::Status::kInfeasible) {
    res.status = "infeasible";
    return Emit(ctx, std::move(res), kExitInfeasible);
  }
  res.status = "vertex";
  Json point = Json::array();
  for (const mpq_class& q : lp->point) point.push_back(io::EncodeRational(q));
  res.details["point"] = point;
  res.details["face_dimension"] = lp->face_dimension;
  Json cuts = Json::array();
  for (const RankCut& c : lp->tight_cuts) {
    cuts.push_back({{"subset", Ids(c.subset)}, {"rhs", c.rhs}});
  }
  res.details["tight_cuts"] = cuts;
  absl::StatusOr<FaceRounding> rounding = RoundToFaceBasis(*m, lp->point);
  if (!rounding.ok()) return Fail(ctx, rounding.status());
  res.details["rounded_basis"] = Ids(rounding->basis);
  res.details["rounding_distance"] = io::EncodeRational(rounding->distance);
  return Emit(ctx, std::move(res), kExitFound);
}

int CmdIntersect(Context& ctx, const std::string& first,
                 const std::string& second, bool certify) {
  absl::StatusOr<MatroidSpec> a = LoadMatroid(first);
  if (!a.ok()) return Fail(ctx, a.status());
  absl::StatusOr<MatroidSpec> b = LoadMatroid(second);
  if (!b.ok()) return Fail(ctx, b.status());
  absl::StatusOr<Matroid> m1 = Compile(*a);
  if (!m1.ok()) return Fail(ctx, m1.status());
  absl::StatusOr<Matroid> m2 = Compile(*b);
  if (!m2.ok()) return Fail(ctx, m2.status());
  absl::StatusOr<IntersectionCertificate> c = MaxCommonIndependent(*m1, *m2, certify);
  if (!c.ok()) return Fail(ctx, c.status());
  ResultDocument res;
  res.status = "found";
  res.stats.oracle_calls = m1->oracle_calls() + m2->oracle_calls();
  res.details["common_set"] = Ids(c->common_set);
  res.details["size"] = c->common_set.Count();
  res.details["augmentations"] = c->augmentations;
  if (c->partition_witness.has_value()) {
    res.details["witness"] = Ids(*c->partition_witness);
  }
  return Emit(ctx, std::move(res), kExitFound);
}

int CmdAlgebraic(Context& ctx, const std::string& path, const std::string& beta,
                 int retries, std::optional<uint64_t> prime) {
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return Fail(ctx, doc.status());
  if (!beta.empty()) {
    absl::StatusOr<std::vector<int64_t>> b = ParseIntList(beta, "beta");
    if (!b.ok()) return Fail(ctx, b.status());
    if (b->size() != doc->weights.size()) {
      return Fail(ctx, absl::InvalidArgumentError("--beta needs one value per weight row"));
    }
    doc->target = *b;
  }
  absl::StatusOr<Matroid> m = Compile(doc->matroid);
  if (!m.ok()) return Fail(ctx, m.status());
  absl::StatusOr<WeightMatrix> w =
      WeightMatrix::FromRows(m->ground_size(), doc->weights);
  if (!w.ok()) return Fail(ctx, w.status());
  const uint64_t q = NativePrime(doc->matroid).value_or(prime.value_or(kMersenne61));
  ResultDocument res;
  res.solver.linear_algebraic = true;
  if (w->m() == 1) {
    absl::StatusOr<Representation> rep = RepresentationOf(doc->matroid, q);
    if (!rep.ok()) return Fail(ctx, rep.status());
    m->Rank();
    const Matroid counted = m->WithFreshCounter();
    absl::StatusOr<AlgebraicOutcome> o = ExactBasis1d(
        counted, *rep, doc->weights[0], doc->target[0], ctx.seed, retries);
    if (!o.ok()) return Fail(ctx, o.status());
    res.stats.oracle_calls = counted.oracle_calls();
    res.details["attempts"] = o->attempts;
    res.details["prime"] = std::to_string(q);
    if (o->basis.has_value()) {
      if (!IsExactBasis(*Compile(doc->matroid), *w, doc->target, *o->basis)) {
        return Fail(ctx, absl::InternalError("witness failed re-verification"));
      }
      res.status = "found";
      res.basis = o->basis->Elements();
      return Emit(ctx, std::move(res), kExitFound);
    }
    res.status = "infeasible";
    return Emit(ctx, std::move(res), kExitInfeasible);
  }
  absl::StatusOr<SolveReport> r = SolveLinear(
      doc->matroid, *w, doc->target,
      LinearSolveOptions{.seed = ctx.seed, .retries = retries, .prime = q});
  if (!r.ok()) return Fail(ctx, r.status());
  if (r->basis.has_value() &&
      !IsExactBasis(*Compile(doc->matroid), *w, doc->target, *r->basis)) {
    return Fail(ctx, absl::InternalError("witness failed re-verification"));
  }
  FillReport(res, *r);
  res.details["prime"] = std::to_string(q);
  return Emit(ctx, std::move(res), CodeFor(*r));
}

int CmdReduce(Context& ctx, const std::string& path) {
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return Fail(ctx, doc.status());
  if (!doc->constraints.has_value()) {
    return Fail(ctx, absl::InvalidArgumentError(
                         "reduce needs an instance with a constraints list"));
  }
  absl::StatusOr<ReducedInstance> r =
      ReduceConstraints(doc->matroid, *doc->constraints);
  if (!r.ok()) return Fail(ctx, r.status());
  io::InstanceDocument reduced;
  reduced.matroid = r->matroid_spec;
  reduced.weights = r->weights.Rows();
  reduced.target = r->target;
  reduced.metadata = doc->metadata;
  ResultDocument res;
  res.status = "reduced";
  res.details["instance"] = io::EncodeInstance(reduced);
  res.details["element_map"] = r->element_map;
  return Emit(ctx, std::move(res), kExitFound);
}

int CmdLabSensitivity(Context& ctx, int n_max, int m_max, int delta_max) {
  ResultDocument res;
  int64_t pairs = 0, passed = 0, index = 0;
  mpq_class max_ratio = 0;
  int64_t max_observed = 0;
  for (const CatalogEntry& entry : SmallCatalog()) {
    if (entry.spec.GroundSize() > n_max) continue;
    absl::StatusOr<Matroid> m = Compile(entry.spec);
    if (!m.ok()) return Fail(ctx, m.status());
    for (int rows = 1; rows <= m_max; ++rows) {
      for (int64_t delta = 1; delta <= delta_max; ++delta) {
        Rng rng(SubSeed(ctx.seed, "lab-sensitivity", index++));
        absl::StatusOr<WeightMatrix> w = WeightMatrix::FromRows(
            m->ground_size(), RandomWeightRows(rng, rows, m->ground_size(), delta));
        if (!w.ok()) return Fail(ctx, w.status());
        absl::StatusOr<SymdiffSweep> s = MinSymdiffAllPairs(*m, *w);
        if (!s.ok()) return Fail(ctx, s.status());
        BoundReport r = s->worst;
        r.instance_id = absl::StrCat(entry.name, "/m", rows, "/d", delta);
        res.bound_reports.push_back(r);
        pairs += s->pairs;
        passed += s->passed;
        if (s->max_ratio > max_ratio) max_ratio = s->max_ratio;
        max_observed = std::max(max_observed, s->max_observed);
      }
    }
  }
  const bool ok = pairs == passed;
  res.status = ok ? "pass" : "fail";
  res.details = {{"catalog", kCatalogVersion},
                 {"pairs", pairs},
                 {"passed", passed},
                 {"max_ratio", io::EncodeRational(max_ratio)},
                 {"max_observed", max_observed}};
  return Emit(ctx, std::move(res), ok ? kExitFound : kExitAlarm);
}

int CmdLabProximity(Context& ctx, int n_max, int rows, int64_t delta, int trials) {
  ResultDocument res;
  int64_t count = 0, passed = 0, index = 0;
  mpq_class max_ratio = 0, max_observed = 0;
  for (const CatalogEntry& entry : SmallCatalog()) {
    if (entry.spec.GroundSize() > std::min(n_max, kMaxLabGroundSize)) continue;
    absl::StatusOr<Matroid> m = Compile(entry.spec);
    if (!m.ok()) return Fail(ctx, m.status());
    const BasisEnumeration all = EnumerateBases(*m, 1 << 20);
    for (int t = 0; t < trials; ++t) {
      Rng rng(SubSeed(ctx.seed, "lab-proximity", index++));
      absl::StatusOr<WeightMatrix> w = WeightMatrix::FromRows(
          m->ground_size(), RandomWeightRows(rng, rows, m->ground_size(), delta));
      if (!w.ok()) return Fail(ctx, w.status());
      const SubsetMask& pick =
          all.bases[UniformInt(rng, 0, static_cast<int64_t>(all.bases.size()) - 1)];
      const std::vector<int64_t> beta = w->Apply(pick);
      absl::StatusOr<BoundReport> r =
          ProximityExact(*m, *w, beta, SubSeed(ctx.seed, "lab-proximity-lp", index));
      if (!r.ok()) return Fail(ctx, r.status());
      r->instance_id = absl::StrCat(entry.name, "/", t);
      ++count;
      if (r->pass) ++passed;
      if (r->ratio > max_ratio) max_ratio = r->ratio;
      if (r->observed > max_observed) max_observed = r->observed;
      res.bound_reports.push_back(*r);
    }
  }
  const bool ok = count == passed;
  res.status = ok ? "pass" : "fail";
  res.details = {{"catalog", kCatalogVersion},
                 {"instances", count},
                 {"passed", passed},
                 {"max_ratio", io::EncodeRational(max_ratio)},
                 {"max_observed", io::EncodeRational(max_observed)}};
  return Emit(ctx, std::move(res), ok ? kExitFound : kExitAlarm);
}

int CmdLabLowerBound(Context& ctx, const std::string& kind, int n) {
  LowerBoundKind k;
  if (kind == "sensitivity") {
    k = LowerBoundKind::kSensitivity;
  } else if (kind == "proximity") {
    k = LowerBoundKind::kProximity;
  } else {
    return Fail(ctx, absl::InvalidArgumentError(
                         absl::StrCat("unknown lower-bound kind \"", kind, "\"")));
  }
  absl::StatusOr<LowerBoundInstance> inst = MakeLowerBoundInstance(k, n);
  if (!inst.ok()) return Fail(ctx, inst.status());
  absl::StatusOr<LowerBoundCheck> c = VerifyLowerBound(*inst);
  if (!c.ok()) return Fail(ctx, c.status());
  ResultDocument res;
  res.status = c->ok ? "pass" : "fail";
  Json common = Json::array(), exact = Json::array();
  for (const auto& b : c->common_bases) common.push_back(Ids(b));
  for (const auto& b : c->exact_bases) exact.push_back(Ids(b));
  res.details = {{"kind", kind},
                 {"n", n},
                 {"left", io::EncodeSpec(inst->left)},
                 {"right", io::EncodeSpec(inst->right)},
                 {"weights", inst->weights},
                 {"target", inst->target},
                 {"common_bases", common},
                 {"exact_bases", exact},
                 {"observed_distance", io::EncodeRational(c->observed_distance)},
                 {"claimed_distance", io::EncodeRational(inst->claimed_distance)},
                 {"vertex_verified", c->vertex_verified},
                 {"ok", c->ok}};
  if (k == LowerBoundKind::kProximity) {
    Json x = Json::array();
    for (const mpq_class& q : inst->fractional_vertex) x.push_back(io::EncodeRational(q));
    res.details["fractional_vertex"] = x;
  }
  return Emit(ctx, std::move(res), c->ok ? kExitFound : kExitAlarm);
}

int CmdFeedbackEdgeSet(Context& ctx, const std::string& path) {
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return Fail(ctx, doc.status());
  const auto* g = std::get_if<GraphicSpec>(&doc->matroid.kind);
  if (g == nullptr) {
    return Fail(ctx, absl::InvalidArgumentError("feedback-edge-set needs a graphic matroid"));
  }
  absl::StatusOr<FeedbackEdgeSetResult> r = FeedbackEdgeSet(
      *g, doc->weights, doc->target, SolveOptions{std::nullopt, ctx.seed, ctx.jobs});
  if (!r.ok()) return Fail(ctx, r.status());
  ResultDocument res;
  res.solver.fpt = true;
  if (!r->feasible) {
    res.status = "infeasible";
    return Emit(ctx, std::move(res), kExitInfeasible);
  }
  const SubsetMask kept = r->removed.Complement();
  absl::StatusOr<Matroid> fresh = Compile(doc->matroid);
  bool ok = kept.Count() == fresh->Rank() && fresh->IsIndependent(kept);
  for (size_t i = 0; i < doc->weights.size(); ++i) {
    int64_t cut = 0;
    r->removed.ForEach([&](ElementId e) { cut += doc->weights[i][e]; });
    ok &= cut <= doc->target[i];
  }
  if (!ok) return Fail(ctx, absl::InternalError("witness failed re-verification"));
  res.status = "found";
  res.basis = kept.Elements();
  res.details["removed"] = Ids(r->removed);
  return Emit(ctx, std::move(res), kExitFound);
}

int CmdClosestBase(Context& ctx, const std::string& path, const std::string& bases) {
  absl::StatusOr<MatroidSpec> spec = LoadMatroid(path);
  if (!spec.ok()) return Fail(ctx, spec.status());
  const int n = spec->GroundSize();
  std::vector<SubsetMask> refs;
  for (absl::string_view part : absl::StrSplit(bases, ';', absl::SkipEmpty())) {
    absl::StatusOr<std::vector<int64_t>> ids = ParseIntList(std::string(part), "bases");
    if (!ids.ok()) return Fail(ctx, ids.status());
    SubsetMask s(n);
    for (int64_t e : *ids) {
      if (e < 0 || e >= n) {
        return Fail(ctx, absl::InvalidArgumentError(
                             absl::StrCat("--bases: element ", e, " out of range")));
      }
      s.Insert(static_cast<ElementId>(e));
    }
    refs.push_back(s);
  }
  absl::StatusOr<ClosestBaseResult> r =
      ClosestBase(*spec, refs, SolveOptions{std::nullopt, ctx.seed, ctx.jobs});
  if (!r.ok()) return Fail(ctx, r.status());
  ResultDocument res;
  res.solver.fpt = true;
  res.status = "found";
  res.basis = r->basis.Elements();
  res.details["max_distance"] = r->max_distance;
  return Emit(ctx, std::move(res), kExitFound);
}

int CmdFairMatching(Context& ctx, const std::string& path) {
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return Fail(ctx, doc.status());
  const auto* t = std::get_if<TransversalSpec>(&doc->matroid.kind);
  if (t == nullptr) {
    return Fail(ctx, absl::InvalidArgumentError("fair-matching needs a transversal matroid"));
  }
  const int right = static_cast<int>(t->adjacency.size());
  std::vector<std::pair<int, int>> edges;
  for (int b = 0; b < right; ++b) {
    for (int a : t->adjacency[b]) edges.emplace_back(a, b);
  }
  std::vector<std::vector<int>> groups(right);
  for (size_t i = 0; i < doc->weights.size(); ++i) {
    for (int b = 0; b < right; ++b) {
      const int64_t v = doc->weights[i][b];
      if (v != 0 && v != 1) {
        return Fail(ctx, absl::InvalidArgumentError(
                             "fair-matching weights must be 0/1 group indicators"));
      }
      if (v == 1) groups[b].push_back(static_cast<int>(i));
    }
  }
  absl::StatusOr<FairMatchingResult> r =
      FairMatching(t->left_size, right, edges, groups, doc->target,
                   SolveOptions{std::nullopt, ctx.seed, ctx.jobs});
  if (!r.ok()) return Fail(ctx, r.status());
  ResultDocument res;
  res.solver.fpt = true;
  if (!r->feasible) {
    res.status = "infeasible";
    return Emit(ctx, std::move(res), kExitInfeasible);
  }
  res.status = "found";
  std::vector<ElementId> matched;
  Json pairs = Json::array();
  for (auto [a, b] : r->matching) {
    matched.push_back(b);
    pairs.push_back({a, b});
  }
  std::sort(matched.begin(), matched.end());
  res.basis = matched;
  res.details["matching"] = pairs;
  return Emit(ctx, std::move(res), kExitFound);
}

int CmdGroupBase(Context& ctx, const std::string& path, const std::string& moduli) {
  absl::StatusOr<io::InstanceDocument> doc = LoadInstance(path);
  if (!doc.ok()) return Fail(ctx, doc.status());
  absl::StatusOr<std::vector<int64_t>> mods = ParseIntList(moduli, "moduli");
  if (!mods.ok()) return Fail(ctx, mods.status());
  if (mods->size() != doc->weights.size()) {
    return Fail(ctx, absl::InvalidArgumentError(
                         "--moduli needs one modulus per weight row"));
  }
  const int n = doc->matroid.GroundSize();
  std::vector<std::vector<int64_t>> labels(n);
  for (int e = 0; e < n; ++e) {
    for (const auto& row : doc->weights) labels[e].push_back(row[e]);
  }
  absl::StatusOr<ConstrainedReport> r =
      GroupBase(doc->matroid, *mods, labels, doc->target,
                SolveOptions{std::nullopt, ctx.seed, ctx.jobs});
  if (!r.ok()) return Fail(ctx, r.status());
  ResultDocument res;
  res.solver.fpt = true;
  FillReport(res, r->report);
  return Emit(ctx, std::move(res), CodeFor(r->report));
}

int CmdSelftest(Context& ctx, double scale) {
  acceptance::Options opts{ctx.seed, scale};
  std::vector<acceptance::Criterion> all =
      acceptance::RunAll(opts, [&](const acceptance::Criterion& c) {
        ctx.err << acceptance::FormatLine(c) << "\n";
      });
  ResultDocument res;
  bool ok = true;
  Json list = Json::array();
  for (const auto& c : all) {
    ok &= c.pass;
    list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  res.status = ok ? "pass" : "fail";
  res.details["criteria"] = list;
  return Emit(ctx, std::move(res), ok ? kExitFound : kExitAlarm);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact-weight bases of matroids", "exactbasis"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  uint64_t seed = 0;
  int jobs = 1;
  app.add_option("--seed", seed, "Master seed for every random choice")
      ->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  std::string instance, first, second, beta, bases, moduli, kind;
  bool brute = false, certify = false;
  std::optional<int64_t> radius;
  std::optional<uint64_t> prime;
  int retries = 3, n = 0, n_max = 0, m_max = 2, delta = 1, trials = 5;
  double scale = 1.0;

  auto* solve = app.add_subcommand("solve", "Find a basis with W(B) = target");
  solve->add_option("--instance", instance, "Instance file")->required();
  solve->add_flag("--brute-force", brute, "Enumerate bases instead");
  solve->add_option("--radius", radius, "Override the proximity window");

  auto* lp = app.add_subcommand("lp-vertex", "Vertex of the relaxation");
  lp->add_option("--instance", instance)->required();

  auto* inter = app.add_subcommand("intersect", "Largest common independent set");
  inter->add_option("--first", first)->required();
  inter->add_option("--second", second)->required();
  inter->add_flag("--certify", certify, "Attach a rank certificate");

  auto* alg = app.add_subcommand("algebraic-solve", "Randomized algebraic solver");
  alg->add_option("--instance", instance)->required();
  alg->add_option("--beta", beta, "Comma-separated target override");
  alg->add_option("--retries", retries)->check(CLI::Range(1, 64));
  alg->add_option("--prime", prime, "Field size");

  auto* reduce = app.add_subcommand("reduce", "Compile constraints to equalities");
  reduce->add_option("--instance", instance)->required();

  auto* lab = app.add_subcommand("lab", "Bound experiments");
  lab->require_subcommand(1);
  auto* sens = lab->add_subcommand("sensitivity", "Symmetric-difference sweep");
  sens->add_option("--n-max", n_max)->default_val(12);
  sens->add_option("--m-max", m_max)->default_val(2);
  sens->add_option("--delta-max", delta)->default_val(2);
  auto* prox = lab->add_subcommand("proximity", "LP-vertex distance sweep");
  prox->add_option("--n-max", n_max)->default_val(14);
  prox->add_option("--m", m_max)->default_val(1);
  prox->add_option("--delta", delta)->default_val(1);
  prox->add_option("--trials", trials)->default_val(5);
  auto* lower = lab->add_subcommand("lowerbound", "Matching lower-bound instances");
  lower->add_option("--kind", kind)->required();
  lower->add_option("--n", n)->required();

  auto* appc = app.add_subcommand("app", "Applications");
  appc->require_subcommand(1);
  auto* fes = appc->add_subcommand("feedback-edge-set", "Budgeted cycle breaking");
  fes->add_option("--instance", instance)->required();
  auto* closest = appc->add_subcommand("closest-base", "Minimax distance basis");
  closest->add_option("--instance", instance)->required();
  closest->add_option("--bases", bases, "Reference bases, e.g. 0,1;2,3")->required();
  auto* fair = appc->add_subcommand("fair-matching", "Matching with group quotas");
  fair->add_option("--instance", instance)->required();
  auto* group = appc->add_subcommand("group-base", "Basis with a group-sum target");
  group->add_option("--instance", instance)->required();
  group->add_option("--moduli", moduli, "Cyclic factor orders, e.g. 2,3")->required();

  auto* self = app.add_subcommand("selftest", "Run the acceptance checks");
  self->add_option("--scale", scale, "Fraction of the instance counts")
      ->check(CLI::Range(0.0, 1.0));

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitFound : kExitUsage;
  }
  Context ctx{out, err, seed, jobs};
  if (*solve) return CmdSolve(ctx, instance, brute, radius);
  if (*lp) return CmdLpVertex(ctx, instance);
  if (*inter) return CmdIntersect(ctx, first, second, certify);
  if (*alg) return CmdAlgebraic(ctx, instance, beta, retries, prime);
  if (*reduce) return CmdReduce(ctx, instance);
  if (*sens) return CmdLabSensitivity(ctx, n_max, m_max, delta);
  if (*prox) return CmdLabProximity(ctx, n_max, m_max, delta, trials);
  if (*lower) return CmdLabLowerBound(ctx, kind, n);
  if (*fes) return CmdFeedbackEdgeSet(ctx, instance);
  if (*closest) return CmdClosestBase(ctx, instance, bases);
  if (*fair) return CmdFairMatching(ctx, instance);
  if (*group) return CmdGroupBase(ctx, instance, moduli);
  if (*self) return CmdSelftest(ctx, scale);
  err << app.help();
  return kExitUsage;
}

}  // namespace exactbasis::cli
