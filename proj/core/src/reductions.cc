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

#include "exactbasis/reductions.h"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <variant>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "exactbasis/base_polytope.h"
#include "exactbasis/rng.h"

namespace exactbasis {

const char* KindName(ConstraintSpec::Kind kind) {
  switch (kind) {
    case ConstraintSpec::Kind::kEquality:
      return "equality";
    case ConstraintSpec::Kind::kLessEqual:
      return "less_equal";
    case ConstraintSpec::Kind::kGreaterEqual:
      return "greater_equal";
    case ConstraintSpec::Kind::kCongruence:
      return "congruence";
  }
  return "unknown";
}

ConstraintSpec Equality(std::vector<int64_t> weights, int64_t target) {
  return {ConstraintSpec::Kind::kEquality, std::move(weights), target, 0};
}
ConstraintSpec LessEqual(std::vector<int64_t> weights, int64_t target) {
  return {ConstraintSpec::Kind::kLessEqual, std::move(weights), target, 0};
}
ConstraintSpec GreaterEqual(std::vector<int64_t> weights, int64_t target) {
  return {ConstraintSpec::Kind::kGreaterEqual, std::move(weights), target, 0};
}
ConstraintSpec Congruence(std::vector<int64_t> weights, int64_t modulus,
                          int64_t target) {
  return {ConstraintSpec::Kind::kCongruence, std::move(weights), target,
          modulus};
}

bool Satisfies(const ConstraintSpec& c, const SubsetMask& basis) {
  int64_t w = 0;
  basis.ForEach([&](ElementId e) { w += c.weights[e]; });
  switch (c.kind) {
    case ConstraintSpec::Kind::kEquality:
      return w == c.target;
    case ConstraintSpec::Kind::kLessEqual:
      return w <= c.target;
    case ConstraintSpec::Kind::kGreaterEqual:
      return w >= c.target;
    case ConstraintSpec::Kind::kCongruence: {
      int64_t r = (w - c.target) % c.modulus;
      return r == 0;
    }
  }
  return false;
}

namespace {

struct Pad {
  int row;
  int rank;
  // Weight of each pad element in `row`.
  std::vector<int64_t> weights;
};

absl::Status ValidateConstraint(const ConstraintSpec& c, int n, size_t index) {
  if (static_cast<int>(c.weights.size()) != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "constraint ", index, " has ", c.weights.size(), " weights for ", n,
        " elements"));
  }
  if (c.kind == ConstraintSpec::Kind::kCongruence) {
    if (c.modulus < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("constraint ", index, " has modulus ", c.modulus));
    }
    for (int64_t w : c.weights) {
      if (w < 0 || w >= c.modulus) {
        return absl::InvalidArgumentError(absl::StrCat(
            "constraint ", index, " weight ", w, " outside [0, ", c.modulus, ")"));
      }
    }
    if (c.target < 0 || c.target >= c.modulus) {
      return absl::InvalidArgumentError(absl::StrCat(
          "constraint ", index, " target ", c.target, " outside [0, ",
          c.modulus, ")"));
    }
  }
  return absl::OkStatus();
}

int64_t SumOfExtremes(std::vector<int64_t> w, int r, bool largest) {
  std::sort(w.begin(), w.end());
  if (largest) std::reverse(w.begin(), w.end());
  int64_t s = 0;
  for (int i = 0; i < r && i < static_cast<int>(w.size()); ++i) s += w[i];
  return s;
}

}  // namespace

absl::StatusOr<ReducedInstance> ReduceConstraints(
    const MatroidSpec& spec, absl::Span<const ConstraintSpec> constraints) {
  absl::StatusOr<Matroid> compiled = Compile(spec);
  if (!compiled.ok()) return compiled.status();
  const int n = spec.GroundSize();
  const int r = compiled->Rank();
  std::vector<std::vector<int64_t>> rows;
  std::vector<int64_t> target;
  std::vector<Pad> pads;
  for (size_t i = 0; i < constraints.size(); ++i) {
    const ConstraintSpec& c = constraints[i];
    if (absl::Status s = ValidateConstraint(c, n, i); !s.ok()) return s;
    const int row = static_cast<int>(i);
    switch (c.kind) {
      case ConstraintSpec::Kind::kEquality:
        rows.push_back(c.weights);
        target.push_back(c.target);
        break;
      case ConstraintSpec::Kind::kLessEqual:
      case ConstraintSpec::Kind::kGreaterEqual: {
        const int64_t sign = c.kind == ConstraintSpec::Kind::kLessEqual ? 1 : -1;
        std::vector<int64_t> w = c.weights;
        int64_t delta = 0;
        for (auto& v : w) {
          v *= sign;
          delta = std::max(delta, v < 0 ? -v : v);
        }
        const int64_t beta = std::min(sign * c.target, SumOfExtremes(w, r, true));
        const int64_t slack = beta - SumOfExtremes(w, r, false);
        const int64_t k = std::max<int64_t>(n, slack);
        const int64_t p = std::max<int64_t>(n * delta, k);
        Pad pad{row, static_cast<int>(k), std::vector<int64_t>(2 * p, 0)};
        std::fill(pad.weights.begin() + p, pad.weights.end(), 1);
        pads.push_back(std::move(pad));
        rows.push_back(std::move(w));
        target.push_back(beta);
        break;
      }
      case ConstraintSpec::Kind::kCongruence: {
        Pad pad{row, n, std::vector<int64_t>(2 * n, 0)};
        std::fill(pad.weights.begin(), pad.weights.begin() + n, -c.modulus);
        pads.push_back(std::move(pad));
        rows.push_back(c.weights);
        target.push_back(c.target);
        break;
      }
    }
  }
  ReducedInstance out;
  int total = n;
  for (const Pad& pad : pads) total += static_cast<int>(pad.weights.size());
  std::vector<MatroidSpec> parts = {spec};
  int offset = n;
  for (auto& row : rows) row.resize(total, 0);
  for (const Pad& pad : pads) {
    const int size = static_cast<int>(pad.weights.size());
    parts.push_back(Uniform(size, pad.rank));
    for (int j = 0; j < size; ++j) rows[pad.row][offset + j] = pad.weights[j];
    offset += size;
  }
  out.matroid_spec = pads.empty() ? spec : DirectSumOf(std::move(parts));
  absl::StatusOr<WeightMatrix> w = WeightMatrix::FromRows(total, rows);
  if (!w.ok()) return w.status();
  out.weights = *std::move(w);
  out.target = std::move(target);
  out.element_map.resize(n);
  for (int e = 0; e < n; ++e) out.element_map[e] = e;
  return out;
}

absl::StatusOr<ReducedInstance> ReduceInequality(
    const MatroidSpec& spec, const ConstraintSpec& c,
    absl::Span<const ConstraintSpec> others) {
  if (c.kind != ConstraintSpec::Kind::kLessEqual &&
      c.kind != ConstraintSpec::Kind::kGreaterEqual) {
    return absl::InvalidArgumentError("not an inequality constraint");
  }
  std::vector<ConstraintSpec> all = {c};
  all.insert(all.end(), others.begin(), others.end());
  return ReduceConstraints(spec, all);
}

absl::StatusOr<ReducedInstance> ReduceCongruence(
    const MatroidSpec& spec, const ConstraintSpec& c,
    absl::Span<const ConstraintSpec> others) {
  if (c.kind != ConstraintSpec::Kind::kCongruence) {
    return absl::InvalidArgumentError("not a congruence constraint");
  }
  std::vector<ConstraintSpec> all = {c};
  all.insert(all.end(), others.begin(), others.end());
  return ReduceConstraints(spec, all);
}

absl::StatusOr<std::vector<ConstraintSpec>> ReduceGroup(
    absl::Span<const int64_t> moduli,
    const std::vector<std::vector<int64_t>>& labels,
    absl::Span<const int64_t> target) {
  const size_t l = moduli.size();
  if (target.size() != l) {
    return absl::InvalidArgumentError(absl::StrCat(
        "target has ", target.size(), " residues for ", l, " factors"));
  }
  for (size_t i = 0; i < l; ++i) {
    if (moduli[i] < 1) {
      return absl::InvalidArgumentError(absl::StrCat("modulus ", moduli[i]));
    }
    if (target[i] < 0 || target[i] >= moduli[i]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "target residue ", target[i], " outside Z_", moduli[i]));
    }
  }
  std::vector<ConstraintSpec> out(l);
  for (size_t i = 0; i < l; ++i) {
    out[i].kind = ConstraintSpec::Kind::kCongruence;
    out[i].modulus = moduli[i];
    out[i].target = target[i];
  }
  for (size_t e = 0; e < labels.size(); ++e) {
    if (labels[e].size() != l) {
      return absl::InvalidArgumentError(absl::StrCat(
          "label of element ", e, " has ", labels[e].size(), " residues"));
    }
    for (size_t i = 0; i < l; ++i) {
      if (labels[e][i] < 0 || labels[e][i] >= moduli[i]) {
        return absl::InvalidArgumentError(absl::StrCat(
            "label residue ", labels[e][i], " of element ", e, " outside Z_",
            moduli[i]));
      }
      out[i].weights.push_back(labels[e][i]);
    }
  }
  return out;
}

SubsetMask MapBack(const ReducedInstance& reduced, const SubsetMask& basis,
                   int original_size) {
  SubsetMask out(original_size);
  for (int e = 0; e < original_size; ++e) {
    if (basis.Contains(reduced.element_map[e])) out.Insert(e);
  }
  return out;
}

absl::StatusOr<ConstrainedReport> SolveConstrained(
    const MatroidSpec& spec, absl::Span<const ConstraintSpec> constraints,
    const SolveOptions& options) {
  absl::StatusOr<ReducedInstance> reduced = ReduceConstraints(spec, constraints);
  if (!reduced.ok()) return reduced.status();
  absl::StatusOr<Matroid> matroid = Compile(reduced->matroid_spec);
  if (!matroid.ok()) return matroid.status();
  absl::StatusOr<SolveReport> report =
      Solve(*matroid, reduced->weights, reduced->target, options);
  if (!report.ok()) return report.status();
  ConstrainedReport out{*std::move(report), *std::move(reduced)};
  if (out.report.basis.has_value()) {
    const int n = spec.GroundSize();
    SubsetMask original = MapBack(out.reduced, *out.report.basis, n);
    absl::StatusOr<Matroid> base = Compile(spec);
    if (!base.ok()) return base.status();
    if (original.Count() != base->Rank() || !base->IsIndependent(original)) {
      return absl::InternalError("mapped witness is not a basis");
    }
    for (const ConstraintSpec& c : constraints) {
      if (!Satisfies(c, original)) {
        return absl::InternalError("mapped witness violates a constraint");
      }
    }
    out.report.basis = std::move(original);
  }
  return out;
}

std::optional<int64_t> NativePrime(const MatroidSpec& spec) {
  if (const auto* l = std::get_if<LinearSpec>(&spec.kind)) {
    if (l->field == LinearSpec::Field::kPrime) return l->prime;
  } else if (const auto* d = std::get_if<DirectSumSpec>(&spec.kind)) {
    for (const MatroidSpec& part : d->parts) {
      if (auto p = NativePrime(part)) return p;
    }
  } else if (const auto* r = std::get_if<RestrictionSpec>(&spec.kind)) {
    return NativePrime(*r->base);
  } else if (const auto* c = std::get_if<ContractionSpec>(&spec.kind)) {
    return NativePrime(*c->base);
  }
  return std::nullopt;
}

std::vector<int> RoundPoint(absl::Span<const mpq_class> x) {
  std::vector<int> out;
  for (const mpq_class& v : x) {
    mpq_class shifted = v + mpq_class(1, 2);
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    out.push_back(static_cast<int>(f.get_si()));
  }
  return out;
}

namespace {

absl::Status Overflow() {
  return absl::OutOfRangeError("aggregated weights overflow 64 bits");
}

bool MulAdd(int64_t acc, int64_t a, int64_t b, int64_t* out) {
  int64_t p;
  if (__builtin_mul_overflow(a, b, &p)) return false;
  return !__builtin_add_overflow(acc, p, out);
}

}  // namespace

absl::StatusOr<Aggregation> AggregateTo1d(const WeightMatrix& weights,
                                          absl::Span<const int64_t> beta,
                                          absl::Span<const int> x_round,
                                          int64_t gamma) {
  const int n = weights.n();
  const int m = weights.m();
  if (static_cast<int>(beta.size()) != m) {
    return absl::InvalidArgumentError("target length differs from row count");
  }
  if (static_cast<int>(x_round.size()) != n) {
    return absl::InvalidArgumentError("rounded point has the wrong length");
  }
  for (int v : x_round) {
    if (v != 0 && v != 1) {
      return absl::InvalidArgumentError("rounded point must be 0/1");
    }
  }
  if (gamma < 0 || gamma > 2 * static_cast<int64_t>(n)) {
    return absl::InvalidArgumentError(
        absl::StrCat("gamma ", gamma, " outside [0, 2n]"));
  }
  int64_t residual = 0;
  int ones = 0;
  for (int v : x_round) ones += v;
  for (int i = 0; i < m; ++i) {
    int64_t wx = 0;
    for (int e = 0; e < n; ++e) wx += weights.at(i, e) * x_round[e];
    residual = std::max(residual, std::abs(beta[i] - wx));
  }
  Aggregation out;
  int64_t base;
  if (!MulAdd(residual, gamma, weights.delta(), &base) ||
      !MulAdd(1, 2, base, &base)) {
    return Overflow();
  }
  int64_t power = 1;
  for (int i = 0; i < m; ++i) {
    out.lambda.push_back(power);
    if (i + 1 < m && !MulAdd(0, power, base, &power)) return Overflow();
  }
  const int64_t scale = 2 * static_cast<int64_t>(n) + 1;
  for (int e = 0; e < n; ++e) {
    int64_t w2 = 0;
    for (int i = 0; i < m; ++i) {
      if (!MulAdd(w2, out.lambda[i], weights.at(i, e), &w2)) return Overflow();
    }
    const int64_t w1 = 1 - 2 * x_round[e];
    int64_t w;
    if (!MulAdd(w1, scale, w2, &w)) return Overflow();
    out.w1.push_back(w1);
    out.w2.push_back(w2);
    out.w.push_back(w);
  }
  int64_t lb = 0;
  for (int i = 0; i < m; ++i) {
    if (!MulAdd(lb, out.lambda[i], beta[i], &lb)) return Overflow();
  }
  if (!MulAdd(gamma - ones, scale, lb, &out.alpha)) return Overflow();
  return out;
}

absl::StatusOr<SolveReport> SolveLinear(const MatroidSpec& spec,
                                        const WeightMatrix& weights,
                                        absl::Span<const int64_t> beta,
                                        const LinearSolveOptions& options) {
  absl::StatusOr<Matroid> matroid = Compile(spec);
  if (!matroid.ok()) return matroid.status();
  const int n = matroid->ground_size();
  if (weights.n() != n || static_cast<int>(beta.size()) != weights.m()) {
    return absl::InvalidArgumentError("instance dimensions disagree");
  }
  absl::StatusOr<Representation> rep = RepresentationOf(spec, NativePrime(spec).value_or(options.prime));
  if (!rep.ok()) return rep.status();
  matroid->Rank();
  Matroid counted = matroid->WithFreshCounter();
  SolveReport report;
  absl::StatusOr<LpOutcome> lp = LpVertex(counted, weights, beta, options.seed);
  if (!lp.ok()) return lp.status();
  report.stats.lp_pivots = lp->pivots;
  report.stats.lp_cuts = lp->cuts_added;
  if (lp->status == LpOutcome::Status::kInfeasible) {
    report.stats.oracle_calls = counted.oracle_calls();
    report.status = SolveReport::Status::kInfeasible;
    return report;
  }
  const std::vector<int> rounded = RoundPoint(lp->point);
  int64_t residual = 0;
  for (int i = 0; i < weights.m(); ++i) {
    int64_t wx = 0;
    for (int e = 0; e < n; ++e) wx += weights.at(i, e) * rounded[e];
    residual = std::max(residual, std::abs(beta[i] - wx));
  }
  for (int64_t gamma = 0; gamma <= n; ++gamma) {
    // A basis at distance gamma moves W by at most gamma * delta.
    if (residual > gamma * weights.delta()) continue;
    ++report.stats.candidates_enumerated;
    absl::StatusOr<Aggregation> agg =
        AggregateTo1d(weights, beta, rounded, gamma);
    if (!agg.ok()) return agg.status();
    ++report.stats.candidates_tested;
    absl::StatusOr<AlgebraicOutcome> found =
        ExactBasis1d(counted, *rep, agg->w, agg->alpha,
                     SubSeed(options.seed, "linear-gamma", gamma),
                     options.retries);
    if (!found.ok()) return found.status();
    if (found->basis.has_value()) {
      if (!IsExactBasis(counted, weights, beta, *found->basis)) {
        return absl::InternalError("aggregated solution misses the target");
      }
      report.status = SolveReport::Status::kFound;
      report.basis = found->basis;
      report.window_radius_used = gamma;
      report.stats.oracle_calls = counted.oracle_calls();
      return report;
    }
  }
  report.stats.oracle_calls = counted.oracle_calls();
  report.window_radius_used = n;
  report.status = SolveReport::Status::kInfeasible;
  return report;
}

absl::StatusOr<FeedbackEdgeSetResult> FeedbackEdgeSet(
    const GraphicSpec& graph, const std::vector<std::vector<int64_t>>& weights,
    absl::Span<const int64_t> budget, const SolveOptions& options) {
  const int n = static_cast<int>(graph.edges.size());
  if (weights.size() != budget.size()) {
    return absl::InvalidArgumentError("one budget per weight row is required");
  }
  std::vector<ConstraintSpec> constraints;
  for (size_t i = 0; i < weights.size(); ++i) {
    if (static_cast<int>(weights[i].size()) != n) {
      return absl::InvalidArgumentError(
          absl::StrCat("weight row ", i, " has the wrong length"));
    }
    int64_t total = 0;
    for (int64_t v : weights[i]) {
      if (v < 0) {
        return absl::InvalidArgumentError("edge weights must be nonnegative");
      }
      total += v;
    }
    // W(F) >= W(E) - b for the kept forest F.
    constraints.push_back(GreaterEqual(weights[i], total - budget[i]));
  }
  // A forest meeting the budgets extends to a spanning forest that still
  // meets them, so only spanning forests need to be searched.
  const MatroidSpec spec{graph};
  absl::StatusOr<ConstrainedReport> r =
      SolveConstrained(spec, constraints, options);
  if (!r.ok()) return r.status();
  FeedbackEdgeSetResult out;
  out.removed = SubsetMask(n);
  if (r->report.basis.has_value()) {
    out.feasible = true;
    out.removed = r->report.basis->Complement();
  }
  return out;
}

namespace {

// Feasibility of `constraints` with the elements of `in` forced into the
// basis and those of `out` forced out.
absl::StatusOr<bool> FeasibleWith(const MatroidSpec& spec,
                                  const std::vector<ConstraintSpec>& constraints,
                                  const SubsetMask& in, const SubsetMask& out,
                                  const SolveOptions& options) {
  const int n = spec.GroundSize();
  std::vector<ElementId> keep;
  for (int e = 0; e < n; ++e) {
    if (!out.Contains(e)) keep.push_back(e);
  }
  std::vector<ElementId> contract;
  std::vector<ElementId> free;
  for (size_t i = 0; i < keep.size(); ++i) {
    if (in.Contains(keep[i])) {
      contract.push_back(static_cast<ElementId>(i));
    } else {
      free.push_back(keep[i]);
    }
  }
  MatroidSpec minor =
      ContractionOf(RestrictionOf(spec, keep), std::move(contract));
  std::vector<ConstraintSpec> shifted;
  for (const ConstraintSpec& c : constraints) {
    ConstraintSpec s = c;
    s.weights.clear();
    for (ElementId e : free) s.weights.push_back(c.weights[e]);
    in.ForEach([&](ElementId e) { s.target -= c.weights[e]; });
    shifted.push_back(std::move(s));
  }
  absl::StatusOr<ConstrainedReport> r = SolveConstrained(minor, shifted, options);
  if (!r.ok()) return r.status();
  return r->report.basis.has_value();
}

}  // namespace

absl::StatusOr<ClosestBaseResult> ClosestBase(
    const MatroidSpec& spec, const std::vector<SubsetMask>& bases,
    const SolveOptions& options) {
  absl::StatusOr<Matroid> m = Compile(spec);
  if (!m.ok()) return m.status();
  const int n = m->ground_size();
  const int r = m->Rank();
  if (bases.empty()) {
    return absl::InvalidArgumentError("at least one reference basis is needed");
  }
  for (size_t i = 0; i < bases.size(); ++i) {
    if (bases[i].size() != n || bases[i].Count() != r ||
        !m->IsIndependent(bases[i])) {
      return absl::InvalidArgumentError(
          absl::StrCat("reference ", i, " ", bases[i].ToString(),
                       " is not a basis"));
    }
  }
  for (int h = 0; h <= r; ++h) {
    std::vector<ConstraintSpec> constraints;
    for (const SubsetMask& b : bases) {
      std::vector<int64_t> row(n);
      for (int e = 0; e < n; ++e) row[e] = b.Contains(e) ? 0 : 1;
      constraints.push_back(LessEqual(std::move(row), h));
    }
    absl::StatusOr<ConstrainedReport> first =
        SolveConstrained(spec, constraints, options);
    if (!first.ok()) return first.status();
    if (!first->report.basis.has_value()) continue;
    // Lexicographically first witness: include each element when possible.
    SubsetMask in(n), out(n);
    for (int e = 0; e < n && in.Count() < r; ++e) {
      SubsetMask trial = in;
      trial.Insert(e);
      bool ok = m->IsIndependent(trial);
      if (ok) {
        absl::StatusOr<bool> f = FeasibleWith(spec, constraints, trial, out, options);
        if (!f.ok()) return f.status();
        ok = *f;
      }
      if (ok) {
        in = trial;
      } else {
        out.Insert(e);
      }
    }
    ClosestBaseResult result{in, 0};
    for (const SubsetMask& b : bases) {
      result.max_distance = std::max(result.max_distance, (in - b).Count());
    }
    if (in.Count() != r || result.max_distance != h) {
      return absl::InternalError("lexicographic refinement lost the witness");
    }
    return result;
  }
  return absl::InternalError("no basis within distance rank");
}

absl::StatusOr<FairMatchingResult> FairMatching(
    int left_size, int right_size, const std::vector<std::pair<int, int>>& edges,
    const std::vector<std::vector<int>>& groups,
    absl::Span<const int64_t> quotas, const SolveOptions& options) {
  if (static_cast<int>(groups.size()) != right_size) {
    return absl::InvalidArgumentError("one group list per right vertex");
  }
  std::vector<std::vector<int>> adjacency(right_size);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= left_size || b < 0 || b >= right_size) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge (", a, ",", b, ") outside the graph"));
    }
    adjacency[b].push_back(a);
  }
  for (auto& adj : adjacency) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  const int m = static_cast<int>(quotas.size());
  std::vector<ConstraintSpec> constraints;
  for (int i = 0; i < m; ++i) {
    if (quotas[i] < 0) return absl::InvalidArgumentError("negative quota");
    constraints.push_back(GreaterEqual(std::vector<int64_t>(right_size, 0), quotas[i]));
  }
  for (int b = 0; b < right_size; ++b) {
    for (int g : groups[b]) {
      if (g < 0 || g >= m) {
        return absl::InvalidArgumentError(
            absl::StrCat("group ", g, " of right vertex ", b, " has no quota"));
      }
      constraints[g].weights[b] = 1;
    }
  }
  const MatroidSpec spec = Transversal(left_size, adjacency);
  absl::StatusOr<ConstrainedReport> r =
      SolveConstrained(spec, constraints, options);
  if (!r.ok()) return r.status();
  FairMatchingResult out;
  if (!r->report.basis.has_value()) return out;
  // Recover the matching by augmenting paths, right vertices in order.
  std::vector<int> match_left(left_size, -1);
  std::vector<int> seen(left_size, -1);
  std::function<bool(int, int)> augment = [&](int b, int stamp) {
    for (int a : adjacency[b]) {
      if (seen[a] == stamp) continue;
      seen[a] = stamp;
      if (match_left[a] < 0 || augment(match_left[a], stamp)) {
        match_left[a] = b;
        return true;
      }
    }
    return false;
  };
  int stamp = 0;
  bool ok = true;
  r->report.basis->ForEach([&](ElementId b) { ok &= augment(b, stamp++); });
  if (!ok) return absl::InternalError("selected right vertices are unmatchable");
  for (int a = 0; a < left_size; ++a) {
    if (match_left[a] >= 0) out.matching.emplace_back(a, match_left[a]);
  }
  std::sort(out.matching.begin(), out.matching.end(),
            [](auto x, auto y) { return x.second < y.second; });
  out.feasible = true;
  return out;
}

absl::StatusOr<ConstrainedReport> GroupBase(
    const MatroidSpec& spec, absl::Span<const int64_t> moduli,
    const std::vector<std::vector<int64_t>>& labels,
    absl::Span<const int64_t> target, const SolveOptions& options) {
  if (static_cast<int>(labels.size()) != spec.GroundSize()) {
    return absl::InvalidArgumentError("one label per element is required");
  }
  absl::StatusOr<std::vector<ConstraintSpec>> c =
      ReduceGroup(moduli, labels, target);
  if (!c.ok()) return c.status();
  return SolveConstrained(spec, *c, options);
}

}  // namespace exactbasis
