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

#include "exactbasis/exchange_lab.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <map>
#include <variant>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "exactbasis/base_polytope.h"
#include "exactbasis/exact_solver.h"
#include "exactbasis/intersection.h"

namespace exactbasis {
namespace {

absl::Status CheckSize(const Matroid& m, const SubsetMask& s,
                       const char* name) {
  if (s.size() != m.ground_size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        name, " has size ", s.size(), ", ground set has ", m.ground_size()));
  }
  return absl::OkStatus();
}

int64_t WeightOf(absl::Span<const int64_t> w, const SubsetMask& s) {
  int64_t total = 0;
  s.ForEach([&](ElementId e) { total += w[e]; });
  return total;
}

int64_t MaxAbs(absl::Span<const int64_t> w) {
  int64_t d = 0;
  for (int64_t v : w) d = std::max(d, v < 0 ? -v : v);
  return d;
}

int64_t Power(int64_t base, int exp) {
  int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

absl::Status CheckExchangeInput(const Matroid& m, absl::Span<const int64_t> w,
                                const SubsetMask& a, const SubsetMask& b) {
  if (static_cast<int>(w.size()) != m.ground_size()) {
    return absl::InvalidArgumentError("one weight per element is required");
  }
  if (absl::Status s = CheckSize(m, a, "A"); !s.ok()) return s;
  if (absl::Status s = CheckSize(m, b, "B"); !s.ok()) return s;
  if (a.Intersects(b)) return absl::InvalidArgumentError("A and B intersect");
  if (a.Count() != b.Count()) {
    return absl::InvalidArgumentError("A and B differ in size");
  }
  if (!m.IsIndependent(a) || !m.IsIndependent(b)) {
    return absl::InvalidArgumentError("A and B must be independent");
  }
  return absl::OkStatus();
}

// Elements of `s` in the most populated weight class; ties go to the
// smallest weight.
SubsetMask LargestClass(absl::Span<const int64_t> w, const SubsetMask& s) {
  std::map<int64_t, int> count;
  s.ForEach([&](ElementId e) { ++count[w[e]]; });
  int64_t best = 0;
  int best_count = -1;
  for (auto [weight, c] : count) {
    if (c > best_count) {
      best = weight;
      best_count = c;
    }
  }
  SubsetMask out(s.size());
  s.ForEach([&](ElementId e) {
    if (w[e] == best) out.Insert(e);
  });
  return out;
}

// Sign flip so that kALighter reduces to kAHeavier.
std::vector<int64_t> Oriented(absl::Span<const int64_t> w,
                              ExchangePair::Gap gap) {
  std::vector<int64_t> v(w.begin(), w.end());
  if (gap == ExchangePair::Gap::kALighter) {
    for (auto& x : v) x = -x;
  }
  return v;
}

}  // namespace

absl::StatusOr<SubsetMask> Downsize(const Matroid& matroid, const SubsetMask& i,
                                    const SubsetMask& a, const SubsetMask& b,
                                    const SubsetMask& a_prime) {
  for (const SubsetMask* s : {&i, &a, &b, &a_prime}) {
    if (absl::Status st = CheckSize(matroid, *s, "set"); !st.ok()) return st;
  }
  if (!a.IsSubsetOf(i) || b.Intersects(i) || a.Count() != b.Count() ||
      !a_prime.IsSubsetOf(a) || !matroid.IsIndependent((i - a) | b)) {
    return absl::InvalidArgumentError(
        "downsizing needs A in I, B outside I, |A| = |B|, A' in A and "
        "(I \\ A) u B independent");
  }
  const SubsetMask extended =
      ExtendGreedily(matroid, i - a_prime, b, a_prime.Count());
  SubsetMask out = extended & b;
  if (out.Count() != a_prime.Count()) {
    return absl::InternalError("exchange property failed; oracle is not a matroid");
  }
  return out;
}

absl::StatusOr<SubsetMask> DownsizeToward(const Matroid& matroid,
                                          const SubsetMask& i,
                                          const SubsetMask& a,
                                          const SubsetMask& b,
                                          const SubsetMask& b_prime) {
  for (const SubsetMask* s : {&i, &a, &b, &b_prime}) {
    if (absl::Status st = CheckSize(matroid, *s, "set"); !st.ok()) return st;
  }
  if (!a.IsSubsetOf(i) || b.Intersects(i) || a.Count() != b.Count() ||
      !b_prime.IsSubsetOf(b) || !matroid.IsIndependent((i - a) | b)) {
    return absl::InvalidArgumentError(
        "downsizing needs A in I, B outside I, |A| = |B|, B' in B and "
        "(I \\ A) u B independent");
  }
  const int need = a.Count() - b_prime.Count();
  const SubsetMask extended = ExtendGreedily(matroid, (i - a) | b_prime, a, need);
  const SubsetMask added = extended & a;
  if (added.Count() != need) {
    return absl::InternalError("exchange property failed; oracle is not a matroid");
  }
  return a - added;
}

absl::StatusOr<ExchangePair> DominatingExchange(const Matroid& matroid,
                                                absl::Span<const int64_t> w,
                                                const SubsetMask& a,
                                                const SubsetMask& b,
                                                ExchangePair::Gap gap) {
  if (absl::Status s = CheckExchangeInput(matroid, w, a, b); !s.ok()) return s;
  const std::vector<int64_t> v = Oriented(w, gap);
  const int n = matroid.ground_size();
  const int k = a.Count();
  const int64_t delta = MaxAbs(v);
  const int64_t mu = std::abs(WeightOf(v, a) - WeightOf(v, b));
  const int levels = static_cast<int>(2 * delta + 1);
  // Level t holds weight t - delta.
  std::vector<SubsetMask> a_level(levels, SubsetMask(n));
  a.ForEach([&](ElementId e) { a_level[v[e] + delta].Insert(e); });
  auto below = [&](int t) {
    SubsetMask s(n);
    for (int u = 0; u < t; ++u) s = s | a_level[u];
    return s;
  };
  // B_t completes the lighter levels: B_t u A_{<t} is independent. Heavy
  // levels are paired first so that every b in B_t can face an a of weight t.
  std::vector<SubsetMask> b_level(levels, SubsetMask(n));
  SubsetMask remaining = b;
  for (int t = levels - 1; t >= 0; --t) {
    const SubsetMask low = below(t);
    const int need = a_level[t].Count();
    b_level[t] = ExtendGreedily(matroid, low, remaining, need) - low;
    if (b_level[t].Count() != need) {
      return absl::InternalError("exchange property failed; oracle is not a matroid");
    }
    remaining = remaining - b_level[t];
  }
  // Edges pair A_t with B_t in ascending order; keep the level with the most
  // edges of nonnegative weight difference.
  int best = -1;
  SubsetMask best_b(n);
  for (int t = levels - 1; t >= 0; --t) {
    SubsetMask good(n);
    const std::vector<ElementId> bs = b_level[t].Elements();
    for (ElementId e : bs) {
      if (v[e] <= t - delta) good.Insert(e);
    }
    if (good.Count() > best_b.Count() || best < 0) {
      best = t;
      best_b = good;
    }
  }
  ExchangePair out;
  out.gap = gap;
  out.a_side = SubsetMask(n);
  out.b_side = best_b;
  if (best >= 0) {
    const SubsetMask low = below(best);
    const SubsetMask high = a - low;
    const SubsetMask start = best_b | low;
    const SubsetMask extended =
        ExtendGreedily(matroid, start, high, k - start.Count());
    if (extended.Count() != k) {
      return absl::InternalError("could not complete the exchange to size k");
    }
    out.a_side = high - extended;
  }
  if (out.a_side.Count() != out.b_side.Count() ||
      !matroid.IsIndependent((a - out.a_side) | out.b_side)) {
    return absl::InternalError("exchange pair is not valid");
  }
  const int64_t factor = Power(2 * delta + 1, 2);
  if (out.a_side.Count() * factor < k - mu) {
    return absl::InternalError("exchange pair is smaller than guaranteed");
  }
  return out;
}

absl::StatusOr<ExchangePair> UnicolorExchange(const Matroid& matroid,
                                              absl::Span<const int64_t> w,
                                              const SubsetMask& a,
                                              const SubsetMask& b,
                                              ExchangePair::Gap gap) {
  absl::StatusOr<ExchangePair> first = DominatingExchange(matroid, w, a, b, gap);
  if (!first.ok()) return first.status();
  const SubsetMask b2 = LargestClass(w, first->b_side);
  absl::StatusOr<SubsetMask> a2 =
      DownsizeToward(matroid, a, first->a_side, first->b_side, b2);
  if (!a2.ok()) return a2.status();
  const SubsetMask a3 = LargestClass(w, *a2);
  absl::StatusOr<SubsetMask> b3 = Downsize(matroid, a, *a2, b2, a3);
  if (!b3.ok()) return b3.status();
  ExchangePair out{a3, *b3, true, gap};
  const int64_t delta = MaxAbs(w);
  const int64_t mu = std::abs(WeightOf(w, a) - WeightOf(w, b));
  if (a3.Count() * Power(2 * delta + 1, 4) < a.Count() - mu) {
    return absl::InternalError("unicolor pair is smaller than guaranteed");
  }
  return out;
}

int64_t RescueThreshold(int64_t delta, int64_t mu) {
  return Power(2 * delta + 1, 5) + mu;
}

namespace {

struct RescueContext {
  const Matroid& matroid;
  absl::Span<const int64_t> w;
  const SubsetMask& a;
  const SubsetMask& b;
};

// A basis of the rank-|A| truncation of M | (A u B) minus `drop`, with
// counts[alpha] elements of weight alpha.
absl::StatusOr<std::optional<SubsetMask>> WithClassCounts(
    const RescueContext& ctx, const std::map<int64_t, int64_t>& counts,
    const SubsetMask& drop) {
  const int k = ctx.a.Count();
  const Minor minor = Restrict(ctx.matroid, (ctx.a | ctx.b) - drop);
  const Matroid truncated = Truncate(minor.matroid, k);
  if (truncated.Rank() != k) return std::nullopt;
  std::vector<int64_t> row;
  for (ElementId e : minor.parent_ids) row.push_back(ctx.w[e]);
  absl::StatusOr<WeightMatrix> weights =
      WeightMatrix::FromRows(static_cast<int>(row.size()), {row});
  if (!weights.ok()) return weights.status();
  CountVector c;
  int64_t placed = 0;
  for (const auto& cls : weights->classes()) {
    auto it = counts.find(cls.alpha[0]);
    const int64_t want = it == counts.end() ? 0 : it->second;
    if (want > static_cast<int64_t>(cls.elements.size())) return std::nullopt;
    c.push_back(static_cast<int>(want));
    placed += want;
  }
  if (placed != k) return std::nullopt;
  absl::StatusOr<std::optional<SubsetMask>> found =
      CommonBasisWithCounts(truncated, c, *weights);
  if (!found.ok() || !found->has_value()) return found;
  SubsetMask out(ctx.matroid.ground_size());
  (*found)->ForEach([&](ElementId e) { out.Insert(minor.parent_ids[e]); });
  return std::optional<SubsetMask>(out);
}

// Any A' != A with the given class counts.
absl::StatusOr<std::optional<SubsetMask>> OtherWithCounts(
    const RescueContext& ctx, const std::map<int64_t, int64_t>& counts,
    const SubsetMask& try_first) {
  const int n = ctx.matroid.ground_size();
  std::vector<ElementId> order = try_first.Elements();
  for (ElementId e : ctx.a.Elements()) {
    if (!try_first.Contains(e)) order.push_back(e);
  }
  for (ElementId e : order) {
    absl::StatusOr<std::optional<SubsetMask>> found =
        WithClassCounts(ctx, counts, SubsetMask::FromElements(n, {e}));
    if (!found.ok() || found->has_value()) return found;
  }
  return std::nullopt;
}

// Exhaustive search over class-count vectors of weight w(A), used only when
// the unicolor pairs are too small to be balanced.
absl::StatusOr<std::optional<SubsetMask>> SearchAllCounts(
    const RescueContext& ctx) {
  std::map<int64_t, int64_t> avail, of_a;
  (ctx.a | ctx.b).ForEach([&](ElementId e) { ++avail[ctx.w[e]]; });
  ctx.a.ForEach([&](ElementId e) { ++of_a[ctx.w[e]]; });
  std::vector<std::pair<int64_t, int64_t>> classes(avail.begin(), avail.end());
  const int64_t k = ctx.a.Count();
  const int64_t target = WeightOf(ctx.w, ctx.a);
  std::map<int64_t, int64_t> cur;
  int64_t budget = 100000;
  std::optional<SubsetMask> result;
  absl::Status error;
  std::function<bool(size_t, int64_t, int64_t)> rec =
      [&](size_t i, int64_t left, int64_t weight) -> bool {
    if (i == classes.size()) {
      if (left != 0 || weight != target) return true;
      if (--budget < 0) return false;
      absl::StatusOr<std::optional<SubsetMask>> f =
          cur == of_a ? OtherWithCounts(ctx, cur, SubsetMask(ctx.a.size()))
                      : WithClassCounts(ctx, cur, SubsetMask(ctx.a.size()));
      if (!f.ok()) {
        error = f.status();
        return false;
      }
      if (f->has_value()) {
        result = *f;
        return false;
      }
      return true;
    }
    const auto [alpha, size] = classes[i];
    for (int64_t c = 0; c <= std::min(size, left); ++c) {
      cur[alpha] = c;
      if (!rec(i + 1, left - c, weight + c * alpha)) return false;
    }
    cur.erase(alpha);
    return true;
  };
  rec(0, k, 0);
  if (!error.ok()) return error;
  if (!result.has_value() && budget < 0) {
    return absl::ResourceExhaustedError("count-vector search budget exhausted");
  }
  return result;
}

}  // namespace

absl::StatusOr<SubsetMask> OneDimRescue(const Matroid& matroid,
                                        absl::Span<const int64_t> w,
                                        const SubsetMask& a,
                                        const SubsetMask& b) {
  if (absl::Status s = CheckExchangeInput(matroid, w, a, b); !s.ok()) return s;
  const int64_t delta = MaxAbs(w);
  const int64_t mu = std::abs(WeightOf(w, a) - WeightOf(w, b));
  const int64_t k = a.Count();
  if (k < RescueThreshold(delta, mu)) {
    return absl::FailedPreconditionError(absl::StrCat(
        "|A| = ", k, " is below the guarantee (2D+1)^5 + mu = ",
        RescueThreshold(delta, mu)));
  }
  auto verify = [&](const SubsetMask& c) -> absl::StatusOr<SubsetMask> {
    if (c == a || c.Count() != k || !matroid.IsIndependent(c) ||
        WeightOf(w, c) != WeightOf(w, a)) {
      return absl::InternalError("rescue produced an invalid set");
    }
    return c;
  };
  absl::StatusOr<ExchangePair> plus =
      UnicolorExchange(matroid, w, a, b, ExchangePair::Gap::kAHeavier);
  if (!plus.ok()) return plus.status();
  absl::StatusOr<ExchangePair> minus =
      UnicolorExchange(matroid, w, a, b, ExchangePair::Gap::kALighter);
  if (!minus.ok()) return minus.status();
  if (plus->a_side.Empty() || minus->a_side.Empty()) {
    return absl::InternalError("unicolor exchange came back empty");
  }
  const ElementId ap = plus->a_side.Elements()[0];
  const ElementId bp = plus->b_side.Elements()[0];
  const ElementId am = minus->a_side.Elements()[0];
  const ElementId bm = minus->b_side.Elements()[0];
  const int64_t p = w[ap] - w[bp];
  const int64_t q = w[bm] - w[am];
  if (p == 0) return verify((a - plus->a_side) | plus->b_side);
  if (q == 0) return verify((a - minus->a_side) | minus->b_side);

  // Sizes s+ p = s- q with every class of the half-difference even.
  const RescueContext ctx{matroid, w, a, b};
  const int64_t cap_plus = plus->a_side.Count();
  const int64_t cap_minus = minus->a_side.Count();
  for (int64_t sp = 1; sp <= cap_plus; ++sp) {
    if ((sp * p) % q != 0) continue;
    const int64_t sm = sp * p / q;
    if (sm > cap_minus) break;
    std::map<int64_t, int64_t> diff;
    diff[w[ap]] += sp;
    diff[w[bp]] -= sp;
    diff[w[am]] += sm;
    diff[w[bm]] -= sm;
    bool even = true;
    for (auto [alpha, d] : diff) even &= d % 2 == 0;
    if (!even) continue;

    const std::vector<ElementId> ap_all = plus->a_side.Elements();
    const std::vector<ElementId> am_all = minus->a_side.Elements();
    const SubsetMask a_plus = SubsetMask::FromElements(
        a.size(), absl::MakeConstSpan(ap_all).subspan(0, sp));
    const SubsetMask a_minus = SubsetMask::FromElements(
        a.size(), absl::MakeConstSpan(am_all).subspan(0, sm));
    absl::StatusOr<SubsetMask> b_plus =
        Downsize(matroid, a, plus->a_side, plus->b_side, a_plus);
    if (!b_plus.ok()) return b_plus.status();
    absl::StatusOr<SubsetMask> b_minus =
        Downsize(matroid, a, minus->a_side, minus->b_side, a_minus);
    if (!b_minus.ok()) return b_minus.status();
    // Class sums of y = chi(A) - (chi(A+) - chi(B+) + chi(A-) - chi(B-)) / 2.
    std::map<int64_t, int64_t> counts;
    a.ForEach([&](ElementId e) { ++counts[w[e]]; });
    for (auto [alpha, d] : diff) counts[alpha] -= d / 2;
    // y is 1/2 on A+ outside A-, so some vertex of the face drops it.
    absl::StatusOr<std::optional<SubsetMask>> found =
        OtherWithCounts(ctx, counts, a_plus ^ a_minus);
    if (!found.ok()) return found.status();
    if (!found->has_value()) {
      return absl::InternalError("no second integral point on the tight face");
    }
    return verify(**found);
  }
  absl::StatusOr<std::optional<SubsetMask>> found = SearchAllCounts(ctx);
  if (!found.ok()) return found.status();
  if (!found->has_value()) {
    return absl::InternalError("no set of equal weight exists");
  }
  return verify(**found);
}

mpz_class SensitivityBound(const WeightMatrix& weights, const SubsetMask& a,
                           const SubsetMask& b) {
  const int m = weights.m();
  const std::vector<int64_t> wa = weights.Apply(a);
  const std::vector<int64_t> wb = weights.Apply(b);
  int64_t l1 = 0;
  for (int i = 0; i < m; ++i) l1 += std::abs(wb[i] - wa[i]);
  mpz_class base = 2 * static_cast<long>(m) * weights.delta();
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), 12ul * m);
  return out * l1;
}

namespace {

void Finish(BoundReport& r) {
  r.pass = r.observed <= r.proven_bound;
  if (r.proven_bound == 0) {
    r.ratio = 0;
  } else {
    r.ratio = r.observed / mpq_class(r.proven_bound);
    r.ratio.canonicalize();
  }
}

absl::Status CheckLabSize(const Matroid& m) {
  if (m.ground_size() > kMaxLabGroundSize) {
    return absl::FailedPreconditionError(absl::StrCat(
        "bound checks enumerate bases and need n <= ", kMaxLabGroundSize));
  }
  return absl::OkStatus();
}

bool IsBasis(const Matroid& m, const SubsetMask& s) {
  return s.size() == m.ground_size() && s.Count() == m.Rank() &&
         m.IsIndependent(s);
}

}  // namespace

absl::StatusOr<BoundReport> MinSymdiffExact(const Matroid& matroid,
                                            const WeightMatrix& weights,
                                            const SubsetMask& a,
                                            const SubsetMask& b) {
  if (absl::Status s = CheckLabSize(matroid); !s.ok()) return s;
  if (weights.n() != matroid.ground_size()) {
    return absl::InvalidArgumentError("weights do not match the ground set");
  }
  if (!IsBasis(matroid, a) || !IsBasis(matroid, b)) {
    return absl::InvalidArgumentError("A and B must be bases");
  }
  const std::vector<int64_t> target = weights.Apply(a);
  int best = a.Count() + b.Count();
  ForEachBasis(matroid, [&](const SubsetMask& c) {
    if (weights.Apply(c) == target) best = std::min(best, (c ^ b).Count());
    return true;
  });
  BoundReport r;
  r.observed = best;
  r.proven_bound = SensitivityBound(weights, a, b);
  Finish(r);
  return r;
}

absl::StatusOr<SymdiffSweep> MinSymdiffAllPairs(const Matroid& matroid,
                                                const WeightMatrix& weights) {
  if (absl::Status s = CheckLabSize(matroid); !s.ok()) return s;
  if (weights.n() != matroid.ground_size()) {
    return absl::InvalidArgumentError("weights do not match the ground set");
  }
  std::vector<uint64_t> bases;
  std::map<std::vector<int64_t>, std::vector<uint64_t>> by_weight;
  std::vector<std::vector<int64_t>> weight_of;
  ForEachBasis(matroid, [&](const SubsetMask& c) {
    bases.push_back(c.low_bits());
    weight_of.push_back(weights.Apply(c));
    by_weight[weight_of.back()].push_back(c.low_bits());
    return true;
  });
  const int m = weights.m();
  mpz_class factor;
  mpz_class base = 2 * static_cast<long>(m) * weights.delta();
  mpz_pow_ui(factor.get_mpz_t(), base.get_mpz_t(), 12ul * m);
  SymdiffSweep out;
  for (size_t j = 0; j < bases.size(); ++j) {
    std::map<std::vector<int64_t>, int> nearest;
    for (const auto& [w, group] : by_weight) {
      int d = 64;
      for (uint64_t c : group) d = std::min(d, std::popcount(c ^ bases[j]));
      nearest[w] = d;
    }
    for (size_t i = 0; i < bases.size(); ++i) {
      const int observed = nearest[weight_of[i]];
      int64_t l1 = 0;
      for (int r = 0; r < m; ++r) l1 += std::abs(weight_of[j][r] - weight_of[i][r]);
      const mpz_class bound = factor * l1;
      ++out.pairs;
      if (observed <= bound) ++out.passed;
      out.max_observed = std::max<int64_t>(out.max_observed, observed);
      mpq_class ratio = 0;
      if (bound > 0) {
        ratio = mpq_class(observed, bound);
        ratio.canonicalize();
      }
      const bool ok = observed <= bound;
      // A failing pair always outranks passing ones.
      if (out.pairs == 1 || (out.worst.pass && !ok) ||
          (out.worst.pass == ok && ratio > out.worst.ratio)) {
        out.worst.observed = observed;
        out.worst.proven_bound = bound;
        out.worst.ratio = ratio;
        out.worst.pass = ok;
      }
      if (ratio > out.max_ratio) out.max_ratio = ratio;
    }
  }
  return out;
}

absl::StatusOr<BoundReport> ProximityAt(const Matroid& matroid,
                                        const WeightMatrix& weights,
                                        absl::Span<const int64_t> beta,
                                        absl::Span<const mpq_class> x) {
  if (absl::Status s = CheckLabSize(matroid); !s.ok()) return s;
  const int n = matroid.ground_size();
  if (weights.n() != n || static_cast<int>(x.size()) != n ||
      static_cast<int>(beta.size()) != weights.m()) {
    return absl::InvalidArgumentError("instance dimensions disagree");
  }
  std::optional<mpq_class> best;
  ForEachBasis(matroid, [&](const SubsetMask& c) {
    const std::vector<int64_t> wc = weights.Apply(c);
    if (!std::equal(wc.begin(), wc.end(), beta.begin(), beta.end())) return true;
    mpq_class d = 0;
    for (int e = 0; e < n; ++e) d += abs(x[e] - (c.Contains(e) ? 1 : 0));
    if (!best.has_value() || d < *best) best = d;
    return true;
  });
  BoundReport r;
  r.proven_bound = ProximityBound(weights.m(), weights.delta());
  if (!best.has_value()) {
    r.vacuous = true;
    r.observed = 0;
  } else {
    r.observed = *best;
  }
  Finish(r);
  return r;
}

absl::StatusOr<BoundReport> ProximityExact(const Matroid& matroid,
                                           const WeightMatrix& weights,
                                           absl::Span<const int64_t> beta,
                                           uint64_t seed) {
  if (absl::Status s = CheckLabSize(matroid); !s.ok()) return s;
  absl::StatusOr<SolveReport> brute = BruteForceSolve(matroid, weights, beta);
  if (!brute.ok()) return brute.status();
  if (!brute->basis.has_value()) {
    BoundReport r;
    r.vacuous = true;
    r.proven_bound = ProximityBound(weights.m(), weights.delta());
    Finish(r);
    return r;
  }
  absl::StatusOr<LpOutcome> lp = LpVertex(matroid, weights, beta, seed);
  if (!lp.ok()) return lp.status();
  if (lp->status != LpOutcome::Status::kVertex) {
    return absl::InternalError("relaxation infeasible although a basis fits");
  }
  return ProximityAt(matroid, weights, beta, lp->point);
}

namespace {

// Even cycle of length 2k through left vertices left0.. and right vertices
// right0.., edge ids from `first`: (u_i, v_i) = 2i, (u_{i+1}, v_i) = 2i + 1.
void AddCycle(int k, int first, int left0, int right0,
              std::vector<std::vector<ElementId>>& left,
              std::vector<std::vector<ElementId>>& right) {
  for (int i = 0; i < k; ++i) {
    left[left0 + i].push_back(first + 2 * i);
    right[right0 + i].push_back(first + 2 * i);
    left[left0 + (i + 1) % k].push_back(first + 2 * i + 1);
    right[right0 + i].push_back(first + 2 * i + 1);
  }
}

SubsetMask Parity(int n, int from, int to, int parity) {
  SubsetMask s(n);
  for (int e = from; e < to; ++e) {
    if ((e - from) % 2 == parity) s.Insert(e);
  }
  return s;
}

int RationalRank(std::vector<std::vector<mpq_class>> rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[pivot], rows[rank]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (int j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

absl::StatusOr<LowerBoundInstance> MakeLowerBoundInstance(LowerBoundKind kind,
                                                          int n) {
  LowerBoundInstance out;
  out.kind = kind;
  out.n = n;
  std::vector<std::vector<ElementId>> left, right;
  if (kind == LowerBoundKind::kSensitivity) {
    if (n < 2 || n % 2 != 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("sensitivity instance needs an even n >= 2, got ", n));
    }
    const int k = n / 2;
    left.resize(k);
    right.resize(k);
    AddCycle(k, 0, 0, 0, left, right);
    out.weights.assign(n, 0);
    out.weights[0] = 1;
    out.target = 1;
    out.claimed_bases = {Parity(n, 0, n, 0), Parity(n, 0, n, 1)};
    out.claimed_distance = n;
  } else {
    if (n < 8 || n % 4 != 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "proximity instance needs n divisible by 4 and >= 8, got ", n));
    }
    const int half = n / 2;
    const int k = n / 4;
    left.resize(2 * k);
    right.resize(2 * k);
    AddCycle(k, 0, 0, 0, left, right);
    AddCycle(k, half, k, k, left, right);
    out.weights.assign(n, 0);
    out.weights[0] = 1;
    out.weights[half] = 1;
    out.weights[half + 2] = 1;
    out.target = 1;
    out.claimed_bases = {Parity(n, 0, half, 0) | Parity(n, half, n, 1)};
    out.fractional_vertex.assign(n, 0);
    for (int e = 0; e < half; ++e) out.fractional_vertex[e] = e % 2;
    for (int e = half; e < n; ++e) out.fractional_vertex[e] = mpq_class(1, 2);
    out.claimed_distance = mpq_class(3 * n, 4);
    out.claimed_distance.canonicalize();
  }
  std::sort(out.claimed_bases.begin(), out.claimed_bases.end());
  out.left = Partition(left, std::vector<int>(left.size(), 1));
  out.right = Partition(right, std::vector<int>(right.size(), 1));
  return out;
}

absl::StatusOr<LowerBoundCheck> VerifyLowerBound(const LowerBoundInstance& inst) {
  absl::StatusOr<Matroid> m1 = Compile(inst.left);
  if (!m1.ok()) return m1.status();
  absl::StatusOr<Matroid> m2 = Compile(inst.right);
  if (!m2.ok()) return m2.status();
  const int n = inst.n;
  if (n > 24) {
    return absl::FailedPreconditionError("verification enumerates matchings; n <= 24");
  }
  LowerBoundCheck out;
  const int r2 = m2->Rank();
  ForEachBasis(*m1, [&](const SubsetMask& b) {
    if (b.Count() == r2 && m2->IsIndependent(b)) {
      out.common_bases.push_back(b);
      int64_t w = 0;
      b.ForEach([&](ElementId e) { w += inst.weights[e]; });
      if (w == inst.target) out.exact_bases.push_back(b);
    }
    return true;
  });
  std::sort(out.common_bases.begin(), out.common_bases.end());
  auto weight = [&](const SubsetMask& s) {
    int64_t w = 0;
    s.ForEach([&](ElementId e) { w += inst.weights[e]; });
    return w;
  };
  if (inst.kind == LowerBoundKind::kSensitivity) {
    if (out.common_bases.size() == 2) {
      const SubsetMask& b = out.common_bases[0];
      const SubsetMask& c = out.common_bases[1];
      out.observed_distance = (b ^ c).Count();
      std::vector<int64_t> ws = {weight(b), weight(c)};
      std::sort(ws.begin(), ws.end());
      out.ok = out.common_bases == inst.claimed_bases && !b.Intersects(c) &&
               b.Count() == n / 2 && c.Count() == n / 2 &&
               ws == std::vector<int64_t>{0, 1} &&
               out.observed_distance == inst.claimed_distance;
    }
    return out;
  }
  // Proximity: the point lies in both base polytopes, meets the target and
  // its tight constraints have full rank.
  const std::vector<mpq_class>& x = inst.fractional_vertex;
  bool feasible = static_cast<int>(x.size()) == n;
  std::vector<std::vector<mpq_class>> tight;
  for (const MatroidSpec* spec : {&inst.left, &inst.right}) {
    for (const auto& block : std::get<PartitionSpec>(spec->kind).blocks) {
      std::vector<mpq_class> row(n, 0);
      mpq_class sum = 0;
      for (ElementId e : block) {
        row[e] = 1;
        if (feasible) sum += x[e];
      }
      feasible &= sum == 1;
      tight.push_back(std::move(row));
    }
  }
  mpq_class wx = 0;
  std::vector<mpq_class> wrow(n);
  for (int e = 0; e < n && feasible; ++e) {
    feasible &= x[e] >= 0 && x[e] <= 1;
    wx += x[e] * inst.weights[e];
    wrow[e] = inst.weights[e];
    if (x[e] == 0) {
      std::vector<mpq_class> row(n, 0);
      row[e] = 1;
      tight.push_back(std::move(row));
    }
  }
  feasible &= wx == inst.target;
  tight.push_back(wrow);
  out.vertex_verified = feasible && RationalRank(tight, n) == n;
  if (out.exact_bases.size() == 1 && feasible) {
    const SubsetMask& b = out.exact_bases[0];
    mpq_class d = 0;
    for (int e = 0; e < n; ++e) d += abs(x[e] - (b.Contains(e) ? 1 : 0));
    out.observed_distance = d;
  }
  out.ok = out.vertex_verified && out.exact_bases == inst.claimed_bases &&
           out.observed_distance == inst.claimed_distance;
  return out;
}

}  // namespace exactbasis
