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

#include <algorithm>
#include <bit>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "exactbasis/prime_field.h"
#include "exactbasis/rng.h"
#include "exactbasis/simplex.h"

namespace exactbasis {
namespace {

constexpr int kAlwaysExhaustiveBelow = 16;

mpz_class CommonDenominator(absl::Span<const mpq_class> x) {
  mpz_class den = 1;
  for (const mpq_class& v : x) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  return den;
}

// Numerators of x over `den`, or empty if some would not fit comfortably
// in 64 bits when summed over 24 elements.
std::vector<int64_t> SmallNumerators(absl::Span<const mpq_class> x,
                                     const mpz_class& den) {
  if (den >= mpz_class(1) << 56) return {};
  std::vector<int64_t> out;
  for (const mpq_class& v : x) {
    mpq_class scaled = v * den;
    if (!scaled.get_num().fits_slong_p()) return {};
    out.push_back(scaled.get_num().get_si());
  }
  return out;
}

}  // namespace

absl::StatusOr<std::optional<RankCut>> Separator::Exhaustive(
    absl::Span<const mpq_class> x) {
  if (!table_.has_value()) {
    absl::StatusOr<RankTable> table = RankTable::Build(matroid_);
    if (!table.ok()) return table.status();
    table_ = *std::move(table);
  }
  const int n = matroid_.ground_size();
  const uint64_t total = uint64_t{1} << n;
  const mpz_class den = CommonDenominator(x);
  const std::vector<int64_t> num = SmallNumerators(x, den);
  uint64_t best_bits = 0;
  uint64_t gray = 0;
  if (!num.empty()) {
    const int64_t d = den.get_si();
    int64_t sum = 0;
    int64_t best = 0;
    for (uint64_t i = 1; i < total; ++i) {
      const int bit = std::countr_zero(i);
      gray ^= uint64_t{1} << bit;
      sum += (gray >> bit & 1) ? num[bit] : -num[bit];
      const int64_t v = sum - table_->rank(gray) * d;
      if (v > best) {
        best = v;
        best_bits = gray;
      }
    }
  } else {
    mpq_class sum = 0;
    mpq_class best = 0;
    for (uint64_t i = 1; i < total; ++i) {
      const int bit = std::countr_zero(i);
      gray ^= uint64_t{1} << bit;
      if (gray >> bit & 1) {
        sum += x[bit];
      } else {
        sum -= x[bit];
      }
      mpq_class v = sum - table_->rank(gray);
      if (v > best) {
        best = v;
        best_bits = gray;
      }
    }
  }
  if (best_bits == 0) return std::nullopt;
  return RankCut{SubsetMask::FromBits(n, best_bits), table_->rank(best_bits)};
}

absl::StatusOr<std::optional<RankCut>> Separator::Find(
    absl::Span<const mpq_class> x) {
  const int n = matroid_.ground_size();
  if (static_cast<int>(x.size()) != n) {
    return absl::InvalidArgumentError("point dimension differs from ground size");
  }
  const RankCutMinimizer* hook = matroid_.minimizer();
  if (n <= kAlwaysExhaustiveBelow ||
      (hook == nullptr && n <= RankTable::kMaxGroundSize)) {
    return Exhaustive(x);
  }
  if (hook == nullptr) {
    return absl::UnimplementedError(absl::StrCat(
        "rank-cut separation on ", n,
        " elements needs a structural minimizer for this matroid family"));
  }
  absl::StatusOr<std::optional<SubsetMask>> s = hook->FindViolatedCut(matroid_, x);
  if (!s.ok()) return s.status();
  if (!s->has_value()) return std::nullopt;
  RankCut cut{**s, Rank(matroid_, **s)};
  mpq_class lhs = 0;
  cut.subset.ForEach([&](ElementId e) { lhs += x[e]; });
  if (lhs <= cut.rhs) {
    return absl::InternalError("minimizer returned a non-violated cut");
  }
  return cut;
}

absl::StatusOr<std::optional<RankCut>> Separate(const Matroid& matroid,
                                                absl::Span<const mpq_class> x) {
  Separator sep(matroid);
  return sep.Find(x);
}

int ExactRank(const std::vector<std::vector<mpq_class>>& rows, int cols) {
  std::vector<std::vector<mpq_class>> m = rows;
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[rank]);
    for (size_t i = rank + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Rank of the integer rows; tries a modular shortcut first.
int TightRank(const std::vector<std::vector<int64_t>>& rows, int n) {
  const PrimeField field(kMersenne61);
  std::vector<uint64_t> flat;
  flat.reserve(rows.size() * n);
  for (const auto& r : rows) {
    for (int64_t v : r) flat.push_back(field.FromInt(v));
  }
  const int modular = field.Rank(std::move(flat), static_cast<int>(rows.size()), n);
  if (modular == n) return n;
  std::vector<std::vector<mpq_class>> q;
  for (const auto& r : rows) {
    q.emplace_back(r.begin(), r.end());
  }
  return ExactRank(q, n);
}

}  // namespace

absl::StatusOr<LpOutcome> LpVertex(const Matroid& matroid,
                                   const WeightMatrix& weights,
                                   absl::Span<const int64_t> beta,
                                   uint64_t seed) {
  const int n = matroid.ground_size();
  const int m = weights.m();
  if (weights.n() != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "weight matrix has ", weights.n(), " columns for ", n, " elements"));
  }
  if (static_cast<int>(beta.size()) != m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "target has ", beta.size(), " entries for ", m, " weight rows"));
  }
  const int r = matroid.Rank();
  LpOutcome out;
  std::vector<int> upper(n);
  for (int e = 0; e < n; ++e) {
    upper[e] = matroid.IsIndependent(SubsetMask::FromElements(n, {e})) ? 1 : 0;
  }

  Rng rng(SubSeed(seed, "lp-objective"));
  const int64_t span = std::max<int64_t>(1, 2 * int64_t{n} * n);
  std::vector<mpq_class> objective(n);
  for (int e = 0; e < n; ++e) {
    objective[e] = mpq_class(UniformInt(rng, 1, span), span);
    objective[e].canonicalize();
  }

  Separator separator(matroid);
  std::vector<RankCut> cuts;
  for (int attempt = 0; attempt < 4; ++attempt) {
    BoundedSimplex lp;
    for (int e = 0; e < n; ++e) {
      lp.AddColumn(0, mpq_class(upper[e]), objective[e]);
    }
    BoundedSimplex::Row ones;
    for (int e = 0; e < n; ++e) ones.emplace_back(e, 1);
    lp.AddEqualityRow(ones, r);
    for (int i = 0; i < m; ++i) {
      BoundedSimplex::Row row;
      for (int e = 0; e < n; ++e) {
        if (weights.at(i, e) != 0) row.emplace_back(e, mpq_class(weights.at(i, e)));
      }
      lp.AddEqualityRow(row, mpq_class(beta[i]));
    }
    auto cut_row = [&](const RankCut& cut) {
      BoundedSimplex::Row row;
      cut.subset.ForEach([&](ElementId e) { row.emplace_back(e, 1); });
      return row;
    };
    for (const RankCut& cut : cuts) lp.AddLessEqualRow(cut_row(cut), cut.rhs);
    BoundedSimplex::Result res = lp.Solve();
    std::vector<mpq_class> x(n);
    while (true) {
      if (res == BoundedSimplex::Result::kInfeasible) {
        out.status = LpOutcome::Status::kInfeasible;
        out.pivots += lp.pivots();
        out.cuts_added = static_cast<int>(cuts.size());
        out.objective_used = objective;
        return out;
      }
      if (res != BoundedSimplex::Result::kOptimal) {
        return absl::InternalError("simplex failed on a bounded region");
      }
      for (int e = 0; e < n; ++e) x[e] = lp.value(e);
      absl::StatusOr<std::optional<RankCut>> cut = separator.Find(x);
      if (!cut.ok()) return cut.status();
      if (!cut->has_value()) break;
      cuts.push_back(**cut);
      res = lp.AddLessEqualRowAndReoptimize(cut_row(cuts.back()),
                                            cuts.back().rhs);
    }
    out.pivots += lp.pivots();

    // Vertex check: the constraints tight at x must pin x down.
    std::vector<std::vector<int64_t>> tight;
    for (int e = 0; e < n; ++e) {
      if (x[e] == 0 || x[e] == upper[e]) {
        std::vector<int64_t> row(n, 0);
        row[e] = 1;
        tight.push_back(std::move(row));
      }
    }
    tight.emplace_back(n, 1);
    for (int i = 0; i < m; ++i) tight.push_back(weights.Row(i));
    std::vector<RankCut> tight_cuts;
    for (const RankCut& cut : cuts) {
      mpq_class lhs = 0;
      cut.subset.ForEach([&](ElementId e) { lhs += x[e]; });
      if (lhs == cut.rhs) {
        tight_cuts.push_back(cut);
        std::vector<int64_t> row(n, 0);
        cut.subset.ForEach([&](ElementId e) { row[e] = 1; });
        tight.push_back(std::move(row));
      }
    }
    const int rank = n == 0 ? 0 : TightRank(tight, n);
    if (rank == n) {
      out.status = LpOutcome::Status::kVertex;
      out.point = std::move(x);
      out.tight_cuts = std::move(tight_cuts);
      out.objective_used = objective;
      out.face_dimension = 0;
      out.cuts_added = static_cast<int>(cuts.size());
      return out;
    }
    // Lexicographic perturbation, then solve again with the cuts kept.
    const mpq_class eps(1, span + 1);
    mpq_class step = eps;
    for (int e = 0; e < n; ++e) {
      objective[e] += step;
      step *= eps;
    }
    out.face_dimension = n - rank;
  }
  return absl::InternalError(
      "simplex returned a non-vertex optimum after repeated perturbation");
}

absl::StatusOr<FaceRounding> RoundToFaceBasis(const Matroid& matroid,
                                              absl::Span<const mpq_class> x) {
  const int n = matroid.ground_size();
  if (n > 20) {
    return absl::UnimplementedError(
        absl::StrCat("face rounding supports at most 20 elements, got ", n));
  }
  if (static_cast<int>(x.size()) != n) {
    return absl::InvalidArgumentError("point dimension differs from ground size");
  }
  const int r = matroid.Rank();
  mpq_class total = 0;
  for (const mpq_class& v : x) {
    if (v < 0 || v > 1) {
      return absl::FailedPreconditionError("coordinate outside [0,1]");
    }
    total += v;
  }
  if (total != r) {
    return absl::FailedPreconditionError(
        absl::StrCat("coordinates sum to ", total.get_str(), ", rank is ", r));
  }
  absl::StatusOr<RankTable> table = RankTable::Build(matroid);
  if (!table.ok()) return table.status();
  const mpz_class den = CommonDenominator(x);
  const std::vector<int64_t> num = SmallNumerators(x, den);
  if (num.empty() && n > 0) {
    return absl::UnimplementedError("denominators too large for face rounding");
  }
  const int64_t d = den.get_si();

  // Row basis (mod a large prime) of the constraints tight at x: zero
  // coordinates first, then tight rank sets in Gray-code order.
  const PrimeField field(kMersenne61);
  std::vector<std::vector<uint64_t>> echelon;
  std::vector<int> pivot_col;
  std::vector<uint64_t> tight_sets;
  uint64_t zero_bits = 0;
  auto try_add = [&](std::vector<uint64_t> v) {
    for (size_t k = 0; k < echelon.size(); ++k) {
      const uint64_t f = v[pivot_col[k]];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        v[j] = field.Sub(v[j], field.Mul(f, echelon[k][j]));
      }
    }
    int p = 0;
    while (p < n && v[p] == 0) ++p;
    if (p == n) return false;
    const uint64_t inv = field.Inv(v[p]);
    for (int j = 0; j < n; ++j) v[j] = field.Mul(v[j], inv);
    for (auto& row : echelon) {
      const uint64_t f = row[p];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) row[j] = field.Sub(row[j], field.Mul(f, v[j]));
    }
    echelon.push_back(std::move(v));
    pivot_col.push_back(p);
    return true;
  };
  for (int e = 0; e < n; ++e) {
    if (x[e] == 0) {
      zero_bits |= uint64_t{1} << e;
      std::vector<uint64_t> v(n, 0);
      v[e] = 1;
      try_add(std::move(v));
    }
  }
  const uint64_t total_sets = uint64_t{1} << n;
  uint64_t gray = 0;
  int64_t sum = 0;
  for (uint64_t i = 1; i < total_sets; ++i) {
    const int bit = std::countr_zero(i);
    gray ^= uint64_t{1} << bit;
    sum += (gray >> bit & 1) ? num[bit] : -num[bit];
    const int64_t slack = table->rank(gray) * d - sum;
    if (slack < 0) {
      return absl::FailedPreconditionError(
          absl::StrCat("point violates the rank inequality on ",
                       SubsetMask::FromBits(n, gray).ToString()));
    }
    if (slack == 0 && static_cast<int>(echelon.size()) < n) {
      std::vector<uint64_t> v(n, 0);
      for (int e = 0; e < n; ++e) v[e] = gray >> e & 1;
      if (try_add(std::move(v))) tight_sets.push_back(gray);
    }
  }
  FaceRounding out;
  out.face_dimension = n - static_cast<int>(echelon.size());

  bool found = false;
  uint64_t best_bits = 0;
  mpq_class best;
  for (uint64_t bits = 0; bits < total_sets; ++bits) {
    if (std::popcount(bits) != r || (bits & zero_bits) != 0) continue;
    if (!table->independent(bits)) continue;
    bool on_face = true;
    for (uint64_t s : tight_sets) {
      if (std::popcount(bits & s) != table->rank(s)) {
        on_face = false;
        break;
      }
    }
    if (!on_face) continue;
    mpq_class dist = 0;
    for (int e = 0; e < n; ++e) {
      dist += (bits >> e & 1) ? mpq_class(1 - x[e]) : x[e];
    }
    if (!found || dist < best) {
      found = true;
      best = dist;
      best_bits = bits;
    }
  }
  if (!found) return absl::InternalError("minimal face contains no basis");
  out.basis = SubsetMask::FromBits(n, best_bits);
  out.distance = best;
  if (out.distance > out.face_dimension) {
    return absl::InternalError(absl::StrCat(
        "rounding distance ", best.get_str(), " exceeds face dimension ",
        out.face_dimension));
  }
  return out;
}

}  // namespace exactbasis
