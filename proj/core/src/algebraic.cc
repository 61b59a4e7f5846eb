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

#include <algorithm>
#include <optional>
#include <variant>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "exactbasis/rng.h"

namespace exactbasis {
namespace {

using Dense = std::vector<std::vector<uint64_t>>;

// Reduced row echelon form; returns the pivot column of each nonzero row and
// drops zero rows.
std::vector<int> RowReduce(const PrimeField& f, Dense& a, int cols) {
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(a.size()) && a[p][c] == 0) ++p;
    if (p == static_cast<int>(a.size())) continue;
    std::swap(a[p], a[rank]);
    const uint64_t inv = f.Inv(a[rank][c]);
    for (auto& v : a[rank]) v = f.Mul(v, inv);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const uint64_t k = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] = f.Sub(a[i][j], f.Mul(k, a[rank][j]));
    }
    pivots.push_back(c);
    ++rank;
  }
  a.resize(rank);
  return pivots;
}

absl::StatusOr<Dense> DenseOf(const MatroidSpec& spec, const PrimeField& f);

Dense BlockDiagonal(const std::vector<std::pair<Dense, int>>& blocks) {
  int rows = 0, cols = 0;
  for (const auto& [d, c] : blocks) {
    rows += static_cast<int>(d.size());
    cols += c;
  }
  Dense out(rows, std::vector<uint64_t>(cols, 0));
  int r0 = 0, c0 = 0;
  for (const auto& [d, c] : blocks) {
    for (size_t i = 0; i < d.size(); ++i) {
      for (int j = 0; j < c; ++j) out[r0 + i][c0 + j] = d[i][j];
    }
    r0 += static_cast<int>(d.size());
    c0 += c;
  }
  return out;
}

Dense Vandermonde(const PrimeField& f, int n, int r) {
  Dense out(r, std::vector<uint64_t>(n));
  for (int j = 0; j < n; ++j) {
    uint64_t v = 1;
    for (int i = 0; i < r; ++i) {
      out[i][j] = v;
      v = f.Mul(v, static_cast<uint64_t>(j + 1));
    }
  }
  return out;
}

struct DenseVisitor {
  const PrimeField& f;

  absl::StatusOr<Dense> operator()(const UniformSpec& s) const {
    if (s.n >= 0 && static_cast<uint64_t>(s.n) >= f.q()) {
      return absl::UnimplementedError("field too small for a Vandermonde matrix");
    }
    return Vandermonde(f, s.n, s.r);
  }
  absl::StatusOr<Dense> operator()(const PartitionSpec& s) const {
    int n = 0;
    for (const auto& b : s.blocks) n += static_cast<int>(b.size());
    if (static_cast<uint64_t>(n) >= f.q()) {
      return absl::UnimplementedError("field too small for a Vandermonde matrix");
    }
    Dense out;
    for (size_t b = 0; b < s.blocks.size(); ++b) {
      const int size = static_cast<int>(s.blocks[b].size());
      const int cap = std::min(s.capacities[b], size);
      Dense v = Vandermonde(f, size, cap);
      for (const auto& row : v) {
        std::vector<uint64_t> full(n, 0);
        for (int j = 0; j < size; ++j) full[s.blocks[b][j]] = row[j];
        out.push_back(std::move(full));
      }
    }
    return out;
  }
  absl::StatusOr<Dense> operator()(const GraphicSpec& s) const {
    const int n = static_cast<int>(s.edges.size());
    Dense out(s.vertex_count, std::vector<uint64_t>(n, 0));
    for (int j = 0; j < n; ++j) {
      auto [a, b] = s.edges[j];
      if (a == b) continue;
      out[a][j] = 1;
      out[b][j] = f.Neg(1);
    }
    return out;
  }
  absl::StatusOr<Dense> operator()(const LinearSpec& s) const {
    if (s.field == LinearSpec::Field::kPrime &&
        static_cast<uint64_t>(s.prime) != f.q()) {
      return absl::UnimplementedError(absl::StrCat(
          "matrix over F_", s.prime, " can only be used with prime ", s.prime));
    }
    Dense out(s.rows, std::vector<uint64_t>(s.cols));
    for (int i = 0; i < s.rows; ++i) {
      for (int j = 0; j < s.cols; ++j) {
        std::optional<uint64_t> v = f.FromRational(s.at(i, j));
        if (!v.has_value()) {
          return absl::FailedPreconditionError(
              "matrix entry has a denominator divisible by the prime");
        }
        out[i][j] = *v;
      }
    }
    return out;
  }
  absl::StatusOr<Dense> operator()(const TransversalSpec&) const {
    return absl::UnimplementedError(
        "transversal matroids have no explicit representation");
  }
  absl::StatusOr<Dense> operator()(const DirectSumSpec& s) const {
    std::vector<std::pair<Dense, int>> blocks;
    for (const MatroidSpec& p : s.parts) {
      absl::StatusOr<Dense> d = DenseOf(p, f);
      if (!d.ok()) return d.status();
      blocks.emplace_back(*std::move(d), p.GroundSize());
    }
    return BlockDiagonal(blocks);
  }
  absl::StatusOr<Dense> operator()(const RestrictionSpec& s) const {
    absl::StatusOr<Dense> d = DenseOf(*s.base, f);
    if (!d.ok()) return d.status();
    Dense out;
    for (const auto& row : *d) {
      std::vector<uint64_t> kept;
      for (ElementId e : s.keep) kept.push_back(row[e]);
      out.push_back(std::move(kept));
    }
    return out;
  }
  absl::StatusOr<Dense> operator()(const ContractionSpec& s) const {
    absl::StatusOr<Dense> d = DenseOf(*s.base, f);
    if (!d.ok()) return d.status();
    Dense a = *std::move(d);
    const int n = s.base->GroundSize();
    std::vector<bool> used_row(a.size(), false);
    std::vector<bool> contracted(n, false);
    for (ElementId c : s.contract) {
      contracted[c] = true;
      int p = -1;
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (!used_row[i] && a[i][c] != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) {
        return absl::FailedPreconditionError(
            "contracted set is dependent in the representation");
      }
      used_row[p] = true;
      const uint64_t inv = f.Inv(a[p][c]);
      for (int i = 0; i < static_cast<int>(a.size()); ++i) {
        if (i == p || a[i][c] == 0) continue;
        const uint64_t k = f.Mul(a[i][c], inv);
        for (int j = 0; j < n; ++j) a[i][j] = f.Sub(a[i][j], f.Mul(k, a[p][j]));
      }
    }
    Dense out;
    for (size_t i = 0; i < a.size(); ++i) {
      if (used_row[i]) continue;
      std::vector<uint64_t> row;
      for (int j = 0; j < n; ++j) {
        if (!contracted[j]) row.push_back(a[i][j]);
      }
      out.push_back(std::move(row));
    }
    return out;
  }
};

absl::StatusOr<Dense> DenseOf(const MatroidSpec& spec, const PrimeField& f) {
  return std::visit(DenseVisitor{f}, spec.kind);
}

// Polynomial through (x_i, y_i) with distinct x_i, low degree first.
std::vector<uint64_t> Interpolate(const PrimeField& f,
                                  const std::vector<uint64_t>& xs,
                                  const std::vector<uint64_t>& ys) {
  const size_t k = xs.size();
  // P(y) = prod (y - x_i).
  std::vector<uint64_t> p(k + 1, 0);
  p[0] = 1;
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i + 1; j > 0; --j) {
      p[j] = f.Sub(p[j - 1], f.Mul(xs[i], p[j]));
    }
    p[0] = f.Neg(f.Mul(xs[i], p[0]));
  }
  std::vector<uint64_t> out(k, 0);
  std::vector<uint64_t> q(k);
  for (size_t i = 0; i < k; ++i) {
    if (ys[i] == 0) continue;
    // q = P / (y - x_i) by synthetic division.
    uint64_t carry = 0;
    for (size_t j = k; j > 0; --j) {
      carry = f.Add(p[j], f.Mul(carry, xs[i]));
      q[j - 1] = carry;
    }
    uint64_t denom = 1;
    for (size_t j = 0; j < k; ++j) {
      if (j != i) denom = f.Mul(denom, f.Sub(xs[i], xs[j]));
    }
    const uint64_t scale = f.Mul(ys[i], f.Inv(denom));
    for (size_t j = 0; j < k; ++j) out[j] = f.Add(out[j], f.Mul(scale, q[j]));
  }
  return out;
}

// Columns of the current minor plus per-column data.
struct Minor1d {
  int rows = 0;
  std::vector<std::vector<uint64_t>> columns;
  std::vector<int64_t> weights;
  std::vector<uint64_t> scalars;
};

absl::StatusOr<std::vector<uint64_t>> PolyOf(const PrimeField& f,
                                             const Minor1d& m, int64_t delta) {
  const int r = m.rows;
  const int64_t degree = 2 * delta * r;
  if (static_cast<uint64_t>(degree) + 1 >= f.q()) {
    return absl::UnimplementedError(absl::StrCat(
        "field of size ", f.q(), " has too few points for degree ", degree));
  }
  std::vector<uint64_t> xs, ys;
  std::vector<uint64_t> mat(static_cast<size_t>(r) * r);
  for (int64_t point = 1; point <= degree + 1; ++point) {
    const uint64_t y = static_cast<uint64_t>(point);
    std::fill(mat.begin(), mat.end(), 0);
    for (size_t e = 0; e < m.columns.size(); ++e) {
      const uint64_t s =
          f.Mul(m.scalars[e], f.Pow(y, static_cast<uint64_t>(m.weights[e] + delta)));
      const auto& a = m.columns[e];
      for (int i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        const uint64_t si = f.Mul(s, a[i]);
        for (int j = 0; j < r; ++j) {
          mat[i * r + j] = f.Add(mat[i * r + j], f.Mul(si, a[j]));
        }
      }
    }
    xs.push_back(y);
    ys.push_back(f.Determinant(mat, r));
  }
  return Interpolate(f, xs, ys);
}

// Cyclic subgroup of F_q^* of order n, used to read off one coefficient
// without interpolating the whole polynomial.
struct RootsOfUnity {
  uint64_t n = 0;
  uint64_t omega = 0;
};

// Smallest subgroup of order > degree whose order divides the smooth part of
// q - 1 (prime factors below 2^16); nullopt if there is none.
std::optional<RootsOfUnity> FindRoots(const PrimeField& f, int64_t degree) {
  uint64_t rest = f.q() - 1;
  std::vector<std::pair<uint64_t, int>> factors;
  for (uint64_t p = 2; p < (1u << 16) && rest > 1; ++p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    if (k > 0) factors.emplace_back(p, k);
  }
  const uint64_t need = static_cast<uint64_t>(degree) + 1;
  uint64_t best = 0;
  std::vector<uint64_t> divisors = {1};
  for (auto [p, k] : factors) {
    const size_t count = divisors.size();
    uint64_t pk = 1;
    for (int i = 1; i <= k; ++i) {
      pk *= p;
      for (size_t j = 0; j < count; ++j) divisors.push_back(divisors[j] * pk);
    }
  }
  for (uint64_t d : divisors) {
    if (d >= need && (best == 0 || d < best)) best = d;
  }
  if (best == 0) return std::nullopt;
  std::vector<uint64_t> primes;
  for (auto [p, k] : factors) {
    if (best % p == 0) primes.push_back(p);
  }
  for (uint64_t a = 2; a < f.q(); ++a) {
    const uint64_t g = f.Pow(a, (f.q() - 1) / best);
    bool exact = g != 0;
    for (uint64_t p : primes) exact &= f.Pow(g, best / p) != 1;
    if (exact) return RootsOfUnity{best, g};
  }
  return std::nullopt;
}

// Coefficient of y^shifted in the polynomial PolyOf would return, as the
// discrete Fourier average over the subgroup.
uint64_t CoefficientAt(const PrimeField& f, const Minor1d& m, int64_t delta,
                       const RootsOfUnity& roots, int64_t shifted) {
  const int r = m.rows;
  if (shifted < 0 || shifted > 2 * delta * r) return 0;
  const size_t cols = m.columns.size();
  std::vector<uint64_t> step(cols), cur(cols);
  for (size_t e = 0; e < cols; ++e) {
    step[e] = f.Pow(roots.omega, static_cast<uint64_t>(m.weights[e] + delta));
    cur[e] = m.scalars[e];
  }
  const uint64_t back = f.Pow(f.Inv(roots.omega), static_cast<uint64_t>(shifted));
  uint64_t twist = 1;
  uint64_t total = 0;
  std::vector<uint64_t> mat(static_cast<size_t>(r) * r);
  for (uint64_t k = 0; k < roots.n; ++k) {
    std::fill(mat.begin(), mat.end(), 0);
    for (size_t e = 0; e < cols; ++e) {
      const auto& a = m.columns[e];
      for (int i = 0; i < r; ++i) {
        if (a[i] == 0) continue;
        const uint64_t si = f.Mul(cur[e], a[i]);
        for (int j = 0; j < r; ++j) {
          mat[i * r + j] = f.Add(mat[i * r + j], f.Mul(si, a[j]));
        }
      }
      cur[e] = f.Mul(cur[e], step[e]);
    }
    total = f.Add(total, f.Mul(twist, f.Determinant(mat, r)));
    twist = f.Mul(twist, back);
  }
  return f.Mul(total, f.Inv(roots.n % f.q()));
}

// One coefficient, by Fourier averaging when the field has a large enough
// smooth subgroup and by interpolation otherwise.
absl::StatusOr<uint64_t> CoefficientOf(const PrimeField& f, const Minor1d& m,
                                       int64_t delta,
                                       const std::optional<RootsOfUnity>& roots,
                                       int64_t shifted) {
  if (roots.has_value() && roots->n > static_cast<uint64_t>(2 * delta * m.rows)) {
    return CoefficientAt(f, m, delta, *roots, shifted);
  }
  absl::StatusOr<std::vector<uint64_t>> poly = PolyOf(f, m, delta);
  if (!poly.ok()) return poly.status();
  if (shifted < 0 || shifted >= static_cast<int64_t>(poly->size())) return 0;
  return (*poly)[shifted];
}

uint64_t Coefficient(const std::vector<uint64_t>& poly, int64_t shifted) {
  if (shifted < 0 || shifted >= static_cast<int64_t>(poly.size())) return 0;
  return poly[shifted];
}

// Minor with column `e` contracted: pivot on a row where it is nonzero.
Minor1d ContractColumn(const PrimeField& f, const Minor1d& m, size_t e) {
  const auto& col = m.columns[e];
  int p = 0;
  while (col[p] == 0) ++p;
  const uint64_t inv = f.Inv(col[p]);
  Minor1d out;
  out.rows = m.rows - 1;
  for (size_t c = 0; c < m.columns.size(); ++c) {
    if (c == e) continue;
    const auto& a = m.columns[c];
    const uint64_t k = f.Mul(a[p], inv);
    std::vector<uint64_t> reduced;
    for (int i = 0; i < m.rows; ++i) {
      if (i == p) continue;
      reduced.push_back(f.Sub(a[i], f.Mul(k, col[i])));
    }
    out.columns.push_back(std::move(reduced));
    out.weights.push_back(m.weights[c]);
    out.scalars.push_back(m.scalars[c]);
  }
  return out;
}

Minor1d DeleteColumn(const Minor1d& m, size_t e) {
  Minor1d out = m;
  out.columns.erase(out.columns.begin() + e);
  out.weights.erase(out.weights.begin() + e);
  out.scalars.erase(out.scalars.begin() + e);
  return out;
}

absl::StatusOr<Minor1d> StartMinor(const Representation& rep,
                                   absl::Span<const int64_t> weights,
                                   uint64_t seed, int64_t* delta) {
  if (static_cast<int>(weights.size()) != rep.cols) {
    return absl::InvalidArgumentError(absl::StrCat(
        "weight vector has ", weights.size(), " entries for ", rep.cols,
        " columns"));
  }
  const PrimeField f(rep.q);
  if (f.Rank(rep.entries, rep.rows, rep.cols) != rep.rows) {
    return absl::InvalidArgumentError("representation is not of full row rank");
  }
  *delta = 0;
  for (int64_t w : weights) *delta = std::max(*delta, w < 0 ? -w : w);
  Minor1d m;
  m.rows = rep.rows;
  Rng rng(SubSeed(seed, "algebraic-scalars"));
  for (int j = 0; j < rep.cols; ++j) {
    std::vector<uint64_t> col(rep.rows);
    for (int i = 0; i < rep.rows; ++i) col[i] = rep.at(i, j);
    m.columns.push_back(std::move(col));
    m.weights.push_back(weights[j]);
    m.scalars.push_back(static_cast<uint64_t>(
        UniformInt(rng, 1, static_cast<int64_t>(rep.q - 1))));
  }
  return m;
}

}  // namespace

absl::StatusOr<Representation> RepresentationOf(const MatroidSpec& spec,
                                                uint64_t q) {
  if (!IsPrime64(q) || q >= (uint64_t{1} << 63)) {
    return absl::InvalidArgumentError(absl::StrCat(q, " is not a usable prime"));
  }
  const PrimeField f(q);
  absl::StatusOr<Dense> d = DenseOf(spec, f);
  if (!d.ok()) return d.status();
  Dense a = *std::move(d);
  const int n = spec.GroundSize();
  RowReduce(f, a, n);
  Representation rep;
  rep.q = q;
  rep.rows = static_cast<int>(a.size());
  rep.cols = n;
  for (const auto& row : a) rep.entries.insert(rep.entries.end(), row.begin(), row.end());
  absl::StatusOr<Matroid> compiled = Compile(spec);
  if (!compiled.ok()) return compiled.status();
  if (compiled->Rank() != rep.rows) {
    return absl::FailedPreconditionError(absl::StrCat(
        "representation has rank ", rep.rows, " modulo ", q,
        " but the matroid has rank ", compiled->Rank()));
  }
  return rep;
}

std::vector<int64_t> GeneratingPolynomial::SupportWeights() const {
  std::vector<int64_t> out;
  for (size_t d = 0; d < coefficients.size(); ++d) {
    if (coefficients[d] != 0) {
      out.push_back(static_cast<int64_t>(d) - delta * rank);
    }
  }
  return out;
}

bool GeneratingPolynomial::HasWeight(int64_t weight) const {
  return Coefficient(coefficients, weight + delta * rank) != 0;
}

absl::StatusOr<GeneratingPolynomial> GeneratingPoly(
    const Representation& rep, absl::Span<const int64_t> weights,
    uint64_t seed) {
  int64_t delta = 0;
  absl::StatusOr<Minor1d> m = StartMinor(rep, weights, seed, &delta);
  if (!m.ok()) return m.status();
  const PrimeField f(rep.q);
  absl::StatusOr<std::vector<uint64_t>> poly = PolyOf(f, *m, delta);
  if (!poly.ok()) return poly.status();
  GeneratingPolynomial out;
  out.q = rep.q;
  out.rank = rep.rows;
  out.delta = delta;
  out.coefficients = *std::move(poly);
  return out;
}

absl::StatusOr<AlgebraicOutcome> ExactBasis1d(const Matroid& matroid,
                                              const Representation& rep,
                                              absl::Span<const int64_t> weights,
                                              int64_t beta, uint64_t seed,
                                              int retries) {
  if (matroid.ground_size() != rep.cols) {
    return absl::InvalidArgumentError("matroid and representation sizes differ");
  }
  if (retries < 1) return absl::InvalidArgumentError("retries must be positive");
  const PrimeField f(rep.q);
  AlgebraicOutcome out;
  int nonzero_attempts = 0;
  for (int attempt = 0; attempt < retries; ++attempt) {
    ++out.attempts;
    int64_t delta = 0;
    absl::StatusOr<Minor1d> start =
        StartMinor(rep, weights, SubSeed(seed, "algebraic-attempt", attempt), &delta);
    if (!start.ok()) return start.status();
    Minor1d cur = *std::move(start);
    const std::optional<RootsOfUnity> roots = FindRoots(f, 2 * delta * cur.rows);
    int64_t target = beta;
    absl::StatusOr<uint64_t> c =
        CoefficientOf(f, cur, delta, roots, target + delta * cur.rows);
    if (!c.ok()) return c.status();
    if (*c == 0) continue;
    ++nonzero_attempts;

    // Self-reduction; original ids of the remaining columns.
    std::vector<ElementId> ids(rep.cols);
    for (int j = 0; j < rep.cols; ++j) ids[j] = j;
    SubsetMask basis(rep.cols);
    bool lost = false;
    while (!cur.columns.empty() && cur.rows > 0) {
      Minor1d without = DeleteColumn(cur, 0);
      c = CoefficientOf(f, without, delta, roots, target + delta * without.rows);
      if (!c.ok()) return c.status();
      if (*c != 0) {
        cur = std::move(without);
        ids.erase(ids.begin());
        continue;
      }
      bool zero_column = true;
      for (uint64_t v : cur.columns[0]) zero_column &= v == 0;
      if (zero_column) {
        lost = true;
        break;
      }
      basis.Insert(ids[0]);
      target -= cur.weights[0];
      cur = ContractColumn(f, cur, 0);
      ids.erase(ids.begin());
    }
    if (lost || cur.rows != 0 || target != 0) continue;
    if (basis.Count() == matroid.Rank() && matroid.IsIndependent(basis)) {
      int64_t w = 0;
      basis.ForEach([&](ElementId e) { w += weights[e]; });
      if (w == beta) {
        out.basis = basis;
        return out;
      }
    }
  }
  if (nonzero_attempts > 0) {
    return absl::InternalError(absl::StrCat(
        "self-reduction failed in ", nonzero_attempts, " of ", retries,
        " attempts with a nonzero coefficient at weight ", beta));
  }
  return out;
}

}  // namespace exactbasis
