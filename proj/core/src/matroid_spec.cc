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

#include "exactbasis/matroid_spec.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "exactbasis/cut_minimizers.h"
#include "exactbasis/prime_field.h"

namespace exactbasis {

bool operator==(const DirectSumSpec& a, const DirectSumSpec& b) {
  return a.parts == b.parts;
}

namespace {

bool SameBase(const std::shared_ptr<const MatroidSpec>& a,
              const std::shared_ptr<const MatroidSpec>& b) {
  if (a == nullptr || b == nullptr) return a == b;
  return *a == *b;
}

}  // namespace

bool operator==(const RestrictionSpec& a, const RestrictionSpec& b) {
  return a.keep == b.keep && SameBase(a.base, b.base);
}

bool operator==(const ContractionSpec& a, const ContractionSpec& b) {
  return a.contract == b.contract && SameBase(a.base, b.base);
}

int MatroidSpec::GroundSize() const {
  struct Visitor {
    int operator()(const UniformSpec& s) const { return s.n; }
    int operator()(const PartitionSpec& s) const {
      int n = 0;
      for (const auto& b : s.blocks) n += static_cast<int>(b.size());
      return n;
    }
    int operator()(const GraphicSpec& s) const {
      return static_cast<int>(s.edges.size());
    }
    int operator()(const LinearSpec& s) const { return s.cols; }
    int operator()(const TransversalSpec& s) const {
      return static_cast<int>(s.adjacency.size());
    }
    int operator()(const DirectSumSpec& s) const {
      int n = 0;
      for (const auto& p : s.parts) n += p.GroundSize();
      return n;
    }
    int operator()(const RestrictionSpec& s) const {
      return static_cast<int>(s.keep.size());
    }
    int operator()(const ContractionSpec& s) const {
      return s.base->GroundSize() - static_cast<int>(s.contract.size());
    }
  };
  return std::visit(Visitor{}, kind);
}

const char* MatroidSpec::KindName() const {
  static constexpr const char* kNames[] = {
      "uniform",     "partition",  "graphic",     "linear",
      "transversal", "direct_sum", "restriction", "contraction"};
  return kNames[kind.index()];
}

MatroidSpec Uniform(int n, int r) { return {UniformSpec{n, r}}; }

MatroidSpec Partition(std::vector<std::vector<ElementId>> blocks,
                      std::vector<int> capacities) {
  return {PartitionSpec{std::move(blocks), std::move(capacities)}};
}

MatroidSpec Graphic(int vertex_count, std::vector<std::pair<int, int>> edges) {
  return {GraphicSpec{vertex_count, std::move(edges)}};
}

MatroidSpec RationalLinear(int rows, int cols, std::vector<mpq_class> entries) {
  return {LinearSpec{LinearSpec::Field::kRational, 0, rows, cols,
                     std::move(entries)}};
}

MatroidSpec PrimeLinear(int64_t prime, int rows, int cols,
                        std::vector<mpq_class> entries) {
  return {LinearSpec{LinearSpec::Field::kPrime, prime, rows, cols,
                     std::move(entries)}};
}

MatroidSpec Transversal(int left_size, std::vector<std::vector<int>> adjacency) {
  return {TransversalSpec{left_size, std::move(adjacency)}};
}

MatroidSpec DirectSumOf(std::vector<MatroidSpec> parts) {
  return {DirectSumSpec{std::move(parts)}};
}

MatroidSpec RestrictionOf(MatroidSpec base, std::vector<ElementId> keep) {
  return {RestrictionSpec{std::make_shared<const MatroidSpec>(std::move(base)),
                          std::move(keep)}};
}

MatroidSpec ContractionOf(MatroidSpec base, std::vector<ElementId> contract) {
  return {ContractionSpec{
      std::make_shared<const MatroidSpec>(std::move(base)),
      std::move(contract)}};
}

namespace {

class UniformOracle : public IndependenceOracle {
 public:
  UniformOracle(int n, int r) : n_(n), r_(r) {}
  int ground_size() const override { return n_; }
  bool IsIndependent(const SubsetMask& s) const override {
    return s.Count() <= r_;
  }

 private:
  int n_;
  int r_;
};

class PartitionOracle : public IndependenceOracle {
 public:
  PartitionOracle(std::vector<int> block_of, std::vector<int> capacities)
      : block_of_(std::move(block_of)), capacities_(std::move(capacities)) {}
  int ground_size() const override {
    return static_cast<int>(block_of_.size());
  }
  bool IsIndependent(const SubsetMask& s) const override {
    thread_local std::vector<int> used;
    used.assign(capacities_.size(), 0);
    bool ok = true;
    s.ForEach([&](ElementId e) {
      const int b = block_of_[e];
      if (++used[b] > capacities_[b]) ok = false;
    });
    return ok;
  }

 private:
  std::vector<int> block_of_;
  std::vector<int> capacities_;
};

class GraphicOracle : public IndependenceOracle {
 public:
  explicit GraphicOracle(GraphicSpec spec) : spec_(std::move(spec)) {}
  int ground_size() const override {
    return static_cast<int>(spec_.edges.size());
  }
  bool IsIndependent(const SubsetMask& s) const override {
    thread_local std::vector<int> parent;
    parent.resize(spec_.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
      }
      return v;
    };
    bool acyclic = true;
    s.ForEach([&](ElementId e) {
      if (!acyclic) return;
      const int a = find(spec_.edges[e].first);
      const int b = find(spec_.edges[e].second);
      if (a == b) {
        acyclic = false;
      } else {
        parent[a] = b;
      }
    });
    return acyclic;
  }

 private:
  GraphicSpec spec_;
};

// Columns scaled to primitive integer vectors. Independence is decided by
// fraction-free (Bareiss) elimination in 128-bit integers, redone with GMP
// integers if an intermediate value would overflow.
class RationalLinearOracle : public IndependenceOracle {
 public:
  explicit RationalLinearOracle(const LinearSpec& spec)
      : rows_(spec.rows), cols_(spec.cols), big_(spec.rows * spec.cols) {
    for (int j = 0; j < cols_; ++j) {
      mpz_class lcm = 1;
      for (int i = 0; i < rows_; ++i) {
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                spec.at(i, j).get_den_mpz_t());
      }
      mpz_class g = 0;
      for (int i = 0; i < rows_; ++i) {
        mpq_class scaled = spec.at(i, j) * lcm;
        big_[i * cols_ + j] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), big_[i * cols_ + j].get_mpz_t());
      }
      if (g > 1) {
        for (int i = 0; i < rows_; ++i) big_[i * cols_ + j] /= g;
      }
    }
    small_ok_ = std::all_of(big_.begin(), big_.end(), [](const mpz_class& v) {
      return v.fits_slong_p();
    });
    if (small_ok_) {
      small_.reserve(big_.size());
      for (const mpz_class& v : big_) small_.push_back(v.get_si());
    }
  }

  int ground_size() const override { return cols_; }

  bool IsIndependent(const SubsetMask& s) const override {
    const std::vector<ElementId> cols = s.Elements();
    const int k = static_cast<int>(cols.size());
    if (k == 0) return true;
    if (k > rows_) return false;
    if (small_ok_) {
      std::optional<bool> fast = SmallBareiss(cols);
      if (fast.has_value()) return *fast;
    }
    return BigBareiss(cols);
  }

 private:
  std::optional<bool> SmallBareiss(const std::vector<ElementId>& cols) const {
    const int k = static_cast<int>(cols.size());
    thread_local std::vector<__int128> m;
    m.resize(static_cast<size_t>(rows_) * k);
    for (int i = 0; i < rows_; ++i) {
      for (int c = 0; c < k; ++c) m[i * k + c] = small_[i * cols_ + cols[c]];
    }
    __int128 prev = 1;
    for (int c = 0; c < k; ++c) {
      int p = c;
      while (p < rows_ && m[p * k + c] == 0) ++p;
      if (p == rows_) return false;
      if (p != c) {
        for (int j = c; j < k; ++j) std::swap(m[p * k + j], m[c * k + j]);
      }
      const __int128 pivot = m[c * k + c];
      for (int i = c + 1; i < rows_; ++i) {
        const __int128 lead = m[i * k + c];
        for (int j = c + 1; j < k; ++j) {
          __int128 a, b, d;
          if (__builtin_mul_overflow(pivot, m[i * k + j], &a) ||
              __builtin_mul_overflow(lead, m[c * k + j], &b) ||
              __builtin_sub_overflow(a, b, &d)) {
            return std::nullopt;
          }
          m[i * k + j] = d / prev;
        }
        m[i * k + c] = 0;
      }
      prev = pivot;
    }
    return true;
  }

  bool BigBareiss(const std::vector<ElementId>& cols) const {
    const int k = static_cast<int>(cols.size());
    std::vector<mpz_class> m(static_cast<size_t>(rows_) * k);
    for (int i = 0; i < rows_; ++i) {
      for (int c = 0; c < k; ++c) m[i * k + c] = big_[i * cols_ + cols[c]];
    }
    mpz_class prev = 1;
    for (int c = 0; c < k; ++c) {
      int p = c;
      while (p < rows_ && m[p * k + c] == 0) ++p;
      if (p == rows_) return false;
      if (p != c) {
        for (int j = c; j < k; ++j) std::swap(m[p * k + j], m[c * k + j]);
      }
      for (int i = c + 1; i < rows_; ++i) {
        for (int j = c + 1; j < k; ++j) {
          mpz_class v = m[c * k + c] * m[i * k + j] - m[i * k + c] * m[c * k + j];
          mpz_divexact(m[i * k + j].get_mpz_t(), v.get_mpz_t(),
                       prev.get_mpz_t());
        }
        m[i * k + c] = 0;
      }
      prev = m[c * k + c];
    }
    return true;
  }

  int rows_;
  int cols_;
  std::vector<mpz_class> big_;
  bool small_ok_ = false;
  std::vector<int64_t> small_;
};

class PrimeLinearOracle : public IndependenceOracle {
 public:
  PrimeLinearOracle(PrimeField field, int rows, int cols,
                    std::vector<uint64_t> entries)
      : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {}
  int ground_size() const override { return cols_; }
  bool IsIndependent(const SubsetMask& s) const override {
    const std::vector<ElementId> cols = s.Elements();
    const int k = static_cast<int>(cols.size());
    if (k == 0) return true;
    if (k > rows_) return false;
    std::vector<uint64_t> m(static_cast<size_t>(k) * rows_);
    for (int c = 0; c < k; ++c) {
      for (int i = 0; i < rows_; ++i) {
        m[c * rows_ + i] = entries_[i * cols_ + cols[c]];
      }
    }
    return field_.Rank(std::move(m), k, rows_) == k;
  }

 private:
  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<uint64_t> entries_;
};

class TransversalOracle : public IndependenceOracle {
 public:
  explicit TransversalOracle(TransversalSpec spec) : spec_(std::move(spec)) {}
  int ground_size() const override {
    return static_cast<int>(spec_.adjacency.size());
  }
  bool IsIndependent(const SubsetMask& s) const override {
    if (s.Count() > spec_.left_size) return false;
    thread_local std::vector<int> match_left;
    thread_local std::vector<int> seen;
    match_left.assign(spec_.left_size, -1);
    seen.assign(spec_.left_size, -1);
    bool ok = true;
    s.ForEach([&](ElementId e) {
      if (ok && !Augment(e, e, match_left, seen)) ok = false;
    });
    return ok;
  }

 private:
  bool Augment(ElementId e, int stamp, std::vector<int>& match_left,
               std::vector<int>& seen) const {
    for (int v : spec_.adjacency[e]) {
      if (seen[v] == stamp) continue;
      seen[v] = stamp;
      if (match_left[v] < 0 || Augment(match_left[v], stamp, match_left, seen)) {
        match_left[v] = e;
        return true;
      }
    }
    return false;
  }

  TransversalSpec spec_;
};

absl::Status CheckElementList(absl::Span<const ElementId> elements, int n,
                              const char* what) {
  SubsetMask seen(n);
  for (ElementId e : elements) {
    if (e < 0 || e >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, " element ", e, " outside ground set of size ", n));
    }
    if (seen.Contains(e)) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, " lists element ", e, " twice"));
    }
    seen.Insert(e);
  }
  return absl::OkStatus();
}

absl::StatusOr<Matroid> CompileUniform(const UniformSpec& s) {
  if (s.n < 0 || s.r < 0 || s.r > s.n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "uniform matroid needs 0 <= r <= n, got n=", s.n, " r=", s.r));
  }
  return Matroid(std::make_shared<UniformOracle>(s.n, s.r))
      .WithMinimizer(MakeUniformMinimizer(s.r));
}

absl::StatusOr<Matroid> CompilePartition(const PartitionSpec& s) {
  if (s.blocks.size() != s.capacities.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("partition has ", s.blocks.size(), " blocks but ",
                     s.capacities.size(), " capacities"));
  }
  int n = 0;
  for (const auto& b : s.blocks) n += static_cast<int>(b.size());
  std::vector<int> block_of(n, -1);
  for (size_t i = 0; i < s.blocks.size(); ++i) {
    if (s.capacities[i] < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("partition block ", i, " has negative capacity"));
    }
    for (ElementId e : s.blocks[i]) {
      if (e < 0 || e >= n) {
        return absl::InvalidArgumentError(absl::StrCat(
            "partition blocks must cover 0..", n - 1, "; found element ", e));
      }
      if (block_of[e] >= 0) {
        return absl::InvalidArgumentError(absl::StrCat(
            "partition blocks overlap: element ", e, " is in blocks ",
            block_of[e], " and ", i));
      }
      block_of[e] = static_cast<int>(i);
    }
  }
  std::vector<int> caps = s.capacities;
  return Matroid(std::make_shared<PartitionOracle>(block_of, caps))
      .WithMinimizer(MakePartitionMinimizer(block_of, caps));
}

absl::StatusOr<Matroid> CompileGraphic(const GraphicSpec& s) {
  if (s.vertex_count < 0) {
    return absl::InvalidArgumentError("graphic matroid has negative order");
  }
  for (size_t i = 0; i < s.edges.size(); ++i) {
    const auto [u, v] = s.edges[i];
    if (u < 0 || v < 0 || u >= s.vertex_count || v >= s.vertex_count) {
      return absl::InvalidArgumentError(absl::StrCat(
          "edge ", i, " has an endpoint outside 0..", s.vertex_count - 1));
    }
  }
  return Matroid(std::make_shared<GraphicOracle>(s))
      .WithMinimizer(MakeGraphicMinimizer(s.vertex_count, s.edges));
}

absl::StatusOr<Matroid> CompileLinear(const LinearSpec& s) {
  if (s.rows < 0 || s.cols < 0 ||
      static_cast<int64_t>(s.entries.size()) !=
          static_cast<int64_t>(s.rows) * s.cols) {
    return absl::InvalidArgumentError(
        absl::StrCat("linear matrix has ", s.entries.size(),
                     " entries, expected rows*cols = ", s.rows, "*", s.cols));
  }
  if (s.field == LinearSpec::Field::kRational) {
    return Matroid(std::make_shared<RationalLinearOracle>(s));
  }
  if (s.prime < 2 || s.prime >= (int64_t{1} << 62) ||
      !IsPrime64(static_cast<uint64_t>(s.prime))) {
    return absl::InvalidArgumentError(
        absl::StrCat("linear field modulus ", s.prime, " is not a prime"));
  }
  PrimeField field(static_cast<uint64_t>(s.prime));
  std::vector<uint64_t> entries;
  entries.reserve(s.entries.size());
  for (const mpq_class& v : s.entries) {
    std::optional<uint64_t> r = field.FromRational(v);
    if (!r.has_value()) {
      return absl::InvalidArgumentError(absl::StrCat(
          "entry ", v.get_str(), " has a denominator divisible by ", s.prime));
    }
    entries.push_back(*r);
  }
  return Matroid(std::make_shared<PrimeLinearOracle>(field, s.rows, s.cols,
                                                      std::move(entries)));
}

absl::StatusOr<Matroid> CompileTransversal(const TransversalSpec& s) {
  if (s.left_size < 0) {
    return absl::InvalidArgumentError("transversal left side is negative");
  }
  for (size_t e = 0; e < s.adjacency.size(); ++e) {
    for (int v : s.adjacency[e]) {
      if (v < 0 || v >= s.left_size) {
        return absl::InvalidArgumentError(absl::StrCat(
            "element ", e, " is adjacent to left vertex ", v,
            " outside 0..", s.left_size - 1));
      }
    }
  }
  return Matroid(std::make_shared<TransversalOracle>(s));
}

}  // namespace

absl::StatusOr<Matroid> Compile(const MatroidSpec& spec) {
  struct Visitor {
    absl::StatusOr<Matroid> operator()(const UniformSpec& s) const {
      return CompileUniform(s);
    }
    absl::StatusOr<Matroid> operator()(const PartitionSpec& s) const {
      return CompilePartition(s);
    }
    absl::StatusOr<Matroid> operator()(const GraphicSpec& s) const {
      return CompileGraphic(s);
    }
    absl::StatusOr<Matroid> operator()(const LinearSpec& s) const {
      return CompileLinear(s);
    }
    absl::StatusOr<Matroid> operator()(const TransversalSpec& s) const {
      return CompileTransversal(s);
    }
    absl::StatusOr<Matroid> operator()(const DirectSumSpec& s) const {
      std::vector<Matroid> parts;
      for (const MatroidSpec& p : s.parts) {
        absl::StatusOr<Matroid> m = Compile(p);
        if (!m.ok()) return m.status();
        parts.push_back(*std::move(m));
      }
      Matroid sum = DirectSum(parts);
      return sum.WithMinimizer(MakeDirectSumMinimizer(std::move(parts)));
    }
    absl::StatusOr<Matroid> operator()(const RestrictionSpec& s) const {
      if (s.base == nullptr) return absl::InvalidArgumentError("missing base");
      absl::StatusOr<Matroid> base = Compile(*s.base);
      if (!base.ok()) return base.status();
      absl::Status st =
          CheckElementList(s.keep, base->ground_size(), "restriction");
      if (!st.ok()) return st;
      return Restrict(*base, SubsetMask::FromElements(base->ground_size(),
                                                      s.keep))
          .matroid;
    }
    absl::StatusOr<Matroid> operator()(const ContractionSpec& s) const {
      if (s.base == nullptr) return absl::InvalidArgumentError("missing base");
      absl::StatusOr<Matroid> base = Compile(*s.base);
      if (!base.ok()) return base.status();
      absl::Status st =
          CheckElementList(s.contract, base->ground_size(), "contraction");
      if (!st.ok()) return st;
      absl::StatusOr<Minor> minor = Contract(
          *base, SubsetMask::FromElements(base->ground_size(), s.contract));
      if (!minor.ok()) return minor.status();
      return minor->matroid;
    }
  };
  return std::visit(Visitor{}, spec.kind);
}

}  // namespace exactbasis
