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

#include "exactbasis/exact_solver.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "exactbasis/intersection.h"

namespace exactbasis {

const char* StatusName(SolveReport::Status status) {
  switch (status) {
    case SolveReport::Status::kFound:
      return "found";
    case SolveReport::Status::kInfeasible:
      return "infeasible";
    case SolveReport::Status::kWindowExhausted:
      return "window_exhausted";
  }
  return "unknown";
}

mpz_class ProximityBound(int m, int64_t delta) {
  mpz_class base = 2 * static_cast<long>(m) * delta;
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), 13ul * m);
  return out;
}

int64_t ProximityRadius(int m, int64_t delta) {
  const mpz_class bound = ProximityBound(m, delta);
  if (!bound.fits_slong_p()) return std::numeric_limits<int64_t>::max();
  return bound.get_si();
}

bool IsExactBasis(const Matroid& matroid, const WeightMatrix& weights,
                  absl::Span<const int64_t> beta, const SubsetMask& basis) {
  if (basis.size() != matroid.ground_size()) return false;
  if (basis.Count() != matroid.Rank()) return false;
  if (!matroid.IsIndependent(basis)) return false;
  const std::vector<int64_t> got = weights.Apply(basis);
  return std::equal(got.begin(), got.end(), beta.begin(), beta.end());
}

namespace {

struct ClassWindow {
  mpq_class mass;  // x(E_c)
  int lo = 0;
  int hi = 0;
};

class CandidateEnumerator {
 public:
  CandidateEnumerator(const WeightMatrix& w, std::vector<ClassWindow> windows,
                      int rank, absl::Span<const int64_t> beta)
      : w_(w), windows_(std::move(windows)), rank_(rank),
        beta_(beta.begin(), beta.end()) {
    const int k = static_cast<int>(windows_.size());
    const int m = w_.m();
    count_min_.assign(k + 1, 0);
    count_max_.assign(k + 1, 0);
    wmin_.assign(k + 1, std::vector<int64_t>(m, 0));
    wmax_.assign(k + 1, std::vector<int64_t>(m, 0));
    const auto& classes = w_.classes();
    for (int c = k - 1; c >= 0; --c) {
      count_min_[c] = count_min_[c + 1] + windows_[c].lo;
      count_max_[c] = count_max_[c + 1] + windows_[c].hi;
      for (int i = 0; i < m; ++i) {
        const int64_t a = classes[c].alpha[i];
        const int64_t x = a * windows_[c].lo;
        const int64_t y = a * windows_[c].hi;
        wmin_[c][i] = wmin_[c + 1][i] + std::min(x, y);
        wmax_[c][i] = wmax_[c + 1][i] + std::max(x, y);
      }
    }
  }

  absl::Status Run(std::vector<CountVector>* out) {
    current_.assign(windows_.size(), 0);
    partial_.assign(w_.m(), 0);
    out_ = out;
    Dfs(0, 0);
    if (overflow_) {
      return absl::ResourceExhaustedError(absl::StrCat(
          "more than ", kMaxCandidates, " candidate count vectors"));
    }
    return absl::OkStatus();
  }

 private:
  void Dfs(int c, int used) {
    if (overflow_) return;
    const int k = static_cast<int>(windows_.size());
    if (used + count_min_[c] > rank_ || used + count_max_[c] < rank_) return;
    for (int i = 0; i < w_.m(); ++i) {
      if (partial_[i] + wmin_[c][i] > beta_[i] ||
          partial_[i] + wmax_[c][i] < beta_[i]) {
        return;
      }
    }
    if (c == k) {
      if (static_cast<int64_t>(out_->size()) >= kMaxCandidates) {
        overflow_ = true;
        return;
      }
      out_->push_back(current_);
      return;
    }
    const auto& alpha = w_.classes()[c].alpha;
    for (int l = windows_[c].lo; l <= windows_[c].hi; ++l) {
      current_[c] = l;
      for (int i = 0; i < w_.m(); ++i) partial_[i] += alpha[i] * l;
      Dfs(c + 1, used + l);
      for (int i = 0; i < w_.m(); ++i) partial_[i] -= alpha[i] * l;
    }
    current_[c] = 0;
  }

  const WeightMatrix& w_;
  std::vector<ClassWindow> windows_;
  int rank_;
  std::vector<int64_t> beta_;
  std::vector<int> count_min_, count_max_;
  std::vector<std::vector<int64_t>> wmin_, wmax_;
  CountVector current_;
  std::vector<int64_t> partial_;
  std::vector<CountVector>* out_ = nullptr;
  bool overflow_ = false;
};

}  // namespace

absl::StatusOr<std::vector<CountVector>> CandidateCounts(
    absl::Span<const mpq_class> x, const WeightMatrix& weights, int rank,
    absl::Span<const int64_t> beta, int64_t radius) {
  if (static_cast<int>(x.size()) != weights.n()) {
    return absl::InvalidArgumentError("point and weight matrix sizes differ");
  }
  if (static_cast<int>(beta.size()) != weights.m()) {
    return absl::InvalidArgumentError("target length differs from row count");
  }
  if (radius < 0) return absl::InvalidArgumentError("negative radius");
  const auto& classes = weights.classes();
  std::vector<ClassWindow> windows(classes.size());
  for (size_t c = 0; c < classes.size(); ++c) {
    ClassWindow& win = windows[c];
    for (ElementId e : classes[c].elements) win.mass += x[e];
    const int size = static_cast<int>(classes[c].elements.size());
    // Clamp the radius first so the window bounds stay small.
    const mpz_class r = std::min<int64_t>(radius, size + 1);
    mpz_class lo, hi;
    const mpq_class low = win.mass - mpq_class(r);
    const mpq_class high = win.mass + mpq_class(r);
    mpz_cdiv_q(lo.get_mpz_t(), low.get_num_mpz_t(), low.get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), high.get_num_mpz_t(), high.get_den_mpz_t());
    win.lo = static_cast<int>(std::max<long>(0, lo.get_si()));
    win.hi = static_cast<int>(std::min<long>(size, hi.get_si()));
    if (win.lo > win.hi) return std::vector<CountVector>{};
  }
  std::vector<mpq_class> mass;
  for (const auto& win : windows) mass.push_back(win.mass);
  std::vector<CountVector> out;
  CandidateEnumerator en(weights, std::move(windows), rank, beta);
  if (absl::Status s = en.Run(&out); !s.ok()) return s;

  std::vector<mpq_class> keys(out.size());
  for (size_t i = 0; i < out.size(); ++i) {
    for (size_t c = 0; c < mass.size(); ++c) keys[i] += abs(out[i][c] - mass[c]);
  }
  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const int c = cmp(keys[a], keys[b]);
    if (c != 0) return c < 0;
    return out[a] < out[b];
  });
  std::vector<CountVector> sorted;
  sorted.reserve(out.size());
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

namespace {

struct CandidateResult {
  bool done = false;
  bool hit = false;
  SubsetMask basis;
  int64_t oracle_calls = 0;
  absl::Status error;
};

// Tests candidates in index order across `jobs` threads. Every candidate
// below the lowest hit is always tested, so the outcome and the summed
// statistics do not depend on scheduling.
std::vector<CandidateResult> TestCandidates(
    const Matroid& matroid, const WeightMatrix& weights,
    const std::vector<CountVector>& candidates, int jobs) {
  std::vector<CandidateResult> results(candidates.size());
  std::atomic<size_t> next{0};
  std::atomic<size_t> best{candidates.size()};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= candidates.size() || i > best.load(std::memory_order_acquire)) {
        return;
      }
      Matroid local = matroid.WithFreshCounter();
      absl::StatusOr<std::optional<SubsetMask>> got =
          CommonBasisWithCounts(local, candidates[i], weights);
      CandidateResult& r = results[i];
      r.oracle_calls = local.oracle_calls();
      r.done = true;
      if (!got.ok()) {
        r.error = got.status();
      } else if (got->has_value()) {
        r.hit = true;
        r.basis = **got;
      }
      if (r.hit || !r.error.ok()) {
        size_t cur = best.load(std::memory_order_relaxed);
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (jobs <= 1 || candidates.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    const int count = std::min<size_t>(jobs, candidates.size());
    for (int t = 0; t < count; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return results;
}

}  // namespace

absl::StatusOr<SolveReport> Solve(const Matroid& matroid,
                                  const WeightMatrix& weights,
                                  absl::Span<const int64_t> beta,
                                  const SolveOptions& options) {
  const int n = matroid.ground_size();
  if (weights.n() != n) {
    return absl::InvalidArgumentError(absl::StrCat(
        "weight matrix has ", weights.n(), " columns for ", n, " elements"));
  }
  if (static_cast<int>(beta.size()) != weights.m()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "target has ", beta.size(), " entries for ", weights.m(), " rows"));
  }
  if (options.radius_override.has_value() && *options.radius_override < 0) {
    return absl::InvalidArgumentError("negative radius override");
  }
  // The rank is cached on the shared oracle; computing it here keeps the
  // reported call counts independent of earlier calls.
  matroid.Rank();
  SolveReport report;
  Matroid lp_matroid = matroid.WithFreshCounter();
  absl::StatusOr<LpOutcome> lp = LpVertex(lp_matroid, weights, beta, options.seed);
  if (!lp.ok()) return lp.status();
  report.stats.oracle_calls = lp_matroid.oracle_calls();
  report.stats.lp_pivots = lp->pivots;
  report.stats.lp_cuts = lp->cuts_added;
  if (lp->status == LpOutcome::Status::kInfeasible) {
    report.status = SolveReport::Status::kInfeasible;
    return report;
  }
  const int64_t complete = std::min<int64_t>(
      ProximityRadius(weights.m(), weights.delta()), n);
  const int64_t radius =
      options.radius_override.has_value()
          ? std::min<int64_t>(*options.radius_override, complete)
          : complete;
  report.window_radius_used = radius;
  absl::StatusOr<std::vector<CountVector>> candidates =
      CandidateCounts(lp->point, weights, matroid.Rank(), beta, radius);
  if (!candidates.ok()) return candidates.status();
  report.stats.candidates_enumerated = static_cast<int64_t>(candidates->size());

  std::vector<CandidateResult> results =
      TestCandidates(matroid, weights, *candidates, options.jobs);
  for (const CandidateResult& r : results) {
    if (!r.done) break;
    report.stats.oracle_calls += r.oracle_calls;
    ++report.stats.candidates_tested;
    if (!r.error.ok()) return r.error;
    if (r.hit) {
      if (!IsExactBasis(matroid, weights, beta, r.basis)) {
        return absl::InternalError("intersection returned a non-exact basis");
      }
      report.status = SolveReport::Status::kFound;
      report.basis = r.basis;
      return report;
    }
  }
  report.status = radius < complete ? SolveReport::Status::kWindowExhausted
                                    : SolveReport::Status::kInfeasible;
  return report;
}

absl::StatusOr<SolveReport> BruteForceSolve(const Matroid& matroid,
                                            const WeightMatrix& weights,
                                            absl::Span<const int64_t> beta) {
  const int n = matroid.ground_size();
  if (n > kMaxBruteForceGroundSize) {
    return absl::UnimplementedError(absl::StrCat(
        "brute force supports at most ", kMaxBruteForceGroundSize,
        " elements, got ", n));
  }
  if (weights.n() != n || static_cast<int>(beta.size()) != weights.m()) {
    return absl::InvalidArgumentError("instance dimensions disagree");
  }
  matroid.Rank();
  Matroid local = matroid.WithFreshCounter();
  SolveReport report;
  ForEachBasis(local, [&](const SubsetMask& b) {
    ++report.stats.candidates_tested;
    const std::vector<int64_t> got = weights.Apply(b);
    if (std::equal(got.begin(), got.end(), beta.begin(), beta.end())) {
      report.basis = b;
      return false;
    }
    return true;
  });
  report.stats.oracle_calls = local.oracle_calls();
  report.stats.candidates_enumerated = report.stats.candidates_tested;
  report.status = report.basis.has_value() ? SolveReport::Status::kFound
                                           : SolveReport::Status::kInfeasible;
  report.window_radius_used = n;
  return report;
}

}  // namespace exactbasis
