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

#include "exactbasis/simplex.h"

namespace exactbasis {
namespace {

// Consecutive degenerate pivots tolerated before switching to Bland's rule.
constexpr int kDegenerateLimit = 50;
constexpr int64_t kDualBlandAfter = 2000;
constexpr int64_t kDualGiveUpAfter = 20000;

}  // namespace

int BoundedSimplex::AddColumn(const mpq_class& lower,
                              std::optional<mpq_class> upper,
                              const mpq_class& cost) {
  columns_.push_back({lower, std::move(upper), cost});
  return num_structural_++;
}

void BoundedSimplex::AddEqualityRow(const Row& coeffs, const mpq_class& rhs) {
  pending_rows_.push_back(coeffs);
  pending_rhs_.push_back(rhs);
  row_is_le_.push_back(false);
}

void BoundedSimplex::AddLessEqualRow(const Row& coeffs, const mpq_class& rhs) {
  pending_rows_.push_back(coeffs);
  pending_rhs_.push_back(rhs);
  row_is_le_.push_back(true);
}

int BoundedSimplex::AddInternalColumn(const mpq_class& lower,
                                      std::optional<mpq_class> upper,
                                      const mpq_class& cost) {
  columns_.push_back({lower, std::move(upper), cost});
  for (auto& row : tableau_) row.emplace_back(0);
  reduced_.emplace_back(0);
  value_.push_back(lower);
  row_of_.push_back(-1);
  return static_cast<int>(columns_.size()) - 1;
}

void BoundedSimplex::Shift(int col, const mpq_class& delta) {
  if (delta == 0) return;
  value_[col] += delta;
  for (size_t i = 0; i < tableau_.size(); ++i) {
    const mpq_class& a = tableau_[i][col];
    if (a != 0) value_[basic_[i]] -= a * delta;
  }
}

void BoundedSimplex::Pivot(int row, int col) {
  ++pivots_;
  std::vector<mpq_class>& pr = tableau_[row];
  const int width = static_cast<int>(pr.size());
  std::vector<int> nz;
  if (pr[col] != 1) {
    const mpq_class inv = 1 / pr[col];
    for (int j = 0; j < width; ++j) {
      if (pr[j] != 0) pr[j] *= inv;
    }
  }
  for (int j = 0; j < width; ++j) {
    if (pr[j] != 0) nz.push_back(j);
  }
  auto eliminate = [&](std::vector<mpq_class>& r) {
    if (r[col] == 0) return;
    const mpq_class f = r[col];
    for (int j : nz) r[j] -= f * pr[j];
  };
  for (size_t i = 0; i < tableau_.size(); ++i) {
    if (static_cast<int>(i) != row) eliminate(tableau_[i]);
  }
  eliminate(reduced_);
  row_of_[basic_[row]] = -1;
  basic_[row] = col;
  row_of_[col] = row;
}

void BoundedSimplex::ComputeReducedCosts(const std::vector<mpq_class>& costs) {
  reduced_ = costs;
  for (size_t i = 0; i < tableau_.size(); ++i) {
    const mpq_class& cb = costs[basic_[i]];
    if (cb == 0) continue;
    for (size_t j = 0; j < reduced_.size(); ++j) {
      if (tableau_[i][j] != 0) reduced_[j] -= cb * tableau_[i][j];
    }
  }
}

BoundedSimplex::Result BoundedSimplex::PrimalLoop(
    const std::vector<mpq_class>& costs) {
  ComputeReducedCosts(costs);
  const int width = static_cast<int>(columns_.size());
  int degenerate = 0;
  while (true) {
    const bool bland = degenerate > kDegenerateLimit;
    int enter = -1;
    for (int j = 0; j < width; ++j) {
      if (row_of_[j] >= 0 || Fixed(j) || reduced_[j] == 0) continue;
      const bool at_lower = value_[j] == columns_[j].lower;
      if (at_lower ? reduced_[j] < 0 : reduced_[j] > 0) continue;
      if (enter < 0) {
        enter = j;
        if (bland) break;
      } else if (abs(reduced_[j]) > abs(reduced_[enter])) {
        enter = j;
      }
    }
    if (enter < 0) return Result::kOptimal;
    const bool increase = value_[enter] == columns_[enter].lower;
    const Column& ec = columns_[enter];
    std::optional<mpq_class> step;
    if (ec.upper.has_value()) step = *ec.upper - ec.lower;
    int leave = -1;
    for (size_t i = 0; i < tableau_.size(); ++i) {
      mpq_class a = tableau_[i][enter];
      if (a == 0) continue;
      if (!increase) a = -a;
      const int b = basic_[i];
      const Column& bc = columns_[b];
      mpq_class limit;
      if (a > 0) {
        limit = (value_[b] - bc.lower) / a;
      } else if (bc.upper.has_value()) {
        limit = (*bc.upper - value_[b]) / (-a);
      } else {
        continue;
      }
      if (!step.has_value() || limit < *step ||
          (limit == *step && leave >= 0 && b < basic_[leave])) {
        step = limit;
        leave = static_cast<int>(i);
      }
    }
    if (!step.has_value()) return Result::kUnbounded;
    Shift(enter, increase ? *step : mpq_class(-*step));
    if (leave >= 0) {
      Pivot(leave, enter);
    } else {
      ++pivots_;
    }
    degenerate = (*step == 0) ? degenerate + 1 : 0;
  }
}

BoundedSimplex::Result BoundedSimplex::DualLoop() {
  const int width = static_cast<int>(columns_.size());
  for (int64_t iter = 0;; ++iter) {
    if (iter > kDualGiveUpAfter) return Result::kStalled;
    const bool bland = iter > kDualBlandAfter;
    int leave = -1;
    mpq_class worst = 0;
    for (size_t i = 0; i < tableau_.size(); ++i) {
      const int b = basic_[i];
      const Column& bc = columns_[b];
      mpq_class violation = 0;
      if (value_[b] < bc.lower) {
        violation = bc.lower - value_[b];
      } else if (bc.upper.has_value() && value_[b] > *bc.upper) {
        violation = value_[b] - *bc.upper;
      }
      if (violation == 0) continue;
      if (leave < 0 || (bland ? b < basic_[leave] : violation > worst ||
                                    (violation == worst && b < basic_[leave]))) {
        leave = static_cast<int>(i);
        worst = violation;
      }
    }
    if (leave < 0) return Result::kOptimal;
    const int b = basic_[leave];
    const bool raise = value_[b] < columns_[b].lower;
    const std::vector<mpq_class>& row = tableau_[leave];
    int enter = -1;
    mpq_class best;
    for (int j = 0; j < width; ++j) {
      if (row_of_[j] >= 0 || Fixed(j) || row[j] == 0) continue;
      const bool at_lower = value_[j] == columns_[j].lower;
      const bool eligible =
          raise ? (at_lower ? row[j] < 0 : row[j] > 0)
                : (at_lower ? row[j] > 0 : row[j] < 0);
      if (!eligible) continue;
      mpq_class ratio = abs(reduced_[j]) / abs(row[j]);
      if (enter < 0 || ratio < best) {
        enter = j;
        best = ratio;
      }
    }
    if (enter < 0) return Result::kInfeasible;
    const mpq_class target =
        raise ? columns_[b].lower : *columns_[b].upper;
    const mpq_class delta = (value_[b] - target) / row[enter];
    Shift(enter, delta);
    Pivot(leave, enter);
  }
}

BoundedSimplex::Result BoundedSimplex::Solve() {
  const int rows = static_cast<int>(pending_rows_.size());
  columns_.resize(num_structural_);
  value_.clear();
  for (const Column& c : columns_) value_.push_back(c.lower);
  tableau_.clear();
  basic_.clear();
  reduced_.assign(columns_.size(), 0);
  row_of_.assign(columns_.size(), -1);
  tableau_.assign(rows, std::vector<mpq_class>(columns_.size()));

  // Slacks of inequality rows first, then one artificial per row.
  std::vector<int> slack_of(rows, -1);
  for (int i = 0; i < rows; ++i) {
    if (row_is_le_[i]) slack_of[i] = AddInternalColumn(0, std::nullopt, 0);
  }
  std::vector<int> artificial(rows);
  for (int i = 0; i < rows; ++i) {
    artificial[i] = AddInternalColumn(0, std::nullopt, 0);
  }
  basic_.assign(rows, -1);
  for (int i = 0; i < rows; ++i) {
    std::vector<mpq_class>& t = tableau_[i];
    mpq_class residual = pending_rhs_[i];
    for (const auto& [j, a] : pending_rows_[i]) {
      t[j] += a;
      residual -= a * value_[j];
    }
    if (slack_of[i] >= 0) t[slack_of[i]] = 1;
    if (residual < 0) {
      for (mpq_class& v : t) v = -v;
      residual = -residual;
    }
    t[artificial[i]] = 1;
    basic_[i] = artificial[i];
    row_of_[artificial[i]] = i;
    value_[artificial[i]] = residual;
  }

  std::vector<mpq_class> phase1(columns_.size(), 0);
  for (int a : artificial) phase1[a] = -1;
  Result r = PrimalLoop(phase1);
  if (r != Result::kOptimal) return r;
  for (int a : artificial) {
    if (value_[a] != 0) return Result::kInfeasible;
  }
  for (int a : artificial) columns_[a].upper = mpq_class(0);

  std::vector<mpq_class> costs;
  for (const Column& c : columns_) costs.push_back(c.cost);
  return PrimalLoop(costs);
}

BoundedSimplex::Result BoundedSimplex::AddLessEqualRowAndReoptimize(
    const Row& coeffs, const mpq_class& rhs) {
  pending_rows_.push_back(coeffs);
  pending_rhs_.push_back(rhs);
  row_is_le_.push_back(true);
  const int slack = AddInternalColumn(0, std::nullopt, 0);
  std::vector<mpq_class> row(columns_.size());
  mpq_class activity = 0;
  for (const auto& [j, a] : coeffs) {
    activity += a * value_[j];
    const int r = row_of_[j];
    if (r < 0) {
      row[j] += a;
      continue;
    }
    const std::vector<mpq_class>& t = tableau_[r];
    for (size_t k = 0; k < row.size(); ++k) {
      if (t[k] != 0 && static_cast<int>(k) != j) row[k] -= a * t[k];
    }
  }
  row[slack] = 1;
  tableau_.push_back(std::move(row));
  basic_.push_back(slack);
  row_of_[slack] = static_cast<int>(tableau_.size()) - 1;
  value_[slack] = rhs - activity;
  Result r = DualLoop();
  if (r == Result::kStalled) return Solve();
  return r;
}

}  // namespace exactbasis
