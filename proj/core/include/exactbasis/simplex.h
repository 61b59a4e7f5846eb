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

// Dense bounded-variable simplex over exact rationals.
//
// Maximizes c^T x subject to equality rows and l <= x <= u (u may be
// infinite). Phase I uses one artificial per equality row; once feasible the
// artificials are pinned to zero and stay in the tableau. Rows added later
// get a nonnegative slack and are absorbed with dual simplex pivots, which
// keeps the previous basis as a warm start.

#ifndef EXACTBASIS_SIMPLEX_H_
#define EXACTBASIS_SIMPLEX_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace exactbasis {

class BoundedSimplex {
 public:
  enum class Result { kOptimal, kInfeasible, kUnbounded, kStalled };

  using Row = std::vector<std::pair<int, mpq_class>>;

  // Returns the column index. Columns must be added before rows.
  int AddColumn(const mpq_class& lower, std::optional<mpq_class> upper,
                const mpq_class& cost);
  void AddEqualityRow(const Row& coeffs, const mpq_class& rhs);
  // sum coeffs_j x_j <= rhs, taken into account by the next Solve().
  void AddLessEqualRow(const Row& coeffs, const mpq_class& rhs);

  // Two-phase primal simplex from scratch.
  Result Solve();
  // Adds sum coeffs_j x_j <= rhs and restores optimality.
  Result AddLessEqualRowAndReoptimize(const Row& coeffs, const mpq_class& rhs);

  const mpq_class& value(int col) const { return value_[col]; }
  int64_t pivots() const { return pivots_; }
  int num_structural() const { return num_structural_; }

 private:
  struct Column {
    mpq_class lower;
    std::optional<mpq_class> upper;
    mpq_class cost;
  };

  int AddInternalColumn(const mpq_class& lower, std::optional<mpq_class> upper,
                        const mpq_class& cost);
  void ComputeReducedCosts(const std::vector<mpq_class>& costs);
  Result PrimalLoop(const std::vector<mpq_class>& costs);
  Result DualLoop();
  void Pivot(int row, int col);
  void Shift(int col, const mpq_class& delta);
  bool Fixed(int col) const {
    return columns_[col].upper.has_value() &&
           *columns_[col].upper == columns_[col].lower;
  }

  int num_structural_ = 0;
  std::vector<Column> columns_;
  std::vector<Row> pending_rows_;
  std::vector<mpq_class> pending_rhs_;
  std::vector<bool> row_is_le_;

  std::vector<std::vector<mpq_class>> tableau_;
  std::vector<int> basic_;
  std::vector<int> row_of_;  // -1 when nonbasic.
  std::vector<mpq_class> value_;
  std::vector<mpq_class> reduced_;
  int64_t pivots_ = 0;
};

}  // namespace exactbasis

#endif  // EXACTBASIS_SIMPLEX_H_
