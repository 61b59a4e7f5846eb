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

// JSON encoding of instances and results. Objects are emitted with sorted
// keys and two-space indentation; integers that may exceed 53 bits
// (rationals, bounds, seeds) are decimal strings. The field reference is
// docs/format.md.

#ifndef EXACTBASIS_IO_H_
#define EXACTBASIS_IO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "absl/status/statusor.h"
#include "exactbasis/exact_solver.h"
#include "exactbasis/exchange_lab.h"
#include "exactbasis/matroid_spec.h"
#include "exactbasis/reductions.h"

namespace exactbasis::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;
// Bounds on |weight| and |target| so that sums stay far from overflow.
inline constexpr int64_t kMaxAbsWeight = int64_t{1} << 40;
inline constexpr int64_t kMaxAbsTarget = int64_t{1} << 50;

struct InstanceDocument {
  int format_version = kFormatVersion;
  MatroidSpec matroid;
  std::vector<std::vector<int64_t>> weights;
  std::vector<int64_t> target;
  // When present the instance is the constrained problem; weights and target
  // are then ignored.
  std::optional<std::vector<ConstraintSpec>> constraints;
  std::map<std::string, std::string> metadata;
  friend bool operator==(const InstanceDocument&,
                         const InstanceDocument&) = default;
};

Json EncodeSpec(const MatroidSpec& spec);
absl::StatusOr<MatroidSpec> DecodeSpec(const Json& j, const std::string& path);

Json EncodeConstraint(const ConstraintSpec& c);

// Syntax errors report line and column; semantic errors report the path of
// the offending value, e.g. "weights[1]".
absl::StatusOr<InstanceDocument> ParseInstance(std::string_view text);
std::string SerializeInstance(const InstanceDocument& doc);
Json EncodeInstance(const InstanceDocument& doc);

struct SolverFlags {
  bool fpt = false;
  bool linear_algebraic = false;
  bool brute_force = false;
  friend bool operator==(const SolverFlags&, const SolverFlags&) = default;
};

struct ResultDocument {
  std::string status;
  std::optional<std::vector<ElementId>> basis;
  SolveStats stats;
  int64_t window_radius = 0;
  std::vector<BoundReport> bound_reports;
  uint64_t seed = 0;
  SolverFlags solver;
  // Command-specific payload.
  Json details = Json::object();
};

bool SameResult(const ResultDocument& a, const ResultDocument& b);

std::string SerializeResult(const ResultDocument& doc);
absl::StatusOr<ResultDocument> ParseResult(std::string_view text);

Json EncodeBoundReport(const BoundReport& r);
Json EncodeRational(const mpq_class& q);

}  // namespace exactbasis::io

#endif  // EXACTBASIS_IO_H_
