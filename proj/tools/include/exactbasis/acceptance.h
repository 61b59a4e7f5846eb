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

// Acceptance checks over randomized and catalog instances. Each criterion
// yields one PASS/FAIL line.

#ifndef EXACTBASIS_ACCEPTANCE_H_
#define EXACTBASIS_ACCEPTANCE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exactbasis::acceptance {

struct Options {
  uint64_t seed = 0;
  // Fraction of the full instance counts, in (0, 1]. Catalog sweeps always
  // run in full.
  double scale = 1.0;
};

struct Criterion {
  std::string name;
  bool pass = false;
  std::string detail;
  // Wall time; kept out of `detail` so that detail stays reproducible.
  double seconds = 0;
};

// Runs every criterion; `report` is called as each one finishes.
std::vector<Criterion> RunAll(const Options& options,
                              const std::function<void(const Criterion&)>& report);

std::string FormatLine(const Criterion& c);

}  // namespace exactbasis::acceptance

#endif  // EXACTBASIS_ACCEPTANCE_H_
