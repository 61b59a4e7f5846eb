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

// Runs every acceptance criterion at full size and prints one line each.
// Optional arguments: seed, then scale in (0, 1].

#include <cstdlib>
#include <iostream>
#include <string>

#include "exactbasis/acceptance.h"

int main(int argc, char** argv) {
  exactbasis::acceptance::Options options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) options.scale = std::strtod(argv[2], nullptr);
  bool ok = true;
  exactbasis::acceptance::RunAll(options, [&](const exactbasis::acceptance::Criterion& c) {
    std::cout << exactbasis::acceptance::FormatLine(c) << std::endl;
    ok &= c.pass;
  });
  std::cout << (ok ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return ok ? 0 : 1;
}
