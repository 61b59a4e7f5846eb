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

// Arithmetic modulo a word-sized prime.

#ifndef EXACTBASIS_PRIME_FIELD_H_
#define EXACTBASIS_PRIME_FIELD_H_

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace exactbasis {

inline constexpr uint64_t kMersenne61 = (uint64_t{1} << 61) - 1;

// Deterministic Miller-Rabin for all 64-bit inputs.
bool IsPrime64(uint64_t n);

class PrimeField {
 public:
  // q must be prime and below 2^63.
  explicit PrimeField(uint64_t q) : q_(q) {}

  uint64_t q() const { return q_; }
  uint64_t Add(uint64_t a, uint64_t b) const {
    const uint64_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  uint64_t Sub(uint64_t a, uint64_t b) const {
    return a >= b ? a - b : a + q_ - b;
  }
  uint64_t Neg(uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  uint64_t Mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q_);
  }
  uint64_t Pow(uint64_t a, uint64_t e) const;
  // a must be nonzero.
  uint64_t Inv(uint64_t a) const { return Pow(a, q_ - 2); }

  uint64_t FromInt(int64_t v) const;
  uint64_t FromMpz(const mpz_class& v) const;
  // Empty when the denominator vanishes modulo q.
  std::optional<uint64_t> FromRational(const mpq_class& v) const;

  // Row-major k x k determinant; `a` is consumed.
  uint64_t Determinant(std::vector<uint64_t> a, int k) const;
  // Rank of a row-major rows x cols matrix; `a` is consumed.
  int Rank(std::vector<uint64_t> a, int rows, int cols) const;

 private:
  uint64_t q_;
};

}  // namespace exactbasis

#endif  // EXACTBASIS_PRIME_FIELD_H_
