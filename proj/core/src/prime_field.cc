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

#include "exactbasis/prime_field.h"

#include <utility>

namespace exactbasis {
namespace {

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t PowMod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) result = MulMod(result, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool IsPrime64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t PrimeField::Pow(uint64_t a, uint64_t e) const {
  return PowMod(a, e, q_);
}

uint64_t PrimeField::FromInt(int64_t v) const {
  const int64_t q = static_cast<int64_t>(q_);
  int64_t r = v % q;
  if (r < 0) r += q;
  return static_cast<uint64_t>(r);
}

uint64_t PrimeField::FromMpz(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), q_);
  return r.get_ui();
}

std::optional<uint64_t> PrimeField::FromRational(const mpq_class& v) const {
  const uint64_t den = FromMpz(v.get_den());
  if (den == 0) return std::nullopt;
  return Mul(FromMpz(v.get_num()), Inv(den));
}

uint64_t PrimeField::Determinant(std::vector<uint64_t> a, int k) const {
  uint64_t det = 1;
  for (int c = 0; c < k; ++c) {
    int pivot = c;
    while (pivot < k && a[pivot * k + c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      for (int j = 0; j < k; ++j) std::swap(a[pivot * k + j], a[c * k + j]);
      det = Neg(det);
    }
    const uint64_t p = a[c * k + c];
    det = Mul(det, p);
    const uint64_t inv = Inv(p);
    for (int i = c + 1; i < k; ++i) {
      const uint64_t f = Mul(a[i * k + c], inv);
      if (f == 0) continue;
      for (int j = c; j < k; ++j) {
        a[i * k + j] = Sub(a[i * k + j], Mul(f, a[c * k + j]));
      }
    }
  }
  return det;
}

int PrimeField::Rank(std::vector<uint64_t> a, int rows, int cols) const {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (int j = 0; j < cols; ++j) {
        std::swap(a[pivot * cols + j], a[rank * cols + j]);
      }
    }
    const uint64_t inv = Inv(a[rank * cols + c]);
    for (int i = rank + 1; i < rows; ++i) {
      const uint64_t f = Mul(a[i * cols + c], inv);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        a[i * cols + j] = Sub(a[i * cols + j], Mul(f, a[rank * cols + j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace exactbasis
