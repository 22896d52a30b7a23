// Copyright 2026 The Bellport Authors
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

#include "bellport/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bellport/error.hpp"

namespace bellport::cyclotomic {

namespace {

// Exact quotient of a by monic b.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t coef = a[i];
    q[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
  }
  return q;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidArgument("cyclotomic index must be positive");
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly.front() = -1;
  poly.back() = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  return poly;
}

int totient(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Coefficients multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InvalidArgument("coefficient vectors differ in length");
  Coefficients out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::int64_t term;
      const std::size_t k = i + j < n ? i + j : i + j - n;
      if (__builtin_mul_overflow(a[i], b[j], &term) || __builtin_add_overflow(out[k], term, &out[k]))
        throw OverflowError("cyclotomic coefficient overflow in multiply");
    }
  }
  return out;
}

std::vector<__int128> reduce(std::span<const __int128> c) {
  const int n = static_cast<int>(c.size());
  const auto phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  std::vector<__int128> r(c.begin(), c.end());
  for (std::size_t i = r.size(); i-- > deg;) {
    const __int128 coef = r[i];
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      __int128 term;
      if (__builtin_mul_overflow(coef, static_cast<__int128>(phi[j]), &term) ||
          __builtin_sub_overflow(r[i - deg + j], term, &r[i - deg + j]))
        throw OverflowError("cyclotomic coefficient overflow in reduction");
    }
  }
  r.resize(deg);
  return r;
}

std::vector<__int128> reduce(std::span<const std::int64_t> c) {
  std::vector<__int128> wide(c.begin(), c.end());
  return reduce(std::span<const __int128>(wide));
}

bool is_zero(std::span<const std::int64_t> c) {
  const auto r = reduce(c);
  return std::all_of(r.begin(), r.end(), [](__int128 v) { return v == 0; });
}

std::complex<double> evaluate(std::span<const std::int64_t> c, int offset) {
  const int n = static_cast<int>(c.size());
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    if (c[static_cast<std::size_t>(k)] == 0) continue;
    const int e = ((k + offset) % n + n) % n;
    sum += static_cast<double>(c[static_cast<std::size_t>(k)]) * std::polar(1.0, 2.0 * std::numbers::pi * e / n);
  }
  return sum;
}

}  // namespace bellport::cyclotomic
