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

#pragma once

// Exact arithmetic on integer combinations of n-th roots of unity.
// An element is stored as a coefficient vector c of length n standing for
// Σ_k c_k ω^k with ω = exp(2πi/n), i.e. an element of Z[x]/(x^n - 1).

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace bellport::cyclotomic {

using Coefficients = std::vector<std::int64_t>;

/// Φ_n, lowest degree first. Monic, degree φ(n).
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Euler's totient.
int totient(int n);

/// Product in Z[x]/(x^n - 1). Throws OverflowError if a coefficient leaves int64.
Coefficients multiply(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Remainder of c(x) modulo Φ_n with n = c.size(); the element is zero iff
/// every returned coefficient is zero.
std::vector<__int128> reduce(std::span<const __int128> c);
std::vector<__int128> reduce(std::span<const std::int64_t> c);

bool is_zero(std::span<const std::int64_t> c);

/// Σ_k c_k ω^(k + offset), floating point.
std::complex<double> evaluate(std::span<const std::int64_t> c, int offset = 0);

}  // namespace bellport::cyclotomic
