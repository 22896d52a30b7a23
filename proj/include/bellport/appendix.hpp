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

// Factorial-scale cross-check of the amplitude: every permutation term of the
// Fourier permanent is an n-th root of unity, so the sum is fixed by how many
// permutations land on each root.

#include <complex>
#include <cstdint>
#include <ostream>
#include <vector>

#include "bellport/combinatorics.hpp"

namespace bellport::appendix {

using combinatorics::Arrangement;

inline constexpr int kOracleMaxN = 8;

struct RootCoefficients {
  int n = 0;
  /// counts[r] = #{σ : Σ_l d_l σ(l) ≡ r (mod n)}
  std::vector<std::uint64_t> counts;
  int q = 0;
  /// Shift from Θ to the exponent of the permanent term:
  /// amplitude = n^(-n/2) Σ_k counts[k] ω^(k + phase_offset).
  int phase_offset = 0;
};

/// Θ_{n,s}(σ) mod n, with σ given 1-based.
int theta(const combinatorics::ModeAssignment& d, const std::vector<int>& sigma, int n);

RootCoefficients root_coefficients(const Arrangement& a);

/// Checks Θ(γσ) ≡ Θ(σ) + Q for every permutation σ, where γ adds one to every
/// image cyclically.
bool gamma_shift_check(const Arrangement& a);

/// Σ_k c_k ω^k, unnormalised.
std::complex<double> barycenter(const RootCoefficients& coeffs);

/// n^(-n/2) ω^(phase_offset) barycenter: the transition amplitude.
std::complex<double> reconstruct_amplitude(const RootCoefficients& coeffs);

/// True iff c_{(r + Q) mod n} == c_r for every r. Vacuous when Q == 0.
bool periodic_under_q(const RootCoefficients& coeffs);

/// "r;c_r" rows.
void write_coefficients_csv(std::ostream& out, const RootCoefficients& coeffs);

}  // namespace bellport::appendix
