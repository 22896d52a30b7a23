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

#include "bellport/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bellport/error.hpp"

namespace bellport::appendix {

namespace {

void require_oracle_size(int n) {
  if (n > kOracleMaxN) throw InvalidArgument("permutation oracle supports n <= " + std::to_string(kOracleMaxN));
}

}  // namespace

int theta(const combinatorics::ModeAssignment& d, const std::vector<int>& sigma, int n) {
  long long sum = 0;
  for (std::size_t l = 0; l < sigma.size(); ++l) sum += static_cast<long long>(d.ports[l]) * sigma[l];
  return static_cast<int>(sum % n);
}

RootCoefficients root_coefficients(const Arrangement& a) {
  const int n = a.size();
  require_oracle_size(n);
  const auto d = combinatorics::mode_assignment(a);
  const int sum_d = std::accumulate(d.ports.begin(), d.ports.end(), 0);

  RootCoefficients rc;
  rc.n = n;
  rc.counts.assign(static_cast<std::size_t>(n), 0);
  rc.q = sum_d % n;
  // Π_j ω^{(d_j - 1)(σ(j) - 1)} = ω^{Θ - Σd - n(n+1)/2 + n}
  rc.phase_offset = ((-sum_d - n * (n + 1) / 2 + n) % n + n) % n;

  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    ++rc.counts[static_cast<std::size_t>(theta(d, sigma, n))];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return rc;
}

bool gamma_shift_check(const Arrangement& a) {
  const int n = a.size();
  require_oracle_size(n);
  const auto d = combinatorics::mode_assignment(a);
  const int q = combinatorics::suppression_q(a);
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<int> shifted(sigma.size());
  do {
    std::transform(sigma.begin(), sigma.end(), shifted.begin(), [n](int v) { return v % n + 1; });
    if (theta(d, shifted, n) != (theta(d, sigma, n) + q) % n) return false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return true;
}

std::complex<double> barycenter(const RootCoefficients& coeffs) {
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < coeffs.n; ++k)
    sum += static_cast<double>(coeffs.counts[static_cast<std::size_t>(k)]) *
           std::polar(1.0, 2.0 * std::numbers::pi * k / coeffs.n);
  return sum;
}

std::complex<double> reconstruct_amplitude(const RootCoefficients& coeffs) {
  const int n = coeffs.n;
  const auto phase = std::polar(1.0, 2.0 * std::numbers::pi * coeffs.phase_offset / n);
  return barycenter(coeffs) * phase * std::pow(static_cast<double>(n), -0.5 * n);
}

bool periodic_under_q(const RootCoefficients& coeffs) {
  const int n = coeffs.n;
  for (int r = 0; r < n; ++r)
    if (coeffs.counts[static_cast<std::size_t>((r + coeffs.q) % n)] != coeffs.counts[static_cast<std::size_t>(r)])
      return false;
  return true;
}

void write_coefficients_csv(std::ostream& out, const RootCoefficients& coeffs) {
  out << "r;c_r\n";
  for (int r = 0; r < coeffs.n; ++r) out << r << ';' << coeffs.counts[static_cast<std::size_t>(r)] << '\n';
}

}  // namespace bellport::appendix
