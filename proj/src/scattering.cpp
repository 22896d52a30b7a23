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

#include "bellport/scattering.hpp"

#include <algorithm>
#include <array>
#include <utility>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "bellport/error.hpp"

namespace bellport::scattering {

namespace {

struct OccupiedRows {
  std::vector<int> ports;         // 0-based port index
  std::vector<int> multiplicity;  // s_p for each listed port
};

OccupiedRows occupied_rows(const Arrangement& a) {
  OccupiedRows rows;
  for (int p = 0; p < a.size(); ++p) {
    if (a[p] == 0) continue;
    rows.ports.push_back(p);
    rows.multiplicity.push_back(a[p]);
  }
  return rows;
}

inline Complex ipow(Complex z, int e) {
  Complex r = z;
  for (int i = 1; i < e; ++i) r *= z;
  return r;
}

}  // namespace

double unitarity_defect(const ComplexMatrix& m) {
  if (!m.square()) throw InvalidArgument("unitarity check needs a square matrix");
  const int n = m.rows();
  double worst = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Complex dot{0.0, 0.0};
      for (int l = 0; l < n; ++l) dot += m(j, l) * std::conj(m(k, l));
      worst = std::max(worst, std::abs(dot - Complex(j == k ? 1.0 : 0.0, 0.0)));
    }
  }
  return worst;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tolerance) : matrix_(std::move(m)) {
  if (!matrix_.square() || matrix_.rows() == 0) throw InvalidArgument("unitary matrix must be square and non-empty");
  const double defect = unitarity_defect(matrix_);
  if (defect > tolerance) throw InvalidArgument("matrix is not unitary (defect " + std::to_string(defect) + ")");
}

UnitaryMatrix fourier_matrix(int n) {
  if (n < 1) throw InvalidArgument("Fourier matrix dimension must be positive");
  ComplexMatrix m(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // Reduce the exponent first so every entry uses an angle in [0, 2π).
      const int e = (j * k) % n;
      m(j, k) = std::polar(scale, 2.0 * std::numbers::pi * e / n);
    }
  }
  return UnitaryMatrix(std::move(m));
}

Complex permanent_naive(const ComplexMatrix& m) {
  if (!m.square() || m.rows() == 0) throw InvalidArgument("permanent needs a non-empty square matrix");
  const int n = m.rows();
  if (n > kNaiveMaxDim) throw InvalidArgument("dimension " + std::to_string(n) + " exceeds the naive permanent limit");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 0);
  Complex sum{0.0, 0.0};
  do {
    Complex term{1.0, 0.0};
    for (int j = 0; j < n; ++j) term *= m(j, sigma[static_cast<std::size_t>(j)]);
    sum += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

Complex permanent_ryser_repeated(const ComplexMatrix& rows, std::span<const int> multiplicity) {
  const int n = rows.cols();
  const int distinct = rows.rows();
  if (n == 0) throw InvalidArgument("permanent of an empty matrix");
  if (n > kRyserMaxDim) throw InvalidArgument("dimension " + std::to_string(n) + " exceeds the Ryser limit");
  if (static_cast<int>(multiplicity.size()) != distinct) throw InvalidArgument("one multiplicity per row required");
  if (std::accumulate(multiplicity.begin(), multiplicity.end(), 0) != n)
    throw InvalidArgument("row multiplicities must add up to the column count");

  std::vector<Complex> rowsum(static_cast<std::size_t>(distinct), Complex{0.0, 0.0});
  Complex total{0.0, 0.0};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const int col = std::countr_zero(k);
    const std::uint64_t gray = k ^ (k >> 1);
    if (gray & (std::uint64_t{1} << col)) {
      for (int r = 0; r < distinct; ++r) rowsum[static_cast<std::size_t>(r)] += rows(r, col);
    } else {
      for (int r = 0; r < distinct; ++r) rowsum[static_cast<std::size_t>(r)] -= rows(r, col);
    }
    Complex prod{1.0, 0.0};
    for (int r = 0; r < distinct; ++r) prod *= ipow(rowsum[static_cast<std::size_t>(r)], multiplicity[static_cast<std::size_t>(r)]);
    if ((n - std::popcount(gray)) % 2 == 0) {
      total += prod;
    } else {
      total -= prod;
    }
  }
  return total;
}

Complex permanent_ryser(const ComplexMatrix& m) {
  if (!m.square()) throw InvalidArgument("permanent needs a square matrix");
  const std::vector<int> ones(static_cast<std::size_t>(m.rows()), 1);
  return permanent_ryser_repeated(m, ones);
}

ComplexMatrix scattering_matrix(const Arrangement& a, const UnitaryMatrix& u) {
  const int n = a.size();
  if (u.size() != n) throw InvalidArgument("arrangement and unitary differ in dimension");
  ComplexMatrix m(n);
  const auto d = combinatorics::mode_assignment(a);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) m(j, k) = u(d.ports[static_cast<std::size_t>(j)] - 1, k);
  return m;
}

Amplitude quantum_amplitude(const Arrangement& a, const UnitaryMatrix& u) {
  const int n = a.size();
  if (u.size() != n) throw InvalidArgument("arrangement and unitary differ in dimension");
  const auto occupied = occupied_rows(a);
  ComplexMatrix rows(static_cast<int>(occupied.ports.size()), n);
  for (std::size_t r = 0; r < occupied.ports.size(); ++r)
    for (int k = 0; k < n; ++k) rows(static_cast<int>(r), k) = u(occupied.ports[r], k);
  return Amplitude{permanent_ryser_repeated(rows, occupied.multiplicity), std::nullopt};
}

double quantum_probability(const Arrangement& a, const UnitaryMatrix& u) {
  return quantum_amplitude(a, u).probability(a);
}

bool Amplitude::exactly_zero() const {
  if (!coefficients) throw InvalidArgument("amplitude carries no exact coefficients");
  return cyclotomic::is_zero(*coefficients);
}

double Amplitude::probability(const Arrangement& a) const {
  if (coefficients && exactly_zero()) return 0.0;
  return std::norm(value) / a.occupation_factorial();
}

namespace {

// perm(A) = perm(Aᵀ). Aᵀ repeats column p s_p times, so Ryser over column
// subsets of Aᵀ groups into v_p picks from each port:
//   perm = (-1)^n Σ_v (-1)^{|v|} Π_p C(s_p, v_p) Π_k Σ_p v_p ω^{p k}.
// v walks the reflected mixed-radix Gray code, so each step moves one v_p by
// ±1 and every column factor changes in a single coefficient.
template <int N>
cyclotomic::Coefficients exact_permanent(const OccupiedRows& occ) {
  using Vec = std::array<std::int64_t, N>;
  const std::size_t m = occ.ports.size();

  std::array<std::array<std::int64_t, N + 1>, N + 1> choose{};
  for (int i = 0; i <= N; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= i; ++j) choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }

  std::vector<int> picks(m, 0);
  std::vector<int> dir(m, 1);
  std::array<Vec, N> factor{};
  std::array<__int128, N> acc{};
  int total_picks = 0;

  while (true) {
    std::size_t j = 0;
    for (; j < m; ++j) {
      const int next = picks[j] + dir[j];
      if (next >= 0 && next <= occ.multiplicity[j]) break;
      dir[j] = -dir[j];
    }
    if (j == m) break;
    const int delta = dir[j];
    picks[j] += delta;
    total_picks += delta;
    const int port = occ.ports[j];
    for (int k = 0; k < N; ++k) factor[static_cast<std::size_t>(k)][static_cast<std::size_t>((port * k) % N)] += delta;
    if (total_picks == 0) continue;

    // Column k = 0 is the scalar |v|. Partial products keep L1 norm <= n^n.
    Vec prod{};
    prod[0] = total_picks;
    for (int k = 1; k < N; ++k) {
      const Vec& f = factor[static_cast<std::size_t>(k)];
      Vec next{};
      for (int i = 0; i < N; ++i) {
        const std::int64_t pi = prod[static_cast<std::size_t>(i)];
        if (pi == 0) continue;
        for (int e = 0; e < N; ++e) {
          const std::int64_t fe = f[static_cast<std::size_t>(e)];
          if (fe == 0) continue;
          next[static_cast<std::size_t>(i + e < N ? i + e : i + e - N)] += pi * fe;
        }
      }
      prod = next;
    }

    __int128 weight = ((N - total_picks) % 2 == 0) ? 1 : -1;
    for (std::size_t r = 0; r < m; ++r) weight *= choose[static_cast<std::size_t>(occ.multiplicity[r])][static_cast<std::size_t>(picks[r])];
    for (int e = 0; e < N; ++e) acc[static_cast<std::size_t>(e)] += weight * prod[static_cast<std::size_t>(e)];
  }

  cyclotomic::Coefficients c(static_cast<std::size_t>(N));
  for (int e = 0; e < N; ++e) {
    const __int128 v = acc[static_cast<std::size_t>(e)];
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("exact amplitude coefficient exceeds int64");
    c[static_cast<std::size_t>(e)] = static_cast<std::int64_t>(v);
  }
  return c;
}

template <int... Ns>
cyclotomic::Coefficients dispatch_exact(int n, const OccupiedRows& occ, std::integer_sequence<int, Ns...>) {
  cyclotomic::Coefficients out;
  ((n == Ns + 1 ? (out = exact_permanent<Ns + 1>(occ), true) : false) || ...);
  return out;
}

}  // namespace

Amplitude quantum_amplitude_exact(const Arrangement& a) {
  const int n = a.size();
  if (n > kExactMaxDim) throw InvalidArgument("exact kernel supports n <= " + std::to_string(kExactMaxDim));
  auto c = dispatch_exact(n, occupied_rows(a), std::make_integer_sequence<int, kExactMaxDim>{});
  const Complex value = cyclotomic::evaluate(c) * std::pow(static_cast<double>(n), -0.5 * n);
  return Amplitude{value, std::move(c)};
}

double approx_normalizer(int n) {
  // Every term equals n!/n^n, so the sum is C(2n-1, n-1) n!/n^n.
  const double log_term = std::lgamma(n + 1.0) - n * std::log(static_cast<double>(n));
  return static_cast<double>(combinatorics::arrangement_count(n)) * std::exp(log_term);
}

double approx_probability(const Arrangement& a) {
  return a.occupation_factorial() * combinatorics::classical_probability(a) / approx_normalizer(a.size());
}

}  // namespace bellport::scattering
