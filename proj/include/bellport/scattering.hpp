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

// Scattering of one boson per input port through an n-port unitary:
// permanent kernels, transition probabilities and the bosonic estimate.

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bellport/combinatorics.hpp"
#include "bellport/cyclotomic.hpp"

namespace bellport::scattering {

using Complex = std::complex<double>;
using combinatorics::Arrangement;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : ComplexMatrix(dim, dim) {}
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(int r, int c) { return data_[index(r, c)]; }
  const Complex& operator()(int r, int c) const { return data_[index(r, c)]; }
  std::span<const Complex> row(int r) const { return {data_.data() + index(r, 0), static_cast<std::size_t>(cols_)}; }

 private:
  std::size_t index(int r, int c) const noexcept {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> data_;
};

/// max_{jk} |(M M†)_jk - δ_jk|
double unitarity_defect(const ComplexMatrix& m);

/// Square matrix checked to be unitary on construction.
class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(ComplexMatrix m, double tolerance = 1e-12);
  int size() const noexcept { return matrix_.cols(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(int r, int c) const { return matrix_(r, c); }

 private:
  ComplexMatrix matrix_;
};

/// U_jk = exp(2πi (j-1)(k-1) / n) / √n
UnitaryMatrix fourier_matrix(int n);

inline constexpr int kNaiveMaxDim = 10;
inline constexpr int kRyserMaxDim = 30;
inline constexpr int kExactMaxDim = 15;

/// Σ_σ Π_j M[j, σ(j)] by walking all permutations.
Complex permanent_naive(const ComplexMatrix& m);

/// Ryser inclusion-exclusion over column subsets in Gray-code order, O(2^n n).
Complex permanent_ryser(const ComplexMatrix& m);

/// Ryser on the matrix whose row r of `rows` appears multiplicity[r] times.
/// Same subset walk as permanent_ryser; repeated rows share one running sum.
Complex permanent_ryser_repeated(const ComplexMatrix& rows, std::span<const int> multiplicity);

/// n x n matrix whose j-th row is U[d_j(s) - 1, ·].
ComplexMatrix scattering_matrix(const Arrangement& a, const UnitaryMatrix& u);

/// |perm|^2 / Π_j s_j! for the repeated-row matrix of `a`.
double quantum_probability(const Arrangement& a, const UnitaryMatrix& u);

/// Amplitude of Eq.-type permanent sum; when present, `coefficients` give the
/// value as n^(-n/2) Σ_k c_k ω^k.
struct Amplitude {
  Complex value;
  std::optional<cyclotomic::Coefficients> coefficients;

  /// Only meaningful with coefficients: exact test after reduction by Φ_n.
  bool exactly_zero() const;
  double probability(const Arrangement& a) const;
};

/// Fourier amplitude computed in Z[ω]: Ryser with integer coefficient vectors.
/// Throws InvalidArgument above kExactMaxDim, OverflowError if coefficients
/// leave int64.
Amplitude quantum_amplitude_exact(const Arrangement& a);

/// Fourier amplitude via the floating Ryser kernel (no coefficients).
Amplitude quantum_amplitude(const Arrangement& a, const UnitaryMatrix& u);

/// Σ_r Π_j r_j! P_class(r) over all arrangements r of n particles.
double approx_normalizer(int n);

/// (Π_j s_j!) P_class(s) / approx_normalizer(n).
double approx_probability(const Arrangement& a);

}  // namespace bellport::scattering
