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

// Output arrangements of n bosons over n ports, the suppression law and the
// classical / dihedral equivalence classes built on top of them.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bellport::combinatorics {

/// Occupation vector s = (s_1, ..., s_n): s_k particles leave through port k.
/// Always holds n entries that sum to n.
class Arrangement {
 public:
  explicit Arrangement(std::vector<int> occupations);

  /// Parses a comma-separated literal such as "2,1,0,2,0".
  /// Throws ParseError naming the bad token, or InvalidArgument when the
  /// entries do not sum to their count.
  static Arrangement parse(std::string_view literal);

  /// Coincident event (1, 1, ..., 1).
  static Arrangement coincident(int n);

  int size() const noexcept { return static_cast<int>(occupations_.size()); }
  int operator[](int port) const { return occupations_[static_cast<std::size_t>(port)]; }
  std::span<const int> occupations() const noexcept { return occupations_; }

  int occupied_ports() const noexcept;
  /// Number of ports holding exactly `count` particles.
  int ports_with(int count) const noexcept;
  /// Π_j s_j!
  double occupation_factorial() const noexcept;

  /// "2,1,0,2,0"
  std::string to_string() const;
  /// "(21020)" when every entry is a single digit, otherwise empty.
  std::string compact() const;

  auto operator<=>(const Arrangement&) const = default;

 private:
  std::vector<int> occupations_;
};

/// d(s): port numbers (1-based) repeated by occupation, non-decreasing.
struct ModeAssignment {
  std::vector<int> ports;
  bool operator==(const ModeAssignment&) const = default;
};

ModeAssignment mode_assignment(const Arrangement& a);

/// Probability of `a` for distinguishable particles: n! / (n^n Π_j s_j!).
double classical_probability(const Arrangement& a);

/// Mod(Σ_l d_l(s), n). A nonzero value forces a vanishing amplitude.
int suppression_q(const Arrangement& a);
int suppression_q(std::span<const int> occupations);

std::uint64_t binomial(int n, int k);

/// Number of arrangements for n particles: C(2n-1, n-1).
std::uint64_t arrangement_count(int n);

/// Lexicographic walk over the compositions of n into n non-negative parts.
/// Can start at any rank, so the space splits into independent ranges.
class CompositionCursor {
 public:
  explicit CompositionCursor(int n, std::uint64_t start = 0);

  bool done() const noexcept { return index_ >= total_; }
  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t total() const noexcept { return total_; }
  std::span<const int> current() const noexcept { return parts_; }
  void advance();

 private:
  int n_;
  std::uint64_t index_;
  std::uint64_t total_;
  std::vector<int> parts_;
};

/// Composition with lexicographic rank `index` (0-based).
Arrangement unrank_arrangement(int n, std::uint64_t index);

std::vector<Arrangement> enumerate_arrangements(int n);
void for_each_arrangement(int n, const std::function<void(std::span<const int>)>& visit);

/// Orbit of an arrangement under cyclic shifts and reflections of the ports.
struct OrbitClass {
  Arrangement representative;  // lexicographically smallest member
  int orbit_size;
};

OrbitClass quantum_orbit(const Arrangement& a);

/// All distinct images of `a` under the dihedral group of order 2n, sorted.
std::vector<Arrangement> orbit_members(const Arrangement& a);

/// True iff no cyclic shift or reflected shift of `s` is lexicographically smaller.
bool is_canonical(std::span<const int> s) noexcept;

/// Distinct dihedral images of a canonical vector.
int orbit_size(std::span<const int> canonical);

/// Every dihedral orbit exactly once, in lexicographic order of representatives.
/// The composition space is split over `threads` workers; output order does
/// not depend on the worker count.
std::vector<OrbitClass> enumerate_quantum_classes(int n, int threads = 1);

/// Multiset of nonzero occupations, sorted descending (a partition of n).
struct ClassicalClass {
  std::vector<int> parts;
  bool operator==(const ClassicalClass&) const = default;
};

ClassicalClass classical_class(const Arrangement& a);

/// Partitions of n in reverse lexicographic order, starting with (n).
std::vector<ClassicalClass> enumerate_classical_classes(int n);

}  // namespace bellport::combinatorics
