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

// Scans over all dihedral classes of one n: counts, per-class probabilities
// under the classical, quantum and bosonic-estimate laws, and the coarse
// grained distributions derived from them.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bellport/combinatorics.hpp"

namespace bellport::statistics {

using combinatorics::Arrangement;
using combinatorics::OrbitClass;

enum class KernelMode { Float, Exact };

struct ScanOptions {
  KernelMode mode = KernelMode::Float;
  int threads = 1;
  /// Probabilities below this count as zero on the floating path.
  double tolerance = 1e-12;
  /// Putative extra zeros are certified with the exact kernel up to this n.
  int exact_recheck_max_n = 12;
  /// Every Q != 0 class is evaluated numerically up to this n ...
  int full_law_check_max_n = 12;
  /// ... beyond it, only this many evenly spaced ones.
  std::size_t law_check_sample = 1000;
  /// Estimated kernel operations allowed before the scan refuses to start.
  double work_budget = 2e10;
  std::optional<double> budget_seconds;
};

struct ClassRecord {
  OrbitClass cls;
  int q = 0;
  int occupied_ports = 0;
  double p_class = 0.0;
  double p_qm = 0.0;
  double p_approx = 0.0;
  double enhancement = 0.0;
  bool suppressed = false;
  /// Zero amplitude confirmed exactly (law or cyclotomic kernel).
  bool zero_certified = false;
};

struct ClassCounts {
  std::uint64_t n_class = 0;
  std::uint64_t n_quantum = 0;
  std::uint64_t n_law = 0;
  std::uint64_t n_supp = 0;
  bool operator==(const ClassCounts&) const = default;
};

/// One distribution per probability law.
struct LawVectors {
  std::vector<double> classical;
  std::vector<double> quantum;
  std::vector<double> approx;
};

struct LawCheck {
  std::size_t checked = 0;
  std::size_t violations = 0;
  double max_probability = 0.0;
  std::optional<Arrangement> first_violation;
};

struct ScanReport {
  int n = 0;
  std::vector<ClassRecord> classes;
  ClassCounts counts;
  LawVectors occupied_ports;  // index k - 1 for k = 1..n occupied ports
  LawVectors port_occupancy;  // index k for k = 0..n particles in a port
  std::array<double, 3> mean_occupied_ports{};  // classical, quantum, approx
  LawCheck law_check;
};

/// Estimated kernel operations for scan(n).
double estimated_work(int n);

/// Throws InvalidArgument for n < 1, BudgetExceeded when the estimate is above
/// options.work_budget or the wall clock passes options.budget_seconds.
ScanReport scan(int n, const ScanOptions& options = {});

LawVectors occupied_ports_distribution(const ScanReport& report);
LawVectors port_occupancy_distribution(const ScanReport& report);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::string to_string() const;
  bool operator==(const Rational&) const = default;
};

/// Best approximation with denominator <= max_den, if within `tolerance` of x.
std::optional<Rational> rationalize(double x, double tolerance = 1e-9, std::int64_t max_den = 10000);

struct EnhancementRow {
  OrbitClass cls;
  double ratio = 0.0;
  std::optional<Rational> exact;
};

/// Quantum enhancement of every non-suppressed class.
std::vector<EnhancementRow> enhancement_table(const ScanReport& report);
std::vector<EnhancementRow> enhancement_table(int n, const ScanOptions& options = {});

struct GrowthFit {
  double classical_slope = 0.0;
  double quantum_slope = 0.0;
  double classical_intercept = 0.0;
  double quantum_intercept = 0.0;
};

/// Least-squares slope and intercept of ys against xs.
std::pair<double, double> linear_fit(std::span<const double> xs, std::span<const double> ys);

/// Linear fit of mean occupied ports against n; needs at least 4 distinct n.
GrowthFit growth_rate_fit(std::span<const ScanReport> reports);

/// n (1 - (1 - 1/n)^n): expected occupied ports for distinguishable particles.
double classical_mean_occupied(int n);

}  // namespace bellport::statistics
