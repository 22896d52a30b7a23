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

#include "bellport/statistics.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "bellport/error.hpp"
#include "bellport/scattering.hpp"
#include "parallel.hpp"

namespace bellport::statistics {

namespace {

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(std::optional<double> seconds) {
    if (seconds) end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
  }
  bool passed() const { return end_ && Clock::now() > *end_; }

 private:
  std::optional<Clock::time_point> end_;
};

// Probability of a Q = 0 class, with the zero certification policy applied.
void evaluate_allowed(ClassRecord& rec, const scattering::UnitaryMatrix& u, const ScanOptions& options, int n) {
  const auto& a = rec.cls.representative;
  if (options.mode == KernelMode::Exact) {
    const auto amp = scattering::quantum_amplitude_exact(a);
    rec.zero_certified = amp.exactly_zero();
    rec.p_qm = rec.zero_certified ? 0.0 : amp.probability(a);
    rec.suppressed = rec.zero_certified;
    return;
  }
  rec.p_qm = scattering::quantum_probability(a, u);
  rec.suppressed = rec.p_qm < options.tolerance;
  if (rec.suppressed && n <= options.exact_recheck_max_n) {
    const auto amp = scattering::quantum_amplitude_exact(a);
    rec.zero_certified = amp.exactly_zero();
    // The exact kernel overrides the threshold in both directions.
    rec.suppressed = rec.zero_certified;
    if (rec.zero_certified) rec.p_qm = 0.0;
  }
}

}  // namespace

double estimated_work(int n) {
  // Roughly 1/n of the C(2n-1, n-1)/(2n) classes need a 2^n-step Ryser walk
  // of about n operations per step.
  const double classes = static_cast<double>(combinatorics::arrangement_count(n)) / (2.0 * n);
  return classes * std::ldexp(1.0, n);
}

ScanReport scan(int n, const ScanOptions& options) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (!(options.tolerance > 0.0)) throw InvalidArgument("tolerance must be positive");
  if (estimated_work(n) > options.work_budget) {
    throw BudgetExceeded("scan of n=" + std::to_string(n) + " needs ~" + std::to_string(estimated_work(n)) +
                         " kernel operations, budget is " + std::to_string(options.work_budget));
  }
  const Deadline deadline(options.budget_seconds);

  ScanReport report;
  report.n = n;
  auto classes = combinatorics::enumerate_quantum_classes(n, options.threads);
  if (deadline.passed()) throw BudgetExceeded("time budget exhausted during class enumeration at n=" + std::to_string(n));

  report.classes.reserve(classes.size());
  std::vector<std::size_t> allowed;
  std::vector<std::size_t> forbidden;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto& rec = report.classes.emplace_back(ClassRecord{std::move(classes[i])});
    const auto& a = rec.cls.representative;
    rec.q = combinatorics::suppression_q(a);
    rec.occupied_ports = a.occupied_ports();
    rec.p_class = combinatorics::classical_probability(a);
    rec.p_approx = scattering::approx_probability(a);
    if (rec.q != 0) {
      rec.suppressed = true;
      rec.zero_certified = true;
      forbidden.push_back(i);
    } else {
      allowed.push_back(i);
    }
  }

  std::vector<std::size_t> law_sample;
  if (n <= options.full_law_check_max_n || forbidden.size() <= options.law_check_sample) {
    law_sample = forbidden;
  } else {
    const std::size_t stride = forbidden.size() / options.law_check_sample;
    for (std::size_t i = 0; i < options.law_check_sample; ++i) law_sample.push_back(forbidden[i * stride]);
  }

  const auto u = scattering::fourier_matrix(n);
  std::vector<double> law_values(law_sample.size(), 0.0);
  std::atomic<bool> expired{false};
  const std::size_t jobs = allowed.size() + law_sample.size();
  detail::parallel_for(
      jobs, options.threads,
      [&](std::size_t job) {
        if (expired.load(std::memory_order_relaxed)) return;
        if ((job & 15) == 0 && deadline.passed()) {
          expired = true;
          return;
        }
        if (job < allowed.size()) {
          evaluate_allowed(report.classes[allowed[job]], u, options, n);
        } else {
          const std::size_t j = job - allowed.size();
          law_values[j] = scattering::quantum_probability(report.classes[law_sample[j]].cls.representative, u);
        }
      },
      16);
  if (expired) throw BudgetExceeded("time budget exhausted during kernel evaluation at n=" + std::to_string(n));

  for (std::size_t j = 0; j < law_sample.size(); ++j) {
    auto& lc = report.law_check;
    ++lc.checked;
    lc.max_probability = std::max(lc.max_probability, law_values[j]);
    if (law_values[j] >= options.tolerance) {
      if (!lc.first_violation) lc.first_violation = report.classes[law_sample[j]].cls.representative;
      ++lc.violations;
    }
  }

  for (auto& rec : report.classes) rec.enhancement = rec.p_qm / rec.p_class;

  report.counts.n_class = combinatorics::enumerate_classical_classes(n).size();
  report.counts.n_quantum = report.classes.size();
  report.counts.n_law = forbidden.size();
  for (std::size_t i : allowed) report.counts.n_supp += report.classes[i].suppressed;

  report.occupied_ports = occupied_ports_distribution(report);
  report.port_occupancy = port_occupancy_distribution(report);
  for (int k = 1; k <= n; ++k) {
    const auto idx = static_cast<std::size_t>(k - 1);
    report.mean_occupied_ports[0] += k * report.occupied_ports.classical[idx];
    report.mean_occupied_ports[1] += k * report.occupied_ports.quantum[idx];
    report.mean_occupied_ports[2] += k * report.occupied_ports.approx[idx];
  }
  return report;
}

LawVectors occupied_ports_distribution(const ScanReport& report) {
  const auto len = static_cast<std::size_t>(report.n);
  LawVectors d{std::vector<double>(len, 0.0), std::vector<double>(len, 0.0), std::vector<double>(len, 0.0)};
  for (const auto& rec : report.classes) {
    const auto idx = static_cast<std::size_t>(rec.occupied_ports - 1);
    const double w = rec.cls.orbit_size;
    d.classical[idx] += w * rec.p_class;
    d.quantum[idx] += w * rec.p_qm;
    d.approx[idx] += w * rec.p_approx;
  }
  return d;
}

LawVectors port_occupancy_distribution(const ScanReport& report) {
  const int n = report.n;
  const auto len = static_cast<std::size_t>(n + 1);
  LawVectors d{std::vector<double>(len, 0.0), std::vector<double>(len, 0.0), std::vector<double>(len, 0.0)};
  for (const auto& rec : report.classes) {
    const double w = static_cast<double>(rec.cls.orbit_size) / n;
    for (int s : rec.cls.representative.occupations()) {
      const auto idx = static_cast<std::size_t>(s);
      d.classical[idx] += w * rec.p_class;
      d.quantum[idx] += w * rec.p_qm;
      d.approx[idx] += w * rec.p_approx;
    }
  }
  return d;
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::optional<Rational> rationalize(double x, double tolerance, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool negative = x < 0;
  const double target = std::abs(x);
  // Continued-fraction convergents h/k.
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(target));
  std::int64_t k_prev = 0, k = 1;
  double rest = target - std::floor(target);
  while (true) {
    if (std::abs(target - static_cast<double>(h) / static_cast<double>(k)) <= tolerance)
      return Rational{negative ? -h : h, k};
    if (rest < 1e-15) return std::nullopt;
    const double inv = 1.0 / rest;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    rest = inv - std::floor(inv);
    const std::int64_t h_next = a * h + h_prev;
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_den) return std::nullopt;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
}

std::vector<EnhancementRow> enhancement_table(const ScanReport& report) {
  std::vector<EnhancementRow> rows;
  for (const auto& rec : report.classes) {
    if (rec.suppressed) continue;
    rows.push_back(EnhancementRow{rec.cls, rec.enhancement, rationalize(rec.enhancement)});
  }
  return rows;
}

std::vector<EnhancementRow> enhancement_table(int n, const ScanOptions& options) {
  return enhancement_table(scan(n, options));
}

std::pair<double, double> linear_fit(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw InvalidArgument("linear fit needs matching samples");
  const auto m = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw InvalidArgument("linear fit needs distinct abscissae");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

GrowthFit growth_rate_fit(std::span<const ScanReport> reports) {
  std::set<int> distinct;
  for (const auto& r : reports) distinct.insert(r.n);
  if (distinct.size() < 4) throw InvalidArgument("growth-rate fit needs at least 4 distinct n, got " + std::to_string(distinct.size()));
  std::vector<double> xs, classical, quantum;
  for (const auto& r : reports) {
    xs.push_back(r.n);
    classical.push_back(r.mean_occupied_ports[0]);
    quantum.push_back(r.mean_occupied_ports[1]);
  }
  GrowthFit fit;
  std::tie(fit.classical_slope, fit.classical_intercept) = linear_fit(xs, classical);
  std::tie(fit.quantum_slope, fit.quantum_intercept) = linear_fit(xs, quantum);
  return fit;
}

double classical_mean_occupied(int n) {
  if (n < 1) throw InvalidArgument("n must be positive");
  return n * (1.0 - std::pow(1.0 - 1.0 / n, n));
}

}  // namespace bellport::statistics
