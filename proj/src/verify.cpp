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

#include "bellport/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "bellport/appendix.hpp"
#include "bellport/error.hpp"
#include "bellport/scattering.hpp"
#include "parallel.hpp"

namespace bellport::verify {

using combinatorics::Arrangement;

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Runs pred over every arrangement of m = 1..n particles and keeps the first
// failure in enumeration order.
PropertyResult check_all(std::string name, int n, int threads,
                         const std::function<bool(const Arrangement&)>& pred,
                         const std::function<bool(const Arrangement&)>& filter = {}) {
  PropertyResult result{std::move(name)};
  for (int m = 1; m <= n && result.passed; ++m) {
    std::vector<Arrangement> cases;
    for (auto& a : combinatorics::enumerate_arrangements(m))
      if (!filter || filter(a)) cases.push_back(std::move(a));
    std::vector<char> ok(cases.size(), 1);
    detail::parallel_for(cases.size(), threads, [&](std::size_t i) { ok[i] = pred(cases[i]) ? 1 : 0; });
    result.cases += cases.size();
    for (std::size_t i = 0; i < cases.size(); ++i) {
      if (!ok[i]) {
        result.passed = false;
        result.counterexample = cases[i];
        break;
      }
    }
  }
  return result;
}

bool law_applies(const Arrangement& a) { return combinatorics::suppression_q(a) != 0; }

void law_suite(int n, const SuiteOptions& opt, std::vector<PropertyResult>& out) {
  // shifts keep Q, reversal sends Q to -Q, so only Q != 0 survives the orbit
  out.push_back(check_all("q_dihedral_invariance", n, opt.threads, [](const Arrangement& a) {
    const int m = static_cast<int>(a.size());
    const int q = combinatorics::suppression_q(a);
    std::vector<int> s(a.occupations().begin(), a.occupations().end());
    for (int shift = 0; shift < m; ++shift) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      if (combinatorics::suppression_q(s) != q) return false;
    }
    std::reverse(s.begin(), s.end());
    if (combinatorics::suppression_q(s) != (m - q) % m) return false;
    for (const auto& image : combinatorics::orbit_members(a))
      if ((combinatorics::suppression_q(image) != 0) != (q != 0)) return false;
    return true;
  }));

  for (auto [c, name] : {std::pair{Corollary::EvenCoincident, "corollary_even_coincident"},
                         std::pair{Corollary::OddNMinusOneOccupied, "corollary_odd_n_minus_1_occupied"},
                         std::pair{Corollary::PrimeTwoPorts, "corollary_prime_two_ports"}}) {
    PropertyResult r{name};
    for (int m = 1; m <= n && r.passed; ++m) {
      const auto check = check_corollary(c, m);
      r.cases += check.cases;
      if (check.counterexample) {
        r.passed = false;
        r.counterexample = check.counterexample;
      }
    }
    out.push_back(std::move(r));
  }

  out.push_back(check_all(
      "law_float", n, opt.threads,
      [&](const Arrangement& a) {
        return scattering::quantum_probability(a, scattering::fourier_matrix(a.size())) < opt.tolerance;
      },
      law_applies));
  out.push_back(check_all(
      "law_exact", n, opt.threads,
      [](const Arrangement& a) { return scattering::quantum_amplitude_exact(a).exactly_zero(); }, law_applies));
}

void oracle_suite(int n, const SuiteOptions& opt, std::vector<PropertyResult>& out) {
  {
    PropertyResult r{"naive_vs_ryser_random"};
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_int_distribution<int> dim(1, n);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
      const int d = dim(rng);
      scattering::ComplexMatrix m(d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = {unit(rng), unit(rng)};
      const auto naive = scattering::permanent_naive(m);
      const auto ryser = scattering::permanent_ryser(m);
      const double rel = std::abs(naive - ryser) / std::max(std::abs(naive), 1e-300);
      worst = std::max(worst, rel);
      ++r.cases;
      if (rel >= 1e-10) r.passed = false;
    }
    r.note = "max relative error " + std::to_string(worst);
    out.push_back(std::move(r));
  }

  out.push_back(check_all("naive_vs_ryser_fourier", n, opt.threads, [](const Arrangement& a) {
    const auto u = scattering::fourier_matrix(a.size());
    const auto m = scattering::scattering_matrix(a, u);
    const auto naive = scattering::permanent_naive(m);
    return std::abs(naive - scattering::permanent_ryser(m)) < 1e-10 &&
           std::abs(naive - scattering::quantum_amplitude(a, u).value) < 1e-10;
  }));

  out.push_back(check_all("exact_vs_ryser", n, opt.threads, [](const Arrangement& a) {
    const auto u = scattering::fourier_matrix(a.size());
    return std::abs(scattering::quantum_amplitude_exact(a).value - scattering::quantum_amplitude(a, u).value) < 1e-10;
  }));

  out.push_back(check_all("appendix_vs_ryser", n, opt.threads, [](const Arrangement& a) {
    const auto u = scattering::fourier_matrix(a.size());
    const auto rc = appendix::root_coefficients(a);
    return std::abs(appendix::reconstruct_amplitude(rc) - scattering::quantum_amplitude(a, u).value) < 1e-10;
  }));
}

void appendix_suite(int n, const SuiteOptions& opt, std::vector<PropertyResult>& out) {
  out.push_back(check_all("coefficient_total", n, opt.threads, [](const Arrangement& a) {
    const auto rc = appendix::root_coefficients(a);
    std::uint64_t total = 0, factorial = 1;
    for (auto c : rc.counts) total += c;
    for (int k = 2; k <= a.size(); ++k) factorial *= static_cast<std::uint64_t>(k);
    return total == factorial;
  }));
  out.push_back(check_all(
      "periodicity", n, opt.threads,
      [](const Arrangement& a) { return appendix::periodic_under_q(appendix::root_coefficients(a)); }, law_applies));
  out.push_back(check_all("gamma_shift", n, opt.threads, appendix::gamma_shift_check));
  out.push_back(check_all(
      "barycenter_zero", n, opt.threads,
      [](const Arrangement& a) { return std::abs(appendix::barycenter(appendix::root_coefficients(a))) < 1e-10; },
      law_applies));
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "law") return Suite::Law;
  if (name == "oracle") return Suite::Oracle;
  if (name == "appendix") return Suite::Appendix;
  if (name == "all") return Suite::All;
  throw InvalidArgument("unknown suite '" + std::string(name) + "'");
}

int max_n(Suite suite) {
  switch (suite) {
    case Suite::Law:
      return 12;
    case Suite::Oracle:
    case Suite::Appendix:
    case Suite::All:
      return appendix::kOracleMaxN;
  }
  return 0;
}

bool corollary_applies(Corollary c, int n) {
  switch (c) {
    case Corollary::EvenCoincident:
      return n % 2 == 0;
    case Corollary::OddNMinusOneOccupied:
      return n % 2 == 1 && n >= 3;
    case Corollary::PrimeTwoPorts:
      return is_prime(n);
  }
  return false;
}

std::vector<Arrangement> corollary_family(Corollary c, int n) {
  std::vector<Arrangement> family;
  const auto un = static_cast<std::size_t>(n);
  switch (c) {
    case Corollary::EvenCoincident:
      family.push_back(Arrangement::coincident(n));
      break;
    case Corollary::OddNMinusOneOccupied:
      // One port doubly occupied, one empty, the rest single.
      for (int two = 0; two < n; ++two) {
        for (int empty = 0; empty < n; ++empty) {
          if (two == empty) continue;
          std::vector<int> s(un, 1);
          s[static_cast<std::size_t>(two)] = 2;
          s[static_cast<std::size_t>(empty)] = 0;
          family.emplace_back(std::move(s));
        }
      }
      break;
    case Corollary::PrimeTwoPorts:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          for (int k = 1; k < n; ++k) {
            std::vector<int> s(un, 0);
            s[static_cast<std::size_t>(i)] = k;
            s[static_cast<std::size_t>(j)] = n - k;
            family.emplace_back(std::move(s));
          }
        }
      }
      break;
  }
  return family;
}

CorollaryCheck check_corollary(Corollary c, int n) {
  CorollaryCheck check;
  if (!corollary_applies(c, n)) return check;
  for (const auto& a : corollary_family(c, n)) {
    ++check.cases;
    if (combinatorics::suppression_q(a) == 0) {
      check.counterexample = a;
      break;
    }
  }
  return check;
}

std::vector<PropertyResult> run_suite(Suite suite, int n, const SuiteOptions& options) {
  if (n < 1 || n > max_n(suite))
    throw InvalidArgument("suite accepts 1 <= n <= " + std::to_string(max_n(suite)) + ", got " + std::to_string(n));
  std::vector<PropertyResult> out;
  if (suite == Suite::Law || suite == Suite::All) law_suite(n, options, out);
  if (suite == Suite::Oracle || suite == Suite::All) oracle_suite(n, options, out);
  if (suite == Suite::Appendix || suite == Suite::All) appendix_suite(n, options, out);
  return out;
}

bool all_passed(const std::vector<PropertyResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

std::string format_result(const PropertyResult& r) {
  std::string line = (r.passed ? "PASS " : "FAIL ") + r.name;
  if (!r.passed && r.counterexample) {
    line += ": counterexample " + r.counterexample->to_string();
  } else {
    line += " (" + std::to_string(r.cases) + " cases";
    if (!r.note.empty()) line += ", " + r.note;
    line += ")";
  }
  return line;
}

}  // namespace bellport::verify
