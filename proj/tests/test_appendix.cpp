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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <sstream>

#include "bellport/appendix.hpp"
#include "bellport/error.hpp"
#include "bellport/scattering.hpp"

using namespace bellport;
using namespace bellport::appendix;
using combinatorics::enumerate_arrangements;
using combinatorics::suppression_q;

namespace {

std::uint64_t factorial(int n) { return n <= 1 ? 1 : static_cast<std::uint64_t>(n) * factorial(n - 1); }

Arrangement random_arrangement(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> port(0, n - 1);
  std::vector<int> s(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) ++s[static_cast<std::size_t>(port(rng))];
  return Arrangement(s);
}

}  // namespace

TEST_CASE("root_coefficients for the two-port case") {
  const auto rc = root_coefficients(Arrangement({1, 1}));
  CHECK(rc.counts == std::vector<std::uint64_t>{1, 1});
  CHECK(rc.q == 1);
  CHECK(std::abs(barycenter(rc)) < 1e-15);
}

TEST_CASE("root_coefficients periodicity for a suppressed n = 6 event") {
  const auto rc = root_coefficients(Arrangement({2, 1, 2, 1, 0, 0}));
  CHECK(rc.q == 2);
  for (int r = 0; r < 6; ++r) CHECK(rc.counts[static_cast<std::size_t>(r)] == rc.counts[static_cast<std::size_t>((r + 2) % 6)]);
  CHECK(periodic_under_q(rc));
}

TEST_CASE("coefficients cover every permutation and repeat with period Q") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& a : enumerate_arrangements(n)) {
      const auto rc = root_coefficients(a);
      CHECK(std::accumulate(rc.counts.begin(), rc.counts.end(), std::uint64_t{0}) == factorial(n));
      CHECK(rc.q == suppression_q(a));
      if (rc.q != 0) {
        for (int step = 1; step < n; ++step)
          for (int r = 0; r < n; ++r)
            CHECK(rc.counts[static_cast<std::size_t>((r + step * rc.q) % n)] == rc.counts[static_cast<std::size_t>(r)]);
      }
    }
  }
}

TEST_CASE("reconstructed amplitude equals the permanent path") {
  for (int n = 1; n <= 7; ++n) {
    const auto u = scattering::fourier_matrix(n);
    for (const auto& a : enumerate_arrangements(n)) {
      const auto rc = root_coefficients(a);
      CHECK(std::abs(reconstruct_amplitude(rc) - scattering::quantum_amplitude(a, u).value) < 1e-10);
    }
  }
}

TEST_CASE("gamma_shift_check") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& a : enumerate_arrangements(n)) CHECK(gamma_shift_check(a));

  // n = 2, (1,1): γ swaps the identity and the transposition.
  const combinatorics::ModeAssignment d{{1, 2}};
  CHECK(theta(d, {1, 2}, 2) == 1);
  CHECK(theta(d, {2, 1}, 2) == 0);

  std::mt19937_64 rng(77);
  for (int n : {7, 8})
    for (int i = 0; i < 250; ++i) CHECK(gamma_shift_check(random_arrangement(n, rng)));
}

TEST_CASE("barycenter") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& a : enumerate_arrangements(n))
      if (suppression_q(a) != 0) CHECK(std::abs(barycenter(root_coefficients(a))) < 1e-10);

  // The converse fails: exactly two n = 6 classes have Q = 0 and a zero barycenter.
  int unexplained = 0;
  for (const auto& c : combinatorics::enumerate_quantum_classes(6)) {
    if (suppression_q(c.representative) != 0) continue;
    unexplained += std::abs(barycenter(root_coefficients(c.representative))) < 1e-10;
  }
  CHECK(unexplained == 2);

  const Arrangement coincident = Arrangement::coincident(3);
  const auto b = barycenter(root_coefficients(coincident));
  CHECK(std::abs(b) > 1e-3);
  CHECK(std::norm(b) / (27.0 * coincident.occupation_factorial()) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("oracle size limit and CSV dump") {
  CHECK_THROWS_AS(root_coefficients(Arrangement::coincident(kOracleMaxN + 1)), InvalidArgument);
  CHECK_THROWS_AS(gamma_shift_check(Arrangement::coincident(kOracleMaxN + 1)), InvalidArgument);

  std::ostringstream out;
  write_coefficients_csv(out, root_coefficients(Arrangement({1, 1})));
  CHECK(out.str() == "r;c_r\n0;1\n1;1\n");
}
