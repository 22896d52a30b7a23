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

#include <map>
#include <random>
#include <set>

#include "bellport/combinatorics.hpp"
#include "bellport/error.hpp"

using namespace bellport;
using namespace bellport::combinatorics;

namespace {

// Every vector in {0..n}^n with sum n, in lexicographic order.
std::vector<std::vector<int>> brute_force_compositions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  while (true) {
    int sum = 0;
    for (int x : v) sum += x;
    if (sum == n) out.push_back(v);
    int i = n - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == n) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

std::uint64_t pascal(int n, int k) {
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] + t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
  }
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

// Partitions of n into parts of size <= k.
std::uint64_t partition_count(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  return partition_count(n, k - 1) + (n >= k ? partition_count(n - k, k) : 0);
}

Arrangement shift(const Arrangement& a, int by) {
  const int n = a.size();
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = a[(i + by) % n];
  return Arrangement(t);
}

Arrangement reversed(const Arrangement& a) {
  auto occ = a.occupations();
  return Arrangement(std::vector<int>(occ.rbegin(), occ.rend()));
}

}  // namespace

TEST_CASE("arrangement validation and parsing") {
  CHECK_THROWS_AS(Arrangement(std::vector<int>{}), InvalidArgument);
  CHECK_THROWS_AS(Arrangement(std::vector<int>{1, 1, 0}), InvalidArgument);
  CHECK_THROWS_AS(Arrangement(std::vector<int>{3, -1, 0}), InvalidArgument);

  CHECK(Arrangement::parse("2,1,0,2,0") == Arrangement({2, 1, 0, 2, 0}));
  CHECK(Arrangement::parse(" 1 , 1 ") == Arrangement({1, 1}));
  try {
    Arrangement::parse("1,a,1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.token() == "a");
  }
  CHECK_THROWS_AS(Arrangement::parse("1,,2"), ParseError);
  CHECK_THROWS_AS(Arrangement::parse("1,-2"), ParseError);
  // Sum mismatch is not a parse error.
  try {
    Arrangement::parse("1,2");
    FAIL("expected InvalidArgument");
  } catch (const ParseError&) {
    FAIL("sum mismatch reported as a parse error");
  } catch (const InvalidArgument&) {
  }

  const Arrangement a({2, 1, 0, 2, 0});
  CHECK(a.to_string() == "2,1,0,2,0");
  CHECK(a.compact() == "(21020)");
  CHECK(a.occupied_ports() == 3);
  CHECK(a.ports_with(2) == 2);
  CHECK(a.occupation_factorial() == 4.0);
  CHECK(Arrangement::coincident(11).compact() == "(11111111111)");
  std::vector<int> big(10, 0);
  big[0] = 10;
  CHECK(Arrangement(big).compact().empty());
}

TEST_CASE("enumerate_arrangements") {
  CHECK_THROWS_AS(enumerate_arrangements(0), InvalidArgument);

  const auto two = enumerate_arrangements(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == Arrangement({0, 2}));
  CHECK(two[1] == Arrangement({1, 1}));
  CHECK(two[2] == Arrangement({2, 0}));

  for (int n = 1; n <= 6; ++n) {
    const auto oracle = brute_force_compositions(n);
    const auto got = enumerate_arrangements(n);
    REQUIRE(got.size() == oracle.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      const auto occ = got[i].occupations();
      CHECK(std::vector<int>(occ.begin(), occ.end()) == oracle[i]);
    }
  }
  CHECK(enumerate_arrangements(4).size() == 35);
  CHECK(pascal(7, 3) == 35);
}

TEST_CASE("arrangement count at n = 14") {
  CHECK(pascal(27, 13) == 20058300);
  CHECK(arrangement_count(14) == 20058300);
  std::uint64_t walked = 0;
  for (CompositionCursor c(14); !c.done(); c.advance()) ++walked;
  CHECK(walked == 20058300);
}

TEST_CASE("composition cursor resumes from any rank") {
  for (int n : {3, 5, 7}) {
    const auto all = enumerate_arrangements(n);
    for (std::uint64_t start = 0; start < all.size(); start += 7) {
      CompositionCursor c(n, start);
      for (std::uint64_t i = start; i < std::min<std::uint64_t>(all.size(), start + 9); ++i, c.advance()) {
        REQUIRE(!c.done());
        CHECK(Arrangement(std::vector<int>(c.current().begin(), c.current().end())) == all[i]);
        CHECK(unrank_arrangement(n, i) == all[i]);
      }
    }
    CHECK(CompositionCursor(n, all.size()).done());
    CHECK_THROWS_AS(unrank_arrangement(n, all.size()), InvalidArgument);
  }
}

TEST_CASE("mode_assignment") {
  CHECK(mode_assignment(Arrangement({2, 1, 0, 2, 0})).ports == std::vector<int>{1, 1, 2, 4, 4});
  CHECK(mode_assignment(Arrangement::coincident(6)).ports == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(mode_assignment(Arrangement({0, 0, 3})).ports == std::vector<int>{3, 3, 3});

  for (const auto& a : enumerate_arrangements(6)) {
    const auto d = mode_assignment(a).ports;
    REQUIRE(d.size() == 6);
    CHECK(std::is_sorted(d.begin(), d.end()));
    for (int port = 1; port <= 6; ++port) CHECK(std::count(d.begin(), d.end(), port) == a[port - 1]);
  }
}

TEST_CASE("classical_probability") {
  CHECK(classical_probability(Arrangement({1, 1})) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(classical_probability(Arrangement({0, 2})) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(classical_probability(Arrangement({2, 1, 0, 2, 0})) == doctest::Approx(6.0 / 625.0).epsilon(1e-14));

  for (int n = 1; n <= 10; ++n) {
    double sum = 0.0;
    for_each_arrangement(n, [&](std::span<const int> s) { sum += classical_probability(Arrangement({s.begin(), s.end()})); });
    CHECK(std::abs(sum - 1.0) < 1e-12);
  }
}

TEST_CASE("classical_probability against multinomial sampling") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> port(0, 4);
  constexpr int kTrials = 400000;
  int hits = 0;
  for (int t = 0; t < kTrials; ++t) {
    std::array<int, 5> s{};
    for (int particle = 0; particle < 5; ++particle) ++s[static_cast<std::size_t>(port(rng))];
    hits += s == std::array<int, 5>{2, 1, 0, 2, 0};
  }
  const double p = 6.0 / 625.0;
  const double sigma = std::sqrt(p * (1 - p) / kTrials);
  CHECK(std::abs(static_cast<double>(hits) / kTrials - p) < 5 * sigma);
}

TEST_CASE("suppression_q") {
  CHECK(suppression_q(Arrangement({2, 1, 2, 1, 0, 0})) == 2);
  CHECK(suppression_q(Arrangement({0, 1, 2, 0, 2, 1})) == 0);
  CHECK(suppression_q(Arrangement::coincident(4)) == 2);
  for (int n = 2; n <= 14; n += 2) CHECK(suppression_q(Arrangement::coincident(n)) != 0);
}

TEST_CASE("suppression_q under the dihedral action") {
  // Shifts preserve Q; reflection maps Q to -Q mod n, so only Q != 0 is
  // invariant across the whole orbit.
  for (int n = 1; n <= 9; ++n) {
    for (const auto& a : enumerate_arrangements(n)) {
      const int q = suppression_q(a);
      for (int k = 1; k < n; ++k) CHECK(suppression_q(shift(a, k)) == q);
      CHECK(suppression_q(reversed(a)) == (n - q) % n);
      for (const auto& image : orbit_members(a)) CHECK((suppression_q(image) != 0) == (q != 0));
    }
  }
  const Arrangement a({0, 1, 2});
  CHECK(suppression_q(a) == 2);
  CHECK(suppression_q(reversed(a)) == 1);
}

TEST_CASE("quantum_orbit") {
  const auto s1 = quantum_orbit(Arrangement({2, 1, 2, 1, 0, 0}));
  const auto s2 = quantum_orbit(Arrangement({0, 1, 2, 0, 2, 1}));
  CHECK(s1.representative != s2.representative);

  const Arrangement a({0, 1, 2, 0, 2, 1});
  for (int k = 0; k < 6; ++k) CHECK(quantum_orbit(shift(a, k)).representative == s2.representative);
  CHECK(quantum_orbit(reversed(a)).representative == s2.representative);

  std::set<Arrangement> reps;
  for (const auto& x : enumerate_arrangements(4)) reps.insert(quantum_orbit(x).representative);
  CHECK(reps.size() == 8);

  CHECK(quantum_orbit(Arrangement({0, 0, 3})).representative == Arrangement({0, 0, 3}));
  CHECK(quantum_orbit(Arrangement({3, 0, 0})).orbit_size == 3);
  CHECK(quantum_orbit(Arrangement::coincident(5)).orbit_size == 1);
}

TEST_CASE("is_canonical and orbit_size agree with explicit orbits") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& a : enumerate_arrangements(n)) {
      const auto orbit = quantum_orbit(a);
      CHECK(is_canonical(a.occupations()) == (orbit.representative == a));
      CHECK((2 * n) % orbit.orbit_size == 0);
      if (orbit.representative == a) CHECK(orbit_size(a.occupations()) == orbit.orbit_size);
    }
  }
}

TEST_CASE("enumerate_quantum_classes reproduces the class counts") {
  const std::map<int, std::size_t> expected{{2, 2},     {3, 3},     {4, 8},      {5, 16},    {6, 50},
                                            {7, 133},   {8, 440},   {9, 1387},   {10, 4752}, {11, 16159},
                                            {12, 56822}, {13, 200474}, {14, 718146}};
  for (const auto& [n, count] : expected) {
    const auto classes = enumerate_quantum_classes(n);
    CHECK(classes.size() == count);
    std::uint64_t members = 0;
    for (const auto& c : classes) members += static_cast<std::uint64_t>(c.orbit_size);
    CHECK(members == arrangement_count(n));
    CHECK(std::is_sorted(classes.begin(), classes.end(),
                         [](const OrbitClass& x, const OrbitClass& y) { return x.representative < y.representative; }));
  }
}

TEST_CASE("enumerate_quantum_classes is independent of worker count") {
  const auto one = enumerate_quantum_classes(10, 1);
  const auto four = enumerate_quantum_classes(10, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].representative == four[i].representative);
    CHECK(one[i].orbit_size == four[i].orbit_size);
  }
}

TEST_CASE("enumerate_classical_classes") {
  CHECK_THROWS_AS(enumerate_classical_classes(0), InvalidArgument);
  const std::map<int, std::size_t> expected{{2, 2},  {3, 3},  {4, 5},  {5, 7},  {6, 11},  {7, 15},  {8, 22},
                                            {9, 30}, {10, 42}, {11, 56}, {12, 77}, {13, 101}, {14, 135}};
  for (const auto& [n, count] : expected) {
    const auto parts = enumerate_classical_classes(n);
    CHECK(parts.size() == count);
    CHECK(partition_count(n, n) == count);
    std::set<std::vector<int>> distinct;
    for (const auto& p : parts) {
      int sum = 0;
      for (int x : p.parts) {
        CHECK(x > 0);
        sum += x;
      }
      CHECK(sum == n);
      CHECK(std::is_sorted(p.parts.begin(), p.parts.end(), std::greater<>()));
      distinct.insert(p.parts);
    }
    CHECK(distinct.size() == count);
  }
  CHECK(classical_class(Arrangement({2, 1, 0, 2, 0})).parts == std::vector<int>{2, 2, 1});
}
