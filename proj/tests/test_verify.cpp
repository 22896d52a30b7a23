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

#include <set>

#include "bellport/error.hpp"
#include "bellport/scattering.hpp"
#include "bellport/verify.hpp"

using namespace bellport;
using namespace bellport::verify;

TEST_CASE("parse_suite") {
  CHECK(parse_suite("law") == Suite::Law);
  CHECK(parse_suite("oracle") == Suite::Oracle);
  CHECK(parse_suite("appendix") == Suite::Appendix);
  CHECK(parse_suite("all") == Suite::All);
  CHECK_THROWS_AS(parse_suite("Law"), InvalidArgument);
  CHECK_THROWS_AS(parse_suite(""), InvalidArgument);
}

TEST_CASE("suite size limits") {
  CHECK_THROWS_AS(run_suite(Suite::Law, 0), InvalidArgument);
  CHECK_THROWS_AS(run_suite(Suite::Law, 13), InvalidArgument);
  CHECK_THROWS_AS(run_suite(Suite::Oracle, 9), InvalidArgument);
  CHECK_THROWS_AS(run_suite(Suite::All, 9), InvalidArgument);
}

TEST_CASE("all suites pass for small n") {
  for (int n = 1; n <= 6; ++n) {
    const auto results = run_suite(Suite::All, n);
    CHECK(results.size() == 14);
    for (const auto& r : results) CHECK_MESSAGE(r.passed, format_result(r));
    CHECK(all_passed(results));
  }
}

TEST_CASE("law suite counts every Q != 0 arrangement") {
  SuiteOptions opt;
  opt.threads = 2;
  const auto results = run_suite(Suite::Law, 5, opt);
  std::size_t expected = 0;
  for (int m = 1; m <= 5; ++m)
    for (const auto& a : combinatorics::enumerate_arrangements(m)) expected += combinatorics::suppression_q(a) != 0;
  for (const auto& r : results)
    if (r.name == "law_float" || r.name == "law_exact") CHECK(r.cases == expected);
}

TEST_CASE("corollary families") {
  using combinatorics::Arrangement;
  CHECK(corollary_applies(Corollary::EvenCoincident, 6));
  CHECK_FALSE(corollary_applies(Corollary::EvenCoincident, 7));
  CHECK(corollary_applies(Corollary::OddNMinusOneOccupied, 7));
  CHECK_FALSE(corollary_applies(Corollary::OddNMinusOneOccupied, 1));
  CHECK(corollary_applies(Corollary::PrimeTwoPorts, 2));
  CHECK(corollary_applies(Corollary::PrimeTwoPorts, 13));
  CHECK_FALSE(corollary_applies(Corollary::PrimeTwoPorts, 9));

  for (int n = 2; n <= 9; ++n) {
    // brute-force filter over all compositions
    std::set<Arrangement> odd, two;
    for (const auto& a : combinatorics::enumerate_arrangements(n)) {
      if (a.occupied_ports() == n - 1) odd.insert(a);
      if (a.occupied_ports() == 2) two.insert(a);
    }
    const auto fam_odd = corollary_family(Corollary::OddNMinusOneOccupied, n);
    const auto fam_two = corollary_family(Corollary::PrimeTwoPorts, n);
    CHECK(std::set<Arrangement>(fam_odd.begin(), fam_odd.end()) == odd);
    CHECK(fam_odd.size() == odd.size());
    CHECK(std::set<Arrangement>(fam_two.begin(), fam_two.end()) == two);
    CHECK(fam_two.size() == static_cast<std::size_t>(n * (n - 1) / 2 * (n - 1)));
  }
  CHECK(corollary_family(Corollary::EvenCoincident, 4).size() == 1);
}

TEST_CASE("corollaries hold at the Q level and numerically") {
  for (int n = 2; n <= 14; ++n) {
    for (auto c : {Corollary::EvenCoincident, Corollary::OddNMinusOneOccupied, Corollary::PrimeTwoPorts}) {
      const auto check = check_corollary(c, n);
      CHECK_FALSE(check.counterexample.has_value());
      CHECK((check.cases > 0) == corollary_applies(c, n));
    }
  }
  for (int n = 2; n <= 8; ++n) {
    const auto u = scattering::fourier_matrix(n);
    for (auto c : {Corollary::EvenCoincident, Corollary::OddNMinusOneOccupied, Corollary::PrimeTwoPorts}) {
      if (!corollary_applies(c, n)) continue;
      for (const auto& a : corollary_family(c, n)) CHECK(scattering::quantum_probability(a, u) < 1e-12);
    }
  }
}

TEST_CASE("the corollaries are not vacuous") {
  // odd n: n - 2 occupied ports is allowed for some arrangement, e.g. (0,1,2,0,2) at n = 5
  CHECK(combinatorics::suppression_q(combinatorics::Arrangement({0, 0, 1, 3, 1})) == 0);
  // composite n = 4: two occupied ports can survive, (0,2,0,2)
  CHECK(combinatorics::suppression_q(combinatorics::Arrangement({0, 2, 0, 2})) == 0);
  // odd n: coincident is allowed
  CHECK(combinatorics::suppression_q(combinatorics::Arrangement::coincident(5)) == 0);
}

TEST_CASE("format_result") {
  PropertyResult ok{"p"};
  ok.cases = 3;
  CHECK(format_result(ok) == "PASS p (3 cases)");
  ok.note = "max 0.1";
  CHECK(format_result(ok) == "PASS p (3 cases, max 0.1)");
  PropertyResult bad{"q", false, 7, combinatorics::Arrangement({1, 0, 2})};
  CHECK(format_result(bad) == "FAIL q: counterexample 1,0,2");
}
