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

// Property suites behind `bellport verify`. Each property is checked
// exhaustively for every particle number m up to the requested n.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bellport/combinatorics.hpp"

namespace bellport::verify {

enum class Suite { Law, Oracle, Appendix, All };

/// Throws InvalidArgument for unknown names.
Suite parse_suite(std::string_view name);

/// Largest n each suite accepts.
int max_n(Suite suite);

struct PropertyResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::optional<combinatorics::Arrangement> counterexample{};
  std::string note{};
};

struct SuiteOptions {
  int threads = 1;
  double tolerance = 1e-12;
  unsigned seed = 20100;
};

/// Corollaries of the suppression law that constrain whole event families.
enum class Corollary {
  EvenCoincident,        // even n: (1, ..., 1) is suppressed
  OddNMinusOneOccupied,  // odd n: exactly n - 1 occupied ports is suppressed
  PrimeTwoPorts,         // prime n: exactly two occupied ports is suppressed
};

bool corollary_applies(Corollary c, int n);

/// Every arrangement of n particles in the corollary's event family.
std::vector<combinatorics::Arrangement> corollary_family(Corollary c, int n);

struct CorollaryCheck {
  std::size_t cases = 0;
  std::optional<combinatorics::Arrangement> counterexample;  // first member with Q == 0
};

CorollaryCheck check_corollary(Corollary c, int n);

/// Throws InvalidArgument when n is outside [1, max_n(suite)].
std::vector<PropertyResult> run_suite(Suite suite, int n, const SuiteOptions& options = {});

bool all_passed(const std::vector<PropertyResult>& results);

/// "PASS name (cases)" or "FAIL name: counterexample 1,0,2".
std::string format_result(const PropertyResult& r);

}  // namespace bellport::verify
