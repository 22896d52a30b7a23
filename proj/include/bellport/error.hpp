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

#include <stdexcept>
#include <string>

namespace bellport {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition or size violation on an input value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed arrangement literal. `token()` is the offending piece of input.
class ParseError : public InvalidArgument {
 public:
  ParseError(const std::string& message, std::string token)
      : InvalidArgument(message), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Integer coefficients left the representable range of the exact kernel.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Estimated or elapsed work exceeded the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace bellport
