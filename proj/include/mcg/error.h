// Copyright 2026 The MCG Authors. All rights reserved.
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

#ifndef MCG_ERROR_H_
#define MCG_ERROR_H_

#include <stdexcept>
#include <string>

namespace mcg {

// Base class of every error raised by the library. Each subclass maps to a
// stable process exit code used by the command-line front end.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual int ExitCode() const = 0;
};

// Malformed or out-of-domain input supplied by a caller.
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what) {}
  int ExitCode() const override { return 2; }
};

// A computation was refused because it would exceed its configured size
// budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
  int ExitCode() const override { return 3; }
};

// An internal consistency check failed; indicates a bug rather than bad
// input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
  int ExitCode() const override { return 4; }
};

}  // namespace mcg

#define MCG_CHECK(cond)                                                  \
  do {                                                                   \
    if (!(cond)) {                                                       \
      throw ::mcg::InternalError(std::string(__FILE__) + ":" +           \
                                 std::to_string(__LINE__) +              \
                                 ": check failed: " #cond);              \
    }                                                                    \
  } while (false)

#define MCG_REQUIRE(cond, message)                                       \
  do {                                                                   \
    if (!(cond)) throw ::mcg::InvalidInput(message);                     \
  } while (false)

#endif  // MCG_ERROR_H_
