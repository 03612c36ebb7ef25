// Copyright 2026 The qgf4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgf4 {

/// Raised when an operation's documented precondition does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would visit more words than the caller allowed.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string &what) : std::runtime_error(what) {
    }
};

/// Raised by the code-file reader; carries a 1-based line and column.
struct ParseError : std::runtime_error {
    size_t line;
    size_t column;
    ParseError(const std::string &what, size_t line, size_t column)
        : std::runtime_error(
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {
    }
};

/// Default enumeration budget, in codewords.
constexpr uint64_t DEFAULT_BUDGET = uint64_t{1} << 28;

namespace detail {

inline void require(bool ok, const char *what) {
    if (!ok) {
        throw PreconditionError(what);
    }
}

}  // namespace detail

}  // namespace qgf4
