// Copyright 2026 The oikomplex Authors
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

#ifndef OIKOMPLEX_ERROR_HPP
#define OIKOMPLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace oikomplex {

/// Base class of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different widths (or compose along mismatched widths).
class width_mismatch : public error {
public:
    using error::error;
};

class composition_error : public width_mismatch {
public:
    using width_mismatch::width_mismatch;
};

/// Operands are defined over different algebra signatures.
class algebra_mismatch : public error {
public:
    using error::error;
};

/// A precondition on the shape of an input was violated.
class invalid_input : public error {
public:
    using error::error;
};

/// Malformed text or JSON input. `where` names the offending field or line.
class parse_error : public error {
public:
    parse_error(const std::string &what, std::string where = {})
        : error(where.empty() ? what : where + ": " + what), where_(std::move(where))
    {
    }
    const std::string &where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace oikomplex

#endif
