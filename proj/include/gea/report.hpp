/*
 *   Copyright 2026 The gea-workbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "gea/element.hpp"

namespace gea {

/// Base of all errors raised by the library. Axiom violations are not
/// errors; they are reported through `Report`.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: unknown element, non-total map, conflicting sum.
class StructureError : public Error {
public:
    using Error::Error;
};

/// Text input that does not follow the line grammar.
class ParseError : public StructureError {
public:
    ParseError(std::size_t line, const std::string& message)
        : StructureError("line " + std::to_string(line) + ": " + message), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An exhaustive scan would exceed the configured size guard.
class LimitError : public Error {
public:
    using Error::Error;
};

/// One law checked over a finite set of instances.
struct Check {
    std::string law;
    std::size_t instances = 0;
    std::size_t failures = 0;
    /// Lexicographically least failing instance (empty when the law holds).
    std::vector<Element> witness;
    /// Human readable rendering of the witness, using display names.
    std::string detail;

    bool holds() const noexcept { return failures == 0; }
};

class Report {
public:
    Report() = default;
    explicit Report(std::string subject) : subject_(std::move(subject)) {}

    const std::string& subject() const noexcept { return subject_; }
    const std::deque<Check>& checks() const noexcept { return checks_; }

    bool ok() const noexcept;
    std::size_t failure_count() const noexcept;
    /// Null when no check with that law name exists.
    const Check* find(const std::string& law) const noexcept;

    Check& add(std::string law);
    void append(const Report& other);

private:
    std::string subject_;
    // deque: references returned by add() stay valid across later adds.
    std::deque<Check> checks_;
};

/// Raised when an operation requires a valid structure and gets one that
/// fails some law; carries the failing report.
class AxiomError : public Error {
public:
    AxiomError(const std::string& message, Report report)
        : Error(message), report_(std::move(report))
    {
    }

    const Report& report() const noexcept { return report_; }

private:
    Report report_;
};

/// Line-oriented rendering: one PASS/FAIL line per check.
std::string format_report(const Report& report);

} // namespace gea
