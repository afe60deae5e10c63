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

#include "gea/report.hpp"

namespace gea {

bool Report::ok() const noexcept
{
    return failure_count() == 0;
}

std::size_t Report::failure_count() const noexcept
{
    std::size_t total = 0;
    for (const auto& c : checks_)
        total += c.failures;
    return total;
}

const Check* Report::find(const std::string& law) const noexcept
{
    for (const auto& c : checks_)
        if (c.law == law)
            return &c;
    return nullptr;
}

Check& Report::add(std::string law)
{
    Check check;
    check.law = std::move(law);
    checks_.push_back(std::move(check));
    return checks_.back();
}

void Report::append(const Report& other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

std::string format_report(const Report& report)
{
    std::string out;
    if (!report.subject().empty())
        out += "# " + report.subject() + "\n";
    for (const auto& c : report.checks()) {
        if (c.holds()) {
            out += "PASS " + c.law + " (" + std::to_string(c.instances) + " instances)\n";
        } else {
            out += "FAIL " + c.law + " (" + std::to_string(c.failures) + " of "
                   + std::to_string(c.instances) + " instances)";
            if (!c.detail.empty())
                out += ": " + c.detail;
            out += "\n";
        }
    }
    return out;
}

} // namespace gea
