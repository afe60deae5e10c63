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

#include <array>
#include <charconv>

#include "gea/core.hpp"
#include "gea/unitization.hpp"

namespace gea {

namespace {

Gea make(std::string name, std::vector<std::string> names,
         std::initializer_list<std::array<const char*, 3>> sums)
{
    Gea skeleton(name, names, element_at(0), SumTable(names.size()));
    SumTable table(names.size());
    for (const auto& [a, b, c] : sums)
        table.define(*skeleton.find(a), *skeleton.find(b), *skeleton.find(c));
    return Gea(std::move(name), std::move(names), element_at(0), std::move(table));
}

Algebra chain(std::size_t n)
{
    if (n + 1 > kCarrierLimit)
        throw LimitError("chain(" + std::to_string(n) + ") exceeds the carrier limit");
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= n; ++i)
        names.push_back(std::to_string(i));
    SumTable sums(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; i + j <= n; ++j)
            sums.define(element_at(i), element_at(j), element_at(i + j));
    Gea g("chain(" + std::to_string(n) + ")", std::move(names), element_at(0), std::move(sums));
    return {share(std::move(g)), element_at(n)};
}

Algebra boolean(std::size_t atoms)
{
    if (atoms > 6)
        throw LimitError("boolean(" + std::to_string(atoms) + ") exceeds the carrier limit");
    const std::size_t size = std::size_t{1} << atoms;
    std::vector<std::string> names;
    for (std::size_t mask = 0; mask < size; ++mask) {
        std::string name;
        for (std::size_t bit = 0; bit < atoms; ++bit)
            if (mask & (std::size_t{1} << bit))
                name += static_cast<char>('a' + bit);
        names.push_back(name.empty() ? "0" : name);
    }
    SumTable sums(size);
    for (std::size_t x = 0; x < size; ++x)
        for (std::size_t y = 0; y < size; ++y)
            if ((x & y) == 0)
                sums.define(element_at(x), element_at(y), element_at(x | y));
    Gea g("boolean(" + std::to_string(atoms) + ")", std::move(names), element_at(0), std::move(sums));
    return {share(std::move(g)), element_at(size - 1)};
}

std::optional<std::size_t> parameter(std::string_view name, std::string_view family)
{
    if (name.size() < family.size() + 3 || name.substr(0, family.size()) != family
        || name[family.size()] != '(' || name.back() != ')')
        return std::nullopt;
    const auto digits = name.substr(family.size() + 1, name.size() - family.size() - 2);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size())
        return std::nullopt;
    return value;
}

Gea fig1()
{
    return make("fig1", {"0", "a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "b", "d"}});
}

} // namespace

std::vector<std::string> builtin_names()
{
    return {"fig1", "fig1_unitized", "trivial", "two", "two_chain_gea", "two_squared"};
}

Algebra builtin(std::string_view name)
{
    if (name == "fig1")
        return {share(fig1()), std::nullopt};
    if (name == "fig1_unitized") {
        Ea e = unitize(fig1());
        return {e.forget(), e.top()};
    }
    if (name == "trivial")
        return {share(make("trivial", {"0"}, {})), std::nullopt};
    if (name == "two") {
        Algebra two = chain(1);
        return {share(two.gea->renamed("two")), two.top};
    }
    if (name == "two_chain_gea")
        return {share(make("two_chain_gea", {"0", "x"}, {})), std::nullopt};
    if (name == "two_squared")
        return {share(make("two_squared", {"0", "p", "q", "1"}, {{"p", "q", "1"}})), element_at(3)};
    if (const auto n = parameter(name, "chain"))
        return chain(*n);
    if (const auto n = parameter(name, "boolean"))
        return boolean(*n);
    throw StructureError("unknown builtin algebra '" + std::string(name) + "'");
}

} // namespace gea
