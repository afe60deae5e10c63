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

#include <array>
#include <string>
#include <string_view>

#include "gea/core.hpp"
#include "gea/enumerate.hpp"
#include "oracle.hpp"

namespace gea::testing {

inline Element el(const Gea& p, std::string_view name)
{
    const auto e = p.find(name);
    if (!e)
        throw StructureError("test refers to unknown element '" + std::string(name) + "'");
    return *e;
}

inline Element el(const Ea& e, std::string_view name) { return el(e.gea(), name); }

/// Copy of the sum table as plain ints for the brute-force oracles.
inline oracle::Table table_of(const Gea& p)
{
    oracle::Table t(p.size(), std::vector<int>(p.size(), -1));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (const auto s = p.sum(element_at(i), element_at(j)))
                t[i][j] = static_cast<int>(s->index);
    return t;
}

inline GeaPtr gea_of(const std::string& name, const std::vector<std::string>& names,
                     const std::vector<std::array<const char*, 3>>& sums)
{
    SumTable table(names.size());
    Gea shape(name, names, element_at(0), SumTable(names.size()));
    for (const auto& [a, b, c] : sums)
        table.define(el(shape, a), el(shape, b), el(shape, c));
    return share(Gea(name, names, element_at(0), table));
}

inline const std::vector<GeaPtr>& labeled_geas(std::size_t n)
{
    static std::vector<std::vector<GeaPtr>> cache(kEnumerationLimit + 1);
    auto& slot = cache.at(n);
    if (slot.empty())
        slot = enumerate_geas(n, EnumerationMode::labeled);
    return slot;
}

inline const std::vector<Ea>& labeled_eas(std::size_t n)
{
    static std::vector<std::vector<Ea>> cache(kEnumerationLimit + 1);
    auto& slot = cache.at(n);
    if (slot.empty())
        slot = enumerate_eas(n, EnumerationMode::labeled);
    return slot;
}

} // namespace gea::testing
