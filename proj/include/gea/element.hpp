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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace gea {

/// Index of a carrier element. Indices of one algebra are 0..size-1.
struct Element {
    std::uint32_t index = 0;

    constexpr auto operator<=>(const Element&) const = default;
};

constexpr Element element_at(std::size_t i) noexcept
{
    return Element{static_cast<std::uint32_t>(i)};
}

} // namespace gea

template <>
struct std::hash<gea::Element> {
    std::size_t operator()(const gea::Element& e) const noexcept { return e.index; }
};
