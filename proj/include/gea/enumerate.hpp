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
#include <functional>
#include <vector>

#include "gea/core.hpp"

namespace gea {

inline constexpr std::size_t kEnumerationLimit = 6;

enum class EnumerationMode { labeled, up_to_isomorphism };

/// Element names used by the enumerator: 0, a, b, c, ...
std::vector<std::string> enumeration_names(std::size_t n);

/// Visits every GEA on {0, ..., n-1} with 0 as zero, in search order. In
/// up-to-isomorphism mode only tables that are least under relabeling of
/// the nonzero elements are visited. Throws LimitError when n is 0 or
/// exceeds kEnumerationLimit.
void for_each_gea(std::size_t n, EnumerationMode mode, const std::function<void(const GeaPtr&)>& visit);

std::vector<GeaPtr> enumerate_geas(std::size_t n, EnumerationMode mode);

/// The GEAs from enumerate_geas that have a greatest element.
std::vector<Ea> enumerate_eas(std::size_t n, EnumerationMode mode);

/// Whether a bijective full morphism exists (zero to zero, sums to sums).
bool is_isomorphic(const Gea& a, const Gea& b);
bool is_isomorphic(const Ea& a, const Ea& b);

} // namespace gea
