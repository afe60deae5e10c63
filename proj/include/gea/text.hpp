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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gea/core.hpp"
#include "gea/morphisms.hpp"
#include "gea/states.hpp"

namespace gea {

/// Line grammar, '#' starts a comment:
///
///     algebra NAME
///     elements: e1 e2 ...
///     zero: e
///     top: e          (optional)
///     sum: a b c      (a ⊕ b = c)
///
/// Sums are symmetrized and zero-sums inserted. Throws ParseError.
Algebra parse_algebra(std::string_view text);

/// Canonical form: sums over nonzero pairs a ≤ b by index, in (a, b) order.
std::string serialize_algebra(const Algebra& algebra);

/// Hasse diagram of the derived order, covering edges only.
std::string emit_dot(const Algebra& algebra);

/// One "cover: a b" line per covering pair.
std::string format_covers(const Gea& p);

/// "builtin:NAME" or a file path, relative paths resolved against base_dir.
Algebra load_algebra(std::string_view location, const std::filesystem::path& base_dir = {});

std::string read_text_file(const std::filesystem::path& path);

/// Morphism grammar:
///
///     morphism NAME   (optional)
///     source: LOCATION    (optional, builtin:NAME or path)
///     target: LOCATION    (optional)
///     kind: gea|ea    (optional, default gea)
///     map: a -> x
struct MorphismFile {
    std::string name;
    std::optional<std::string> source;
    std::optional<std::string> target;
    MorphismKind kind = MorphismKind::gea;
    std::vector<std::pair<std::string, std::string>> map;
    std::vector<std::size_t> map_lines;
};

MorphismFile parse_morphism(std::string_view text);

/// Resolves element names. Throws StructureError when the map is not total
/// or names an unknown element; an EA-kind file needs both endpoints to
/// carry a top.
Morphism bind_morphism(const MorphismFile& file, const Algebra& source, const Algebra& target);

std::string serialize_morphism(const Morphism& f, std::string_view name = {});

/// "0->0 a->p ..." on one line.
std::string format_mapping(const Morphism& f);

/// Lines "val: a = 1/4"; the zero may be omitted and defaults to 0.
AdditiveMap parse_additive_map(std::string_view text, const GeaPtr& p);

std::string serialize_values(const Gea& p, const std::vector<Rational>& values);

/// Exact literal "p/q" or an integer.
Rational parse_rational(std::string_view text);

} // namespace gea
