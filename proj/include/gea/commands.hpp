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

#include "gea/core.hpp"
#include "gea/morphisms.hpp"

namespace gea {

/// Result of one workbench command: status 0 when everything checked
/// holds, 1 when some checked property fails. Malformed input is reported
/// by exception instead.
struct CommandOutput {
    int status = 0;
    std::string text;
    /// Number of items listed, for commands that list (hom, enumerate).
    std::size_t count = 0;
};

CommandOutput run_check(const Algebra& algebra);
CommandOutput run_unitize(const Algebra& algebra, bool dot);
CommandOutput run_order(const Algebra& algebra, bool dot);
CommandOutput run_hom(const Algebra& source, const Algebra& target, MorphismKind kind, bool count_only,
                      bool full_only);

struct LawOptions {
    std::optional<Algebra> triangles_with;
    bool monad = false;
    bool em = false;
    std::optional<std::filesystem::path> naturality;
    bool json = false;
};

/// With no selection flags every applicable law family is checked.
CommandOutput run_laws(const Algebra& algebra, const LawOptions& options);

CommandOutput run_state_extend(const Algebra& algebra, const std::filesystem::path& map_file);
CommandOutput run_ideals(const Algebra& algebra, bool probe);

struct EnumerateOptions {
    std::size_t size = 1;
    MorphismKind kind = MorphismKind::gea;
    bool up_to_iso = false;
    std::optional<std::filesystem::path> emit_dir;
};

CommandOutput run_enumerate(const EnumerateOptions& options);

enum class TransposeDirection { to_ea, to_gea };

/// to-ea: the morphism file describes g : P → U(E) with P = `algebra`.
/// to-gea: it describes f : F(P) → E. Its `target:` line names E; a
/// missing `source:` line defaults to P, respectively F(P).
CommandOutput run_transpose(const Algebra& algebra, const std::filesystem::path& morphism_file,
                            TransposeDirection direction);

} // namespace gea
