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

// Command-line front end. Everything goes through the C interface; this
// file only parses arguments and maps statuses to exit codes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "gea/gea_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct AlgebraDeleter {
    void operator()(gea_algebra* a) const { gea_algebra_free(a); }
};
using AlgebraHandle = std::unique_ptr<gea_algebra, AlgebraDeleter>;

struct StringDeleter {
    void operator()(char* s) const { gea_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

AlgebraHandle load(const std::string& location)
{
    gea_algebra* raw = nullptr;
    if (const gea_status s = gea_algebra_load(location.c_str(), &raw); s != GEA_OK)
        throw UsageError(location + ": " + gea_last_error());
    return AlgebraHandle(raw);
}

// Prints the text and turns the status into an exit code.
int report(gea_status status, char* text, std::ostream& out = std::cout)
{
    OwnedString owned(text);
    if (owned)
        out << owned.get();
    switch (status) {
    case GEA_OK: return kExitOk;
    case GEA_FAILED: return kExitFailed;
    default:
        std::cerr << "error: " << gea_last_error() << "\n";
        return kExitUsage;
    }
}

gea_kind parse_kind(const std::string& kind)
{
    return kind == "ea" ? GEA_KIND_EA : GEA_KIND_GEA;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite generalized effect algebra workbench"};
    app.require_subcommand(1);

    std::string file, other, out_path, with, naturality, kind = "gea", emit_dir, direction, map_file;
    bool dot = false, count = false, full_only = false, monad = false, em = false, json = false;
    bool probe = false, up_to_iso = false;
    std::size_t size = 0;
    const auto kind_check = CLI::IsMember({"gea", "ea"});

    auto* check = app.add_subcommand("check", "Validate the GEA/EA axioms");
    check->add_option("file", file, "Algebra file or builtin:NAME")->required();

    auto* unitize = app.add_subcommand("unitize", "Print the unitization F(P)");
    unitize->add_option("file", file)->required();
    unitize->add_option("-o,--output", out_path, "Write to a file instead of standard output");
    unitize->add_flag("--dot", dot, "Emit the Hasse diagram as DOT");

    auto* order = app.add_subcommand("order", "Print the covering pairs of the derived order");
    order->add_option("file", file)->required();
    order->add_flag("--dot", dot, "Emit the Hasse diagram as DOT");

    auto* hom = app.add_subcommand("hom", "Enumerate morphisms SRC -> DST");
    hom->add_option("src", file)->required();
    hom->add_option("dst", other)->required();
    hom->add_option("--kind", kind)->check(kind_check);
    hom->add_flag("--count", count, "Print only the number of morphisms");
    hom->add_flag("--full-only", full_only, "Keep only full morphisms");

    auto* laws = app.add_subcommand("laws", "Check adjunction, monad and Eilenberg-Moore laws");
    laws->add_option("file", file)->required();
    laws->add_option("--triangles", with, "Effect algebra for the right triangle identity");
    laws->add_flag("--monad", monad);
    laws->add_flag("--em", em);
    laws->add_option("--naturality", naturality, "Morphism file for a naturality square");
    laws->add_flag("--json", json, "Machine-readable report");

    auto* state = app.add_subcommand("state", "Additive maps and states");
    state->require_subcommand(1);
    auto* extend = state->add_subcommand("extend", "Extend an additive map on P to a state on F(P)");
    extend->add_option("alg", file)->required();
    extend->add_option("map", map_file)->required();

    auto* ideals = app.add_subcommand("ideals", "List ideals");
    ideals->add_option("file", file)->required();
    ideals->add_flag("--probe", probe, "Compare with the hom-sets into 2^2");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate all algebras of a given size");
    enumerate->add_option("n", size)->required();
    enumerate->add_option("--kind", kind)->check(kind_check);
    enumerate->add_flag("--up-to-iso", up_to_iso);
    enumerate->add_option("--emit", emit_dir, "Write each algebra to DIR/NAME.alg");

    auto* transpose = app.add_subcommand("transpose", "Transpose a morphism across the adjunction");
    transpose->add_option("alg", file)->required();
    transpose->add_option("mor", other)->required();
    transpose->add_option("--direction", direction)->required()->check(CLI::IsMember({"to-ea", "to-gea"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (check->parsed()) {
            const auto a = load(file);
            char* text = nullptr;
            const gea_status status = gea_check(a.get(), &text);
            return report(status, text);
        }
        if (unitize->parsed()) {
            const auto a = load(file);
            char* text = nullptr;
            const gea_status s = gea_unitize_text(a.get(), dot ? 1 : 0, &text);
            if (s == GEA_OK && !out_path.empty()) {
                OwnedString owned(text);
                std::ofstream(out_path, std::ios::binary) << owned.get();
                return kExitOk;
            }
            return report(s, text);
        }
        if (order->parsed()) {
            const auto a = load(file);
            char* text = nullptr;
            const gea_status status = gea_order_text(a.get(), dot ? 1 : 0, &text);
            return report(status, text);
        }
        if (hom->parsed()) {
            const auto src = load(file);
            const auto dst = load(other);
            char* text = nullptr;
            const gea_status status = gea_hom(src.get(), dst.get(), parse_kind(kind), count, full_only, nullptr, &text);
            return report(status, text);
        }
        if (laws->parsed()) {
            const auto a = load(file);
            AlgebraHandle triangles;
            if (!with.empty())
                triangles = load(with);
            const gea_laws_options options{triangles.get(), monad, em,
                                           naturality.empty() ? nullptr : naturality.c_str(), json};
            char* text = nullptr;
            const gea_status status = gea_laws(a.get(), &options, &text);
            return report(status, text);
        }
        if (extend->parsed()) {
            const auto a = load(file);
            char* text = nullptr;
            const gea_status status = gea_state_extend(a.get(), map_file.c_str(), &text);
            return report(status, text);
        }
        if (ideals->parsed()) {
            const auto a = load(file);
            char* text = nullptr;
            const gea_status status = gea_ideals(a.get(), probe, &text);
            return report(status, text);
        }
        if (enumerate->parsed()) {
            char* text = nullptr;
            const gea_status status = gea_enumerate(size, parse_kind(kind), up_to_iso,
                                        emit_dir.empty() ? nullptr : emit_dir.c_str(), nullptr, &text);
            return report(status, text);
        }
        if (transpose->parsed()) {
            const auto a = load(file);
            char* text = nullptr;
            const gea_status status = gea_transpose(a.get(), other.c_str(), direction == "to-ea" ? GEA_TO_EA : GEA_TO_GEA,
                                        &text);
            return report(status, text);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
