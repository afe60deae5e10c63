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

#include "gea/gea_c.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "gea/commands.hpp"
#include "gea/core.hpp"
#include "gea/enumerate.hpp"
#include "gea/morphisms.hpp"
#include "gea/text.hpp"
#include "gea/unitization.hpp"

struct gea_algebra {
    gea::Algebra value;
};

struct gea_morphism {
    gea::Morphism value;
};

namespace {

thread_local std::string last_error;

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** out, const std::string& text)
{
    if (out)
        *out = duplicate(text);
}

// Runs `body`, translating library exceptions into status codes. An
// AxiomError becomes GEA_FAILED with its report written to `out`.
template <typename Body>
gea_status guarded(char** out, Body&& body) noexcept
{
    if (out)
        *out = nullptr;
    last_error.clear();
    try {
        return body();
    } catch (const gea::ParseError& e) {
        last_error = e.what();
        return GEA_ERR_PARSE;
    } catch (const gea::AxiomError& e) {
        last_error = e.what();
        set_out(out, gea::format_report(e.report()) + e.what() + "\n");
        return GEA_FAILED;
    } catch (const gea::LimitError& e) {
        last_error = e.what();
        return GEA_ERR_LIMIT;
    } catch (const gea::StructureError& e) {
        last_error = e.what();
        return GEA_ERR_STRUCTURE;
    } catch (const std::exception& e) {
        last_error = e.what();
        return GEA_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown error";
        return GEA_ERR_INTERNAL;
    }
}

gea_status finish(const gea::CommandOutput& result, char** out)
{
    set_out(out, result.text);
    return result.status == 0 ? GEA_OK : GEA_FAILED;
}

gea_status argument_error(const char* what)
{
    last_error = what;
    return GEA_ERR_ARGUMENT;
}

gea_status emit(gea_algebra** out, gea::Algebra algebra)
{
    *out = new gea_algebra{std::move(algebra)};
    return GEA_OK;
}

gea_status emit(gea_morphism** out, gea::Morphism morphism)
{
    *out = new gea_morphism{std::move(morphism)};
    return GEA_OK;
}

gea::Ea ea_of(const gea_algebra* a)
{
    return gea::as_ea(a->value);
}

} // namespace

extern "C" {

const char* gea_last_error(void)
{
    return last_error.c_str();
}

void gea_string_free(char* s)
{
    std::free(s);
}

const char* gea_status_name(gea_status status)
{
    switch (status) {
    case GEA_OK: return "ok";
    case GEA_FAILED: return "failed";
    case GEA_ERR_PARSE: return "parse error";
    case GEA_ERR_STRUCTURE: return "structure error";
    case GEA_ERR_LIMIT: return "size limit exceeded";
    case GEA_ERR_ARGUMENT: return "invalid argument";
    case GEA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

gea_status gea_algebra_parse(const char* text, gea_algebra** out)
{
    if (!text || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::parse_algebra(text)); });
}

gea_status gea_algebra_load(const char* location, gea_algebra** out)
{
    if (!location || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::load_algebra(location)); });
}

gea_status gea_algebra_builtin(const char* name, gea_algebra** out)
{
    if (!name || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::builtin(name)); });
}

void gea_algebra_free(gea_algebra* algebra)
{
    delete algebra;
}

size_t gea_algebra_size(const gea_algebra* algebra)
{
    return algebra ? algebra->value.gea->size() : 0;
}

const char* gea_algebra_name(const gea_algebra* algebra)
{
    return algebra ? algebra->value.gea->name().c_str() : "";
}

const char* gea_algebra_element_name(const gea_algebra* algebra, size_t index)
{
    if (!algebra || index >= algebra->value.gea->size())
        return nullptr;
    return algebra->value.gea->element_name(gea::element_at(index)).c_str();
}

size_t gea_algebra_zero(const gea_algebra* algebra)
{
    return algebra ? algebra->value.gea->zero().index : 0;
}

int gea_algebra_top(const gea_algebra* algebra, size_t* out)
{
    if (!algebra || !algebra->value.top)
        return 0;
    if (out)
        *out = algebra->value.top->index;
    return 1;
}

int gea_algebra_sum(const gea_algebra* algebra, size_t a, size_t b, size_t* out)
{
    if (!algebra)
        return 0;
    const gea::Gea& g = *algebra->value.gea;
    if (a >= g.size() || b >= g.size())
        return 0;
    const auto s = g.sum(gea::element_at(a), gea::element_at(b));
    if (!s)
        return 0;
    if (out)
        *out = s->index;
    return 1;
}

int gea_algebra_leq(const gea_algebra* algebra, size_t a, size_t b)
{
    if (!algebra)
        return 0;
    const gea::Gea& g = *algebra->value.gea;
    if (a >= g.size() || b >= g.size())
        return 0;
    return gea::ominus(g, gea::element_at(b), gea::element_at(a)).has_value() ? 1 : 0;
}

gea_status gea_algebra_serialize(const gea_algebra* algebra, char** out)
{
    if (!algebra || !out)
        return argument_error("null argument");
    return guarded(out, [&] {
        set_out(out, gea::serialize_algebra(algebra->value));
        return GEA_OK;
    });
}

gea_status gea_algebra_dot(const gea_algebra* algebra, char** out)
{
    if (!algebra || !out)
        return argument_error("null argument");
    return guarded(out, [&] {
        set_out(out, gea::emit_dot(algebra->value));
        return GEA_OK;
    });
}

gea_status gea_algebra_unitize(const gea_algebra* algebra, gea_algebra** out)
{
    if (!algebra || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] {
        const gea::Ea e = gea::unitize(*algebra->value.gea);
        return emit(out, gea::Algebra{e.forget(), e.top()});
    });
}

gea_status gea_algebra_product(const gea_algebra* first, const gea_algebra* second, gea_algebra** out)
{
    if (!first || !second || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] {
        const gea::Ea e = gea::product_ea(ea_of(first), ea_of(second));
        return emit(out, gea::Algebra{e.forget(), e.top()});
    });
}

int gea_algebra_isomorphic(const gea_algebra* a, const gea_algebra* b)
{
    if (!a || !b)
        return 0;
    try {
        return gea::is_isomorphic(*a->value.gea, *b->value.gea) ? 1 : 0;
    } catch (...) {
        return 0;
    }
}

gea_status gea_morphism_unit(const gea_algebra* algebra, gea_morphism** out)
{
    if (!algebra || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::unit(algebra->value.gea)); });
}

gea_status gea_morphism_counit(const gea_algebra* algebra, gea_morphism** out)
{
    if (!algebra || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::counit(ea_of(algebra))); });
}

gea_status gea_morphism_iso_w(const gea_algebra* algebra, gea_morphism** out)
{
    if (!algebra || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::iso_w(ea_of(algebra))); });
}

gea_status gea_morphism_compose(const gea_morphism* g, const gea_morphism* f, gea_morphism** out)
{
    if (!g || !f || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::compose(g->value, f->value)); });
}

gea_status gea_morphism_unitize(const gea_morphism* f, gea_morphism** out)
{
    if (!f || !out)
        return argument_error("null argument");
    return guarded(nullptr, [&] { return emit(out, gea::unitize_morphism(f->value)); });
}

void gea_morphism_free(gea_morphism* morphism)
{
    delete morphism;
}

gea_kind gea_morphism_kind(const gea_morphism* morphism)
{
    return morphism && morphism->value.kind() == gea::MorphismKind::ea ? GEA_KIND_EA : GEA_KIND_GEA;
}

size_t gea_morphism_source_size(const gea_morphism* morphism)
{
    return morphism ? morphism->value.source().size() : 0;
}

size_t gea_morphism_image(const gea_morphism* morphism, size_t index)
{
    if (!morphism || index >= morphism->value.source().size())
        return static_cast<size_t>(-1);
    return morphism->value(gea::element_at(index)).index;
}

gea_status gea_morphism_check(const gea_morphism* morphism, char** report)
{
    if (!morphism)
        return argument_error("null argument");
    return guarded(report, [&] {
        const gea::Report r = gea::check_morphism(morphism->value);
        set_out(report, gea::format_report(r));
        return r.ok() ? GEA_OK : GEA_FAILED;
    });
}

int gea_morphism_is_full(const gea_morphism* morphism)
{
    return morphism && gea::check_full(morphism->value).full ? 1 : 0;
}

int gea_morphism_is_isomorphism(const gea_morphism* morphism)
{
    return morphism && gea::check_isomorphism(morphism->value) ? 1 : 0;
}

gea_status gea_morphism_serialize(const gea_morphism* morphism, char** out)
{
    if (!morphism || !out)
        return argument_error("null argument");
    return guarded(out, [&] {
        set_out(out, gea::serialize_morphism(morphism->value));
        return GEA_OK;
    });
}

gea_status gea_check(const gea_algebra* algebra, char** report)
{
    if (!algebra)
        return argument_error("null argument");
    return guarded(report, [&] { return finish(gea::run_check(algebra->value), report); });
}

gea_status gea_unitize_text(const gea_algebra* algebra, int dot, char** out)
{
    if (!algebra)
        return argument_error("null argument");
    return guarded(out, [&] { return finish(gea::run_unitize(algebra->value, dot != 0), out); });
}

gea_status gea_order_text(const gea_algebra* algebra, int dot, char** out)
{
    if (!algebra)
        return argument_error("null argument");
    return guarded(out, [&] { return finish(gea::run_order(algebra->value, dot != 0), out); });
}

gea_status gea_hom(const gea_algebra* source, const gea_algebra* target, gea_kind kind, int count_only,
                   int full_only, size_t* count, char** out)
{
    if (!source || !target)
        return argument_error("null argument");
    return guarded(out, [&] {
        const gea::CommandOutput result =
            gea::run_hom(source->value, target->value,
                         kind == GEA_KIND_EA ? gea::MorphismKind::ea : gea::MorphismKind::gea, count_only != 0,
                         full_only != 0);
        if (count)
            *count = result.count;
        return finish(result, out);
    });
}

gea_status gea_laws(const gea_algebra* algebra, const gea_laws_options* options, char** report)
{
    if (!algebra)
        return argument_error("null argument");
    return guarded(report, [&] {
        gea::LawOptions opts;
        if (options) {
            if (options->triangles_with)
                opts.triangles_with = options->triangles_with->value;
            opts.monad = options->monad != 0;
            opts.em = options->em != 0;
            if (options->naturality_path)
                opts.naturality = options->naturality_path;
            opts.json = options->json != 0;
        }
        return finish(gea::run_laws(algebra->value, opts), report);
    });
}

gea_status gea_state_extend(const gea_algebra* algebra, const char* map_path, char** report)
{
    if (!algebra || !map_path)
        return argument_error("null argument");
    return guarded(report, [&] { return finish(gea::run_state_extend(algebra->value, map_path), report); });
}

gea_status gea_ideals(const gea_algebra* algebra, int probe, char** report)
{
    if (!algebra)
        return argument_error("null argument");
    return guarded(report, [&] { return finish(gea::run_ideals(algebra->value, probe != 0), report); });
}

gea_status gea_enumerate(size_t size, gea_kind kind, int up_to_iso, const char* emit_dir, size_t* count, char** out)
{
    return guarded(out, [&] {
        gea::EnumerateOptions opts;
        opts.size = size;
        opts.kind = kind == GEA_KIND_EA ? gea::MorphismKind::ea : gea::MorphismKind::gea;
        opts.up_to_iso = up_to_iso != 0;
        if (emit_dir)
            opts.emit_dir = emit_dir;
        const gea::CommandOutput result = gea::run_enumerate(opts);
        if (count)
            *count = result.count;
        return finish(result, out);
    });
}

gea_status gea_transpose(const gea_algebra* algebra, const char* morphism_path, gea_direction direction, char** out)
{
    if (!algebra || !morphism_path)
        return argument_error("null argument");
    return guarded(out, [&] {
        return finish(gea::run_transpose(algebra->value, morphism_path,
                                         direction == GEA_TO_EA ? gea::TransposeDirection::to_ea
                                                                : gea::TransposeDirection::to_gea),
                      out);
    });
}

} // extern "C"
