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

#include "gea/commands.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "gea/catlaws.hpp"
#include "gea/enumerate.hpp"
#include "gea/states.hpp"
#include "gea/text.hpp"
#include "gea/unitization.hpp"

namespace gea {

namespace {

std::optional<Element> effective_top(const Algebra& algebra)
{
    return algebra.top ? algebra.top : find_top(*algebra.gea);
}

Ea effective_ea(const Algebra& algebra)
{
    const auto top = effective_top(algebra);
    if (!top)
        throw StructureError(algebra.gea->name() + " has no top element");
    return Ea(algebra.gea, *top);
}

void require_valid_gea(const Gea& p)
{
    Report report = validate_gea(p);
    if (!report.ok())
        throw AxiomError(p.name() + " is not a generalized effect algebra", std::move(report));
}

std::string report_json(const Report& report)
{
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : report.checks()) {
        nlohmann::ordered_json witness = nlohmann::ordered_json::array();
        for (const Element e : c.witness)
            witness.push_back(e.index);
        checks.push_back({{"law", c.law},
                          {"instances", c.instances},
                          {"failures", c.failures},
                          {"witness", witness},
                          {"detail", c.detail}});
    }
    nlohmann::ordered_json out = {{"subject", report.subject()}, {"ok", report.ok()}, {"checks", checks}};
    return out.dump(2) + "\n";
}

Check& single_check(Report& report, std::string law, const Report& inner)
{
    Check& c = report.add(std::move(law));
    c.instances = 1;
    if (!inner.ok()) {
        c.failures = 1;
        for (const Check& failed : inner.checks())
            if (!failed.holds()) {
                c.detail = failed.law + ": " + failed.detail;
                break;
            }
    }
    return c;
}

// Binds names as a plain map, then attaches the EA structure of the
// endpoints (declared or found top) when the file asks for EA kind.
Morphism bind_as(MorphismFile file, MorphismKind kind, const Algebra& source, const Algebra& target)
{
    file.kind = MorphismKind::gea;
    const Morphism plain = bind_morphism(file, source, target);
    if (kind == MorphismKind::gea)
        return plain;
    return Morphism(effective_ea(source), effective_ea(target), plain.images());
}

} // namespace

CommandOutput run_check(const Algebra& algebra)
{
    const Gea& p = *algebra.gea;
    const Report report = algebra.top ? validate_ea(p, *algebra.top) : validate_gea(p);
    CommandOutput out{0, format_report(report)};
    if (!report.ok()) {
        out.status = 1;
        out.text += algebra.top ? "invalid EA\n" : "invalid GEA\n";
    } else if (algebra.top) {
        out.text += "valid EA with top " + p.element_name(*algebra.top) + "\n";
    } else if (const auto top = find_top(p)) {
        out.text += "valid GEA; an EA with top " + p.element_name(*top) + " (no top declared)\n";
    } else {
        out.text += "valid GEA; not an EA (no top)\n";
    }
    return out;
}

CommandOutput run_unitize(const Algebra& algebra, bool dot)
{
    const Ea unitized = unitize(*algebra.gea);
    const Algebra result{unitized.forget(), unitized.top()};
    return {0, dot ? emit_dot(result) : serialize_algebra(result)};
}

CommandOutput run_order(const Algebra& algebra, bool dot)
{
    require_valid_gea(*algebra.gea);
    return {0, dot ? emit_dot(algebra) : format_covers(*algebra.gea)};
}

CommandOutput run_hom(const Algebra& source, const Algebra& target, MorphismKind kind, bool count_only,
                      bool full_only)
{
    require_valid_gea(*source.gea);
    require_valid_gea(*target.gea);
    std::vector<Morphism> homs = kind == MorphismKind::ea
                                     ? enumerate_morphisms(as_ea(source), as_ea(target))
                                     : enumerate_morphisms(source.gea, target.gea);
    if (full_only)
        std::erase_if(homs, [](const Morphism& f) { return !check_full(f).full; });
    if (count_only)
        return {0, std::to_string(homs.size()) + "\n", homs.size()};
    std::string text;
    for (std::size_t i = 0; i < homs.size(); ++i)
        text += "hom " + std::to_string(i + 1) + ": " + format_mapping(homs[i]) + "\n";
    text += "count: " + std::to_string(homs.size()) + "\n";
    return {0, text, homs.size()};
}

CommandOutput run_laws(const Algebra& algebra, const LawOptions& options)
{
    const GeaPtr& p = algebra.gea;
    require_valid_gea(*p);
    const bool everything = !options.triangles_with && !options.monad && !options.em && !options.naturality;
    const auto top = effective_top(algebra);
    Report report("laws at " + p->name());

    if (everything || options.triangles_with) {
        report.append(verify_left_triangle(p));
        if (options.triangles_with)
            report.append(verify_right_triangle(effective_ea(*options.triangles_with)));
        else if (top)
            report.append(verify_right_triangle(Ea(p, *top)));
    }

    if (options.monad || (everything && p->size() <= kMonadLimit))
        report.append(verify_monad_laws(p));

    if (options.em || everything) {
        if (top) {
            const EmAlgebra em = algebra_from_ea(Ea(p, *top));
            report.append(em_algebra_check(em.carrier, em.structure));
        } else {
            // Without a top no structure map may exist.
            const MonadInstance t = monad_at(p);
            Check& c = report.add("no-em-structure");
            c.instances = enumerate_morphisms(t.image, p).size();
            const std::vector<Morphism> found = find_em_structures(p);
            c.failures = found.size();
            if (!found.empty()) {
                c.witness = found.front().images();
                c.detail = "structure map " + format_mapping(found.front());
            }
        }
    }

    if (options.naturality) {
        const MorphismFile file = parse_morphism(read_text_file(*options.naturality));
        const auto dir = options.naturality->parent_path();
        if (!file.target)
            throw StructureError("naturality morphism needs a 'target:' line");
        const Algebra source = file.source ? load_algebra(*file.source, dir) : algebra;
        const Algebra target = load_algebra(*file.target, dir);
        const Morphism f = bind_as(file, file.kind, source, target);
        const Report laws = check_morphism(f);
        single_check(report, "naturality-input-morphism", laws);
        if (laws.ok())
            report.append(file.kind == MorphismKind::ea ? verify_counit_naturality(f) : verify_unit_naturality(f));
    }

    CommandOutput out{report.ok() ? 0 : 1, {}};
    out.text = options.json ? report_json(report) : format_report(report);
    if (!options.json)
        out.text += report.ok() ? "all laws hold\n" : "some laws fail\n";
    return out;
}

CommandOutput run_state_extend(const Algebra& algebra, const std::filesystem::path& map_file)
{
    const GeaPtr& p = algebra.gea;
    require_valid_gea(*p);
    const AdditiveMap s = parse_additive_map(read_text_file(map_file), p);
    const Report input = check_additive(s);
    if (!input.ok())
        return {1, format_report(input) + "not an additive map\n"};

    const State t = extend_state(s);
    Report report = check_state(t);
    Check& restriction = report.add("restriction");
    restriction.instances = p->size();
    const AdditiveMap back = restrict_along_unit(t, p);
    for (std::size_t i = 0; i < p->size(); ++i)
        if (back(element_at(i)) != s(element_at(i)) && restriction.failures++ == 0) {
            restriction.witness = {element_at(i)};
            restriction.detail = "at " + p->element_name(element_at(i));
        }

    CommandOutput out{report.ok() ? 0 : 1, {}};
    out.text = "# state on " + t.algebra().name() + "\n" + serialize_values(t.algebra().gea(), t.map().values())
               + format_report(report);
    return out;
}

CommandOutput run_ideals(const Algebra& algebra, bool probe)
{
    const GeaPtr& p = algebra.gea;
    require_valid_gea(*p);
    std::string text;
    const auto ideals = enumerate_ideals(*p);
    for (const auto& ideal : ideals) {
        text += "ideal: {";
        for (std::size_t i = 0; i < ideal.members.size(); ++i)
            text += (i ? ", " : "") + p->element_name(ideal.members[i]);
        text += "}\n";
    }
    text += "count: " + std::to_string(ideals.size()) + "\n";
    if (!probe)
        return {0, text};
    const IdealProbe result = ideal_correspondence_probe(p);
    text += "ideals: " + std::to_string(result.ideals) + "\n";
    text += "gea-homs: " + std::to_string(result.gea_homs) + "\n";
    text += "ea-homs: " + std::to_string(result.ea_homs) + "\n";
    text += std::string("hom-counts-agree: ") + (result.hom_counts_agree() ? "yes" : "no") + "\n";
    text += std::string("ideal-count-matches: ") + (result.ideal_count_matches() ? "yes" : "no") + "\n";
    return {result.hom_counts_agree() ? 0 : 1, text};
}

CommandOutput run_enumerate(const EnumerateOptions& options)
{
    const EnumerationMode mode =
        options.up_to_iso ? EnumerationMode::up_to_isomorphism : EnumerationMode::labeled;
    std::vector<Algebra> algebras;
    if (options.kind == MorphismKind::ea) {
        for (const Ea& e : enumerate_eas(options.size, mode))
            algebras.push_back({e.forget(), e.top()});
    } else {
        for (const GeaPtr& g : enumerate_geas(options.size, mode))
            algebras.push_back({g, std::nullopt});
    }

    std::string text;
    if (options.emit_dir)
        std::filesystem::create_directories(*options.emit_dir);
    for (const Algebra& a : algebras) {
        if (options.emit_dir) {
            const std::string file = a.gea->name() + ".alg";
            std::ofstream(*options.emit_dir / file, std::ios::binary) << serialize_algebra(a);
            text += "wrote " + file + "\n";
        } else {
            text += serialize_algebra(a) + "\n";
        }
    }
    text += "total: " + std::to_string(algebras.size()) + "\n";
    return {0, text, algebras.size()};
}

CommandOutput run_transpose(const Algebra& algebra, const std::filesystem::path& morphism_file,
                            TransposeDirection direction)
{
    const GeaPtr& p = algebra.gea;
    require_valid_gea(*p);
    const MorphismFile file = parse_morphism(read_text_file(morphism_file));
    const auto dir = morphism_file.parent_path();
    if (!file.target)
        throw StructureError("transpose needs a 'target:' line naming the effect algebra");
    const Algebra target = load_algebra(*file.target, dir);
    const Ea e = effective_ea(target);
    const std::string name = file.name.empty() ? "transpose" : file.name + "^";

    if (direction == TransposeDirection::to_ea) {
        const Algebra source = file.source ? load_algebra(*file.source, dir) : algebra;
        const Morphism g = bind_as(file, MorphismKind::gea, source, target);
        const Report laws = check_morphism(g);
        if (!laws.ok())
            return {1, format_report(laws) + "not a GEA morphism\n"};
        const Morphism result = transpose_to_ea(g, e);
        const bool round_trip = transpose_to_gea(result, p) == g;
        return {round_trip ? 0 : 1, serialize_morphism(result, name)
                                        + (round_trip ? "# round trip: identity\n" : "# round trip: FAILED\n")};
    }

    const Ea fp = unitize(*p);
    const Algebra unitized{fp.forget(), fp.top()};
    const Algebra source = file.source ? load_algebra(*file.source, dir) : unitized;
    const Morphism f = bind_as(file, MorphismKind::ea, source, target);
    const Report laws = check_morphism(f);
    if (!laws.ok())
        return {1, format_report(laws) + "not an EA morphism\n"};
    const Morphism result = transpose_to_gea(f, p);
    const bool round_trip = transpose_to_ea(result, e) == f;
    return {round_trip ? 0 : 1,
            serialize_morphism(result, name) + (round_trip ? "# round trip: identity\n" : "# round trip: FAILED\n")};
}

} // namespace gea
