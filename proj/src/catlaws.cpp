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

#include "gea/catlaws.hpp"

#include "gea/unitization.hpp"

namespace gea {

Check& compare_pointwise(Report& report, std::string law, const Morphism& lhs, const Morphism& rhs)
{
    if (!lhs.source().same_structure(rhs.source()) || !lhs.target().same_structure(rhs.target()))
        throw StructureError(law + ": the two sides are not parallel");
    Check& check = report.add(std::move(law));
    const Gea& src = lhs.source();
    for (std::size_t i = 0; i < src.size(); ++i) {
        const Element x = element_at(i);
        ++check.instances;
        if (lhs(x) == rhs(x))
            continue;
        if (check.failures++ == 0) {
            check.witness = {x};
            check.detail = "at " + src.element_name(x) + ": " + lhs.target().element_name(lhs(x))
                           + " vs " + rhs.target().element_name(rhs(x));
        }
    }
    return check;
}

Report verify_left_triangle(const GeaPtr& p)
{
    Report report("left triangle at " + p->name());
    const Ea fp = unitize(*p);
    const Morphism lhs = compose(counit(fp), unitize_morphism(unit(p)));
    compare_pointwise(report, "left-triangle", lhs, identity(fp));
    return report;
}

Report verify_right_triangle(const Ea& e)
{
    Report report("right triangle at " + e.name());
    const Morphism lhs = compose(counit(e).forget(), unit(e.forget()));
    compare_pointwise(report, "right-triangle", lhs, identity(e.forget()));
    return report;
}

Report verify_triangles(const GeaPtr& p, const Ea& e)
{
    Report report("triangle identities at " + p->name() + ", " + e.name());
    report.append(verify_left_triangle(p));
    report.append(verify_right_triangle(e));
    return report;
}

Report verify_unit_naturality(const Morphism& f)
{
    const Morphism g = f.forget();
    Report report("naturality of the unit along " + g.source().name() + " -> " + g.target().name());
    const Morphism lhs = compose(monad_map(g), unit(g.source_ptr()));
    const Morphism rhs = compose(unit(g.target_ptr()), g);
    compare_pointwise(report, "unit-naturality", lhs, rhs);
    return report;
}

Report verify_counit_naturality(const Morphism& g)
{
    if (g.kind() != MorphismKind::ea)
        throw StructureError("counit naturality needs an EA morphism");
    Report report("naturality of the counit along " + g.source().name() + " -> " + g.target().name());
    const Morphism lhs = compose(g, counit(*g.source_ea()));
    const Morphism rhs = compose(counit(*g.target_ea()), unitize_morphism(g.forget()));
    compare_pointwise(report, "counit-naturality", lhs, rhs);
    return report;
}

MonadInstance monad_at(const GeaPtr& p)
{
    Morphism eta = unit(p);
    GeaPtr image = eta.target_ptr();
    const Ea fp = unitize(*p);
    return {p, image, std::move(eta), counit(fp).forget()};
}

Morphism monad_map(const Morphism& f)
{
    return unitize_morphism(f).forget();
}

Report verify_monad_laws(const GeaPtr& p)
{
    if (p->size() > kMonadLimit)
        throw LimitError("monad laws are checked for at most " + std::to_string(kMonadLimit)
                         + " elements; " + p->name() + " has " + std::to_string(p->size()));
    Report report("monad laws at " + p->name());
    const MonadInstance t = monad_at(p);
    const MonadInstance tt = monad_at(t.image);

    Check& sizes = report.add("carrier-sizes");
    sizes.instances = 3;
    const std::size_t n = p->size();
    const std::size_t t3 = unitize(*tt.image).size();
    if (t.image->size() != 2 * n || tt.image->size() != 4 * n || t3 != 8 * n) {
        sizes.failures = 1;
        sizes.detail = "|T(P)|, |T^2(P)|, |T^3(P)| = " + std::to_string(t.image->size()) + ", "
                       + std::to_string(tt.image->size()) + ", " + std::to_string(t3);
    }

    for (const auto& [label, m] : {std::pair{"unit-morphism", &t.unit},
                                   std::pair{"multiplication-morphism", &t.multiplication}}) {
        Check& c = report.add(label);
        const Report laws = check_morphism(*m);
        c.instances = 1;
        if (!laws.ok()) {
            c.failures = 1;
            c.detail = format_report(laws);
        }
    }

    compare_pointwise(report, "left-unit", compose(t.multiplication, monad_map(t.unit)), identity(t.image));
    compare_pointwise(report, "right-unit", compose(t.multiplication, tt.unit), identity(t.image));
    compare_pointwise(report, "associativity", compose(t.multiplication, monad_map(t.multiplication)),
                      compose(t.multiplication, tt.multiplication));
    return report;
}

Report em_algebra_check(const GeaPtr& x, const Morphism& h)
{
    const Morphism structure = h.forget();
    Report report("Eilenberg-Moore laws at " + x->name());
    const MonadInstance t = monad_at(x);

    Check& laws = report.add("structure-morphism");
    const Report morphism_laws = check_morphism(structure);
    laws.instances = 1;
    if (!morphism_laws.ok()) {
        laws.failures = 1;
        laws.detail = "structure map is not a GEA morphism";
        return report;
    }

    compare_pointwise(report, "em-unit", compose(structure, t.unit), identity(x));
    compare_pointwise(report, "em-associativity", compose(structure, monad_map(structure)),
                      compose(structure, t.multiplication));
    return report;
}

std::vector<Morphism> find_em_structures(const GeaPtr& x)
{
    const MonadInstance t = monad_at(x);
    std::vector<Morphism> found;
    for (const Morphism& h : enumerate_morphisms(t.image, x))
        if (em_algebra_check(x, h).ok())
            found.push_back(h);
    return found;
}

EmAlgebra algebra_from_ea(const Ea& e)
{
    return {e.forget(), counit(e).forget()};
}

} // namespace gea
