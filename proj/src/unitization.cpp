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

#include "gea/unitization.hpp"

#include <algorithm>

namespace gea {

Ea unitize(const Gea& p)
{
    Report input = validate_gea(p);
    if (!input.ok())
        throw AxiomError("cannot unitize " + p.name() + ": not a generalized effect algebra",
                         std::move(input));

    const std::size_t n = p.size();
    std::vector<std::string> names = p.element_names();
    // x*, or [x]*, [[x]]*, ... when a shallower form collides with a name
    // already in P (as when P is itself a unitization).
    for (std::size_t depth = 0;; ++depth) {
        const auto starred = [&](const std::string& base) {
            return std::string(depth, '[') + base + std::string(depth, ']') + "*";
        };
        const bool collides = std::any_of(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n),
                                          [&](const std::string& x) { return p.find(starred(x)).has_value(); });
        if (collides)
            continue;
        for (std::size_t x = 0; x < n; ++x)
            names.push_back(starred(p.element_name(element_at(x))));
        break;
    }

    SumTable sums(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element a = element_at(i), b = element_at(j);
            if (const auto s = p.sum(a, b))
                sums.define(a, b, *s);
            // a ⊕ b* = (b ⊖ a)* when a ≤ b; the mirrored case comes from symmetry.
            if (const auto rest = ominus(p, b, a))
                sums.define(a, encode(n, {b, true}), encode(n, {*rest, true}));
        }
    }

    Gea unitized("F(" + p.name() + ")", std::move(names), p.zero(), std::move(sums));
    return Ea(share(std::move(unitized)), encode(n, {p.zero(), true}));
}

Morphism unitize_morphism(const Morphism& f)
{
    const Morphism g = f.forget();
    Report laws = check_morphism(g);
    if (!laws.ok())
        throw AxiomError("cannot apply F: not a GEA morphism", std::move(laws));

    const Ea source = unitize(g.source());
    const Ea target = unitize(g.target());
    const std::size_t n = g.source().size(), m = g.target().size();
    std::vector<Element> images(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        images[x] = encode(m, {g(element_at(x)), false});
        images[n + x] = encode(m, {g(element_at(x)), true});
    }
    return Morphism(source, target, std::move(images));
}

Morphism unit(const GeaPtr& p)
{
    const Ea unitized = unitize(*p);
    std::vector<Element> images;
    for (std::size_t x = 0; x < p->size(); ++x)
        images.push_back(encode(p->size(), {element_at(x), false}));
    return Morphism(p, unitized.forget(), std::move(images));
}

Morphism counit(const Ea& e)
{
    const Ea source = unitize(e.gea());
    const std::size_t n = e.size();
    std::vector<Element> images(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        images[x] = element_at(x);
        images[n + x] = e.complement(element_at(x));
    }
    return Morphism(source, e, std::move(images));
}

Ea two_element_ea()
{
    const Algebra two = builtin("two");
    return as_ea(two);
}

Morphism iso_w(const Ea& e)
{
    const Ea source = unitize(e.gea());
    const Ea two = two_element_ea();
    const Ea target = product_ea(e, two);
    const Element bit0 = *two.gea().find("0"), bit1 = *two.gea().find("1");
    const std::size_t n = e.size();
    std::vector<Element> images(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        images[x] = product_element(two, element_at(x), bit0);
        images[n + x] = product_element(two, e.complement(element_at(x)), bit1);
    }
    return Morphism(source, target, std::move(images));
}

Morphism projection_first(const Ea& e1, const Ea& e2)
{
    const Ea product = product_ea(e1, e2);
    std::vector<Element> images;
    for (std::size_t a = 0; a < e1.size(); ++a)
        for (std::size_t b = 0; b < e2.size(); ++b)
            images.push_back(element_at(a));
    return Morphism(product, e1, std::move(images));
}

} // namespace gea
