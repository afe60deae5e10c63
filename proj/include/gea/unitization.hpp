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

#include "gea/core.hpp"
#include "gea/morphisms.hpp"

namespace gea {

/// An element of F(P): either x or x*.
struct UnitizedElement {
    Element base;
    bool starred = false;

    constexpr auto operator<=>(const UnitizedElement&) const = default;
};

// F(P) lays out P first and P* second: x has index x, x* has index |P| + x.
constexpr Element encode(std::size_t base_size, UnitizedElement u) noexcept
{
    return element_at(u.base.index + (u.starred ? base_size : 0));
}

constexpr UnitizedElement decode(std::size_t base_size, Element e) noexcept
{
    if (e.index >= base_size)
        return {element_at(e.index - base_size), true};
    return {e, false};
}

/// The unitization F(P) on P ∪̇ P* with top 0*. Throws AxiomError when
/// P is not a valid GEA, or when the result fails validate_ea.
Ea unitize(const Gea& p);

/// F(f)(x) = f(x), F(f)(x*) = f(x)*. Throws AxiomError when f fails the
/// GEA morphism laws.
Morphism unitize_morphism(const Morphism& f);

/// η_P : P → U(F(P)), the embedding x ↦ x.
Morphism unit(const GeaPtr& p);

/// ε_E : F(U(E)) → E, x ↦ x and x* ↦ x'.
Morphism counit(const Ea& e);

/// The two-element effect algebra {0, 1}.
Ea two_element_ea();

/// w : F(U(E)) → E × {0,1}, a ↦ (a,0) and a* ↦ (a',1).
Morphism iso_w(const Ea& e);

/// The canonical projection E1 × E2 → E1.
Morphism projection_first(const Ea& e1, const Ea& e2);

} // namespace gea
