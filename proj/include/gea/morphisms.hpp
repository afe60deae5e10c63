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

#include <optional>
#include <utility>
#include <vector>

#include "gea/core.hpp"

namespace gea {

enum class MorphismKind { gea, ea };

/// A total map between finite carriers. The kind records which category
/// the map is meant to live in; an EA morphism also carries the effect
/// algebra structure of both endpoints. The morphism laws themselves are
/// checked by `check_morphism`, not on construction.
class Morphism {
public:
    /// GEA-kind map. Throws StructureError unless `images` is total and in range.
    Morphism(GeaPtr source, GeaPtr target, std::vector<Element> images);
    /// EA-kind map.
    Morphism(const Ea& source, const Ea& target, std::vector<Element> images);

    MorphismKind kind() const noexcept { return source_ea_ ? MorphismKind::ea : MorphismKind::gea; }

    const Gea& source() const noexcept { return *source_; }
    const Gea& target() const noexcept { return *target_; }
    const GeaPtr& source_ptr() const noexcept { return source_; }
    const GeaPtr& target_ptr() const noexcept { return target_; }
    /// Present exactly for EA-kind morphisms.
    const std::optional<Ea>& source_ea() const noexcept { return source_ea_; }
    const std::optional<Ea>& target_ea() const noexcept { return target_ea_; }

    Element operator()(Element x) const { return images_.at(x.index); }
    const std::vector<Element>& images() const noexcept { return images_; }

    /// The forgetful functor on morphisms: the same map re-tagged as GEA kind.
    Morphism forget() const;

    /// Pointwise equality of mapping tables and equal kinds.
    bool operator==(const Morphism& other) const noexcept
    {
        return kind() == other.kind() && images_ == other.images_;
    }

private:
    GeaPtr source_;
    GeaPtr target_;
    std::optional<Ea> source_ea_;
    std::optional<Ea> target_ea_;
    std::vector<Element> images_;
};

/// f(0) = 0, f(1) = 1 for EA kind, and a⊥b ⇒ f(a)⊥f(b), f(a⊕b) = f(a)⊕f(b).
Report check_morphism(const Morphism& f);

struct FullCheck {
    bool full = true;
    /// Least pair (a, b) with f(a)⊥f(b) but no orthogonal preimages.
    std::optional<std::pair<Element, Element>> counterexample;
};

FullCheck check_full(const Morphism& f);
bool is_bijective(const Morphism& f) noexcept;
/// Bijective and full.
bool check_isomorphism(const Morphism& f);

/// All morphisms of the given category, in lexicographic order of the
/// mapping table.
std::vector<Morphism> enumerate_morphisms(const GeaPtr& source, const GeaPtr& target);
std::vector<Morphism> enumerate_morphisms(const Ea& source, const Ea& target);

/// g ∘ f. The composite is EA kind only when both factors are. Throws
/// StructureError when the target of f differs from the source of g.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism identity(const GeaPtr& algebra);
Morphism identity(const Ea& algebra);

/// EA(F(P), E) → GEA(P, U(E)): f ↦ U(f) ∘ η_P.
Morphism transpose_to_gea(const Morphism& f, const GeaPtr& p);
/// GEA(P, U(E)) → EA(F(P), E): g ↦ ε_E ∘ F(g).
Morphism transpose_to_ea(const Morphism& g, const Ea& e);

} // namespace gea
