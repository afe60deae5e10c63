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

#include <vector>

#include "gea/core.hpp"
#include "gea/morphisms.hpp"

namespace gea {

/// verify_monad_laws refuses objects above this size (T³ has 8|P| elements).
inline constexpr std::size_t kMonadLimit = 8;

/// Pointwise comparison of two parallel morphisms, recorded as one check.
Check& compare_pointwise(Report& report, std::string law, const Morphism& lhs, const Morphism& rhs);

/// ε_{F(P)} ∘ F(η_P) = id_{F(P)}.
Report verify_left_triangle(const GeaPtr& p);
/// U(ε_E) ∘ η_{U(E)} = id_{U(E)}.
Report verify_right_triangle(const Ea& e);
Report verify_triangles(const GeaPtr& p, const Ea& e);

/// U(F(f)) ∘ η_P = η_Q ∘ f for a GEA morphism f : P → Q.
Report verify_unit_naturality(const Morphism& f);
/// g ∘ ε_{E1} = ε_{E2} ∘ F(U(g)) for an EA morphism g : E1 → E2.
Report verify_counit_naturality(const Morphism& g);

/// The monad T = UF at one object: T(P), η_P and μ_P = U(ε_{F(P)}).
struct MonadInstance {
    GeaPtr object;
    GeaPtr image;
    Morphism unit;
    Morphism multiplication;
};

MonadInstance monad_at(const GeaPtr& p);
/// T(f) = U(F(f)).
Morphism monad_map(const Morphism& f);

/// Unit laws on T(P) and associativity on T³(P). Throws LimitError when
/// |P| > kMonadLimit.
Report verify_monad_laws(const GeaPtr& p);

/// h ∘ η_X = id_X and h ∘ T(h) = h ∘ μ_X for h : T(X) → X.
Report em_algebra_check(const GeaPtr& x, const Morphism& h);

/// All structure maps T(X) → X satisfying the Eilenberg-Moore laws.
std::vector<Morphism> find_em_structures(const GeaPtr& x);

struct EmAlgebra {
    GeaPtr carrier;
    Morphism structure;
};

/// (U(E), U(ε_E)).
EmAlgebra algebra_from_ea(const Ea& e);

} // namespace gea
