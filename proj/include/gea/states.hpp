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

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gea/core.hpp"

namespace gea {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// A map from a finite carrier into [0,1] with exact rational values.
/// Construction only checks totality and range; additivity is checked by
/// `check_additive`.
class AdditiveMap {
public:
    AdditiveMap(GeaPtr algebra, std::vector<Rational> values);

    const Gea& algebra() const noexcept { return *algebra_; }
    const GeaPtr& algebra_ptr() const noexcept { return algebra_; }
    const Rational& operator()(Element x) const { return values_.at(x.index); }
    const std::vector<Rational>& values() const noexcept { return values_; }

    bool operator==(const AdditiveMap& other) const noexcept { return values_ == other.values_; }

private:
    GeaPtr algebra_;
    std::vector<Rational> values_;
};

/// A candidate state on an effect algebra.
class State {
public:
    State(Ea algebra, std::vector<Rational> values);

    const Ea& algebra() const noexcept { return algebra_; }
    const AdditiveMap& map() const noexcept { return map_; }
    const Rational& operator()(Element x) const { return map_(x); }

private:
    Ea algebra_;
    AdditiveMap map_;
};

/// s(0) = 0 and a⊥b ⇒ s(a)+s(b) ≤ 1, s(a⊕b) = s(a)+s(b).
Report check_additive(const AdditiveMap& s);
/// check_additive plus s(1) = 1.
Report check_state(const State& t);

/// The state s̄ on F(P): s̄(x) = s(x), s̄(x*) = 1 − s(x). Throws
/// AxiomError when s is not additive.
State extend_state(const AdditiveMap& s);

/// t ∘ η_P for a state t on F(P).
AdditiveMap restrict_along_unit(const State& t, const GeaPtr& p);

/// Rationals in [0,1] with denominator at most `max_denominator`, ascending.
std::vector<Rational> farey_grid(int max_denominator);

/// Every additive map on p whose values lie on the grid, in lexicographic
/// order of value tuples.
std::vector<AdditiveMap> grid_additive_maps(const GeaPtr& p, int max_denominator);
/// Every state on e whose values lie on the grid.
std::vector<State> grid_states(const Ea& e, int max_denominator);

/// Subset containing 0, downward closed and closed under defined sums.
struct IdealCandidate {
    std::vector<Element> members;

    bool operator==(const IdealCandidate&) const = default;
};

/// Subset scan; members sorted by index, ideals ordered by their bitmask.
/// Throws LimitError above 20 elements.
std::vector<IdealCandidate> enumerate_ideals(const Gea& p);

struct IdealProbe {
    std::size_t ideals = 0;
    std::size_t gea_homs = 0; ///< |GEA(P, U(2²))|
    std::size_t ea_homs = 0;  ///< |EA(F(P), 2²)|

    bool hom_counts_agree() const noexcept { return gea_homs == ea_homs; }
    bool ideal_count_matches() const noexcept { return ideals == ea_homs; }
};

IdealProbe ideal_correspondence_probe(const GeaPtr& p);

} // namespace gea
