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

#include "gea/states.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "gea/morphisms.hpp"
#include "gea/unitization.hpp"

namespace gea {

namespace {
// Integer literals must not meet boost::rational in ==: under C++20 the
// reversed candidate recurses forever.
const Rational kZero(0);
const Rational kOne(1);
} // namespace

std::string to_string(const Rational& r)
{
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

AdditiveMap::AdditiveMap(GeaPtr algebra, std::vector<Rational> values)
    : algebra_(std::move(algebra)), values_(std::move(values))
{
    if (values_.size() != algebra_->size())
        throw StructureError("additive map is not total on " + algebra_->name());
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i] < kZero || values_[i] > kOne)
            throw StructureError("value " + to_string(values_[i]) + " at "
                                 + algebra_->element_name(element_at(i)) + " is outside [0,1]");
}

State::State(Ea algebra, std::vector<Rational> values)
    : algebra_(std::move(algebra)), map_(algebra_.forget(), std::move(values))
{
}

Report check_additive(const AdditiveMap& s)
{
    const Gea& p = s.algebra();
    Report report("additivity on " + p.name());
    const auto name = [&](Element e) { return p.element_name(e); };

    Check& zero = report.add("zero");
    zero.instances = 1;
    if (s(p.zero()) != kZero) {
        zero.failures = 1;
        zero.witness = {p.zero()};
        zero.detail = "s(" + name(p.zero()) + ") = " + to_string(s(p.zero()));
    }

    Check& bounded = report.add("bounded-sum");
    Check& additive = report.add("additivity");
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            const Element a = element_at(i), b = element_at(j);
            const auto ab = p.sum(a, b);
            if (!ab)
                continue;
            const Rational total = s(a) + s(b);
            ++bounded.instances;
            if (total > kOne && bounded.failures++ == 0) {
                bounded.witness = {a, b};
                bounded.detail = "s(" + name(a) + ")+s(" + name(b) + ") = " + to_string(total) + " > 1";
            }
            ++additive.instances;
            if (s(*ab) != total && additive.failures++ == 0) {
                additive.witness = {a, b};
                additive.detail = "s(" + name(a) + "+" + name(b) + ") = " + to_string(s(*ab))
                                  + " but s(" + name(a) + ")+s(" + name(b) + ") = " + to_string(total);
            }
        }
    }
    return report;
}

Report check_state(const State& t)
{
    Report report("state on " + t.algebra().name());
    report.append(check_additive(t.map()));
    Check& unit_law = report.add("unit");
    unit_law.instances = 1;
    const Element top = t.algebra().top();
    if (t(top) != kOne) {
        unit_law.failures = 1;
        unit_law.witness = {top};
        unit_law.detail = "s(" + t.algebra().gea().element_name(top) + ") = " + to_string(t(top));
    }
    return report;
}

State extend_state(const AdditiveMap& s)
{
    Report input = check_additive(s);
    if (!input.ok())
        throw AxiomError("cannot extend: not an additive map", std::move(input));
    const std::size_t n = s.algebra().size();
    std::vector<Rational> values(2 * n);
    for (std::size_t x = 0; x < n; ++x) {
        values[x] = s(element_at(x));
        values[n + x] = kOne - s(element_at(x));
    }
    return State(unitize(s.algebra()), std::move(values));
}

AdditiveMap restrict_along_unit(const State& t, const GeaPtr& p)
{
    const Morphism eta = unit(p);
    if (!eta.target().same_structure(t.algebra().gea()))
        throw StructureError("state does not live on F(" + p->name() + ")");
    std::vector<Rational> values;
    for (const Element image : eta.images())
        values.push_back(t(image));
    return AdditiveMap(p, std::move(values));
}

std::vector<Rational> farey_grid(int max_denominator)
{
    if (max_denominator < 1)
        throw StructureError("grid denominator must be positive");
    std::vector<Rational> grid;
    for (std::int64_t q = 1; q <= max_denominator; ++q)
        for (std::int64_t k = 0; k <= q; ++k)
            if (std::gcd(k, q) == 1)
                grid.emplace_back(k, q);
    std::sort(grid.begin(), grid.end());
    return grid;
}

namespace {

// Backtracking over grid values in element order; constraints are tested
// as soon as every element they mention is assigned.
std::vector<std::vector<Rational>> grid_search(const Gea& p, int max_denominator, std::optional<Element> top)
{
    const std::vector<Rational> grid = farey_grid(max_denominator);
    const std::size_t n = p.size();
    std::vector<Rational> values(n);
    std::vector<std::vector<Rational>> out;

    auto consistent = [&](std::size_t i) {
        for (std::size_t a = 0; a <= i; ++a) {
            for (std::size_t b = 0; b <= i; ++b) {
                if (a != i && b != i) {
                    const auto s = p.sum(element_at(a), element_at(b));
                    if (s && s->index == i && values[i] != values[a] + values[b])
                        return false;
                    continue;
                }
                const auto s = p.sum(element_at(a), element_at(b));
                if (!s)
                    continue;
                const Rational total = values[a] + values[b];
                if (total > kOne)
                    return false;
                if (s->index <= i && values[s->index] != total)
                    return false;
            }
        }
        return true;
    };

    auto extend = [&](auto& self, std::size_t i) -> void {
        if (i == n) {
            out.push_back(values);
            return;
        }
        for (const Rational& v : grid) {
            if (element_at(i) == p.zero() && v != kZero)
                continue;
            if (top && element_at(i) == *top && v != kOne)
                continue;
            values[i] = v;
            if (consistent(i))
                self(self, i + 1);
        }
    };
    extend(extend, 0);
    return out;
}

} // namespace

std::vector<AdditiveMap> grid_additive_maps(const GeaPtr& p, int max_denominator)
{
    std::vector<AdditiveMap> out;
    for (auto& values : grid_search(*p, max_denominator, std::nullopt)) {
        AdditiveMap s(p, std::move(values));
        if (check_additive(s).ok())
            out.push_back(std::move(s));
    }
    return out;
}

std::vector<State> grid_states(const Ea& e, int max_denominator)
{
    std::vector<State> out;
    for (auto& values : grid_search(e.gea(), max_denominator, e.top())) {
        State t(e, std::move(values));
        if (check_state(t).ok())
            out.push_back(std::move(t));
    }
    return out;
}

std::vector<IdealCandidate> enumerate_ideals(const Gea& p)
{
    const std::size_t n = p.size();
    if (n > 20)
        throw LimitError("ideal enumeration scans all subsets; limited to 20 elements");
    const OrderRelation order = derive_order(p);
    std::vector<IdealCandidate> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        auto in = [&](std::size_t i) { return (mask >> i) & 1u; };
        if (!in(p.zero().index))
            continue;
        bool ideal = true;
        for (std::size_t a = 0; a < n && ideal; ++a) {
            if (!in(a))
                continue;
            for (std::size_t b = 0; b < n && ideal; ++b) {
                if (order.leq(element_at(b), element_at(a)) && !in(b))
                    ideal = false;
                if (!in(b))
                    continue;
                const auto s = p.sum(element_at(a), element_at(b));
                if (s && !in(s->index))
                    ideal = false;
            }
        }
        if (!ideal)
            continue;
        IdealCandidate candidate;
        for (std::size_t i = 0; i < n; ++i)
            if (in(i))
                candidate.members.push_back(element_at(i));
        out.push_back(std::move(candidate));
    }
    return out;
}

IdealProbe ideal_correspondence_probe(const GeaPtr& p)
{
    const Ea target = as_ea(builtin("two_squared"));
    IdealProbe probe;
    probe.ideals = enumerate_ideals(*p).size();
    probe.gea_homs = enumerate_morphisms(p, target.forget()).size();
    probe.ea_homs = enumerate_morphisms(unitize(*p), target).size();
    return probe;
}

} // namespace gea
