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

#include "gea/core.hpp"

#include <algorithm>
#include <set>

namespace gea {

SumTable::SumTable(std::size_t size) : size_(size), cells_(size * size, -1) {}

bool SumTable::define(Element a, Element b, Element c)
{
    if (a.index >= size_ || b.index >= size_ || c.index >= size_)
        throw StructureError("sum refers to an element outside the carrier");
    const auto value = static_cast<std::int32_t>(c.index);
    auto& ab = cells_[a.index * size_ + b.index];
    auto& ba = cells_[b.index * size_ + a.index];
    if ((ab >= 0 && ab != value) || (ba >= 0 && ba != value))
        return false;
    ab = value;
    ba = value;
    return true;
}

namespace {

bool valid_token(const std::string& s)
{
    if (s.empty())
        return false;
    return std::none_of(s.begin(), s.end(), [](char ch) {
        return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '#';
    });
}

void require_scan_size(const Gea& p)
{
    if (p.size() > kCarrierLimit)
        throw LimitError("carrier of " + p.name() + " has " + std::to_string(p.size())
                         + " elements; exhaustive checks are limited to "
                         + std::to_string(kCarrierLimit));
}

std::string show(const Gea& p, std::optional<Element> e)
{
    return e ? p.element_name(*e) : std::string("undefined");
}

} // namespace

Gea::Gea(std::string name, std::vector<std::string> element_names, Element zero, SumTable sums)
    : name_(std::move(name)), names_(std::move(element_names)), zero_(zero), sums_(std::move(sums))
{
    if (names_.empty())
        throw StructureError("carrier must be nonempty");
    if (zero_.index >= names_.size())
        throw StructureError("zero is not in the carrier");
    if (sums_.size() != names_.size())
        throw StructureError("sum table size does not match the carrier");
    std::set<std::string_view> seen;
    for (const auto& n : names_) {
        if (!valid_token(n))
            throw StructureError("invalid element name '" + n + "'");
        if (!seen.insert(n).second)
            throw StructureError("duplicate element name '" + n + "'");
    }
    for (std::size_t x = 0; x < names_.size(); ++x) {
        if (!sums_.define(zero_, element_at(x), element_at(x)))
            throw StructureError("declared sum " + names_[zero_.index] + "+" + names_[x]
                                 + " contradicts " + names_[zero_.index] + "+" + names_[x]
                                 + " = " + names_[x]);
    }
}

std::optional<Element> Gea::find(std::string_view name) const noexcept
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return element_at(i);
    return std::nullopt;
}

Gea Gea::renamed(std::string name) const
{
    Gea copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool Gea::same_structure(const Gea& other) const noexcept
{
    return zero_ == other.zero_ && names_ == other.names_ && sums_ == other.sums_;
}

Report validate_gea(const Gea& p)
{
    require_scan_size(p);
    const std::size_t n = p.size();
    const Element zero = p.zero();
    Report report("GEA axioms of " + p.name());

    auto record = [](Check& check, std::vector<Element> witness, auto&& describe) {
        if (check.failures++ == 0) {
            check.witness = std::move(witness);
            check.detail = describe();
        }
    };

    Check& p1 = report.add("P1");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element a = element_at(i), b = element_at(j);
            ++p1.instances;
            if (p.sum(a, b) != p.sum(b, a))
                record(p1, {a, b}, [&] {
                    return p.element_name(a) + "+" + p.element_name(b) + " = " + show(p, p.sum(a, b))
                           + " but " + p.element_name(b) + "+" + p.element_name(a) + " = "
                           + show(p, p.sum(b, a));
                });
        }
    }

    Check& p2 = report.add("P2");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const Element a = element_at(i), b = element_at(j), c = element_at(k);
                ++p2.instances;
                const auto bc = p.sum(b, c);
                if (!bc)
                    continue;
                const auto a_bc = p.sum(a, *bc);
                if (!a_bc)
                    continue;
                const auto ab = p.sum(a, b);
                const auto ab_c = ab ? p.sum(*ab, c) : std::nullopt;
                if (ab && ab_c && *ab_c == *a_bc)
                    continue;
                record(p2, {a, b, c}, [&] {
                    const std::string an = p.element_name(a), bn = p.element_name(b),
                                      cn = p.element_name(c);
                    std::string text = an + "+(" + bn + "+" + cn + ") = " + show(p, a_bc) + " but ";
                    if (!ab)
                        return text + an + "+" + bn + " is undefined";
                    if (!ab_c)
                        return text + "(" + an + "+" + bn + ")+" + cn + " is undefined";
                    return text + "(" + an + "+" + bn + ")+" + cn + " = " + show(p, ab_c);
                });
            }
        }
    }

    Check& p3 = report.add("P3");
    for (std::size_t i = 0; i < n; ++i) {
        const Element a = element_at(i);
        ++p3.instances;
        if (p.sum(a, zero) != a)
            record(p3, {a}, [&] {
                return p.element_name(a) + "+" + p.element_name(zero) + " = " + show(p, p.sum(a, zero));
            });
    }

    // Witness (a; b, c) with b > c: a⊕b = a⊕c although b ≠ c.
    Check& p4 = report.add("P4");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                const Element a = element_at(i), b = element_at(j), c = element_at(k);
                ++p4.instances;
                const auto ab = p.sum(a, b);
                if (ab && ab == p.sum(a, c))
                    record(p4, {a, b, c}, [&] {
                        return p.element_name(a) + "+" + p.element_name(b) + " = " + p.element_name(a)
                               + "+" + p.element_name(c) + " = " + p.element_name(*ab) + " but "
                               + p.element_name(b) + " != " + p.element_name(c);
                    });
            }
        }
    }

    Check& p5 = report.add("P5");
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element a = element_at(i), b = element_at(j);
            ++p5.instances;
            if (a != zero && p.sum(a, b) == zero)
                record(p5, {a, b}, [&] {
                    return p.element_name(a) + "+" + p.element_name(b) + " = " + p.element_name(zero)
                           + " but " + p.element_name(a) + " != " + p.element_name(zero);
                });
        }
    }
    return report;
}

Report validate_ea(const Gea& p, Element top)
{
    if (top.index >= p.size())
        throw StructureError("top is not in the carrier");
    Report report("EA axioms of " + p.name());
    report.append(validate_gea(p));
    const OrderRelation order = derive_order(p);

    Check& bounded = report.add("bounded");
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Element x = element_at(i);
        ++bounded.instances;
        if (order.leq(x, top))
            continue;
        if (bounded.failures++ == 0)
            bounded.witness = {x};
        bounded.detail += (bounded.detail.empty() ? "not below " + p.element_name(top) + ": " : " ")
                          + p.element_name(x);
    }

    Check& complement = report.add("complement");
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Element a = element_at(i);
        ++complement.instances;
        std::size_t count = 0;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (p.sum(a, element_at(j)) == top)
                ++count;
        if (count != 1 && complement.failures++ == 0) {
            complement.witness = {a};
            complement.detail = p.element_name(a) + " has " + std::to_string(count)
                                + " complements with respect to " + p.element_name(top);
        }
    }
    return report;
}

Ea::Ea(GeaPtr base, Element top) : base_(std::move(base)), top_(top)
{
    if (!base_)
        throw StructureError("null algebra");
    Report report = validate_ea(*base_, top_);
    if (!report.ok())
        throw AxiomError(base_->name() + " is not an effect algebra with top "
                             + base_->element_name(top_),
                         std::move(report));
    complement_.resize(base_->size());
    for (std::size_t i = 0; i < base_->size(); ++i)
        for (std::size_t j = 0; j < base_->size(); ++j)
            if (base_->sum(element_at(i), element_at(j)) == top_)
                complement_[i] = element_at(j);
}

Ea as_ea(const Algebra& algebra)
{
    if (!algebra.top)
        throw StructureError(algebra.gea->name() + " declares no top element");
    return Ea(algebra.gea, *algebra.top);
}

OrderRelation derive_order(const Gea& p)
{
    OrderRelation order(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (const auto s = p.sum(element_at(i), element_at(j)))
                order.set(element_at(i), *s);
    return order;
}

std::vector<std::pair<Element, Element>> OrderRelation::pairs() const
{
    std::vector<std::pair<Element, Element>> out;
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b)
            if (leq(element_at(a), element_at(b)))
                out.emplace_back(element_at(a), element_at(b));
    return out;
}

std::vector<std::pair<Element, Element>> OrderRelation::covers() const
{
    std::vector<std::pair<Element, Element>> out;
    for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = 0; b < size_; ++b) {
            const Element lo = element_at(a), hi = element_at(b);
            if (a == b || !leq(lo, hi))
                continue;
            bool covered = true;
            for (std::size_t c = 0; c < size_ && covered; ++c) {
                const Element mid = element_at(c);
                if (c != a && c != b && leq(lo, mid) && leq(mid, hi))
                    covered = false;
            }
            if (covered)
                out.emplace_back(lo, hi);
        }
    }
    return out;
}

bool OrderRelation::is_reflexive() const noexcept
{
    for (std::size_t a = 0; a < size_; ++a)
        if (!leq(element_at(a), element_at(a)))
            return false;
    return true;
}

bool OrderRelation::is_antisymmetric() const noexcept
{
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b)
            if (a != b && leq(element_at(a), element_at(b)) && leq(element_at(b), element_at(a)))
                return false;
    return true;
}

bool OrderRelation::is_transitive() const noexcept
{
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = 0; b < size_; ++b)
            for (std::size_t c = 0; c < size_; ++c)
                if (leq(element_at(a), element_at(b)) && leq(element_at(b), element_at(c))
                    && !leq(element_at(a), element_at(c)))
                    return false;
    return true;
}

std::optional<Element> ominus(const Gea& p, Element a, Element b) noexcept
{
    for (std::size_t c = 0; c < p.size(); ++c)
        if (p.sum(b, element_at(c)) == a)
            return element_at(c);
    return std::nullopt;
}

std::optional<Element> find_top(const Gea& p)
{
    const OrderRelation order = derive_order(p);
    std::optional<Element> top;
    for (std::size_t t = 0; t < p.size(); ++t) {
        bool is_max = true;
        for (std::size_t x = 0; x < p.size() && is_max; ++x)
            is_max = order.leq(element_at(x), element_at(t));
        if (!is_max)
            continue;
        if (top)
            return std::nullopt;
        top = element_at(t);
    }
    return top;
}

Ea product_ea(const Ea& e1, const Ea& e2)
{
    const std::size_t n1 = e1.size(), n2 = e2.size();
    std::vector<std::string> names;
    names.reserve(n1 * n2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            names.push_back("(" + e1.gea().element_name(element_at(a)) + ","
                            + e2.gea().element_name(element_at(b)) + ")");
    SumTable sums(n1 * n2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n2; ++b)
            for (std::size_t c = 0; c < n1; ++c)
                for (std::size_t d = 0; d < n2; ++d) {
                    const auto first = e1.gea().sum(element_at(a), element_at(c));
                    const auto second = e2.gea().sum(element_at(b), element_at(d));
                    if (first && second)
                        sums.define(product_element(e2, element_at(a), element_at(b)),
                                    product_element(e2, element_at(c), element_at(d)),
                                    product_element(e2, *first, *second));
                }
    Gea product("prod(" + e1.name() + "," + e2.name() + ")", std::move(names),
                product_element(e2, e1.zero(), e2.zero()), std::move(sums));
    return Ea(share(std::move(product)), product_element(e2, e1.top(), e2.top()));
}

} // namespace gea
