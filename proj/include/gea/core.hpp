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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gea/element.hpp"
#include "gea/report.hpp"

namespace gea {

/// Exhaustive triple scans refuse carriers larger than this.
inline constexpr std::size_t kCarrierLimit = 64;

/// The partial operation ⊕ as a symmetric table over a finite carrier.
class SumTable {
public:
    SumTable() = default;
    explicit SumTable(std::size_t size);

    std::size_t size() const noexcept { return size_; }

    std::optional<Element> lookup(Element a, Element b) const noexcept
    {
        const std::int32_t v = cells_[a.index * size_ + b.index];
        if (v < 0)
            return std::nullopt;
        return element_at(static_cast<std::size_t>(v));
    }

    bool orthogonal(Element a, Element b) const noexcept
    {
        return cells_[a.index * size_ + b.index] >= 0;
    }

    /// Stores a⊕b = c in both orientations. Returns false, leaving the
    /// table unchanged, if a different result is already stored.
    bool define(Element a, Element b, Element c);

    bool operator==(const SumTable&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::int32_t> cells_;
};

/// A finite partial algebra (P; ⊕, 0) that is structurally well formed.
/// Whether it satisfies the generalized effect algebra axioms is a
/// separate question answered by `validate_gea`.
class Gea {
public:
    /// Applies the loader closure: inserts 0⊕x = x for every x. Throws
    /// StructureError on empty carrier, bad names, out-of-range indices or
    /// a declared zero-sum that contradicts the closure.
    Gea(std::string name, std::vector<std::string> element_names, Element zero, SumTable sums);

    const std::string& name() const noexcept { return name_; }
    std::size_t size() const noexcept { return names_.size(); }
    Element zero() const noexcept { return zero_; }
    const std::string& element_name(Element e) const { return names_.at(e.index); }
    const std::vector<std::string>& element_names() const noexcept { return names_; }
    std::optional<Element> find(std::string_view name) const noexcept;

    std::optional<Element> sum(Element a, Element b) const noexcept { return sums_.lookup(a, b); }
    bool orthogonal(Element a, Element b) const noexcept { return sums_.orthogonal(a, b); }
    const SumTable& sums() const noexcept { return sums_; }

    Gea renamed(std::string name) const;

    /// Same carrier names, zero and table; the algebra name is ignored.
    bool same_structure(const Gea& other) const noexcept;
    bool operator==(const Gea&) const = default;

private:
    std::string name_;
    std::vector<std::string> names_;
    Element zero_;
    SumTable sums_;
};

using GeaPtr = std::shared_ptr<const Gea>;

inline GeaPtr share(Gea g)
{
    return std::make_shared<const Gea>(std::move(g));
}

/// An effect algebra: a valid GEA with a greatest element. Construction
/// validates both, so every Ea value satisfies the axioms.
class Ea {
public:
    /// Throws AxiomError when the GEA axioms fail or `top` is not the
    /// maximum; StructureError when `top` is not in the carrier.
    Ea(GeaPtr base, Element top);

    const Gea& gea() const noexcept { return *base_; }
    /// The forgetful functor on objects.
    const GeaPtr& forget() const noexcept { return base_; }

    const std::string& name() const noexcept { return base_->name(); }
    std::size_t size() const noexcept { return base_->size(); }
    Element zero() const noexcept { return base_->zero(); }
    Element top() const noexcept { return top_; }
    /// The unique a' with a⊕a' = 1.
    Element complement(Element a) const { return complement_.at(a.index); }

    bool same_structure(const Ea& other) const noexcept
    {
        return top_ == other.top_ && base_->same_structure(*other.base_);
    }

private:
    GeaPtr base_;
    Element top_;
    std::vector<Element> complement_;
};

/// A GEA as loaded from a file or the builtin library: the top is present
/// when declared, and nothing has been validated yet.
struct Algebra {
    GeaPtr gea;
    std::optional<Element> top;
};

/// Validates and wraps; throws StructureError when no top is declared.
Ea as_ea(const Algebra& algebra);

/// Checks (P1)-(P5) over all element pairs and triples. Throws LimitError
/// above kCarrierLimit.
Report validate_gea(const Gea& p);

/// Runs validate_gea, then checks that `top` is the maximum of the derived
/// order and that every element has exactly one complement.
Report validate_ea(const Gea& p, Element top);

/// The derived order a ≤ b iff a⊕c = b for some c.
class OrderRelation {
public:
    explicit OrderRelation(std::size_t size) : size_(size), leq_(size * size, false) {}

    std::size_t size() const noexcept { return size_; }
    bool leq(Element a, Element b) const noexcept { return leq_[a.index * size_ + b.index]; }
    void set(Element a, Element b) { leq_[a.index * size_ + b.index] = true; }

    /// Pairs (a, b) with a < b and nothing strictly between, ordered by
    /// (a, b) index.
    std::vector<std::pair<Element, Element>> covers() const;
    std::vector<std::pair<Element, Element>> pairs() const;

    bool is_reflexive() const noexcept;
    bool is_antisymmetric() const noexcept;
    bool is_transitive() const noexcept;
    bool is_partial_order() const noexcept
    {
        return is_reflexive() && is_antisymmetric() && is_transitive();
    }

    bool operator==(const OrderRelation&) const = default;

private:
    std::size_t size_;
    std::vector<bool> leq_;
};

OrderRelation derive_order(const Gea& p);

/// The unique c with a = b⊕c, if b ≤ a.
std::optional<Element> ominus(const Gea& p, Element a, Element b) noexcept;

/// Unique maximum of the derived order, if any.
std::optional<Element> find_top(const Gea& p);

/// Componentwise product; element (a, b) has index a*|e2| + b.
Ea product_ea(const Ea& e1, const Ea& e2);

inline Element product_element(const Ea& e2, Element a, Element b) noexcept
{
    return element_at(a.index * e2.size() + b.index);
}

/// Named test algebras: fig1, fig1_unitized, trivial, two, two_chain_gea,
/// two_squared, chain(n), boolean(n). Throws StructureError for an
/// unknown name.
Algebra builtin(std::string_view name);

/// Names accepted by `builtin` without parameters.
std::vector<std::string> builtin_names();

} // namespace gea
