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

#include "gea/morphisms.hpp"

#include "gea/unitization.hpp"

namespace gea {

Morphism::Morphism(GeaPtr source, GeaPtr target, std::vector<Element> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (!source_ || !target_)
        throw StructureError("morphism endpoints must be set");
    if (images_.size() != source_->size())
        throw StructureError("mapping is not total on " + source_->name());
    for (const Element e : images_)
        if (e.index >= target_->size())
            throw StructureError("mapping leaves the carrier of " + target_->name());
}

Morphism::Morphism(const Ea& source, const Ea& target, std::vector<Element> images)
    : Morphism(source.forget(), target.forget(), std::move(images))
{
    source_ea_ = source;
    target_ea_ = target;
}

Morphism Morphism::forget() const
{
    return Morphism(source_, target_, images_);
}

Report check_morphism(const Morphism& f)
{
    const Gea& src = f.source();
    const Gea& dst = f.target();
    Report report("morphism laws " + src.name() + " -> " + dst.name());
    const auto name = [](const Gea& g, Element e) { return g.element_name(e); };

    Check& zero = report.add("zero");
    zero.instances = 1;
    if (f(src.zero()) != dst.zero()) {
        zero.failures = 1;
        zero.witness = {src.zero()};
        zero.detail = "f(" + name(src, src.zero()) + ") = " + name(dst, f(src.zero()));
    }

    if (f.kind() == MorphismKind::ea) {
        const Element top = f.source_ea()->top();
        Check& unit_law = report.add("top");
        unit_law.instances = 1;
        if (f(top) != f.target_ea()->top()) {
            unit_law.failures = 1;
            unit_law.witness = {top};
            unit_law.detail = "f(" + name(src, top) + ") = " + name(dst, f(top));
        }
    }

    Check& orth = report.add("orthogonality");
    Check& additive = report.add("additivity");
    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t j = 0; j < src.size(); ++j) {
            const Element a = element_at(i), b = element_at(j);
            const auto ab = src.sum(a, b);
            if (!ab)
                continue;
            ++orth.instances;
            const auto image_sum = dst.sum(f(a), f(b));
            if (!image_sum) {
                if (orth.failures++ == 0) {
                    orth.witness = {a, b};
                    orth.detail = name(src, a) + "+" + name(src, b) + " is defined but "
                                  + name(dst, f(a)) + "+" + name(dst, f(b)) + " is not";
                }
                continue;
            }
            ++additive.instances;
            if (*image_sum != f(*ab) && additive.failures++ == 0) {
                additive.witness = {a, b};
                additive.detail = "f(" + name(src, a) + "+" + name(src, b) + ") = "
                                  + name(dst, f(*ab)) + " but f(" + name(src, a) + ")+f("
                                  + name(src, b) + ") = " + name(dst, *image_sum);
            }
        }
    }
    return report;
}

FullCheck check_full(const Morphism& f)
{
    const Gea& src = f.source();
    const Gea& dst = f.target();
    const std::size_t n = src.size(), m = dst.size();

    // witnessed[u * m + v]: some a1 ⊥ b1 in the source has f(a1) = u, f(b1) = v.
    std::vector<bool> witnessed(m * m, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (src.orthogonal(element_at(i), element_at(j)))
                witnessed[f(element_at(i)).index * m + f(element_at(j)).index] = true;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Element a = element_at(i), b = element_at(j);
            if (dst.orthogonal(f(a), f(b)) && !witnessed[f(a).index * m + f(b).index])
                return {false, std::make_pair(a, b)};
        }
    }
    return {};
}

bool is_bijective(const Morphism& f) noexcept
{
    if (f.source().size() != f.target().size())
        return false;
    std::vector<bool> hit(f.target().size(), false);
    for (const Element e : f.images()) {
        if (hit[e.index])
            return false;
        hit[e.index] = true;
    }
    return true;
}

bool check_isomorphism(const Morphism& f)
{
    return is_bijective(f) && check_full(f).full;
}

namespace {

// Backtracking over images in element order, so solutions come out in
// lexicographic order of the mapping table.
class HomSearch {
public:
    HomSearch(const Gea& src, const Gea& dst, std::optional<std::pair<Element, Element>> tops)
        : src_(src), dst_(dst), tops_(tops), images_(src.size())
    {
    }

    template <typename Emit>
    void run(Emit&& emit)
    {
        extend(0, emit);
    }

private:
    bool consistent(std::size_t i) const
    {
        // Every pair inside the assigned prefix that involves i.
        for (std::size_t j = 0; j <= i; ++j) {
            for (const auto& [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
                const auto s = src_.sum(element_at(a), element_at(b));
                if (!s)
                    continue;
                const auto image = dst_.sum(images_[a], images_[b]);
                if (!image)
                    return false;
                if (s->index <= i && images_[s->index] != *image)
                    return false;
            }
        }
        // Pairs (a, b) already assigned whose sum is i.
        for (std::size_t a = 0; a < i; ++a)
            for (std::size_t b = 0; b < i; ++b)
                if (src_.sum(element_at(a), element_at(b)) == element_at(i)
                    && dst_.sum(images_[a], images_[b]) != images_[i])
                    return false;
        return true;
    }

    template <typename Emit>
    void extend(std::size_t i, Emit& emit)
    {
        if (i == src_.size()) {
            emit(images_);
            return;
        }
        // In the one-element EA zero and top coincide; both constraints apply.
        const bool zero = element_at(i) == src_.zero();
        const bool top = tops_ && element_at(i) == tops_->first;
        for (std::size_t v = 0; v < dst_.size(); ++v) {
            if ((zero && element_at(v) != dst_.zero()) || (top && element_at(v) != tops_->second))
                continue;
            images_[i] = element_at(v);
            if (consistent(i))
                extend(i + 1, emit);
        }
    }

    const Gea& src_;
    const Gea& dst_;
    std::optional<std::pair<Element, Element>> tops_;
    std::vector<Element> images_;
};

void require_enumerable(const Gea& source)
{
    if (source.size() > kCarrierLimit)
        throw LimitError("hom-set enumeration limited to sources of "
                         + std::to_string(kCarrierLimit) + " elements");
}

} // namespace

std::vector<Morphism> enumerate_morphisms(const GeaPtr& source, const GeaPtr& target)
{
    require_enumerable(*source);
    std::vector<Morphism> out;
    HomSearch(*source, *target, std::nullopt).run([&](const std::vector<Element>& images) {
        out.emplace_back(source, target, images);
    });
    return out;
}

std::vector<Morphism> enumerate_morphisms(const Ea& source, const Ea& target)
{
    require_enumerable(source.gea());
    std::vector<Morphism> out;
    HomSearch(source.gea(), target.gea(), std::make_pair(source.top(), target.top()))
        .run([&](const std::vector<Element>& images) { out.emplace_back(source, target, images); });
    return out;
}

Morphism compose(const Morphism& g, const Morphism& f)
{
    if (!f.target().same_structure(g.source()))
        throw StructureError("cannot compose: " + f.target().name() + " is not " + g.source().name());
    std::vector<Element> images;
    images.reserve(f.source().size());
    for (const Element x : f.images())
        images.push_back(g(x));
    if (f.kind() == MorphismKind::ea && g.kind() == MorphismKind::ea) {
        if (f.target_ea()->top() != g.source_ea()->top())
            throw StructureError("cannot compose: tops of " + g.source().name() + " differ");
        return Morphism(*f.source_ea(), *g.target_ea(), std::move(images));
    }
    return Morphism(f.source_ptr(), g.target_ptr(), std::move(images));
}

Morphism identity(const GeaPtr& algebra)
{
    std::vector<Element> images;
    for (std::size_t x = 0; x < algebra->size(); ++x)
        images.push_back(element_at(x));
    return Morphism(algebra, algebra, std::move(images));
}

Morphism identity(const Ea& algebra)
{
    return Morphism(algebra, algebra, identity(algebra.forget()).images());
}

Morphism transpose_to_gea(const Morphism& f, const GeaPtr& p)
{
    return compose(f.forget(), unit(p));
}

Morphism transpose_to_ea(const Morphism& g, const Ea& e)
{
    if (!g.target().same_structure(e.gea()))
        throw StructureError("transpose: target of the morphism is not U(" + e.name() + ")");
    return compose(counit(e), unitize_morphism(g));
}

} // namespace gea
