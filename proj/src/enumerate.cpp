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

#include "gea/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace gea {

namespace {

constexpr int kUndefined = -1;
constexpr int kOpen = -2;

// Partial tables are searched pair by pair over the nonzero elements in
// row-major order. Row injectivity (P4) and zero-freeness (P5) are enforced
// on assignment; associativity (P2) is checked on every triple whose
// lookups are already decided, and everything is revalidated at the leaf.
class TableSearch {
public:
    TableSearch(std::size_t n, EnumerationMode mode, const std::function<void(const GeaPtr&)>& visit)
        : n_(n), mode_(mode), visit_(visit), table_(n * n, kOpen)
    {
        for (std::size_t x = 0; x < n; ++x) {
            at(0, x) = static_cast<int>(x);
            at(x, 0) = static_cast<int>(x);
        }
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                pairs_.emplace_back(i, j);
        if (mode_ == EnumerationMode::up_to_isomorphism) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            do
                permutations_.push_back(perm);
            while (std::next_permutation(perm.begin() + 1, perm.end()));
        }
    }

    void run() { extend(0); }

private:
    int& at(std::size_t a, std::size_t b) { return table_[a * n_ + b]; }
    int at(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }

    bool row_free(std::size_t row, int value) const
    {
        for (std::size_t c = 0; c < n_; ++c)
            if (at(row, c) == value)
                return false;
        return true;
    }

    bool associative_so_far() const
    {
        for (std::size_t a = 1; a < n_; ++a)
            for (std::size_t b = 1; b < n_; ++b)
                for (std::size_t c = 1; c < n_; ++c) {
                    const int bc = at(b, c);
                    if (bc == kOpen || bc == kUndefined)
                        continue;
                    const int a_bc = at(a, static_cast<std::size_t>(bc));
                    if (a_bc == kOpen || a_bc == kUndefined)
                        continue;
                    const int ab = at(a, b);
                    if (ab == kOpen)
                        continue;
                    if (ab == kUndefined)
                        return false;
                    const int ab_c = at(static_cast<std::size_t>(ab), c);
                    if (ab_c == kOpen)
                        continue;
                    if (ab_c != a_bc)
                        return false;
                }
        return true;
    }

    std::vector<int> code(const std::vector<std::size_t>& perm) const
    {
        // Relabeled table T'[perm a][perm b] = perm(T[a][b]), read in pair order.
        std::vector<int> relabeled(n_ * n_, kUndefined);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b) {
                const int v = at(a, b);
                relabeled[perm[a] * n_ + perm[b]] = v < 0 ? v : static_cast<int>(perm[static_cast<std::size_t>(v)]);
            }
        std::vector<int> out;
        out.reserve(pairs_.size());
        for (const auto& [i, j] : pairs_)
            out.push_back(relabeled[i * n_ + j]);
        return out;
    }

    bool canonical() const
    {
        const std::vector<int> own = code(permutations_.front());
        for (const auto& perm : permutations_)
            if (code(perm) < own)
                return false;
        return true;
    }

    void emit()
    {
        if (mode_ == EnumerationMode::up_to_isomorphism && !canonical())
            return;
        SumTable sums(n_);
        for (std::size_t a = 0; a < n_; ++a)
            for (std::size_t b = 0; b < n_; ++b)
                if (at(a, b) >= 0)
                    sums.define(element_at(a), element_at(b), element_at(static_cast<std::size_t>(at(a, b))));
        ++emitted_;
        Gea g("gea" + std::to_string(n_) + "_" + std::to_string(emitted_), enumeration_names(n_),
              element_at(0), std::move(sums));
        if (!validate_gea(g).ok())
            throw Error("enumerator produced an invalid table");
        visit_(share(std::move(g)));
    }

    void extend(std::size_t k)
    {
        if (k == pairs_.size()) {
            emit();
            return;
        }
        const auto [i, j] = pairs_[k];
        for (int v = kUndefined; v < static_cast<int>(n_); ++v) {
            if (v == 0)
                continue;
            if (v > 0) {
                if (static_cast<std::size_t>(v) == i || static_cast<std::size_t>(v) == j)
                    continue;
                if (!row_free(i, v) || !row_free(j, v))
                    continue;
            }
            at(i, j) = v;
            at(j, i) = v;
            if (associative_so_far())
                extend(k + 1);
        }
        at(i, j) = kOpen;
        at(j, i) = kOpen;
    }

    std::size_t n_;
    EnumerationMode mode_;
    const std::function<void(const GeaPtr&)>& visit_;
    std::vector<int> table_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<std::vector<std::size_t>> permutations_;
    std::size_t emitted_ = 0;
};

class IsoSearch {
public:
    IsoSearch(const Gea& a, const Gea& b, std::optional<std::pair<Element, Element>> tops)
        : a_(a), b_(b), tops_(tops), map_(a.size(), -1), used_(b.size(), false)
    {
        for (std::size_t x = 0; x < a.size(); ++x)
            degree_a_.push_back(degree(a, x));
        for (std::size_t x = 0; x < b.size(); ++x)
            degree_b_.push_back(degree(b, x));
    }

    bool run() { return extend(0); }

private:
    static std::size_t degree(const Gea& g, std::size_t x)
    {
        std::size_t d = 0;
        for (std::size_t y = 0; y < g.size(); ++y)
            d += g.orthogonal(element_at(x), element_at(y)) ? 1 : 0;
        return d;
    }

    bool consistent(std::size_t i) const
    {
        for (std::size_t j = 0; j <= i; ++j) {
            const Element x = element_at(i), y = element_at(j);
            const Element fx = element_at(static_cast<std::size_t>(map_[i]));
            const Element fy = element_at(static_cast<std::size_t>(map_[j]));
            const auto s = a_.sum(x, y);
            const auto t = b_.sum(fx, fy);
            if (s.has_value() != t.has_value())
                return false;
            if (s && s->index <= i && map_[s->index] != static_cast<int>(t->index))
                return false;
        }
        for (std::size_t x = 0; x < i; ++x)
            for (std::size_t y = 0; y < i; ++y)
                if (a_.sum(element_at(x), element_at(y)) == element_at(i)
                    && b_.sum(element_at(static_cast<std::size_t>(map_[x])),
                              element_at(static_cast<std::size_t>(map_[y])))
                           != element_at(static_cast<std::size_t>(map_[i])))
                    return false;
        return true;
    }

    bool extend(std::size_t i)
    {
        if (i == a_.size())
            return true;
        for (std::size_t v = 0; v < b_.size(); ++v) {
            if (used_[v] || degree_a_[i] != degree_b_[v])
                continue;
            if ((element_at(i) == a_.zero()) != (element_at(v) == b_.zero()))
                continue;
            if (tops_ && (element_at(i) == tops_->first) != (element_at(v) == tops_->second))
                continue;
            map_[i] = static_cast<int>(v);
            used_[v] = true;
            if (consistent(i) && extend(i + 1))
                return true;
            used_[v] = false;
            map_[i] = -1;
        }
        return false;
    }

    const Gea& a_;
    const Gea& b_;
    std::optional<std::pair<Element, Element>> tops_;
    std::vector<int> map_;
    std::vector<bool> used_;
    std::vector<std::size_t> degree_a_;
    std::vector<std::size_t> degree_b_;
};

} // namespace

std::vector<std::string> enumeration_names(std::size_t n)
{
    std::vector<std::string> names{"0"};
    for (std::size_t i = 1; i < n; ++i)
        names.emplace_back(1, static_cast<char>('a' + i - 1));
    return names;
}

void for_each_gea(std::size_t n, EnumerationMode mode, const std::function<void(const GeaPtr&)>& visit)
{
    if (n == 0 || n > kEnumerationLimit)
        throw LimitError("enumeration supports carrier sizes 1.." + std::to_string(kEnumerationLimit));
    TableSearch(n, mode, visit).run();
}

std::vector<GeaPtr> enumerate_geas(std::size_t n, EnumerationMode mode)
{
    std::vector<GeaPtr> out;
    for_each_gea(n, mode, [&](const GeaPtr& g) { out.push_back(g); });
    return out;
}

std::vector<Ea> enumerate_eas(std::size_t n, EnumerationMode mode)
{
    std::vector<Ea> out;
    std::size_t count = 0;
    for_each_gea(n, mode, [&](const GeaPtr& g) {
        if (const auto top = find_top(*g)) {
            ++count;
            out.emplace_back(share(g->renamed("ea" + std::to_string(n) + "_" + std::to_string(count))), *top);
        }
    });
    return out;
}

bool is_isomorphic(const Gea& a, const Gea& b)
{
    if (a.size() != b.size())
        return false;
    return IsoSearch(a, b, std::nullopt).run();
}

bool is_isomorphic(const Ea& a, const Ea& b)
{
    if (a.size() != b.size())
        return false;
    return IsoSearch(a.gea(), b.gea(), std::make_pair(a.top(), b.top())).run();
}

} // namespace gea
