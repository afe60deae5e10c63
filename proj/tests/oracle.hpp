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

// Brute-force oracles used only by tests. None of this calls the search,
// order or validation code it is used to check.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace gea::oracle {

/// Plain partial table: cell value -1 means undefined.
using Table = std::vector<std::vector<int>>;

inline int sum(const Table& t, int a, int b)
{
    return t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

/// (P1)-(P5) written out directly from their statements, element 0 as zero.
inline bool satisfies_axioms(const Table& t)
{
    const int n = static_cast<int>(t.size());
    for (int a = 0; a < n; ++a) {
        if (sum(t, a, 0) != a)
            return false;
        for (int b = 0; b < n; ++b) {
            if (sum(t, a, b) != sum(t, b, a))
                return false;
            if (sum(t, a, b) == 0 && a != 0)
                return false;
            for (int c = 0; c < n; ++c) {
                if (b != c && sum(t, a, b) >= 0 && sum(t, a, b) == sum(t, a, c))
                    return false;
                const int bc = sum(t, b, c);
                if (bc < 0 || sum(t, a, bc) < 0)
                    continue;
                const int ab = sum(t, a, b);
                if (ab < 0 || sum(t, ab, c) != sum(t, a, bc))
                    return false;
            }
        }
    }
    return true;
}

/// Generate every symmetric table with the zero row forced, then filter.
inline std::vector<Table> naive_geas(int n)
{
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i < n; ++i)
        for (int j = i; j < n; ++j)
            cells.emplace_back(i, j);
    std::vector<Table> out;
    std::vector<int> choice(cells.size(), -1);
    while (true) {
        Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
        for (int x = 0; x < n; ++x) {
            t[0][static_cast<std::size_t>(x)] = x;
            t[static_cast<std::size_t>(x)][0] = x;
        }
        for (std::size_t k = 0; k < cells.size(); ++k) {
            const auto [i, j] = cells[k];
            t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = choice[k];
            t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = choice[k];
        }
        if (satisfies_axioms(t))
            out.push_back(t);
        // Odometer over {-1, 0, ..., n-1} per cell.
        std::size_t k = 0;
        while (k < choice.size() && choice[k] == n - 1)
            choice[k++] = -1;
        if (k == choice.size())
            break;
        ++choice[k];
    }
    return out;
}

/// Reflexive-transitive closure of the one-step relation a → a⊕c.
inline std::vector<std::vector<bool>> order_closure(const Table& t)
{
    const std::size_t n = t.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
        leq[a][a] = true;
        for (std::size_t c = 0; c < n; ++c)
            if (t[a][c] >= 0)
                leq[a][static_cast<std::size_t>(t[a][c])] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j])
                    leq[i][j] = true;
    return leq;
}

/// Transitive reduction of a partial order: a < b with no c strictly between.
inline std::set<std::pair<std::size_t, std::size_t>> reduction(const std::vector<std::vector<bool>>& leq)
{
    const std::size_t n = leq.size();
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || !leq[a][b])
                continue;
            bool between = false;
            for (std::size_t c = 0; c < n; ++c)
                between = between || (c != a && c != b && leq[a][c] && leq[c][b]);
            if (!between)
                out.emplace(a, b);
        }
    return out;
}

/// Every total map src → dst, filtered by the morphism laws written out
/// directly. Tops given as indices when EA kind is wanted.
inline std::vector<std::vector<int>> naive_homs(const Table& src, const Table& dst,
                                                std::optional<std::pair<int, int>> tops = std::nullopt)
{
    const std::size_t n = src.size(), m = dst.size();
    std::vector<std::vector<int>> out;
    std::vector<int> map(n, 0);
    while (true) {
        bool ok = map[0] == 0 && (!tops || map[static_cast<std::size_t>(tops->first)] == tops->second);
        for (std::size_t a = 0; a < n && ok; ++a)
            for (std::size_t b = 0; b < n && ok; ++b) {
                const int s = src[a][b];
                if (s < 0)
                    continue;
                const int image = dst[static_cast<std::size_t>(map[a])][static_cast<std::size_t>(map[b])];
                ok = image >= 0 && image == map[static_cast<std::size_t>(s)];
            }
        if (ok)
            out.push_back(map);
        std::size_t k = n;
        while (k > 0 && map[k - 1] == static_cast<int>(m) - 1)
            map[--k] = 0;
        if (k == 0)
            break;
        ++map[k - 1];
    }
    return out;
}

} // namespace gea::oracle
