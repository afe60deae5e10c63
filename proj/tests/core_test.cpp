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

#include <gtest/gtest.h>

#include <set>

#include "gea/core.hpp"
#include "gea/enumerate.hpp"
#include "support.hpp"

namespace gea {
namespace {

using testing::el;
using testing::gea_of;
using testing::table_of;

TEST(Validate, Fig1IsGeaWithoutTop)
{
    const Algebra fig1 = builtin("fig1");
    const Report r = validate_gea(*fig1.gea);
    EXPECT_TRUE(r.ok()) << format_report(r);
    EXPECT_FALSE(fig1.top);
    EXPECT_FALSE(find_top(*fig1.gea));
    EXPECT_TRUE(oracle::satisfies_axioms(table_of(*fig1.gea)));
}

TEST(Validate, IdempotentFailsCancellationWithWitness)
{
    const GeaPtr p = gea_of("idem", {"0", "a"}, {{"a", "a", "a"}});
    const Report r = validate_gea(*p);
    EXPECT_FALSE(r.ok());
    EXPECT_EQ(r.failure_count(), 1u);
    const Check* p4 = r.find("P4");
    ASSERT_NE(p4, nullptr);
    EXPECT_EQ(p4->failures, 1u);
    EXPECT_EQ(p4->instances, 2u);
    const std::vector<Element> witness{el(*p, "a"), el(*p, "a"), el(*p, "0")};
    EXPECT_EQ(p4->witness, witness);
    EXPECT_FALSE(oracle::satisfies_axioms(table_of(*p)));
}

TEST(Validate, SelfInverseFailsPositivity)
{
    const GeaPtr p = gea_of("inv", {"0", "a"}, {{"a", "a", "0"}});
    const Report r = validate_gea(*p);
    ASSERT_NE(r.find("P5"), nullptr);
    EXPECT_FALSE(r.find("P5")->holds());
    EXPECT_TRUE(r.find("P4")->holds());
    EXPECT_FALSE(oracle::satisfies_axioms(table_of(*p)));
}

TEST(Validate, BrokenAssociativityIsReported)
{
    const GeaPtr p = gea_of("assoc", {"0", "a", "b", "c", "d"}, {{"a", "b", "c"}, {"b", "b", "d"}, {"a", "d", "c"}});
    const Report r = validate_gea(*p);
    EXPECT_FALSE(r.find("P2")->holds());
    EXPECT_FALSE(oracle::satisfies_axioms(table_of(*p)));
}

TEST(Validate, AgreesWithOracleOnAllSmallTables)
{
    for (int n = 1; n <= 3; ++n) {
        // Every symmetric table with the zero row, valid or not.
        std::vector<std::pair<int, int>> cells;
        for (int i = 1; i < n; ++i)
            for (int j = i; j < n; ++j)
                cells.emplace_back(i, j);
        std::size_t combos = 1;
        for (std::size_t k = 0; k < cells.size(); ++k)
            combos *= static_cast<std::size_t>(n + 1);
        const auto names = enumeration_names(static_cast<std::size_t>(n));
        for (std::size_t code = 0; code < combos; ++code) {
            SumTable table(static_cast<std::size_t>(n));
            oracle::Table t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
            for (int x = 0; x < n; ++x)
                t[0][static_cast<std::size_t>(x)] = t[static_cast<std::size_t>(x)][0] = x;
            std::size_t rest = code;
            for (const auto& [i, j] : cells) {
                const int v = static_cast<int>(rest % static_cast<std::size_t>(n + 1)) - 1;
                rest /= static_cast<std::size_t>(n + 1);
                t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
                if (v >= 0)
                    table.define(element_at(static_cast<std::size_t>(i)), element_at(static_cast<std::size_t>(j)),
                                 element_at(static_cast<std::size_t>(v)));
            }
            bool loadable = true;
            try {
                const Gea p("t", names, element_at(0), table);
                EXPECT_EQ(validate_gea(p).ok(), oracle::satisfies_axioms(t)) << "n=" << n << " code=" << code;
            } catch (const StructureError&) {
                loadable = false;
            }
            // A table is rejected on load only when it contradicts 0+x = x.
            if (!loadable)
                EXPECT_FALSE(oracle::satisfies_axioms(t));
        }
    }
}

TEST(Validate, RejectsCarrierAboveLimit)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= kCarrierLimit; ++i)
        names.push_back("e" + std::to_string(i));
    const Gea big("big", names, element_at(0), SumTable(names.size()));
    EXPECT_THROW(validate_gea(big), LimitError);
}

TEST(Construct, RejectsBadNames)
{
    EXPECT_THROW(Gea("x", {"0", "0"}, element_at(0), SumTable(2)), StructureError);
    EXPECT_THROW(Gea("x", {}, element_at(0), SumTable(0)), StructureError);
    EXPECT_THROW(Gea("x", {"0", "a b"}, element_at(0), SumTable(2)), StructureError);
}

TEST(Construct, ZeroClosureConflictIsRejected)
{
    SumTable t(2);
    ASSERT_TRUE(t.define(element_at(0), element_at(1), element_at(0)));
    EXPECT_THROW(Gea("x", {"0", "a"}, element_at(0), t), StructureError);
}

TEST(Construct, DefineDetectsConflict)
{
    SumTable t(3);
    EXPECT_TRUE(t.define(element_at(1), element_at(1), element_at(2)));
    EXPECT_TRUE(t.define(element_at(1), element_at(1), element_at(2)));
    EXPECT_FALSE(t.define(element_at(1), element_at(1), element_at(1)));
}

TEST(Order, Fig1CoversByHand)
{
    const GeaPtr p = builtin("fig1").gea;
    const OrderRelation o = derive_order(*p);
    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [a, b] : o.covers())
        got.emplace(p->element_name(a), p->element_name(b));
    const std::set<std::pair<std::string, std::string>> want{
        {"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"b", "d"}};
    EXPECT_EQ(got, want);
}

void expect_order_matches_oracle(const Gea& p)
{
    const OrderRelation o = derive_order(p);
    const auto closure = oracle::order_closure(table_of(p));
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            ASSERT_EQ(o.leq(element_at(a), element_at(b)), closure[a][b]) << p.name();
    std::set<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& [a, b] : o.covers())
        covers.emplace(a.index, b.index);
    EXPECT_EQ(covers, oracle::reduction(closure)) << p.name();
    EXPECT_TRUE(o.is_partial_order()) << p.name();
}

TEST(Order, MatchesClosureOracleOnEnumeratedAlgebras)
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const GeaPtr& p : testing::labeled_geas(n))
            expect_order_matches_oracle(*p);
    expect_order_matches_oracle(*builtin("fig1_unitized").gea);
}

TEST(Order, ZeroIsLeast)
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const GeaPtr& p : testing::labeled_geas(n)) {
            const OrderRelation o = derive_order(*p);
            for (std::size_t x = 0; x < p->size(); ++x)
                EXPECT_TRUE(o.leq(p->zero(), element_at(x)));
        }
}

TEST(Ominus, InvertsSums)
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const GeaPtr& p : testing::labeled_geas(n)) {
            const OrderRelation o = derive_order(*p);
            for (std::size_t i = 0; i < p->size(); ++i)
                for (std::size_t j = 0; j < p->size(); ++j) {
                    const Element a = element_at(i), b = element_at(j);
                    const auto d = ominus(*p, a, b);
                    EXPECT_EQ(d.has_value(), o.leq(b, a));
                    if (d)
                        EXPECT_EQ(p->sum(b, *d), a);
                    if (const auto s = p->sum(a, b))
                        EXPECT_EQ(ominus(*p, *s, a), b);
                }
        }
}

TEST(Ominus, Fig1Examples)
{
    const GeaPtr p = builtin("fig1").gea;
    EXPECT_EQ(ominus(*p, el(*p, "c"), el(*p, "a")), el(*p, "b"));
    EXPECT_EQ(ominus(*p, el(*p, "d"), el(*p, "b")), el(*p, "b"));
    EXPECT_FALSE(ominus(*p, el(*p, "d"), el(*p, "a")));
}

TEST(Builtins, AllLoadAndValidate)
{
    for (const std::string& name : builtin_names()) {
        const Algebra a = builtin(name);
        EXPECT_TRUE(validate_gea(*a.gea).ok()) << name;
        if (a.top) {
            EXPECT_TRUE(validate_ea(*a.gea, *a.top).ok()) << name;
            EXPECT_EQ(find_top(*a.gea), a.top) << name;
        }
    }
    EXPECT_THROW(builtin("nope"), StructureError);
}

TEST(Builtins, ChainAndBoolean)
{
    const Ea c4 = as_ea(builtin("chain(4)"));
    EXPECT_EQ(c4.size(), 5u);
    for (std::size_t i = 0; i <= 4; ++i)
        EXPECT_EQ(c4.complement(element_at(i)), element_at(4 - i));
    const Ea b3 = as_ea(builtin("boolean(3)"));
    EXPECT_EQ(b3.size(), 8u);
    const OrderRelation o = derive_order(b3.gea());
    for (std::size_t i = 0; i < 8; ++i) {
        const Element x = element_at(i), xc = b3.complement(x);
        EXPECT_FALSE(b3.gea().sum(x, xc) != b3.top());
        EXPECT_EQ(b3.complement(xc), x);
        EXPECT_TRUE(o.leq(x, b3.top()));
    }
}

TEST(Ea, RejectsWrongTop)
{
    const GeaPtr p = builtin("two_squared").gea;
    EXPECT_THROW(Ea(p, el(*p, "p")), AxiomError);
    try {
        Ea(p, el(*p, "p"));
    } catch (const AxiomError& err) {
        EXPECT_FALSE(err.report().ok());
    }
}

TEST(Ea, ComplementLawsOnEnumeratedEas)
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const Ea& e : testing::labeled_eas(n)) {
            const OrderRelation o = derive_order(e.gea());
            EXPECT_EQ(e.complement(e.top()), e.zero());
            for (std::size_t i = 0; i < e.size(); ++i) {
                const Element a = element_at(i);
                EXPECT_EQ(e.gea().sum(a, e.complement(a)), e.top());
                EXPECT_EQ(e.complement(e.complement(a)), a);
                for (std::size_t j = 0; j < e.size(); ++j) {
                    const Element b = element_at(j);
                    if (o.leq(a, b))
                        EXPECT_TRUE(o.leq(e.complement(b), e.complement(a)));
                    // Orthogonal iff below the complement.
                    EXPECT_EQ(e.gea().orthogonal(a, b), o.leq(a, e.complement(b)));
                }
            }
        }
}

TEST(Product, TwoByTwoIsTheSquare)
{
    const Ea two = as_ea(builtin("two"));
    const Ea sq = product_ea(two, two);
    EXPECT_EQ(sq.size(), 4u);
    EXPECT_EQ(sq.top(), product_element(two, two.top(), two.top()));
    EXPECT_TRUE(validate_ea(sq.gea(), sq.top()).ok());
    EXPECT_TRUE(is_isomorphic(sq, as_ea(builtin("two_squared"))));
}

TEST(Product, SumsAreComponentwise)
{
    const Ea e1 = as_ea(builtin("chain(2)")), e2 = as_ea(builtin("two_squared"));
    const Ea pr = product_ea(e1, e2);
    EXPECT_TRUE(validate_ea(pr.gea(), pr.top()).ok());
    for (std::size_t a = 0; a < e1.size(); ++a)
        for (std::size_t b = 0; b < e2.size(); ++b)
            for (std::size_t c = 0; c < e1.size(); ++c)
                for (std::size_t d = 0; d < e2.size(); ++d) {
                    const auto s1 = e1.gea().sum(element_at(a), element_at(c));
                    const auto s2 = e2.gea().sum(element_at(b), element_at(d));
                    const auto s = pr.gea().sum(product_element(e2, element_at(a), element_at(b)),
                                                product_element(e2, element_at(c), element_at(d)));
                    ASSERT_EQ(s.has_value(), s1 && s2);
                    if (s)
                        EXPECT_EQ(*s, product_element(e2, *s1, *s2));
                }
}

} // namespace
} // namespace gea
