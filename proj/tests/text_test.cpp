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

#include <filesystem>

#include "gea/text.hpp"
#include "gea/unitization.hpp"
#include "support.hpp"

namespace gea {
namespace {

using testing::el;

const std::filesystem::path kData = GEA_DATA_DIR;

std::size_t error_line(std::string_view text)
{
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

TEST(Parse, Fig1FileMatchesBuiltin)
{
    const Algebra a = load_algebra("fig1.alg", kData);
    EXPECT_TRUE(a.gea->same_structure(*builtin("fig1").gea));
    EXPECT_FALSE(a.top);
    const Algebra b = load_algebra("builtin:fig1");
    EXPECT_EQ(*b.gea, *builtin("fig1").gea);
}

TEST(Parse, CommentsAndTop)
{
    const Algebra a = parse_algebra("# leading comment\n"
                                    "algebra sq\n"
                                    "elements: 0 p q 1   # four\n"
                                    "zero: 0\n"
                                    "top: 1\n"
                                    "\n"
                                    "sum: p q 1\n");
    EXPECT_EQ(a.gea->name(), "sq");
    ASSERT_TRUE(a.top);
    EXPECT_EQ(a.gea->element_name(*a.top), "1");
    EXPECT_EQ(a.gea->sum(el(*a.gea, "q"), el(*a.gea, "p")), el(*a.gea, "1"));
    EXPECT_EQ(a.gea->sum(el(*a.gea, "0"), el(*a.gea, "q")), el(*a.gea, "q"));
}

TEST(Parse, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(error_line("algebra x\nelements: 0 a\nzero: 0\nsum: a a b\n"), 4u);
    EXPECT_EQ(error_line("algebra x\nelements: 0 a b\nzero: 0\nsum: a a b\nsum: a a a\n"), 5u);
    EXPECT_EQ(error_line("algebra x\nelements: 0 a\nzero: 0\nsum: 0 a 0\n"), 4u);
    EXPECT_EQ(error_line("algebra x\nelements: 0 a\nbogus: 1\n"), 3u);
    EXPECT_EQ(error_line("algebra x\nelements: 0 a\nelements: 0\nzero: 0\n"), 3u);
    EXPECT_EQ(error_line("algebra x\n\nelements: 0 a a\nzero: 0\n"), 3u);
    EXPECT_EQ(error_line("algebra x\nelements: 0 a\nzero: 0 a\n"), 3u);
    EXPECT_EQ(error_line("algebra x\nelements: 0 a\nzero: z\n"), 3u);
    EXPECT_EQ(error_line("algebra x\nzero: 0\n"), 3u);
    EXPECT_EQ(error_line("algebra x\nelements: 0 a\n"), 3u);
}

TEST(Parse, InvalidAxiomsStillLoad)
{
    const Algebra a = load_algebra("idempotent.alg", kData);
    EXPECT_FALSE(validate_gea(*a.gea).ok());
}

void expect_round_trip(const Algebra& a)
{
    const std::string text = serialize_algebra(a);
    const Algebra b = parse_algebra(text);
    EXPECT_EQ(*a.gea, *b.gea) << text;
    EXPECT_EQ(a.top, b.top);
    EXPECT_EQ(serialize_algebra(b), text);
}

TEST(Serialize, RoundTrips)
{
    for (const std::string& name : builtin_names())
        expect_round_trip(builtin(name));
    for (std::size_t n = 1; n <= 4; ++n)
        for (const GeaPtr& p : testing::labeled_geas(n))
            expect_round_trip({p, find_top(*p)});
}

TEST(Serialize, SumsListedOncePerUnorderedPair)
{
    const std::string text = serialize_algebra(builtin("two_squared"));
    EXPECT_EQ(text, "algebra two_squared\nelements: 0 p q 1\nzero: 0\ntop: 1\nsum: p q 1\n");
}

TEST(Dot, SquareByHand)
{
    const std::string want = "digraph \"two_squared\" {\n"
                             "  rankdir=BT;\n"
                             "  node [shape=plaintext];\n"
                             "  n0 [label=\"0\"];\n"
                             "  n1 [label=\"p\"];\n"
                             "  n2 [label=\"q\"];\n"
                             "  n3 [label=\"1\"];\n"
                             "  n0 -> n1;\n"
                             "  n0 -> n2;\n"
                             "  n1 -> n3;\n"
                             "  n2 -> n3;\n"
                             "}\n";
    EXPECT_EQ(emit_dot(builtin("two_squared")), want);
}

TEST(Covers, GoldenForUnitizedFig1)
{
    std::string want;
    for (const std::string& line : {"0 a", "0 b", "0 c*", "0 d*", "a c", "a b*", "b c", "b d", "b a*", "b b*",
                                    "c 0*", "d 0*", "a* 0*", "b* 0*", "c* a*", "c* b*", "d* b*"})
        want += "cover: " + line + "\n";
    EXPECT_EQ(format_covers(*builtin("fig1_unitized").gea), want);
}

TEST(Morphisms, ParseBindAndSerialize)
{
    const MorphismFile file = parse_morphism(read_text_file(kData / "x_to_b.mor"));
    EXPECT_EQ(file.name, "x_to_b");
    EXPECT_EQ(file.kind, MorphismKind::gea);
    ASSERT_TRUE(file.source && file.target);
    const Algebra src = load_algebra(*file.source, kData), dst = load_algebra(*file.target, kData);
    const Morphism f = bind_morphism(file, src, dst);
    EXPECT_EQ(f(el(*src.gea, "x")), el(*dst.gea, "b"));
    EXPECT_EQ(format_mapping(f), "0->0 x->b");
    const Morphism g = bind_morphism(parse_morphism(serialize_morphism(f, "again")), src, dst);
    EXPECT_EQ(g, f);
}

TEST(Morphisms, BindErrors)
{
    const Algebra src = builtin("two_chain_gea"), dst = builtin("fig1");
    EXPECT_THROW(bind_morphism(parse_morphism("map: 0 -> 0\n"), src, dst), StructureError);
    EXPECT_THROW(bind_morphism(parse_morphism("map: 0 -> 0\nmap: x -> z\n"), src, dst), ParseError);
    EXPECT_THROW(bind_morphism(parse_morphism("map: 0 -> 0\nmap: y -> a\n"), src, dst), ParseError);
    EXPECT_THROW(bind_morphism(parse_morphism("map: x -> a\nmap: x -> b\nmap: 0 -> 0\n"), src, dst), ParseError);
    EXPECT_THROW(parse_morphism("kind: both\n"), ParseError);
    EXPECT_THROW(parse_morphism("map: x a\n"), ParseError);
}

TEST(Rationals, Parse)
{
    EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(parse_rational("2/4"), Rational(1, 2));
    EXPECT_EQ(parse_rational("1"), Rational(1));
    EXPECT_THROW(parse_rational("a/2"), StructureError);
    EXPECT_THROW(parse_rational("1/0"), StructureError);
    EXPECT_THROW(parse_rational(""), StructureError);
}

TEST(Values, ParseAdditiveMap)
{
    const GeaPtr p = builtin("fig1").gea;
    const AdditiveMap s = parse_additive_map(read_text_file(kData / "fig1_quarters.map"), p);
    EXPECT_EQ(s(p->zero()), Rational(0));
    EXPECT_EQ(s(el(*p, "c")), Rational(1, 2));
    EXPECT_THROW(parse_additive_map("val: a = 1/4\n", p), StructureError);
    EXPECT_THROW(parse_additive_map("val: a = 1/4\nval: a = 1/4\n", p), ParseError);
    EXPECT_THROW(parse_additive_map("val: q = 1/4\n", p), ParseError);
    EXPECT_THROW(parse_additive_map("val: a = x\n", p), ParseError);
    const std::string text = serialize_values(*p, s.values());
    EXPECT_EQ(parse_additive_map(text, p), s);
}

TEST(Load, MissingFile)
{
    EXPECT_THROW(load_algebra("no_such_file.alg", kData), StructureError);
    EXPECT_THROW(load_algebra("builtin:nothing"), StructureError);
}

} // namespace
} // namespace gea
