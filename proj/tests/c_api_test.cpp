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

#include <memory>
#include <string>

#include "gea/gea_c.h"

namespace {

struct AlgebraFree {
    void operator()(gea_algebra* a) const { gea_algebra_free(a); }
};
struct MorphismFree {
    void operator()(gea_morphism* m) const { gea_morphism_free(m); }
};
using AlgebraHandle = std::unique_ptr<gea_algebra, AlgebraFree>;
using MorphismHandle = std::unique_ptr<gea_morphism, MorphismFree>;

AlgebraHandle builtin(const char* name)
{
    gea_algebra* a = nullptr;
    EXPECT_EQ(gea_algebra_builtin(name, &a), GEA_OK) << gea_last_error();
    return AlgebraHandle(a);
}

std::string take(char* s)
{
    std::string out = s ? s : "";
    gea_string_free(s);
    return out;
}

TEST(CApi, BuiltinAccessors)
{
    const AlgebraHandle fig1 = builtin("fig1");
    EXPECT_EQ(gea_algebra_size(fig1.get()), 5u);
    EXPECT_STREQ(gea_algebra_name(fig1.get()), "fig1");
    EXPECT_STREQ(gea_algebra_element_name(fig1.get(), 3), "c");
    EXPECT_EQ(gea_algebra_element_name(fig1.get(), 99), nullptr);
    EXPECT_EQ(gea_algebra_zero(fig1.get()), 0u);
    size_t top = 0;
    EXPECT_EQ(gea_algebra_top(fig1.get(), &top), 0);
    size_t s = 0;
    ASSERT_EQ(gea_algebra_sum(fig1.get(), 1, 2, &s), 1);
    EXPECT_EQ(s, 3u);
    EXPECT_EQ(gea_algebra_sum(fig1.get(), 1, 1, &s), 0);
    EXPECT_EQ(gea_algebra_leq(fig1.get(), 2, 4), 1);
    EXPECT_EQ(gea_algebra_leq(fig1.get(), 1, 4), 0);
}

TEST(CApi, ParseErrorsSetLastError)
{
    gea_algebra* a = nullptr;
    EXPECT_EQ(gea_algebra_parse("algebra x\nelements: 0 a\nzero: q\n", &a), GEA_ERR_PARSE);
    EXPECT_EQ(a, nullptr);
    EXPECT_NE(std::string(gea_last_error()).find("line 3"), std::string::npos);
    EXPECT_EQ(gea_algebra_builtin("nope", &a), GEA_ERR_STRUCTURE);
    EXPECT_EQ(gea_algebra_parse(nullptr, &a), GEA_ERR_ARGUMENT);
    EXPECT_STREQ(gea_status_name(GEA_ERR_LIMIT), "size limit exceeded");
}

TEST(CApi, UnitizeAndIsomorphism)
{
    const AlgebraHandle two_chain = builtin("two_chain_gea");
    gea_algebra* raw = nullptr;
    ASSERT_EQ(gea_algebra_unitize(two_chain.get(), &raw), GEA_OK);
    const AlgebraHandle f(raw);
    size_t top = 0;
    ASSERT_EQ(gea_algebra_top(f.get(), &top), 1);
    EXPECT_STREQ(gea_algebra_element_name(f.get(), top), "0*");
    const AlgebraHandle sq = builtin("two_squared");
    EXPECT_EQ(gea_algebra_isomorphic(f.get(), sq.get()), 1);
    const AlgebraHandle c3 = builtin("chain(3)");
    EXPECT_EQ(gea_algebra_isomorphic(c3.get(), sq.get()), 0);
}

TEST(CApi, TriangleThroughHandles)
{
    const AlgebraHandle fig1 = builtin("fig1");
    gea_algebra* raw = nullptr;
    ASSERT_EQ(gea_algebra_unitize(fig1.get(), &raw), GEA_OK);
    const AlgebraHandle f(raw);
    gea_morphism *eta = nullptr, *eps = nullptr, *feta = nullptr, *composite = nullptr;
    ASSERT_EQ(gea_morphism_unit(fig1.get(), &eta), GEA_OK);
    const MorphismHandle eta_h(eta);
    ASSERT_EQ(gea_morphism_unitize(eta, &feta), GEA_OK);
    const MorphismHandle feta_h(feta);
    ASSERT_EQ(gea_morphism_counit(f.get(), &eps), GEA_OK);
    const MorphismHandle eps_h(eps);
    ASSERT_EQ(gea_morphism_compose(eps, feta, &composite), GEA_OK) << gea_last_error();
    const MorphismHandle c(composite);
    EXPECT_EQ(gea_morphism_kind(composite), GEA_KIND_EA);
    ASSERT_EQ(gea_morphism_source_size(composite), 10u);
    for (size_t i = 0; i < 10; ++i)
        EXPECT_EQ(gea_morphism_image(composite, i), i);
    char* report = nullptr;
    EXPECT_EQ(gea_morphism_check(composite, &report), GEA_OK);
    take(report);
    EXPECT_EQ(gea_morphism_is_isomorphism(composite), 1);
    gea_morphism* bad = nullptr;
    EXPECT_EQ(gea_morphism_compose(eta, eta, &bad), GEA_ERR_STRUCTURE);
}

TEST(CApi, CommandsReturnText)
{
    const AlgebraHandle fig1 = builtin("fig1");
    char* out = nullptr;
    EXPECT_EQ(gea_check(fig1.get(), &out), GEA_OK);
    EXPECT_NE(take(out).find("valid GEA; not an EA"), std::string::npos);

    size_t count = 0;
    const AlgebraHandle two_chain = builtin("two_chain_gea"), sq = builtin("two_squared");
    EXPECT_EQ(gea_hom(two_chain.get(), sq.get(), GEA_KIND_GEA, 1, 0, &count, &out), GEA_OK);
    EXPECT_EQ(count, 4u);
    EXPECT_EQ(take(out), "4\n");

    gea_laws_options opts{};
    EXPECT_EQ(gea_laws(fig1.get(), &opts, &out), GEA_OK);
    EXPECT_NE(take(out).find("all laws hold"), std::string::npos);

    EXPECT_EQ(gea_enumerate(4, GEA_KIND_GEA, 0, nullptr, &count, &out), GEA_OK);
    EXPECT_EQ(count, 19u);
    take(out);
    EXPECT_EQ(gea_enumerate(9, GEA_KIND_GEA, 0, nullptr, &count, &out), GEA_ERR_LIMIT);

    const std::string map = std::string(GEA_DATA_DIR) + "/fig1_quarters.map";
    EXPECT_EQ(gea_state_extend(fig1.get(), map.c_str(), &out), GEA_OK);
    EXPECT_NE(take(out).find("val: b* = 3/4"), std::string::npos);
}

TEST(CApi, FailedChecksReturnReport)
{
    gea_algebra* raw = nullptr;
    ASSERT_EQ(gea_algebra_parse("algebra i\nelements: 0 a\nzero: 0\nsum: a a a\n", &raw), GEA_OK);
    const AlgebraHandle a(raw);
    char* out = nullptr;
    EXPECT_EQ(gea_check(a.get(), &out), GEA_FAILED);
    EXPECT_NE(take(out).find("FAIL P4"), std::string::npos);
    gea_algebra* f = nullptr;
    EXPECT_EQ(gea_algebra_unitize(a.get(), &f), GEA_FAILED);
    EXPECT_EQ(f, nullptr);
}

} // namespace
