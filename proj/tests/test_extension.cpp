/**************************************************************************
 * test_extension.cpp
 *
 * Copyright 2026 The hullforge Authors
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
 **************************************************************************/

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace hullforge;

namespace {

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InternalMismatch;
}

Element norm_sum(const Field& f, u64 e, const std::vector<Element>& v) {
    Element s = f.zero();
    for (Element a : v) s = f.add(s, oracle::power(f, a, ipow(f.p(), e) + 1));
    return s;
}

LinearCode grs14() { return grs_generator(hso_mds_coset(Field::create(3, 4), 2, 7, 2)); }

} // namespace

TEST(Alpha, CharacteristicTwoPair) {
    auto F8 = Field::create(2, 3);
    auto t = find_alpha_tuple(*F8, 0, 2);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->values, (std::vector<Element>{F8->one(), F8->one()}));
}

TEST(Alpha, OddCharacteristicPair) {
    auto F9 = Field::create(3, 2);
    auto t = find_alpha_tuple(*F9, 0, 2);
    ASSERT_TRUE(t);
    EXPECT_EQ(t->values, (std::vector<Element>{F9->exp(2), F9->one()}));
    EXPECT_TRUE(norm_sum(*F9, 0, t->values).is_zero());
}

TEST(Alpha, PublishedQuadrupleOverGF8) {
    auto F8 = Field::create(2, 3);
    const std::vector<Element> v = {F8->one(), F8->exp(5), F8->exp(2), F8->exp(6)};
    EXPECT_TRUE(norm_sum(*F8, 1, v).is_zero());
    EXPECT_TRUE(alpha_tuple_valid(*F8, 1, v));
}

TEST(Alpha, FoundTuplesSatisfyTheNormSum) {
    for (u64 q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 125}) {
        auto F = field_of_order(q);
        for (u64 e = 0; e < F->h(); ++e)
            for (std::size_t i = 2; i <= 7; ++i) {
                auto t = find_alpha_tuple(*F, e, i);
                if (!t) continue;
                EXPECT_EQ(t->values.size(), i);
                EXPECT_TRUE(norm_sum(*F, e, t->values).is_zero()) << q << " e=" << e << " i=" << i;
                for (Element a : t->values) EXPECT_FALSE(a.is_zero());
            }
    }
}

TEST(Alpha, NoPairOverGF27) {
    auto F27 = Field::create(3, 3);
    for (u64 e = 0; e < 3; ++e) {
        EXPECT_FALSE(find_alpha_tuple(*F27, e, 2).has_value());
        // exhaustive: no two nonzero norms cancel
        for (u64 a = 0; a < 26; ++a)
            for (u64 b = 0; b < 26; ++b) EXPECT_FALSE(norm_sum(*F27, e, {F27->exp(a), F27->exp(b)}).is_zero());
        EXPECT_TRUE(find_alpha_tuple(*F27, e, 3).has_value());
    }
}

TEST(Alpha, Errors) {
    auto F9 = Field::create(3, 2);
    EXPECT_EQ(code_of([&] { find_alpha_tuple(*F9, 0, 1); }), ErrorCode::BadLength);
    EXPECT_EQ(code_of([&] { find_alpha_tuple(*F9, 2, 2); }), ErrorCode::EOutOfRange);
}

TEST(Alpha, Conditions) {
    auto F9 = Field::create(3, 2);
    EXPECT_NE(alpha_conditions(*F9, 0).kind, AlphaCase::none);
    EXPECT_NE(alpha_conditions(*F9, 1).kind, AlphaCase::none);
    EXPECT_EQ(alpha_conditions(*Field::create(2, 3), 1).kind, AlphaCase::p_even);
    auto F3 = Field::create(3, 1);
    auto tri = alpha_conditions(*F3, 0).triple;
    ASSERT_TRUE(tri);
    EXPECT_EQ((*tri)[0], F3->one());
    EXPECT_EQ((*tri)[1], F3->one());
    EXPECT_EQ((*tri)[2], F3->one());
}

TEST(Extension, LengthensAndKeepsSelfOrthogonality) {
    const LinearCode c = fixtures::code("gf2-4-2");
    const Field& F = c.field();
    const LinearCode out = extend_self_orthogonal(c, 0, {0, {F.one(), F.one()}}, F.one());
    EXPECT_EQ(out.n(), 6u);
    EXPECT_EQ(out.k(), 2u);
    EXPECT_TRUE(gram(out.generator(), 0).is_zero());
    EXPECT_EQ(oracle::distance(out), 4u);
}

TEST(Extension, SearchedAlphasWork) {
    for (const char* name : {"gf9-13-2", "gf4-11-5"}) {
        const LinearCode c = fixtures::code(name);
        for (std::size_t i = 2; i <= 4; ++i) {
            auto t = find_alpha_tuple(c.field(), 1, i);
            // over GF(4) every nonzero norm is 1, so odd lengths cannot sum to 0
            if (c.field().q() == 4 && i % 2 == 1) {
                EXPECT_FALSE(t);
                continue;
            }
            ASSERT_TRUE(t);
            const LinearCode out = extend_self_orthogonal(c, 1, *t, c.field().one());
            EXPECT_EQ(out.n(), c.n() + i);
            EXPECT_TRUE(gram(out.generator(), 1).is_zero());
            EXPECT_GE(min_distance(out).d, min_distance(c).d);
        }
    }
}

TEST(Extension, Errors) {
    const LinearCode so = fixtures::code("gf9-13-2");
    const Field& F = so.field();
    const AlphaTuple good{1, {F.from_int(2), F.omega()}};
    EXPECT_EQ(code_of([&] { extend_self_orthogonal(fixtures::code("gf8-8-5"), 0, {0, {}}, Element{1}); }),
              ErrorCode::NotSelfOrthogonal);
    EXPECT_EQ(code_of([&] { extend_self_orthogonal(so, 1, good, F.omega()); }), ErrorCode::BadBeta);
    EXPECT_EQ(code_of([&] { extend_self_orthogonal(so, 1, {1, {F.one()}}, F.one()); }), ErrorCode::LengthOne);
    EXPECT_EQ(code_of([&] { extend_self_orthogonal(so, 1, {1, {F.one(), F.one()}}, F.one()); }),
              ErrorCode::BadAlphaTuple);
    EXPECT_EQ(code_of([&] { extend_self_orthogonal(so, 3, good, F.one()); }), ErrorCode::EOutOfRange);
}

TEST(HullTarget, DeterminantMatchesBlock) {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (u64 q : {3, 4, 5, 8, 9, 25, 27, 49}) {
        auto F = field_of_order(q);
        for (int it = 0; it < 30; ++it) {
            const u64 e = rng() % F->h();
            const std::size_t k = 1 + rng() % 6, l = rng() % k;
            const Element a = F->exp(rng() % (q - 1)), b = F->exp(rng() % (q - 1));
            EXPECT_EQ(hull_determinant(*F, e, k, l, a, b), determinant(hull_block(F, e, k, l, a, b)));
            ++checked;
        }
    }
    EXPECT_GE(checked, 200);
}

TEST(HullTarget, EveryTargetDimension) {
    const LinearCode c = fixtures::code("gf9-14-4");
    for (std::size_t l = 0; l < c.k(); ++l) {
        auto pr = default_hull_pair(c.field(), 0, c.k(), l);
        ASSERT_TRUE(pr);
        const LinearCode out = extend_one_with_hull(c, 0, l, pr->first, pr->second, c.field().one());
        EXPECT_EQ(out.n(), 15u);
        EXPECT_EQ(hull(out, 0).dim_hull, l);
        EXPECT_EQ(oracle::hull_dim(out, 0), l);
    }
}

TEST(HullTarget, Errors) {
    const LinearCode c = fixtures::code("gf9-14-4");
    const Field& F = c.field();
    EXPECT_EQ(code_of([&] { extend_one_with_hull(c, 0, 4, F.one(), F.omega(), F.one()); }),
              ErrorCode::HullTargetOutOfRange);
    EXPECT_EQ(code_of([&] { extend_one_with_hull(c, 0, 1, F.one(), F.omega(), F.omega()); }), ErrorCode::BadLambda);
    EXPECT_EQ(code_of([&] { extend_one_with_hull(c, 0, 1, F.zero(), F.omega(), F.one()); }), ErrorCode::BadAlpha);
    // beta = 1 makes every factor but the last vanish
    EXPECT_EQ(code_of([&] { extend_one_with_hull(c, 0, 1, F.one(), F.one(), F.one()); }),
              ErrorCode::DeterminantCondition);
}

TEST(ReduceHull, Examples) {
    const LinearCode c4 = fixtures::code("gf4-4-2");
    const Field& F4 = c4.field();
    const LinearCode c6 = extend_self_orthogonal(c4, 1, {1, {F4.omega(), F4.omega()}}, F4.one());
    EXPECT_TRUE(reduce_hull_dim(c6, 1, 2).same_code(c6));
    EXPECT_EQ(code_of([&] { reduce_hull_dim(c6, 1, 0); }), ErrorCode::NoScalingElement);
    for (u64 g = 0; g < 3; ++g) EXPECT_EQ(oracle::power(F4, F4.exp(g), 3), F4.one());

    const LinearCode g14 = grs14();
    const LinearCode r = reduce_hull_dim(g14, 2, 1);
    EXPECT_EQ(hull(r, 2).dim_hull, 1u);
    EXPECT_EQ(min_distance(r).d, 13u);
}

TEST(ReduceHull, SearchFallback) {
    const LinearCode c4 = fixtures::code("gf4-4-2");
    const Field& F4 = c4.field();
    const LinearCode c6 = extend_self_orthogonal(c4, 1, {1, {F4.omega(), F4.omega()}}, F4.one());
    for (std::size_t l : {0, 1}) {
        auto v = search_hull_variant(c6, 1, l, 1'000'000);
        ASSERT_TRUE(v);
        EXPECT_EQ(oracle::hull_dim(*v, 1), l);
        EXPECT_EQ(oracle::distance(*v), 4u);
    }
    EXPECT_FALSE(search_hull_variant(c6, 1, 0, 10).has_value());
}

TEST(GrsExtension, OneColumn) {
    const GrsSpec s = hso_mds_coset(Field::create(3, 4), 2, 7, 2);
    for (Element gamma : {s.field->one(), s.field->omega()}) {
        const LinearCode out = extend_grs_one(s, 2, gamma);
        EXPECT_EQ(out.n(), 15u);
        EXPECT_EQ(hull(out, 2).dim_hull, 1u);
        EXPECT_TRUE(mds_certificate(out));
        EXPECT_EQ(min_distance(out).d, 14u);
    }
    GrsSpec plain{s.field, s.locators, std::vector<Element>(14, s.field->one()), 2};
    EXPECT_EQ(code_of([&] { extend_grs_one(plain, 2, plain.field->one()); }), ErrorCode::NotSelfOrthogonal);
}
