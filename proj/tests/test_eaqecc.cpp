/**************************************************************************
 * test_eaqecc.cpp
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

EaqeccParams q(u64 a, u64 n, u64 k, u64 d, u64 c) { return {a, n, k, d, c, false, true, ""}; }

LinearCode hermitian_6_2_4() {
    const LinearCode c4 = fixtures::code("gf4-4-2");
    const Field& F = c4.field();
    return extend_self_orthogonal(c4, 1, {1, {F.omega(), F.omega()}}, F.one());
}

} // namespace

TEST(Eaqecc, SingletonCheck) {
    EXPECT_TRUE(ea_singleton_check(q(2, 7, 7, 1, 0)).mds);
    const SingletonCheck s = ea_singleton_check(q(2, 6, 2, 4, 4));
    EXPECT_TRUE(s.bound_ok);
    EXPECT_FALSE(s.mds);
    EXPECT_TRUE(ea_singleton_check(q(9, 40, 32, 5, 0)).mds);
    EXPECT_FALSE(ea_singleton_check(q(9, 40, 33, 5, 0)).bound_ok);
}

TEST(Eaqecc, Rates) {
    const RateReport r = rates(q(2, 6, 4, 2, 2));
    EXPECT_EQ(r.rate, Rational(2, 3));
    EXPECT_EQ(r.net_rate, Rational(1, 3));
    EXPECT_TRUE(r.rate_at_least_half);
    EXPECT_TRUE(r.net_rate_positive);
    const RateReport z = rates(q(2, 10, 0, 3, 4));
    EXPECT_EQ(z.rate, Rational(0));
    EXPECT_EQ(z.net_rate, Rational(-2, 5));
    EXPECT_EQ(to_string(z.net_rate), "-2/5");
    EXPECT_EQ(to_string(Rational(3)), "3");
}

TEST(Eaqecc, LcdCodeSameField) {
    const LinearCode c = fixtures::code("gf8-10-4");
    const EaqeccPair p = derive_eaqecc(c, 1, Target::same_field);
    EXPECT_EQ(p.hull_dim, 0u);
    EXPECT_EQ(p.q.str(), "[[10,4,6;6]]_8");
    EXPECT_EQ(p.qdual.n, 10u);
    EXPECT_EQ(p.qdual.k, 6u);
    EXPECT_EQ(p.qdual.c, 4u);
    EXPECT_EQ(p.qdual.d, oracle::distance(dual(c, 1)));
}

TEST(Eaqecc, SubfieldFromHermitianSelfOrthogonal) {
    const EaqeccPair p = derive_eaqecc(hermitian_6_2_4(), 1, Target::subfield);
    EXPECT_EQ(p.q.str(), "[[6,0,4;2]]_2");
    EXPECT_EQ(p.qdual.str(), "[[6,2,2;0]]_2");
}

TEST(Eaqecc, Errors) {
    EXPECT_EQ(code_of([] { derive_eaqecc(fixtures::code("gf8-8-5"), 1, Target::subfield); }),
              ErrorCode::SubfieldUnavailable);
    EXPECT_EQ(code_of([] { derive_eaqecc(hermitian_6_2_4(), 0, Target::subfield); }), ErrorCode::SubfieldUnavailable);
    auto F = field_of_order(4);
    EXPECT_EQ(code_of([&] { derive_eaqecc(LinearCode(Matrix::identity(F, 3)), 0, Target::same_field); }),
              ErrorCode::EmptyCode);
}

TEST(Eaqecc, MdsOptionsMatchComputedDistances) {
    const GrsSpec s = hso_mds_coset(Field::create(3, 4), 2, 7, 2);
    const LinearCode c = grs_generator(s);
    const EaqeccPair computed = derive_eaqecc(c, 2, Target::subfield);
    const EaqeccPair given = derive_eaqecc(c, 2, Target::subfield, mds_options(14, 2, 2));
    EXPECT_EQ(computed.q.str(), given.q.str());
    EXPECT_EQ(computed.qdual.str(), given.qdual.str());
    EXPECT_EQ(given.qdual.str(), "[[14,10,3;0]]_9");
    EXPECT_TRUE(given.qdual.mds);
}

TEST(Eaqecc, TablesRegenerate) {
    for (int which : {3, 6, 7, 8}) EXPECT_EQ(table_by_number(which).rows, expected_rows(which)) << which;
    EXPECT_EQ(table7().rows.front(), "3^4,5,8,40,32,5,0");
    EXPECT_EQ(table7().header, "q,n',t,n,k,d,c");
    EXPECT_EQ(table8().rows.back(), "23^2,48,11,10,48,480,444,19,0");
    EXPECT_THROW(table_by_number(5), Error);
}

TEST(Eaqecc, TablesAreDeterministic) {
    for (int which : {3, 6, 7, 8}) EXPECT_EQ(table_by_number(which).str(), table_by_number(which).str());
}

TEST(Eaqecc, TableRowsAreMds) {
    for (const auto& r : coset_ea_rows()) {
        const EaqeccParams p = q(9, r.n, r.qk, r.d, 0);
        EXPECT_TRUE(ea_singleton_check(p).mds);
    }
    for (const auto& r : product_ea_rows()) {
        const EaqeccParams p = q(field_of_order(r.q)->sqrt_q(), r.n, r.qk, r.d, 0);
        EXPECT_TRUE(ea_singleton_check(p).mds);
    }
}

TEST(Eaqecc, PropagateOneColumn) {
    const LinearCode c = fixtures::code("gf9-14-4");
    PropagateOptions opt;
    opt.alpha_one = c.field().exp(6);
    opt.beta_one = c.field().exp(1);
    const auto ps = propagate(c, 0, 1, 1, Target::same_field, opt);
    EXPECT_EQ(ps[0].str(), "[[15,3,10;10]]_9");
    EXPECT_EQ(ps[1].str(), "[[15,10,4;3]]_9");
    // default (alpha, beta) search
    for (std::size_t l = 0; l < 4; ++l) EXPECT_EQ(propagate_code(c, 0, 1, l).n(), 15u);
}

TEST(Eaqecc, PropagateTwoColumns) {
    const LinearCode c = fixtures::code("gf9-13-2");
    PropagateOptions opt;
    opt.alphas = AlphaTuple{1, {c.field().from_int(2), c.field().omega()}};
    EXPECT_EQ(propagate(c, 1, 2, 0, Target::subfield, opt)[0].str(), "[[15,2,13;13]]_3");
    EXPECT_EQ(propagate(c, 1, 2, 2, Target::subfield, opt)[0].str(), "[[15,0,13;11]]_3");
    EXPECT_EQ(propagate(c, 1, 2, 2, Target::subfield, opt)[1].str(), "[[15,11,2;0]]_3");
    // searched alphas give the same parameters
    EXPECT_EQ(propagate(c, 1, 2, 1, Target::subfield)[0].str(), "[[15,1,13;12]]_3");
}
