/**************************************************************************
 * test_matrix.cpp
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

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"

using namespace hullforge;

namespace {

Matrix lit(const FieldPtr& f, const std::string& text) { return fixtures::parse_matrix(f, text); }

// Leibniz expansion.
Element leibniz(const Matrix& m) {
    const Field& f = m.field();
    std::vector<std::size_t> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    Element det = f.zero();
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        Element term = f.one();
        for (std::size_t i = 0; i < perm.size(); ++i) term = f.mul(term, m(i, perm[i]));
        det = inversions % 2 ? f.sub(det, term) : f.add(det, term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

TEST(Matrix, RrefIdentityAndZero) {
    auto F4 = Field::create(2, 2);
    const Matrix id = Matrix::identity(F4, 3);
    EXPECT_EQ(rref(id).reduced, id);
    EXPECT_EQ(rank(id), 3u);
    const Matrix z(F4, 2, 5);
    EXPECT_EQ(rref(z).reduced, z);
    EXPECT_EQ(rank(z), 0u);
}

TEST(Matrix, RankOfScalarMultiple) {
    auto F4 = Field::create(2, 2);
    EXPECT_EQ(rank(lit(F4, "1 w\nw w^2")), 1u);
}

TEST(Matrix, KernelExamples) {
    auto F3 = Field::create(3, 1);
    EXPECT_EQ(kernel(lit(F3, "1 1")), lit(F3, "1 2"));
    EXPECT_EQ(kernel(Matrix::identity(F3, 4)).rows(), 0u);
    EXPECT_EQ(kernel(Matrix(F3, 1, 5)).rows(), 5u);
}

TEST(Matrix, KernelIsOrthogonalComplement) {
    std::mt19937_64 rng(11);
    for (u64 q : {2, 4, 9, 27}) {
        auto F = field_of_order(q);
        for (int it = 0; it < 30; ++it) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 8;
            const Matrix m = oracle::random_matrix(F, r, c, rng);
            const Matrix k = kernel(m);
            EXPECT_EQ(k.rows(), c - rank(m));
            if (k.rows()) {
                EXPECT_TRUE(multiply(m, transpose(k)).is_zero());
                EXPECT_EQ(rank(k), k.rows());
            }
        }
    }
}

TEST(Matrix, GramOfZeroAndIdentity) {
    auto F8 = Field::create(2, 3);
    const Matrix z(F8, 3, 6);
    for (u64 e = 0; e < 3; ++e) EXPECT_TRUE(gram(z, e).is_zero());
    const Matrix id = Matrix::identity(F8, 4);
    for (u64 e = 0; e < 3; ++e) EXPECT_EQ(gram(id, e), id);
}

TEST(Matrix, GramMatchesInnerProducts) {
    std::mt19937_64 rng(3);
    auto F = field_of_order(27);
    const Matrix g = oracle::random_matrix(F, 3, 7, rng);
    for (u64 e = 0; e < 3; ++e) {
        const Matrix gm = gram(g, e);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                Element s = F->zero();
                for (std::size_t t = 0; t < 7; ++t) s = F->add(s, F->mul(g(i, t), oracle::frob(*F, g(j, t), e)));
                EXPECT_EQ(gm(i, j), s);
            }
    }
    EXPECT_THROW(gram(g, 4), Error);
}

TEST(Matrix, StandardForm) {
    auto F2 = Field::create(2, 1);
    const Matrix g = lit(F2, "1 0 1 0\n0 1 0 1");
    const StandardForm sf = standard_form(g);
    EXPECT_EQ(sf.systematic, g);
    EXPECT_EQ(sf.permutation, (std::vector<std::size_t>{0, 1, 2, 3}));

    const StandardForm swapped = standard_form(lit(F2, "0 1 1"));
    EXPECT_EQ(swapped.permutation, (std::vector<std::size_t>{1, 0, 2}));
    EXPECT_EQ(swapped.systematic, lit(F2, "1 0 1"));

    EXPECT_THROW(standard_form(lit(F2, "1 1\n1 1")), Error);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
    std::mt19937_64 rng(5);
    for (u64 q : {3, 8, 25}) {
        auto F = field_of_order(q);
        for (int it = 0; it < 40; ++it) {
            const std::size_t n = 1 + rng() % 5;
            const Matrix m = oracle::random_matrix(F, n, n, rng);
            EXPECT_EQ(determinant(m), leibniz(m));
            EXPECT_EQ(determinant(m).is_zero(), rank(m) < n);
        }
    }
}

TEST(Matrix, StackingAndSelection) {
    auto F3 = Field::create(3, 1);
    const Matrix a = lit(F3, "1 2\n0 1");
    const Matrix b = lit(F3, "2 2");
    EXPECT_EQ(vstack(a, b), lit(F3, "1 2\n0 1\n2 2"));
    EXPECT_EQ(hstack(a, lit(F3, "1\n2")), lit(F3, "1 2 1\n0 1 2"));
    EXPECT_EQ(select_columns(a, {1, 0}), lit(F3, "2 1\n1 0"));
    EXPECT_TRUE(same_row_space(a, Matrix::identity(F3, 2)));
    EXPECT_FALSE(same_row_space(b, lit(F3, "1 0")));
    EXPECT_THROW(vstack(a, lit(F3, "1 1 1")), Error);
}

TEST(Matrix, MultiplyAssociatesAndFrobeniusDistributes) {
    std::mt19937_64 rng(9);
    auto F = field_of_order(16);
    const Matrix a = oracle::random_matrix(F, 3, 4, rng), b = oracle::random_matrix(F, 4, 2, rng),
                 c = oracle::random_matrix(F, 2, 5, rng);
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    for (u64 e = 0; e <= 4; ++e) EXPECT_EQ(frobenius(multiply(a, b), e), multiply(frobenius(a, e), frobenius(b, e)));
}
