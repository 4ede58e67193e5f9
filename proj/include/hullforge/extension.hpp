/**************************************************************************
 * extension.hpp
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

#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "code.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace hullforge {

/// Nonzero values whose (p^e + 1)-th powers sum to zero.
struct AlphaTuple {
    u64 e = 0;
    std::vector<Element> values;
};

enum class AlphaCase { p_even, odd_case_2, odd_case_3, none };

inline const char* to_string(AlphaCase c) {
    switch (c) {
    case AlphaCase::p_even: return "p_even";
    case AlphaCase::odd_case_2: return "odd_case_2";
    case AlphaCase::odd_case_3: return "odd_case_3";
    case AlphaCase::none: return "none";
    }
    return "?";
}

struct ConditionReport {
    AlphaCase kind = AlphaCase::none;
    std::optional<u64> t0;
    std::optional<std::array<Element, 3>> triple;
};

/// p^e + 1, the exponent of the twisted norm x -> x sigma^e(x).
inline u64 norm_exponent(const Field& f, u64 e) { return ipow(f.p(), e) + 1; }

inline bool alpha_tuple_valid(const Field& f, u64 e, const std::vector<Element>& values) {
    if (values.empty()) return false;
    Element sum = f.zero();
    for (Element a : values) {
        if (a.is_zero() || !f.contains(a)) return false;
        sum = f.add(sum, f.galois_norm(a, e));
    }
    return sum.is_zero();
}

namespace detail {

// Smallest omega-exponent realising each norm value; -1 when not a norm.
inline std::vector<std::int64_t> norm_preimages(const Field& f, u64 e) {
    std::vector<std::int64_t> first(f.q(), -1);
    for (u64 j = 0; j + 1 < f.q(); ++j) {
        const Element nv = f.galois_norm(f.exp(j), e);
        if (first[nv.value] < 0) first[nv.value] = static_cast<std::int64_t>(j);
    }
    return first;
}

inline std::optional<std::array<Element, 3>> least_triple(const Field& f, u64 e, u64 budget) {
    const auto pre = norm_preimages(f, e);
    u64 steps = 0;
    for (u64 j1 = 0; j1 + 1 < f.q(); ++j1) {
        const Element n1 = f.galois_norm(f.exp(j1), e);
        for (u64 j2 = 0; j2 + 1 < f.q(); ++j2) {
            if (++steps > budget) return std::nullopt;
            const Element target = f.neg(f.add(n1, f.galois_norm(f.exp(j2), e)));
            if (target.is_zero() || pre[target.value] < 0) continue;
            return std::array<Element, 3>{f.exp(j1), f.exp(j2), f.exp(static_cast<u64>(pre[target.value]))};
        }
    }
    return std::nullopt;
}

// Lexicographically least exponent tuple of the given length: greedy choice
// guided by the sets of sums reachable with r norm values.
inline std::optional<std::vector<Element>> least_tuple(const Field& f, u64 e, std::size_t len, u64 budget) {
    const auto pre = norm_preimages(f, e);
    std::vector<Element> norms;
    for (u64 v = 0; v < f.q(); ++v)
        if (pre[v] >= 0) norms.push_back(Element{static_cast<std::uint32_t>(v)});
    const u64 work = static_cast<u64>(len) * f.q() * norms.size();
    if (work > budget) return std::nullopt;

    std::vector<std::vector<char>> reach(len + 1, std::vector<char>(f.q(), 0));
    reach[0][0] = 1;
    for (std::size_t r = 1; r <= len; ++r)
        for (u64 s = 0; s < f.q(); ++s) {
            if (!reach[r - 1][s]) continue;
            for (Element nv : norms) reach[r][f.add(Element{static_cast<std::uint32_t>(s)}, nv).value] = 1;
        }
    if (!reach[len][0]) return std::nullopt;

    std::vector<Element> out;
    Element sum = f.zero();
    for (std::size_t pos = 0; pos < len; ++pos) {
        const std::size_t rem = len - pos - 1;
        for (u64 j = 0; j + 1 < f.q(); ++j) {
            const Element s2 = f.add(sum, f.galois_norm(f.exp(j), e));
            if (reach[rem][f.neg(s2).value]) {
                out.push_back(f.exp(j));
                sum = s2;
                break;
            }
        }
    }
    return out;
}

} // namespace detail

/// Which sufficient condition for the existence of alpha pairs holds, the
/// least t0 when p is odd, and the least exponent triple (if any).
inline ConditionReport alpha_conditions(const Field& f, u64 e, const Budget& budget = Budget::defaults()) {
    if (e >= f.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    ConditionReport r;
    const u64 g = std::gcd(e, f.h());
    const u64 half = (f.q() - 1) / 2;
    if (f.p() == 2) {
        r.kind = AlphaCase::p_even;
    } else {
        r.t0 = solve_t0(f, e);
        if ((f.h() / g) % 2 == 1 && half % 2 == 0)
            r.kind = AlphaCase::odd_case_2;
        else if ((f.h() / g) % 2 == 0 && half % (ipow(f.p(), g) + 1) == 0)
            r.kind = AlphaCase::odd_case_3;
    }
    r.triple = detail::least_triple(f, e, budget.alpha);
    return r;
}

/// A valid alpha tuple of length i: closed-form pairs (plus a triple when i
/// is odd), falling back to the lexicographically least tuple.
inline std::optional<AlphaTuple> find_alpha_tuple(const Field& f, u64 e, std::size_t i,
                                                  const Budget& budget = Budget::defaults()) {
    if (i < 2) fail(ErrorCode::BadLength, "alpha tuples need length >= 2");
    if (e >= f.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");

    std::optional<std::array<Element, 2>> pair;
    if (f.p() == 2)
        pair = std::array<Element, 2>{f.one(), f.one()};
    else if (auto t0 = solve_t0(f, e))
        pair = std::array<Element, 2>{f.exp(*t0), f.one()};

    std::vector<Element> values;
    if (pair && i % 2 == 0) {
        for (std::size_t s = 0; s < i / 2; ++s) values.insert(values.end(), pair->begin(), pair->end());
    } else if (pair) {
        if (auto tri = detail::least_triple(f, e, budget.alpha)) {
            values.assign(tri->begin(), tri->end());
            for (std::size_t s = 0; s < (i - 3) / 2; ++s) values.insert(values.end(), pair->begin(), pair->end());
        }
    }
    if (values.empty()) {
        auto found = detail::least_tuple(f, e, i, budget.alpha);
        if (!found) return std::nullopt;
        values = std::move(*found);
    }
    if (!alpha_tuple_valid(f, e, values)) fail(ErrorCode::InternalMismatch, "constructed alpha tuple is invalid");
    return AlphaTuple{e, std::move(values)};
}

namespace detail {

inline void require_self_orthogonal(const LinearCode& c, u64 e) {
    if (!classify(c, e).self_orthogonal)
        fail(ErrorCode::NotSelfOrthogonal, "code is not " + std::to_string(e) + "-Galois self-orthogonal");
}

} // namespace detail

/// Lengthens an e-Galois self-orthogonal code by i = |alphas| columns. The
/// generator is brought to reduced echelon form, its pivot columns are scaled
/// by beta and one constant column per alpha is appended. Column order of the
/// input is kept.
inline LinearCode extend_self_orthogonal(const LinearCode& c, u64 e, const AlphaTuple& alphas, Element beta) {
    const Field& F = c.field();
    if (e >= F.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    detail::require_self_orthogonal(c, e);
    if (beta.is_zero() || !F.contains(beta) || F.galois_norm(beta, e) != F.one())
        fail(ErrorCode::BadBeta, "beta must satisfy beta^(p^e+1) = 1");
    if (alphas.values.size() == 1) fail(ErrorCode::LengthOne, "a single appended column cannot keep self-orthogonality");
    if (!alphas.values.empty() && (alphas.e != e || !alpha_tuple_valid(F, e, alphas.values)))
        fail(ErrorCode::BadAlphaTuple, "alpha tuple does not satisfy the norm-sum condition");

    RrefResult rr = rref(c.generator());
    Matrix g = rr.reduced;
    for (std::size_t r = 0; r < rr.rank; ++r) g(r, rr.pivots[r]) = beta;
    Matrix extra(c.field_ptr(), c.k(), alphas.values.size());
    for (std::size_t r = 0; r < c.k(); ++r)
        for (std::size_t j = 0; j < alphas.values.size(); ++j) extra(r, j) = alphas.values[j];
    return LinearCode(hstack(g, extra));
}

/// Closed form of det((beta^N - 1) I + alpha^N J) for the (k-l)-square block,
/// N = p^e + 1.
inline Element hull_determinant(const Field& f, u64 e, std::size_t k, std::size_t l, Element alpha, Element beta) {
    const Element bn1 = f.sub(f.galois_norm(beta, e), f.one());
    const Element an = f.galois_norm(alpha, e);
    const std::size_t m = k - l;
    return f.mul(f.pow(bn1, m - 1), f.add(f.mul(f.from_int(static_cast<std::int64_t>(m)), an), bn1));
}

/// The explicit (k-l)-square block whose determinant hull_determinant predicts.
inline Matrix hull_block(const FieldPtr& f, u64 e, std::size_t k, std::size_t l, Element alpha, Element beta) {
    const std::size_t m = k - l;
    Matrix d(f, m, m);
    const Element an = f->galois_norm(alpha, e);
    const Element bn1 = f->sub(f->galois_norm(beta, e), f->one());
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) d(i, j) = i == j ? f->add(an, bn1) : an;
    return d;
}

/// Adds one column to an e-Galois self-orthogonal [n, k] code so that the
/// result has an l-dimensional e-Galois hull. The first k - l pivot columns
/// are scaled by beta, the remaining l by lambda, and the appended column is
/// alpha on the first k - l rows and zero below.
inline LinearCode extend_one_with_hull(const LinearCode& c, u64 e, std::size_t l, Element alpha, Element beta,
                                       Element lambda) {
    const Field& F = c.field();
    if (e >= F.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    detail::require_self_orthogonal(c, e);
    const std::size_t k = c.k();
    if (l >= k) fail(ErrorCode::HullTargetOutOfRange, "hull target must satisfy 0 <= l <= k-1");
    if (lambda.is_zero() || !F.contains(lambda) || F.galois_norm(lambda, e) != F.one())
        fail(ErrorCode::BadLambda, "lambda must satisfy lambda^(p^e+1) = 1");
    if (alpha.is_zero() || !F.contains(alpha)) fail(ErrorCode::BadAlpha, "alpha must be nonzero");
    if (beta.is_zero() || !F.contains(beta)) fail(ErrorCode::BadBeta, "beta must be nonzero");
    if (hull_determinant(F, e, k, l, alpha, beta).is_zero())
        fail(ErrorCode::DeterminantCondition, "alpha and beta make the hull block singular");

    RrefResult rr = rref(c.generator());
    Matrix g = rr.reduced;
    for (std::size_t r = 0; r < k; ++r) g(r, rr.pivots[r]) = r < k - l ? beta : lambda;
    Matrix col(c.field_ptr(), k, 1);
    for (std::size_t r = 0; r < k - l; ++r) col(r, 0) = alpha;
    return LinearCode(hstack(g, col));
}

/// Smallest omega^j with (omega^j)^(p^e+1) != 1, if any.
inline std::optional<Element> scaling_element(const Field& f, u64 e) {
    const u64 n = norm_exponent(f, e) % (f.q() - 1);
    if (n == 0) return std::nullopt;
    for (u64 j = 1; j + 1 < f.q(); ++j)
        if (mulmod(j, n, f.q() - 1) != 0) return f.exp(j);
    return std::nullopt;
}

/// Monomially equivalent copy of an e-Galois self-orthogonal code whose
/// e-Galois hull has dimension exactly l: the first k - l pivot columns are
/// scaled by the smallest gamma with gamma^(p^e+1) != 1.
inline LinearCode reduce_hull_dim(const LinearCode& c, u64 e, std::size_t l) {
    const Field& F = c.field();
    if (e >= F.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    detail::require_self_orthogonal(c, e);
    if (l > c.k()) fail(ErrorCode::HullTargetOutOfRange, "hull target must satisfy 0 <= l <= k");
    if (l == c.k()) return c;
    auto gamma = scaling_element(F, e);
    if (!gamma)
        fail(ErrorCode::NoScalingElement,
             "every element of GF(" + F.label() + ")^* satisfies x^(p^e+1) = 1 for e = " + std::to_string(e));
    RrefResult rr = rref(c.generator());
    Matrix g = rr.reduced;
    for (std::size_t r = 0; r < c.k() - l; ++r) g(r, rr.pivots[r]) = *gamma;
    return LinearCode(g);
}

/// Exhaustive fallback for fields where no diagonal scaling changes the hull
/// (every nonzero x has x^(p^e+1) = 1, e.g. GF(4) with e = 1): the first
/// systematic [n, k] code, in lexicographic order of its redundancy part,
/// with the same minimum distance as c and an l-dimensional e-Galois hull.
/// nullopt when none exists within q^(k(n-k)) <= budget.
inline std::optional<LinearCode> search_hull_variant(const LinearCode& c, u64 e, std::size_t l, u64 budget) {
    const Field& F = c.field();
    if (e >= F.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    if (l > c.k()) fail(ErrorCode::HullTargetOutOfRange, "hull target must satisfy 0 <= l <= k");
    const std::size_t k = c.k(), r = c.n() - c.k();
    auto total = checked_pow(F.q(), k * r);
    if (!total || *total > budget) return std::nullopt;
    const DistanceResult target = min_distance(c);
    if (!target.exact) return std::nullopt;

    Matrix g = Matrix::identity(c.field_ptr(), k);
    g = hstack(g, Matrix(c.field_ptr(), k, r));
    for (u64 idx = 0; idx < *total; ++idx) {
        u64 v = idx;
        for (std::size_t pos = k * r; pos-- > 0;) {
            g(pos / r, k + pos % r) = Element{static_cast<std::uint32_t>(v % F.q())};
            v /= F.q();
        }
        if (k - rank(gram(g, e)) != l) continue;
        const LinearCode cand(g);
        if (min_distance(cand).d == target.d) return cand;
    }
    return std::nullopt;
}

} // namespace hullforge
