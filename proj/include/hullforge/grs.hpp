/**************************************************************************
 * grs.hpp
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

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "code.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace hullforge {

/// GRS_k(a, v): evaluations v_i f(a_i) of all f with deg f < k.
struct GrsSpec {
    FieldPtr field;
    std::vector<Element> locators;
    std::vector<Element> multipliers;
    std::size_t k = 0;

    std::size_t n() const { return locators.size(); }
};

inline void validate(const GrsSpec& s) {
    std::set<std::uint32_t> seen;
    for (Element a : s.locators)
        if (!seen.insert(a.value).second) fail(ErrorCode::DuplicateLocators, "code locators must be distinct");
    if (s.multipliers.size() != s.locators.size())
        fail(ErrorCode::DimensionMismatch, "one multiplier per locator is required");
    for (Element v : s.multipliers)
        if (v.is_zero()) fail(ErrorCode::ZeroMultiplier, "column multipliers must be nonzero");
    if (s.k < 1 || s.k > s.n()) fail(ErrorCode::KOutOfRange, "GRS dimension must satisfy 1 <= k <= n");
}

/// Row r holds v_i a_i^r.
inline LinearCode grs_generator(const GrsSpec& s) {
    validate(s);
    const Field& F = *s.field;
    Matrix g(s.field, s.k, s.n());
    for (std::size_t i = 0; i < s.n(); ++i) {
        Element x = s.multipliers[i];
        for (std::size_t r = 0; r < s.k; ++r) {
            g(r, i) = x;
            x = F.mul(x, s.locators[i]);
        }
    }
    return LinearCode(g);
}

/// u_i = prod_{j != i} (a_i - a_j)^{-1}.
inline std::vector<Element> u_vector(const Field& F, const std::vector<Element>& a) {
    std::set<std::uint32_t> seen;
    for (Element x : a)
        if (!seen.insert(x.value).second) fail(ErrorCode::DuplicateLocators, "code locators must be distinct");
    std::vector<Element> u(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        Element prod = F.one();
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) prod = F.mul(prod, F.sub(a[i], a[j]));
        u[i] = F.inv(prod);
    }
    return u;
}

/// Polynomial evaluation, coefficients little-endian.
inline Element poly_eval(const Field& F, const std::vector<Element>& coeffs, Element x) {
    Element acc = F.zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = F.add(F.mul(acc, x), coeffs[i]);
    return acc;
}

inline long poly_degree(const std::vector<Element>& coeffs) {
    for (std::size_t i = coeffs.size(); i-- > 0;)
        if (!coeffs[i].is_zero()) return static_cast<long>(i);
    return -1;
}

/// Whether the codeword (v_i f(a_i)) lies in the Hermitian dual of GRS_k(a, v)
/// by the criterion: deg(hpoly * f^sqrt(q)) <= n - k - 1 and
/// lambda u_i hpoly(a_i) = v_i^(sqrt(q)+1) for every i.
inline bool hermitian_membership(const GrsSpec& s, const std::vector<Element>& f, const std::vector<Element>& hpoly,
                                 Element lambda) {
    const Field& F = *s.field;
    if (F.h() % 2 != 0) fail(ErrorCode::OddExtension, "the Hermitian form needs an even extension degree");
    validate(s);
    if (lambda.is_zero()) fail(ErrorCode::Zero, "lambda must be nonzero");
    const long df = poly_degree(f);
    const long dh = poly_degree(hpoly);
    if (dh < 0 || hpoly[static_cast<std::size_t>(dh)] != F.one()) fail(ErrorCode::BadArgs, "h must be monic");
    if (df >= 0) {
        const long deg = dh + static_cast<long>(F.sqrt_q()) * df;
        if (deg > static_cast<long>(s.n()) - static_cast<long>(s.k) - 1) return false;
    }
    const u64 e = F.h() / 2;
    const auto u = u_vector(F, s.locators);
    for (std::size_t i = 0; i < s.n(); ++i)
        if (F.mul(lambda, F.mul(u[i], poly_eval(F, hpoly, s.locators[i]))) != F.galois_norm(s.multipliers[i], e))
            return false;
    return true;
}

/// Multiplicative-coset family: t cosets of the order-n' subgroup, all
/// inside the subgroup of order (sqrt(q)-1) n2.
struct CosetFamily {
    FieldPtr field;
    u64 n_prime = 0;
    u64 t = 0;
    u64 n1 = 0;
    u64 n2 = 0;
    std::vector<u64> rep_exponents; // beta_b = omega^rep_exponents[b]

    u64 n() const { return n_prime * t; }
};

inline u64 coset_k_bound(u64 sqrt_q, u64 n_prime, u64 t) { return (sqrt_q + n_prime * (t - 1)) / (sqrt_q + 1); }

inline CosetFamily coset_family(const FieldPtr& field, u64 n_prime, u64 t) {
    const Field& F = *field;
    const u64 s = F.sqrt_q();
    const u64 m = F.q() - 1;
    if (n_prime == 0 || m % n_prime != 0)
        fail(ErrorCode::BadDivisor, "n' = " + std::to_string(n_prime) + " does not divide q-1");
    CosetFamily fam;
    fam.field = field;
    fam.n_prime = n_prime;
    fam.t = t;
    fam.n2 = std::gcd(n_prime, s + 1);
    fam.n1 = n_prime / fam.n2;
    if (t < 1 || t > (s - 1) / fam.n1)
        fail(ErrorCode::TOutOfRange, "t must satisfy 1 <= t <= (sqrt(q)-1)/n1 = " + std::to_string((s - 1) / fam.n1));
    // omega^x G = omega^y G iff x = y mod (q-1)/n'.
    const u64 step = (s + 1) / fam.n2;
    const u64 cos_mod = m / n_prime;
    std::set<u64> used;
    for (u64 j = 0; fam.rep_exponents.size() < t && j * step < m; ++j)
        if (used.insert((j * step) % cos_mod).second) fam.rep_exponents.push_back(j * step);
    if (fam.rep_exponents.size() < t) fail(ErrorCode::CosetOverlap, "not enough distinct cosets");
    return fam;
}

/// beta_b theta^l for each representative b and l = 0..n'-1, theta = omega^((q-1)/n').
inline std::vector<Element> coset_locators(const CosetFamily& fam) {
    const Field& F = *fam.field;
    const Element theta = F.exp((F.q() - 1) / fam.n_prime);
    std::vector<Element> out;
    std::set<std::uint32_t> seen;
    for (u64 x : fam.rep_exponents) {
        Element a = F.exp(x);
        for (u64 l = 0; l < fam.n_prime; ++l) {
            if (!seen.insert(a.value).second) fail(ErrorCode::CosetOverlap, "cosets overlap");
            out.push_back(a);
            a = F.mul(a, theta);
        }
    }
    return out;
}

/// u_i from the coset structure: n'^{-1} a_i beta_b^{-n'} prod_{s != b} (beta_b^{n'} - beta_s^{n'})^{-1}.
inline std::vector<Element> coset_u_closed_form(const CosetFamily& fam) {
    const Field& F = *fam.field;
    const auto a = coset_locators(fam);
    std::vector<Element> bn;
    for (u64 x : fam.rep_exponents) bn.push_back(F.pow(F.exp(x), fam.n_prime));
    const Element n_inv = F.inv(F.from_int(static_cast<std::int64_t>(fam.n_prime % F.p())));
    std::vector<Element> u;
    for (std::size_t b = 0; b < bn.size(); ++b) {
        Element c = F.mul(n_inv, F.inv(bn[b]));
        for (std::size_t s = 0; s < bn.size(); ++s)
            if (s != b) c = F.mul(c, F.inv(F.sub(bn[b], bn[s])));
        for (u64 l = 0; l < fam.n_prime; ++l) u.push_back(F.mul(c, a[b * fam.n_prime + l]));
    }
    return u;
}

namespace detail {

// v_i with v_i^(sqrt(q)+1) = u_i a_i^(w-1); also checks that the argument lies
// in GF(sqrt q)^*.
inline std::vector<Element> hermitian_multipliers(const Field& F, const std::vector<Element>& a,
                                                  const std::vector<Element>& u, u64 w) {
    std::vector<Element> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Element x = F.mul(u[i], F.pow(a[i], w - 1));
        if (x.is_zero() || F.pow(x, F.sqrt_q() - 1) != F.one())
            fail(ErrorCode::InternalMismatch, "a_i^(w-1) u_i is not in GF(sqrt q)^*");
        v[i] = norm_root(F, x);
    }
    return v;
}

inline void require_hermitian_self_orthogonal(const GrsSpec& s) {
    const LinearCode c = grs_generator(s);
    if (!gram(c.generator(), s.field->h() / 2).is_zero())
        fail(ErrorCode::InternalMismatch, "constructed GRS code is not Hermitian self-orthogonal");
}

} // namespace detail

/// Hermitian self-orthogonal MDS GRS code from the coset family.
inline GrsSpec hso_mds_coset(const FieldPtr& field, u64 n_prime, u64 t, std::size_t k) {
    const CosetFamily fam = coset_family(field, n_prime, t);
    const u64 bound = coset_k_bound(field->sqrt_q(), n_prime, t);
    if (k < 1 || k > bound)
        fail(ErrorCode::KOutOfRange, "k must satisfy 1 <= k <= " + std::to_string(bound));
    GrsSpec s{field, coset_locators(fam), {}, k};
    const auto u = u_vector(*field, s.locators);
    s.multipliers = detail::hermitian_multipliers(*field, s.locators, u, n_prime);
    detail::require_hermitian_self_orthogonal(s);
    return s;
}

/// Direct-product family: N_i = beta1^i <beta2> for i = 1..n1.
struct ProductFamily {
    FieldPtr field;
    u64 x1 = 0, x2 = 0;
    u64 n1 = 0, n2 = 0;

    u64 n() const { return n1 * n2; }
};

inline u64 product_k_bound(u64 sqrt_q, u64 n1, u64 n2) { return (sqrt_q + n2 * (n1 - 1)) / (sqrt_q + 1); }

inline ProductFamily product_family(const FieldPtr& field, u64 x1, u64 x2, u64 n1) {
    const Field& F = *field;
    if (F.p() == 2) fail(ErrorCode::ConditionViolated, "the product family needs odd q");
    const u64 s = F.sqrt_q();
    const u64 m = F.q() - 1;
    if (x1 == 0 || x2 == 0) fail(ErrorCode::ConditionViolated, "x1 and x2 must be positive");
    if (std::lcm(x1, x2) % m != 0) fail(ErrorCode::ConditionViolated, "q-1 does not divide lcm(x1, x2)");
    if ((x1 % m) * (s - 1) % std::gcd(x2, m) != 0)
        fail(ErrorCode::ConditionViolated, "gcd(x2, q-1) does not divide x1 (sqrt(q)-1)");
    const u64 ord1 = m / std::gcd(x1, m);
    if (n1 < 1 || n1 > ord1) fail(ErrorCode::ConditionViolated, "n1 must satisfy 1 <= n1 <= ord(beta1)");
    return {field, x1, x2, n1, m / std::gcd(x2, m)};
}

/// beta1^i beta2^j, i = 1..n1 (outer), j = 0..n2-1 (inner).
inline std::vector<Element> product_locators(const ProductFamily& fam) {
    const Field& F = *fam.field;
    const Element b1 = F.exp(fam.x1), b2 = F.exp(fam.x2);
    std::vector<Element> out;
    std::set<std::uint32_t> seen;
    Element base = b1;
    for (u64 i = 1; i <= fam.n1; ++i) {
        Element a = base;
        for (u64 j = 0; j < fam.n2; ++j) {
            if (!seen.insert(a.value).second) fail(ErrorCode::Overlap, "product sets overlap");
            out.push_back(a);
            a = F.mul(a, b2);
        }
        base = F.mul(base, b1);
    }
    return out;
}

/// u_i from the product structure: a_i beta1^{-s n2} n2^{-1} prod_{s' != s} (beta1^{s n2} - beta1^{s' n2})^{-1}.
inline std::vector<Element> product_u_closed_form(const ProductFamily& fam) {
    const Field& F = *fam.field;
    const auto a = product_locators(fam);
    const Element b1 = F.exp(fam.x1);
    std::vector<Element> pw; // beta1^{s n2}, s = 1..n1
    for (u64 s = 1; s <= fam.n1; ++s) pw.push_back(F.pow(b1, s * fam.n2));
    const Element n2_inv = F.inv(F.from_int(static_cast<std::int64_t>(fam.n2 % F.p())));
    std::vector<Element> u;
    for (std::size_t s = 0; s < pw.size(); ++s) {
        Element c = F.mul(n2_inv, F.inv(pw[s]));
        for (std::size_t t = 0; t < pw.size(); ++t)
            if (t != s) c = F.mul(c, F.inv(F.sub(pw[s], pw[t])));
        for (u64 j = 0; j < fam.n2; ++j) u.push_back(F.mul(c, a[s * fam.n2 + j]));
    }
    return u;
}

/// Hermitian self-orthogonal MDS GRS code from the product family.
inline GrsSpec hso_mds_product(const FieldPtr& field, u64 x1, u64 x2, u64 n1, std::size_t k) {
    const ProductFamily fam = product_family(field, x1, x2, n1);
    const u64 bound = product_k_bound(field->sqrt_q(), fam.n1, fam.n2);
    if (k < 1 || k > bound)
        fail(ErrorCode::KOutOfRange, "k must satisfy 1 <= k <= " + std::to_string(bound));
    GrsSpec s{field, product_locators(fam), {}, k};
    const auto u = u_vector(*field, s.locators);
    s.multipliers = detail::hermitian_multipliers(*field, s.locators, u, fam.n2);
    detail::require_hermitian_self_orthogonal(s);
    return s;
}

/// Appends the column (0, ..., 0, gamma) to an e-Galois self-orthogonal GRS
/// code, giving an [n+1, k, n-k+2] MDS code with a (k-1)-dimensional hull.
inline LinearCode extend_grs_one(const GrsSpec& s, u64 e, Element gamma) {
    const LinearCode c = grs_generator(s);
    if (e >= s.field->h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    if (!gram(c.generator(), e).is_zero())
        fail(ErrorCode::NotSelfOrthogonal, "GRS code is not " + std::to_string(e) + "-Galois self-orthogonal");
    if (gamma.is_zero()) fail(ErrorCode::Zero, "gamma must be nonzero");
    Matrix col(s.field, s.k, 1);
    col(s.k - 1, 0) = gamma;
    return LinearCode(hstack(c.generator(), col));
}

} // namespace hullforge
