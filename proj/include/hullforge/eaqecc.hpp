/**************************************************************************
 * eaqecc.hpp
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

#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "code.hpp"
#include "error.hpp"
#include "extension.hpp"
#include "field.hpp"

namespace hullforge {

/// [[n, k, d; c]] over an alphabet of the given size.
struct EaqeccParams {
    u64 alphabet = 0;
    u64 n = 0, k = 0, d = 0, c = 0;
    bool mds = false;
    bool exact = true; // false when d is only a lower bound
    std::string provenance;

    std::string str() const {
        return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ";" + std::to_string(c) +
               "]]_" + std::to_string(alphabet);
    }

    bool same_quadruple(u64 n_, u64 k_, u64 d_, u64 c_) const { return n == n_ && k == k_ && d == d_ && c == c_; }
};

struct SingletonCheck {
    bool bound_ok = false;
    bool mds = false;
};

/// EA-Singleton bound k <= n + c - 2(d - 1), which applies when 2d <= n + 2.
inline SingletonCheck ea_singleton_check(const EaqeccParams& p) {
    const bool applies = 2 * p.d <= p.n + 2;
    const long long rhs = static_cast<long long>(p.n + p.c) - 2 * (static_cast<long long>(p.d) - 1);
    const long long k = static_cast<long long>(p.k);
    return {!applies || k <= rhs, applies && k == rhs};
}

using Rational = boost::rational<long long>;

struct RateReport {
    Rational rate;
    Rational net_rate;
    bool rate_at_least_half = false;
    bool net_rate_positive = false;
};

inline RateReport rates(const EaqeccParams& p) {
    if (p.n == 0) fail(ErrorCode::BadArgs, "rates need n > 0");
    RateReport r;
    r.rate = Rational(static_cast<long long>(p.k), static_cast<long long>(p.n));
    r.net_rate = Rational(static_cast<long long>(p.k) - static_cast<long long>(p.c), static_cast<long long>(p.n));
    r.rate_at_least_half = r.rate >= Rational(1, 2);
    r.net_rate_positive = r.net_rate > Rational(0);
    return r;
}

inline std::string to_string(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

enum class Target { same_field, subfield };

struct DeriveOptions {
    std::optional<u64> d;          // known minimum distance of C
    std::optional<u64> d_dual;     // known minimum distance of the e-Galois dual
    std::optional<std::size_t> hull_dim; // known hull dimension (skips the four-way check)
    std::optional<u64> cap;        // distance budget
};

struct EaqeccPair {
    EaqeccParams q;
    EaqeccParams qdual;
    std::size_t hull_dim = 0;
};

namespace detail {

inline EaqeccParams make_params(u64 alphabet, u64 n, u64 k, u64 d, u64 c, bool exact, std::string prov) {
    EaqeccParams p{alphabet, n, k, d, c, false, exact, std::move(prov)};
    p.mds = exact && ea_singleton_check(p).mds;
    return p;
}

} // namespace detail

/// Q = [[n, k - l, d; n - k - l]] and Qdual = [[n, n - k - l, d_dual; k - l]],
/// l the e-Galois hull dimension. The subfield target needs e = h/2 and
/// yields sqrt(q)-ary codes.
inline EaqeccPair derive_eaqecc(const LinearCode& c, u64 e, Target target, const DeriveOptions& opt = {}) {
    const Field& F = c.field();
    u64 alphabet = F.q();
    if (target == Target::subfield) {
        if (F.h() % 2 != 0 || e != F.h() / 2)
            fail(ErrorCode::SubfieldUnavailable, "subfield codes need even h and e = h/2");
        alphabet = F.sqrt_q();
    }
    if (e >= F.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    if (c.k() == 0 || c.k() == c.n()) fail(ErrorCode::EmptyCode, "need 0 < k < n to derive both codes");

    const std::size_t l = opt.hull_dim ? *opt.hull_dim : hull(c, e).dim_hull;
    const u64 n = c.n(), k = c.k();

    bool exact = true;
    u64 d = 0, dd = 0;
    if (opt.d) {
        d = *opt.d;
    } else {
        const DistanceResult r = min_distance(c, opt.cap);
        d = r.d;
        exact = exact && r.exact;
    }
    bool exact_dual = true;
    if (opt.d_dual) {
        dd = *opt.d_dual;
    } else {
        const DistanceResult r = min_distance(dual(c, e), opt.cap);
        dd = r.d;
        exact_dual = r.exact;
    }

    const std::string base = "[" + std::to_string(n) + "," + std::to_string(k) + "]_" + F.label() + " e=" +
                             std::to_string(e) + " hull=" + std::to_string(l);
    EaqeccPair out;
    out.hull_dim = l;
    out.q = detail::make_params(alphabet, n, k - l, d, n - k - l, exact, base + " code");
    out.qdual = detail::make_params(alphabet, n, n - k - l, dd, k - l, exact_dual, base + " dual");
    return out;
}

/// Parameters for an [n, k] MDS code with hull dimension l: distances follow
/// from the Singleton bound (the dual of an MDS code is MDS).
inline DeriveOptions mds_options(std::size_t n, std::size_t k, std::size_t l) {
    return {n - k + 1, k + 1, l, std::nullopt};
}

struct PropagateOptions {
    std::optional<AlphaTuple> alphas;  // i >= 2; searched when absent
    Element beta{1};                   // i >= 2 pivot scaling
    std::optional<Element> alpha_one;  // i = 1
    std::optional<Element> beta_one;   // i = 1
    Element lambda{1};                 // i = 1
    std::optional<u64> cap;
};

/// Smallest (beta, alpha) exponent pair, beta first, for which the
/// one-column hull block is nonsingular.
inline std::optional<std::pair<Element, Element>> default_hull_pair(const Field& f, u64 e, std::size_t k,
                                                                   std::size_t l) {
    for (u64 b = 0; b + 1 < f.q(); ++b)
        for (u64 a = 0; a + 1 < f.q(); ++a)
            if (!hull_determinant(f, e, k, l, f.exp(a), f.exp(b)).is_zero()) return std::make_pair(f.exp(a), f.exp(b));
    return std::nullopt;
}

/// The extended code with hull dimension l that propagate derives from.
inline LinearCode propagate_code(const LinearCode& c, u64 e, std::size_t i, std::size_t l,
                                 const PropagateOptions& opt = {}) {
    const Field& F = c.field();
    if (i == 0) return reduce_hull_dim(c, e, l);
    if (i == 1) {
        Element alpha{}, beta{};
        if (opt.alpha_one && opt.beta_one) {
            alpha = *opt.alpha_one;
            beta = *opt.beta_one;
        } else {
            if (l >= c.k()) fail(ErrorCode::HullTargetOutOfRange, "hull target must satisfy 0 <= l <= k-1");
            auto pr = default_hull_pair(F, e, c.k(), l);
            if (!pr) fail(ErrorCode::DeterminantCondition, "no alpha, beta make the hull block nonsingular");
            alpha = opt.alpha_one.value_or(pr->first);
            beta = opt.beta_one.value_or(pr->second);
        }
        return extend_one_with_hull(c, e, l, alpha, beta, opt.lambda);
    }
    AlphaTuple alphas;
    if (opt.alphas) {
        alphas = *opt.alphas;
    } else {
        auto found = find_alpha_tuple(F, e, i);
        if (!found) fail(ErrorCode::NoAlphaTuple, "no alpha tuple of length " + std::to_string(i) + " found");
        alphas = std::move(*found);
    }
    return reduce_hull_dim(extend_self_orthogonal(c, e, alphas, opt.beta), e, l);
}

/// Both EAQECCs from lengthening C by i columns and setting its hull to l.
inline std::vector<EaqeccParams> propagate(const LinearCode& c, u64 e, std::size_t i, std::size_t l, Target target,
                                           const PropagateOptions& opt = {}) {
    const LinearCode ext = propagate_code(c, e, i, l, opt);
    DeriveOptions d;
    d.cap = opt.cap;
    const EaqeccPair pair = derive_eaqecc(ext, e, target, d);
    if (pair.hull_dim != l) fail(ErrorCode::InternalMismatch, "propagated code has the wrong hull dimension");
    return {pair.q, pair.qdual};
}

} // namespace hullforge
