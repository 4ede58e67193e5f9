/**************************************************************************
 * field.hpp
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

#include <charconv>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "error.hpp"
#include "numtheory.hpp"

namespace hullforge {

/// One residue of GF(p^h). The integer value holds the coefficients of the
/// residue polynomial as little-endian base-p digits, so 0 <= value < q and
/// values below p are the prime-subfield constants.
struct Element {
    std::uint32_t value = 0;

    constexpr Element() = default;
    constexpr explicit Element(std::uint32_t v) : value(v) {}

    constexpr bool is_zero() const { return value == 0; }

    friend constexpr bool operator==(Element, Element) = default;
    friend constexpr auto operator<=>(Element, Element) = default;
};

namespace detail {

// Dense polynomials over GF(p), little-endian, no trailing zeros.
using FpPoly = std::vector<u64>;

inline void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly poly_mod(FpPoly a, const FpPoly& f, u64 p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const u64 lead_inv = modinv(f.back(), p);
    while (a.size() > df) {
        const u64 c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = (a[shift + i] + p - c * f[i] % p) % p;
        trim(a);
    }
    return a;
}

inline FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(r), f, p);
}

inline FpPoly poly_powmod(FpPoly base, u64 exp, const FpPoly& f, u64 p) {
    FpPoly r{1};
    base = poly_mod(std::move(base), f, p);
    while (exp) {
        if (exp & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        exp >>= 1;
    }
    return poly_mod(std::move(r), f, p);
}

inline FpPoly poly_gcd(FpPoly a, FpPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Ben-Or: f of degree h is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= h/2.
inline bool is_irreducible(const FpPoly& f, u64 p) {
    const std::size_t h = f.size() - 1;
    if (h == 1) return true;
    FpPoly xp{0, 1};
    for (std::size_t i = 1; i <= h / 2; ++i) {
        xp = poly_powmod(xp, p, f, p);
        FpPoly t = xp;
        if (t.size() < 2) t.resize(2, 0);
        t[1] = (t[1] + p - 1) % p;
        trim(t);
        if (t.empty()) return false;
        if (poly_gcd(f, t, p).size() > 1) return false;
    }
    return true;
}

// Order of x modulo an irreducible f is q - 1.
inline bool root_is_primitive(const FpPoly& f, u64 p, u64 q) {
    const FpPoly one{1};
    if (poly_powmod({0, 1}, q - 1, f, p) != one) return false;
    for (u64 r : distinct_prime_factors(q - 1))
        if (poly_powmod({0, 1}, (q - 1) / r, f, p) == one) return false;
    return true;
}

} // namespace detail

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// A concrete GF(p^h) with a fixed monic primitive modulus; omega is the
/// class of x. Immutable after construction.
class Field {
public:
    static constexpr u64 kTableLimit = u64{1} << 20;
    static constexpr u64 kMaxOrder = (u64{1} << 31) - 1;

    /// Builds GF(p^h). Without an explicit modulus the primitive polynomial
    /// with the smallest integer encoding is used.
    static FieldPtr create(u64 p, u64 h, std::optional<std::vector<u64>> modulus = std::nullopt) {
        if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        if (h < 1) fail(ErrorCode::BadArgs, "extension degree must be >= 1");
        auto q = checked_pow(p, h);
        if (!q || *q > kMaxOrder) fail(ErrorCode::FieldTooLarge, "field order exceeds 2^31 - 1");

        std::vector<u64> f;
        if (modulus) {
            f = *modulus;
            if (f.size() != h + 1 || f.back() != 1)
                fail(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(h));
            for (u64 c : f)
                if (c >= p) fail(ErrorCode::BadModulus, "modulus coefficient out of range");
            if (!detail::is_irreducible(f, p)) fail(ErrorCode::Reducible, "modulus is reducible");
            if (!detail::root_is_primitive(f, p, *q))
                fail(ErrorCode::NotPrimitive, "root of modulus is not a primitive element");
        } else {
            f = smallest_primitive(p, h, *q);
        }
        return FieldPtr(new Field(p, h, *q, std::move(f)));
    }

    /// Every monic primitive polynomial of degree h, in increasing encoding.
    static std::vector<std::vector<u64>> primitive_polynomials(u64 p, u64 h) {
        const u64 q = ipow(p, h);
        std::vector<std::vector<u64>> out;
        for (u64 enc = 0; enc < q; ++enc) {
            auto f = encoding_to_poly(enc, p, h);
            if (detail::is_irreducible(f, p) && detail::root_is_primitive(f, p, q)) out.push_back(f);
        }
        return out;
    }

    u64 p() const { return p_; }
    u64 h() const { return h_; }
    u64 q() const { return q_; }
    const std::vector<u64>& modulus() const { return modulus_; }
    bool has_tables() const { return !antilog_.empty(); }

    /// "2", "3^4", "13^2".
    std::string label() const {
        return h_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(h_);
    }

    /// p^(h/2); requires h even.
    u64 sqrt_q() const {
        if (h_ % 2 != 0) fail(ErrorCode::OddExtension, "GF(" + label() + ") has odd extension degree");
        return ipow(p_, h_ / 2);
    }

    Element zero() const { return Element{0}; }
    Element one() const { return Element{1}; }
    Element omega() const { return omega_; }

    bool contains(Element a) const { return a.value < q_; }

    /// Image of the integer n in the prime subfield.
    Element from_int(std::int64_t n) const {
        std::int64_t r = n % static_cast<std::int64_t>(p_);
        if (r < 0) r += static_cast<std::int64_t>(p_);
        return Element{static_cast<std::uint32_t>(r)};
    }

    Element add(Element a, Element b) const {
        if (p_ == 2) return Element{a.value ^ b.value};
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (has_tables()) {
            const u64 la = log_[a.value], lb = log_[b.value];
            const u64 d = (lb + (q_ - 1) - la) % (q_ - 1);
            const std::uint32_t z = zech_[d];
            if (z == kNoLog) return Element{0};
            return Element{antilog_[(la + z) % (q_ - 1)]};
        }
        return digitwise(a, b, false);
    }

    Element neg(Element a) const {
        if (p_ == 2 || a.is_zero()) return a;
        if (has_tables()) return Element{antilog_[(log_[a.value] + (q_ - 1) / 2) % (q_ - 1)]};
        return digitwise(Element{0}, a, true);
    }

    Element sub(Element a, Element b) const { return add(a, neg(b)); }

    Element mul(Element a, Element b) const {
        if (a.is_zero() || b.is_zero()) return Element{0};
        if (has_tables()) {
            u64 s = u64{log_[a.value]} + log_[b.value];
            if (s >= q_ - 1) s -= q_ - 1;
            return Element{antilog_[s]};
        }
        return from_poly(detail::poly_mulmod(to_poly(a), to_poly(b), modulus_, p_));
    }

    Element inv(Element a) const {
        if (a.is_zero()) fail(ErrorCode::Zero, "zero has no inverse");
        if (has_tables()) return Element{antilog_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
        return pow(a, q_ - 2);
    }

    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    Element pow(Element a, u64 k) const {
        if (k == 0) return one();
        if (a.is_zero()) return zero();
        if (has_tables()) return Element{antilog_[mulmod(log_[a.value], k % (q_ - 1), q_ - 1)]};
        return from_poly(detail::poly_powmod(to_poly(a), k, modulus_, p_));
    }

    /// omega^j for any j (reduced mod q - 1).
    Element exp(u64 j) const {
        if (has_tables()) return Element{antilog_[j % (q_ - 1)]};
        return pow(omega_, j);
    }

    /// Discrete logarithm to base omega, in [0, q - 1).
    u64 log(Element a) const {
        if (a.is_zero()) fail(ErrorCode::Zero, "log of zero");
        if (has_tables()) return log_[a.value];
        return baby_step_giant_step(a);
    }

    /// a^(p^e), the e-th power of the Frobenius map. 0 <= e <= h.
    Element frobenius(Element a, u64 e) const {
        if (e > h_) fail(ErrorCode::EOutOfRange, "Frobenius exponent " + std::to_string(e) + " > h");
        if (e == 0 || e == h_ || a.is_zero()) return a;
        return pow(a, powmod(p_, e, q_ - 1));
    }

    /// a^(p^e + 1), the form summed in the extension conditions.
    Element galois_norm(Element a, u64 e) const { return mul(a, frobenius(a, e)); }

    /// True when a lies in the subfield GF(p^d).
    bool in_subfield(Element a, u64 d) const {
        return pow(a, ipow(p_, d)) == a;
    }

private:
    static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

    Field(u64 p, u64 h, u64 q, std::vector<u64> f) : p_(p), h_(h), q_(q), modulus_(std::move(f)) {
        omega_ = mul_by_x(Element{1});
        if (q_ <= kTableLimit) build_tables();
    }

    static std::vector<u64> encoding_to_poly(u64 enc, u64 p, u64 h) {
        std::vector<u64> f(h + 1, 0);
        for (u64 i = 0; i < h; ++i) {
            f[i] = enc % p;
            enc /= p;
        }
        f[h] = 1;
        return f;
    }

    static std::vector<u64> smallest_primitive(u64 p, u64 h, u64 q) {
        for (u64 enc = 0; enc < q; ++enc) {
            auto f = encoding_to_poly(enc, p, h);
            if (detail::is_irreducible(f, p) && detail::root_is_primitive(f, p, q)) return f;
        }
        fail(ErrorCode::NotPrimitive, "no primitive polynomial found");
    }

    detail::FpPoly to_poly(Element a) const {
        detail::FpPoly r(h_, 0);
        u64 v = a.value;
        for (u64 i = 0; i < h_; ++i) {
            r[i] = v % p_;
            v /= p_;
        }
        detail::trim(r);
        return r;
    }

    Element from_poly(const detail::FpPoly& poly) const {
        u64 v = 0;
        for (std::size_t i = poly.size(); i-- > 0;) v = v * p_ + poly[i];
        return Element{static_cast<std::uint32_t>(v)};
    }

    Element mul_by_x(Element a) const {
        std::vector<u64> digits(h_ + 1, 0);
        u64 v = a.value;
        for (u64 i = 0; i < h_; ++i) {
            digits[i + 1] = v % p_;
            v /= p_;
        }
        const u64 top = digits[h_];
        for (u64 i = 0; i < h_; ++i)
            digits[i] = (digits[i] + p_ - top * modulus_[i] % p_) % p_;
        u64 out = 0;
        for (u64 i = h_; i-- > 0;) out = out * p_ + digits[i];
        return Element{static_cast<std::uint32_t>(out)};
    }

    Element digitwise(Element a, Element b, bool negate_b) const {
        u64 va = a.value, vb = b.value, out = 0, scale = 1;
        for (u64 i = 0; i < h_; ++i) {
            const u64 da = va % p_, db = vb % p_;
            va /= p_;
            vb /= p_;
            const u64 d = negate_b ? (da + p_ - db) % p_ : (da + db) % p_;
            out += d * scale;
            scale *= p_;
        }
        return Element{static_cast<std::uint32_t>(out)};
    }

    void build_tables() {
        antilog_.assign(q_ - 1, 0);
        log_.assign(q_, kNoLog);
        Element cur{1};
        for (u64 j = 0; j < q_ - 1; ++j) {
            antilog_[j] = cur.value;
            log_[cur.value] = static_cast<std::uint32_t>(j);
            cur = mul_by_x(cur);
        }
        if (p_ != 2) {
            zech_.assign(q_ - 1, kNoLog);
            for (u64 j = 0; j < q_ - 1; ++j) {
                const u64 v = antilog_[j];
                const u64 d0 = v % p_;
                const u64 w = (d0 + 1 == p_) ? v - d0 : v + 1;
                zech_[j] = (w == 0) ? kNoLog : log_[w];
            }
        }
    }

    u64 baby_step_giant_step(Element a) const {
        u64 m = 1;
        while (m * m < q_ - 1) ++m;
        std::unordered_map<std::uint32_t, u64> baby;
        Element cur{1};
        for (u64 j = 0; j < m; ++j) {
            baby.emplace(cur.value, j);
            cur = mul(cur, omega_);
        }
        const Element factor = inv(pow(omega_, m));
        Element gamma = a;
        for (u64 i = 0; i <= m; ++i) {
            if (auto it = baby.find(gamma.value); it != baby.end()) return (i * m + it->second) % (q_ - 1);
            gamma = mul(gamma, factor);
        }
        fail(ErrorCode::InternalMismatch, "discrete log not found");
    }

    u64 p_, h_, q_;
    std::vector<u64> modulus_;
    Element omega_{};
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

inline FieldPtr field_create(u64 p, u64 h, std::optional<std::vector<u64>> modulus = std::nullopt) {
    return Field::create(p, h, std::move(modulus));
}

/// GF(q) for a prime power q.
inline FieldPtr field_of_order(u64 q, std::optional<std::vector<u64>> modulus = std::nullopt) {
    if (q < 2) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    const auto primes = distinct_prime_factors(q);
    if (primes.size() != 1) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
    u64 h = 0;
    for (u64 v = q; v > 1; v /= primes[0]) ++h;
    return Field::create(primes[0], h, std::move(modulus));
}

inline Element frobenius_power(const Field& field, Element x, u64 e) {
    return field.frobenius(x, e);
}

/// Smallest-exponent v = omega^t with v^(sqrt(q)+1) = x, for x in GF(sqrt q)^*.
inline Element norm_root(const Field& field, Element x) {
    if (field.h() % 2 != 0) fail(ErrorCode::OddExtension, "norm_root needs an even extension degree");
    if (x.is_zero()) fail(ErrorCode::Zero, "norm_root of zero");
    const u64 s = field.sqrt_q();
    if (field.pow(x, s - 1) != field.one())
        fail(ErrorCode::NotInSubfield, "element is not in GF(sqrt q)");
    const u64 L = field.log(x);
    // x in the subfield means L is a multiple of sqrt(q)+1, and L/(sqrt(q)+1)
    // is already below sqrt(q)-1, the period of the solutions.
    return field.exp(L / (s + 1));
}

/// Smallest t >= 0 with t (p^e + 1) = (q - 1)/2 mod (q - 1), i.e.
/// omega^(t(p^e+1)) = -1; absent when the congruence is unsolvable.
inline std::optional<u64> solve_t0(const Field& field, u64 e) {
    if (field.p() % 2 == 0) fail(ErrorCode::EvenCharacteristic, "solve_t0 needs odd characteristic");
    if (e >= field.h()) fail(ErrorCode::EOutOfRange, "e must satisfy 0 <= e <= h-1");
    const u64 m = field.q() - 1;
    const u64 a = (ipow(field.p(), e) + 1) % m;
    const u64 b = m / 2;
    const u64 g = std::gcd(a == 0 ? m : a, m);
    if (b % g != 0) return std::nullopt;
    const u64 mr = m / g;
    if (mr == 1) return 0;
    return mulmod(b / g, modinv((a / g) % mr, mr), mr);
}

/// Element literal: "0", a decimal integer in [0, q), "w", or "w^j" (j reduced mod q-1).
inline Element parse_literal(const Field& field, std::string_view text) {
    auto bad = [&]() -> Element {
        fail(ErrorCode::BadLiteral, "invalid element literal '" + std::string(text) + "' for GF(" + field.label() + ")");
    };
    if (text.empty()) return bad();
    if (text[0] == 'w') {
        if (text.size() == 1) return field.omega();
        if (text.size() < 3 || text[1] != '^') return bad();
        u64 j = 0;
        auto body = text.substr(2);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), j);
        if (ec != std::errc{} || ptr != body.data() + body.size()) return bad();
        return field.exp(j % (field.q() - 1));
    }
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || v >= field.q()) return bad();
    return Element{static_cast<std::uint32_t>(v)};
}

/// Canonical literal: prime-subfield constants in decimal, everything else as w^j.
inline std::string format_literal(const Field& field, Element a) {
    if (a.value < field.p()) return std::to_string(a.value);
    return "w^" + std::to_string(field.log(a));
}

} // namespace hullforge
