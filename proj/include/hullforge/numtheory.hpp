/**************************************************************************
 * numtheory.hpp
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

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <vector>

#include "error.hpp"

namespace hullforge {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// base^exp, or nullopt on 64-bit overflow.
inline std::optional<u64> checked_pow(u64 base, u64 exp) {
    u64 r = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<u64>::max() / base) return std::nullopt;
        r *= base;
    }
    return r;
}

inline u64 ipow(u64 base, u64 exp) {
    auto r = checked_pow(base, exp);
    if (!r) fail(ErrorCode::BadArgs, "integer power overflows 64 bits");
    return *r;
}

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Inverse of a modulo m; requires gcd(a, m) = 1.
inline u64 modinv(u64 a, u64 m) {
    using i128 = __int128;
    i128 old_r = static_cast<i128>(a % m), r = static_cast<i128>(m);
    i128 old_s = 1, s = 0;
    while (r != 0) {
        i128 quot = old_r / r;
        i128 t = old_r - quot * r; old_r = r; r = t;
        t = old_s - quot * s; old_s = s; s = t;
    }
    if (old_r != 1) fail(ErrorCode::BadArgs, "value is not invertible modulo m");
    i128 res = old_s % static_cast<i128>(m);
    if (res < 0) res += m;
    return static_cast<u64>(res);
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// C(n, k) saturated at `cap` so budget checks never overflow.
inline u64 binomial_capped(u64 n, u64 k, u64 cap = std::numeric_limits<u64>::max()) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap;
    }
    return static_cast<u64>(r);
}

/// Closed form for gcd(p^r + 1, p^s - 1):
///   1            if s/gcd(r,s) is odd and p is even
///   2            if s/gcd(r,s) is odd and p is odd
///   p^gcd(r,s)+1 if s/gcd(r,s) is even
/// The Euclidean gcd is evaluated alongside whenever the powers fit in 64
/// bits and a disagreement raises InternalMismatch.
inline u64 galois_gcd_formula(u64 p, u64 r, u64 s) {
    if (s < 1 || p < 2) fail(ErrorCode::BadArgs, "galois_gcd_formula needs s >= 1 and p > 1");
    const u64 g = std::gcd(r, s);
    u64 value;
    if ((s / g) % 2 == 1)
        value = (p % 2 == 0) ? 1 : 2;
    else
        value = ipow(p, g) + 1;

    auto pr = checked_pow(p, r);
    auto ps = checked_pow(p, s);
    if (pr && ps && *pr != std::numeric_limits<u64>::max()) {
        const u64 direct = std::gcd(*pr + 1, *ps - 1);
        if (direct != value)
            fail(ErrorCode::InternalMismatch, "closed-form gcd disagrees with Euclidean gcd");
    }
    return value;
}

} // namespace hullforge
