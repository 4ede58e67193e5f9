/**************************************************************************
 * suites.hpp
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

// Check suites shared by the gtest binaries and the acceptance runner. Each
// records into a FixtureLog so a violation carries a reproducible id.

#pragma once

#include <numeric>
#include <random>
#include <string>

#include "oracles.hpp"

namespace suites {

using namespace hullforge;

inline std::vector<Element> u_direct(const Field& f, const std::vector<Element>& a) {
    std::vector<Element> u;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Element prod = f.one();
        for (std::size_t j = 0; j < a.size(); ++j)
            if (j != i) prod = f.mul(prod, f.sub(a[i], a[j]));
        u.push_back(f.inv(prod));
    }
    return u;
}

struct PropertyStats {
    std::size_t codes = 0;
    std::size_t distance_pairs = 0;
    std::size_t oracle_hulls = 0;
};

// Largest message count for which the distance and oracle checks run.
constexpr u64 kEnumCap = u64{1} << 14;

inline u64 messages(u64 q, std::size_t k) {
    u64 m = 1;
    for (std::size_t i = 0; i < k && m <= kEnumCap; ++i) m *= q;
    return m;
}

/// Randomized hull and distance invariants over GF(q), seeded by q.
inline PropertyStats property_suite(u64 q, std::size_t count, FixtureLog& log) {
    const FieldPtr F = field_of_order(q);
    const u64 h = F->h();
    std::mt19937_64 rng(0x5eed0000 + q);
    PropertyStats st;
    const std::string tag = "prop.q" + std::to_string(q) + ".";
    for (std::size_t it = 0; it < count; ++it) {
        const std::string id = tag + std::to_string(it);
        const std::size_t n = 1 + rng() % 12;
        const std::size_t k = 1 + rng() % n;
        const LinearCode c = oracle::random_code(F, k, n, rng);
        ++st.codes;
        log.guard(id, [&] {
            bool ok = true;
            std::string why;
            auto need = [&](bool cond, const std::string& what) {
                if (!cond && ok) {
                    ok = false;
                    why = what;
                }
            };
            const bool small = messages(q, k) <= kEnumCap;
            for (u64 e = 0; e < h; ++e) {
                const std::string at = " at e=" + std::to_string(e);
                const HullReport hr = hull(c, e); // throws if the four formulas disagree
                need(hr.dim_hull == hull(c, h - e).dim_hull, "hull symmetry" + at);
                const LinearCode d = dual(c, e);
                need(d.k() == n - k, "dual dimension" + at);
                need(hull(d, e).dim_hull == hr.dim_hull, "dual hull" + at);
                need(dual(d, h - e).same_code(c), "double dual" + at);
                need(dual(d, e).same_code(LinearCode(frobenius(c.generator(), (2 * (h - e)) % h))),
                     "double dual twist" + at);
                need(classify(c, e) == classify_one(c, h - e), "classify" + at);
                if (small) {
                    need(oracle::hull_dim(c, e) == hr.dim_hull, "oracle hull" + at);
                    ++st.oracle_hulls;
                }
            }
            log.check(id, ok, why);
        });

        // Distance strategies on a second code small enough to enumerate.
        std::size_t kd = 1 + rng() % n;
        while (messages(q, kd) > kEnumCap) --kd;
        const LinearCode small = oracle::random_code(F, kd, n, rng);
        log.guard(id + ".dist", [&] {
            const auto a = min_distance_enumerate(small, kEnumCap);
            const DistanceResult b = min_distance_dependency(small, u64{1} << 22);
            const bool ok = a && b.exact && *a == b.d;
            log.check(id + ".dist", ok,
                      "A=" + (a ? std::to_string(*a) : std::string("none")) + " B=" + std::to_string(b.d));
            ++st.distance_pairs;
        });
    }
    return st;
}

inline const std::vector<u64>& property_fields() {
    static const std::vector<u64> qs = {2, 3, 4, 8, 9, 16, 25, 27};
    return qs;
}

/// Closed forms against direct evaluation.
inline void closed_form_checks(FixtureLog& log) {
    std::size_t bad = 0, total = 0;
    for (u64 p : {2, 3, 5, 7, 13})
        for (u64 r = 0; r <= 8; ++r)
            for (u64 s = 1; s <= 8; ++s) {
                const u64 pr = ipow(p, r), ps = ipow(p, s);
                ++total;
                try {
                    if (galois_gcd_formula(p, r, s) != std::gcd(pr + 1, ps - 1)) ++bad;
                } catch (const Error&) {
                    ++bad;
                }
            }
    log.check("closed.gcd", bad == 0, std::to_string(bad) + " of " + std::to_string(total) + " differ");

    for (const auto& r : coset_rows()) {
        const std::string id = "closed.coset." + std::to_string(r.n_prime) + "." + std::to_string(r.t);
        log.guard(id, [&] {
            const CosetFamily fam = coset_family(field_of_order(r.q), r.n_prime, r.t);
            log.check(id, coset_u_closed_form(fam) == u_direct(*fam.field, coset_locators(fam)));
        });
    }
    for (const auto& r : coset_ea_rows()) {
        const std::string id = "closed.coset." + std::to_string(r.q) + "." + std::to_string(r.n_prime) + "." +
                               std::to_string(r.t);
        log.guard(id, [&] {
            const CosetFamily fam = coset_family(field_of_order(r.q), r.n_prime, r.t);
            log.check(id, coset_u_closed_form(fam) == u_direct(*fam.field, coset_locators(fam)));
        });
    }
    auto product = [&](u64 q, u64 x1, u64 x2, u64 n1) {
        const std::string id = "closed.product." + std::to_string(q) + "." + std::to_string(n1);
        log.guard(id, [&] {
            const ProductFamily fam = product_family(field_of_order(q), x1, x2, n1);
            log.check(id, product_u_closed_form(fam) == u_direct(*fam.field, product_locators(fam)));
        });
    };
    for (const auto& r : product_rows()) product(r.q, r.x1, r.x2, r.n1);
    for (const auto& r : product_ea_rows()) product(r.q, r.x1, r.x2, r.n1);

    std::mt19937_64 rng(31);
    bad = total = 0;
    for (u64 q : {3, 4, 5, 8, 9, 25, 27, 49}) {
        const FieldPtr F = field_of_order(q);
        for (int it = 0; it < 30; ++it) {
            const u64 e = rng() % F->h();
            const std::size_t k = 1 + rng() % 6, l = rng() % k;
            const Element a = F->exp(rng() % (q - 1)), b = F->exp(rng() % (q - 1));
            ++total;
            if (hull_determinant(*F, e, k, l, a, b) != determinant(hull_block(F, e, k, l, a, b))) ++bad;
        }
    }
    log.check("closed.determinant", bad == 0 && total >= 200,
              std::to_string(bad) + " of " + std::to_string(total) + " differ");
}

template <typename Fn>
bool throws_k_out_of_range(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == ErrorCode::KOutOfRange;
    }
    return false;
}

/// Tables of Hermitian self-orthogonal GRS families: construction, zero
/// gram, k bounds, and the MDS certificate wherever C(n,k) fits the budget.
inline void family_regeneration_checks(FixtureLog& log) {
    const u64 mds_budget = Budget::defaults().mds;
    auto check_spec = [&](const std::string& id, const GrsSpec& s, u64 bound, u64 want_bound, u64 want_n) {
        const LinearCode c = grs_generator(s);
        log.equal(id + ".n", c.n(), want_n);
        log.equal(id + ".k_max", bound, want_bound);
        log.check(id + ".gram", gram(c.generator(), s.field->h() / 2).is_zero());
        if (binomial_capped(c.n(), c.k(), mds_budget + 1) <= mds_budget)
            log.check(id + ".mds", mds_certificate(c, mds_budget));
    };
    for (const auto& r : coset_rows()) {
        const std::string id = "family.coset." + std::to_string(r.n_prime) + "." + std::to_string(r.t);
        log.guard(id, [&] {
            const FieldPtr F = field_of_order(r.q);
            const u64 bound = coset_k_bound(F->sqrt_q(), r.n_prime, r.t);
            check_spec(id, hso_mds_coset(F, r.n_prime, r.t, bound), bound, r.k_max, r.n);
            log.check(id + ".above", throws_k_out_of_range([&] { hso_mds_coset(F, r.n_prime, r.t, bound + 1); }));
        });
    }
    for (const auto& r : product_rows()) {
        const std::string id = "family.product." + std::to_string(r.q) + "." + std::to_string(r.n1);
        log.guard(id, [&] {
            const FieldPtr F = field_of_order(r.q);
            const ProductFamily fam = product_family(F, r.x1, r.x2, r.n1);
            log.equal(id + ".n2", fam.n2, r.n2);
            const u64 bound = product_k_bound(F->sqrt_q(), fam.n1, fam.n2);
            check_spec(id, hso_mds_product(F, r.x1, r.x2, r.n1, bound), bound, r.k_max, r.n);
            log.check(id + ".above",
                      throws_k_out_of_range([&] { hso_mds_product(F, r.x1, r.x2, r.n1, bound + 1); }));
        });
    }
}

/// Tables 7 and 8: regenerated rows equal the stored ones and meet the
/// EA-Singleton bound with equality.
inline void ea_table_checks(FixtureLog& log) {
    for (int which : {7, 8}) {
        const std::string id = "ea-table." + std::to_string(which);
        log.guard(id, [&] {
            const CsvTable t = table_by_number(which);
            const auto want = expected_rows(which);
            log.equal(id + ".rows", t.rows.size(), want.size());
            for (std::size_t i = 0; i < std::min(t.rows.size(), want.size()); ++i)
                log.equal(id + ".row" + std::to_string(i), t.rows[i], want[i]);
        });
    }
    for (const auto& r : coset_ea_rows()) {
        const EaqeccParams p = detail::mds_eaqecc(hso_mds_coset(field_of_order(r.q), r.n_prime, r.t, r.k));
        log.check("ea-table.7.mds." + p.str(), ea_singleton_check(p).mds);
    }
    for (const auto& r : product_ea_rows()) {
        const EaqeccParams p = detail::mds_eaqecc(hso_mds_product(field_of_order(r.q), r.x1, r.x2, r.n1, r.k));
        log.check("ea-table.8.mds." + p.str(), ea_singleton_check(p).mds);
    }
}

} // namespace suites
