/**************************************************************************
 * tables.hpp
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

// CSV tables of Hermitian self-orthogonal MDS codes and the MDS EAQECCs
// derived from them. Every row is rebuilt: the GRS code is constructed, its
// Hermitian gram matrix checked to vanish, and the parameters derived from
// the resulting hull dimension.

#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "eaqecc.hpp"
#include "error.hpp"
#include "field.hpp"
#include "grs.hpp"
#include "matrix.hpp"

namespace hullforge {

struct CosetRow {
    u64 q, n_prime, t;
    u64 n, k_max; // expected
};

struct ProductRow {
    u64 q, x1, x2, n1;
    u64 n2, n, k_max; // expected
};

struct CosetEaRow {
    u64 q, n_prime, t, k;
    u64 n, qk, d; // expected quantum parameters, c = 0
};

struct ProductEaRow {
    u64 q, x1, x2, n1, k;
    u64 n2, n, qk, d; // expected, c = 0
};

inline const std::vector<CosetRow>& coset_rows() {
    static const std::vector<CosetRow> rows = {
        {81, 2, 7, 14, 2},  {81, 2, 8, 16, 2},  {81, 5, 4, 20, 2},  {81, 5, 5, 25, 2},
        {81, 5, 6, 30, 3},  {81, 5, 7, 35, 3},  {81, 5, 8, 40, 4},  {81, 10, 5, 50, 4},
        {81, 10, 6, 60, 5}, {81, 10, 7, 70, 6}, {81, 10, 8, 80, 7},
    };
    return rows;
}

inline const std::vector<ProductRow>& product_rows() {
    static const std::vector<ProductRow> rows = {
        {169, 14, 24, 5, 7, 35, 2},    {169, 14, 24, 7, 7, 49, 3},    {169, 14, 24, 9, 7, 63, 4},
        {169, 14, 24, 11, 7, 77, 5},   {289, 18, 32, 9, 9, 81, 4},    {289, 18, 32, 11, 9, 99, 5},
        {289, 18, 32, 13, 9, 117, 6},  {289, 18, 32, 15, 9, 135, 7},  {625, 26, 48, 7, 13, 91, 3},
        {625, 26, 48, 11, 13, 143, 5}, {625, 26, 48, 15, 13, 195, 7}, {625, 26, 48, 19, 13, 247, 9},
        {625, 26, 48, 21, 13, 273, 10}, {625, 26, 48, 23, 13, 299, 11},
    };
    return rows;
}

inline const std::vector<CosetEaRow>& coset_ea_rows() {
    static const std::vector<CosetEaRow> rows = {
        {81, 5, 8, 4, 40, 32, 5},     {81, 10, 5, 4, 50, 42, 5},    {81, 10, 6, 4, 60, 52, 5},
        {81, 10, 6, 5, 60, 50, 6},    {81, 10, 7, 4, 70, 62, 5},    {81, 10, 7, 5, 70, 60, 6},
        {81, 10, 7, 6, 70, 58, 7},    {121, 6, 10, 5, 60, 50, 6},   {121, 12, 6, 5, 72, 62, 6},
        {121, 12, 7, 5, 84, 74, 6},   {121, 12, 7, 5, 84, 74, 6},   {121, 12, 8, 5, 96, 86, 6},
        {121, 12, 8, 6, 96, 84, 7},   {121, 12, 8, 7, 96, 82, 8},   {121, 12, 9, 5, 108, 98, 6},
        {121, 12, 9, 6, 108, 96, 7},  {121, 12, 9, 7, 108, 94, 8},  {121, 12, 9, 8, 108, 92, 9},
    };
    return rows;
}

inline const std::vector<ProductEaRow>& product_ea_rows() {
    static const std::vector<ProductEaRow> rows = {
        {361, 40, 9, 6, 9, 40, 240, 222, 10},   {361, 40, 9, 6, 10, 40, 240, 220, 11},
        {361, 40, 9, 7, 9, 40, 280, 262, 10},   {361, 40, 9, 7, 10, 40, 280, 260, 11},
        {361, 40, 9, 7, 11, 40, 280, 258, 12},  {361, 40, 9, 7, 12, 40, 280, 256, 13},
        {361, 40, 9, 8, 9, 40, 320, 302, 10},   {361, 40, 9, 8, 10, 40, 320, 300, 11},
        {361, 40, 9, 8, 11, 40, 320, 298, 12},  {361, 40, 9, 8, 12, 40, 320, 296, 13},
        {361, 40, 9, 8, 13, 40, 320, 294, 14},  {361, 40, 9, 8, 14, 40, 320, 292, 15},
        {529, 48, 11, 7, 11, 48, 336, 314, 12}, {529, 48, 11, 7, 12, 48, 336, 312, 13},
        {529, 48, 11, 8, 11, 48, 384, 362, 12}, {529, 48, 11, 8, 14, 48, 384, 356, 15},
        {529, 48, 11, 9, 15, 48, 432, 402, 16}, {529, 48, 11, 9, 16, 48, 432, 400, 17},
        {529, 48, 11, 10, 13, 48, 480, 454, 14}, {529, 48, 11, 10, 14, 48, 480, 452, 15},
        {529, 48, 11, 10, 15, 48, 480, 450, 16}, {529, 48, 11, 10, 16, 48, 480, 448, 17},
        {529, 48, 11, 10, 17, 48, 480, 446, 18}, {529, 48, 11, 10, 18, 48, 480, 444, 19},
    };
    return rows;
}

namespace detail {

inline FieldPtr table_field(u64 q) {
    static std::map<u64, FieldPtr> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, field_of_order(q)).first;
    return it->second;
}

// [[n, n-k-l, k+1; k-l]] from the dual side of a Hermitian self-orthogonal
// MDS code; l is read off the gram matrix.
inline EaqeccParams mds_eaqecc(const GrsSpec& spec) {
    const LinearCode c = grs_generator(spec);
    const u64 e = spec.field->h() / 2;
    const std::size_t l = c.k() - rank(gram(c.generator(), e));
    const EaqeccPair pair = derive_eaqecc(c, e, Target::subfield, mds_options(c.n(), c.k(), l));
    if (!pair.qdual.mds) fail(ErrorCode::InternalMismatch, "derived EAQECC " + pair.qdual.str() + " is not MDS");
    return pair.qdual;
}

} // namespace detail

struct CsvTable {
    std::string header;
    std::vector<std::string> rows;

    std::string str() const {
        std::string out = header + "\n";
        for (const auto& r : rows) out += r + "\n";
        return out;
    }
};

namespace detail {

template <typename... Ts>
std::string csv_line(const Ts&... xs) {
    std::ostringstream out;
    std::size_t i = 0;
    ((out << (i++ ? "," : "") << xs), ...);
    return out.str();
}

} // namespace detail

/// Coset-family codes over GF(81): q,n',t,n,k_min,k_max.
inline CsvTable table3() {
    CsvTable t{"q,n',t,n,k_min,k_max", {}};
    for (const auto& r : coset_rows()) {
        const FieldPtr F = detail::table_field(r.q);
        const u64 bound = coset_k_bound(F->sqrt_q(), r.n_prime, r.t);
        const GrsSpec s = hso_mds_coset(F, r.n_prime, r.t, bound);
        t.rows.push_back(detail::csv_line(F->label(), r.n_prime, r.t, s.locators.size(), 1, bound));
    }
    return t;
}

/// Product-family codes: q,x1,x2,n1,n2,n,k_min,k_max.
inline CsvTable table6() {
    CsvTable t{"q,x1,x2,n1,n2,n,k_min,k_max", {}};
    for (const auto& r : product_rows()) {
        const FieldPtr F = detail::table_field(r.q);
        const ProductFamily fam = product_family(F, r.x1, r.x2, r.n1);
        const u64 bound = product_k_bound(F->sqrt_q(), fam.n1, fam.n2);
        const GrsSpec s = hso_mds_product(F, r.x1, r.x2, r.n1, bound);
        t.rows.push_back(detail::csv_line(F->label(), r.x1, r.x2, r.n1, fam.n2, s.locators.size(), 1, bound));
    }
    return t;
}

/// MDS EAQECCs from the coset family: q,n',t,n,k,d,c.
inline CsvTable table7() {
    CsvTable t{"q,n',t,n,k,d,c", {}};
    for (const auto& r : coset_ea_rows()) {
        const FieldPtr F = detail::table_field(r.q);
        const EaqeccParams p = detail::mds_eaqecc(hso_mds_coset(F, r.n_prime, r.t, r.k));
        t.rows.push_back(detail::csv_line(F->label(), r.n_prime, r.t, p.n, p.k, p.d, p.c));
    }
    return t;
}

/// MDS EAQECCs from the product family: q,x1,x2,n1,n2,n,k,d,c.
inline CsvTable table8() {
    CsvTable t{"q,x1,x2,n1,n2,n,k,d,c", {}};
    for (const auto& r : product_ea_rows()) {
        const FieldPtr F = detail::table_field(r.q);
        const ProductFamily fam = product_family(F, r.x1, r.x2, r.n1);
        const EaqeccParams p = detail::mds_eaqecc(hso_mds_product(F, r.x1, r.x2, r.n1, r.k));
        t.rows.push_back(detail::csv_line(F->label(), r.x1, r.x2, r.n1, fam.n2, p.n, p.k, p.d, p.c));
    }
    return t;
}

inline CsvTable table_by_number(int which) {
    switch (which) {
    case 3: return table3();
    case 6: return table6();
    case 7: return table7();
    case 8: return table8();
    default: fail(ErrorCode::BadArgs, "table must be one of 3, 6, 7, 8");
    }
}

/// The rows each table is expected to contain, built from the stored values.
inline std::vector<std::string> expected_rows(int which) {
    std::vector<std::string> out;
    auto label = [](u64 q) { return detail::table_field(q)->label(); };
    switch (which) {
    case 3:
        for (const auto& r : coset_rows()) out.push_back(detail::csv_line(label(r.q), r.n_prime, r.t, r.n, 1, r.k_max));
        break;
    case 6:
        for (const auto& r : product_rows())
            out.push_back(detail::csv_line(label(r.q), r.x1, r.x2, r.n1, r.n2, r.n, 1, r.k_max));
        break;
    case 7:
        for (const auto& r : coset_ea_rows())
            out.push_back(detail::csv_line(label(r.q), r.n_prime, r.t, r.n, r.qk, r.d, 0));
        break;
    case 8:
        for (const auto& r : product_ea_rows())
            out.push_back(detail::csv_line(label(r.q), r.x1, r.x2, r.n1, r.n2, r.n, r.qk, r.d, 0));
        break;
    default: fail(ErrorCode::BadArgs, "table must be one of 3, 6, 7, 8");
    }
    return out;
}

} // namespace hullforge
