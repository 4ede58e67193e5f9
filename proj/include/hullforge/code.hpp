/**************************************************************************
 * code.hpp
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

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace hullforge {

/// Work limits for the exhaustive searches.
struct Budget {
    u64 enumeration = u64{1} << 22; // q^k codewords for distance strategy A
    u64 subsets = u64{1} << 22;     // column-subset tests for distance strategy B
    u64 mds = 1'000'000;            // k-subsets for mds_certificate
    u64 alpha = 1'000'000;          // candidate tuples in the alpha search

    /// Defaults, with HULLFORGE_BUDGET (if set to a positive integer)
    /// replacing both distance budgets.
    static Budget defaults() {
        Budget b;
        if (const char* env = std::getenv("HULLFORGE_BUDGET")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) b.enumeration = b.subsets = v;
        }
        return b;
    }
};

/// A linear code given by a full-row-rank generator matrix. Dimension zero is
/// representable (hulls, duals of full spaces) but rejected by operations
/// that need codewords.
class LinearCode {
public:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {
        if (gen_.cols() == 0) fail(ErrorCode::BadArgs, "code length must be positive");
        if (rank(gen_) != gen_.rows()) fail(ErrorCode::RankDeficient, "generator matrix is not of full row rank");
    }

    /// The code spanned by the rows of m, whatever its rank.
    static LinearCode span(const Matrix& m) { return LinearCode(row_basis(m)); }

    const Field& field() const { return gen_.field(); }
    const FieldPtr& field_ptr() const { return gen_.field_ptr(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }

    /// Parity-check matrix: a basis of the Euclidean dual.
    Matrix parity_check() const { return kernel(gen_); }

    bool same_code(const LinearCode& other) const { return same_row_space(gen_, other.gen_); }

private:
    Matrix gen_;
};

inline void check_exponent(const Field& f, u64 e, u64 max) {
    if (e > max) fail(ErrorCode::EOutOfRange, "e = " + std::to_string(e) + " out of range for GF(" + f.label() + ")");
}

/// e-Galois dual: sigma^(h-e) of the Euclidean dual. e = h is accepted and
/// coincides with e = 0.
inline LinearCode dual(const LinearCode& c, u64 e) {
    const u64 h = c.field().h();
    check_exponent(c.field(), e, h);
    return LinearCode(frobenius(c.parity_check(), h - e));
}

struct HullReport {
    u64 e = 0;
    std::size_t dim_hull = 0;        // explicit intersection
    std::size_t dim_via_parity = 0;  // n - k - rank(H sigma^(h-e)(H^T))
    std::size_t dim_via_gram_e = 0;  // k - rank(G sigma^e(G^T))
    std::size_t dim_via_gram_he = 0; // k - rank(G sigma^(h-e)(G^T))
    Matrix hull_basis;               // rref basis of C cap C^(perp e)
};

inline HullReport hull(const LinearCode& c, u64 e) {
    const Field& F = c.field();
    const u64 h = F.h();
    check_exponent(F, e, h);
    const Matrix& g = c.generator();
    const Matrix hpar = c.parity_check();
    const Matrix dgen = frobenius(hpar, h - e);

    HullReport r;
    r.e = e;
    // x lies in both row spaces iff it is Euclidean-orthogonal to both kernels.
    r.hull_basis = kernel(vstack(hpar, kernel(dgen)));
    r.dim_hull = r.hull_basis.rows();
    r.dim_via_parity = c.n() - c.k() - rank(gram(hpar, h - e));
    r.dim_via_gram_e = c.k() - rank(gram(g, e));
    r.dim_via_gram_he = c.k() - rank(gram(g, h - e));
    if (r.dim_via_parity != r.dim_hull || r.dim_via_gram_e != r.dim_hull || r.dim_via_gram_he != r.dim_hull)
        fail(ErrorCode::InternalMismatch,
             "hull dimension formulas disagree: " + std::to_string(r.dim_hull) + "/" + std::to_string(r.dim_via_parity) +
                 "/" + std::to_string(r.dim_via_gram_e) + "/" + std::to_string(r.dim_via_gram_he));
    return r;
}

struct Classification {
    bool self_orthogonal = false;
    bool self_dual = false;
    bool lcd = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

inline Classification classify_one(const LinearCode& c, u64 e) {
    const Matrix g = gram(c.generator(), e);
    Classification out;
    out.self_orthogonal = g.is_zero();
    out.lcd = rank(g) == c.k();
    out.self_dual = out.self_orthogonal && 2 * c.k() == c.n();
    return out;
}

/// Self-orthogonal / self-dual / LCD at e, cross-checked at h - e.
inline Classification classify(const LinearCode& c, u64 e) {
    const u64 h = c.field().h();
    check_exponent(c.field(), e, h);
    const Classification a = classify_one(c, e);
    if (classify_one(c, h - e) != a)
        fail(ErrorCode::InternalMismatch, "classification differs between e and h-e");
    return a;
}

struct DistanceResult {
    u64 d = 0;           // exact distance, or a proven lower bound when !exact
    bool exact = false;
    u64 upper = 0;       // weight of the lightest codeword seen (or Singleton)
    std::string method;  // "enumeration", "dependency" or "bracket"
};

namespace detail {

inline u64 row_weight(const Matrix& m, std::size_t i) {
    u64 w = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) w += !m(i, j).is_zero();
    return w;
}

inline u64 initial_upper(const LinearCode& c) {
    const Matrix b = row_basis(c.generator());
    u64 best = c.n() - c.k() + 1;
    for (std::size_t i = 0; i < b.rows(); ++i) best = std::min(best, row_weight(b, i));
    return best;
}

// Incremental column-independence test: columns are pushed one at a time and
// reduced against the stored echelon vectors.
class ColumnEliminator {
public:
    ColumnEliminator(const Matrix& m) : m_(m) {}

    /// Pushes column c; returns false (and pushes nothing) if it is dependent.
    bool push(std::size_t c) {
        const Field& F = m_.field();
        std::vector<Element> v(m_.rows());
        for (std::size_t i = 0; i < m_.rows(); ++i) v[i] = m_(i, c);
        for (const auto& [piv, b] : basis_) {
            const Element f = v[piv];
            if (f.is_zero()) continue;
            const Element nf = F.neg(f);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!b[i].is_zero()) v[i] = F.add(v[i], F.mul(nf, b[i]));
        }
        std::size_t piv = 0;
        while (piv < v.size() && v[piv].is_zero()) ++piv;
        if (piv == v.size()) return false;
        const Element s = F.inv(v[piv]);
        for (auto& x : v) x = F.mul(x, s);
        basis_.emplace_back(piv, std::move(v));
        return true;
    }

    void pop() { basis_.pop_back(); }

private:
    const Matrix& m_;
    std::vector<std::pair<std::size_t, std::vector<Element>>> basis_;
};

// Depth-first search for a dependent set of at most w columns, visited in
// lexicographic order. `tests` counts pushes.
inline bool dependent_subset(ColumnEliminator& el, std::size_t ncols, std::size_t start, std::size_t depth,
                             std::size_t w, u64& tests) {
    for (std::size_t c = start; c + (w - depth) <= ncols; ++c) {
        ++tests;
        if (!el.push(c)) return true;
        if (depth + 1 < w && dependent_subset(el, ncols, c + 1, depth + 1, w, tests)) {
            el.pop();
            return true;
        }
        el.pop();
    }
    return false;
}

} // namespace detail

/// Strategy A: weight of every nonzero codeword up to scalars. nullopt when
/// q^k exceeds the budget.
inline std::optional<u64> min_distance_enumerate(const LinearCode& c, u64 budget) {
    if (c.k() == 0) fail(ErrorCode::EmptyCode, "minimum distance of the zero code");
    const Field& F = c.field();
    const u64 q = F.q();
    auto total = checked_pow(q, c.k());
    if (!total || *total > budget) return std::nullopt;

    const Matrix& g = c.generator();
    const std::size_t n = c.n(), k = c.k();
    u64 best = n;
    std::vector<Element> word(n), msg(k);
    auto add_scaled_row = [&](std::size_t r, Element s) {
        for (std::size_t j = 0; j < n; ++j)
            if (!g(r, j).is_zero()) word[j] = F.add(word[j], F.mul(s, g(r, j)));
    };
    for (std::size_t lead = 0; lead < k; ++lead) {
        std::fill(word.begin(), word.end(), Element{});
        std::fill(msg.begin(), msg.end(), Element{});
        msg[lead] = F.one();
        add_scaled_row(lead, F.one());
        while (true) {
            u64 w = 0;
            for (Element x : word) w += !x.is_zero();
            best = std::min(best, w);
            // Odometer over the message digits after `lead`.
            std::size_t pos = k;
            while (pos-- > lead + 1) {
                const Element old = msg[pos];
                const Element nxt{static_cast<std::uint32_t>((old.value + 1) % q)};
                msg[pos] = nxt;
                add_scaled_row(pos, F.sub(nxt, old));
                if (!nxt.is_zero()) break;
            }
            if (pos == lead) break;
        }
    }
    return best;
}

/// Strategy B: smallest w such that some w columns of a parity-check matrix
/// are dependent. Returns the exact distance or, when the subset budget runs
/// out, the lower bound established so far.
inline DistanceResult min_distance_dependency(const LinearCode& c, u64 budget) {
    if (c.k() == 0) fail(ErrorCode::EmptyCode, "minimum distance of the zero code");
    const Matrix hpar = c.parity_check();
    const std::size_t n = c.n();
    const u64 upper = detail::initial_upper(c);
    u64 spent = 0;
    for (std::size_t w = 1; w <= upper; ++w) {
        const u64 cost = binomial_capped(n, w, budget + 1);
        if (spent + cost > budget) return {w, false, upper, "bracket"};
        detail::ColumnEliminator el(hpar);
        u64 tests = 0;
        if (detail::dependent_subset(el, n, 0, 0, w, tests)) return {w, true, w, "dependency"};
        spent += cost;
    }
    // The lightest generator row or the Singleton bound is attained.
    return {upper, true, upper, "dependency"};
}

/// Minimum distance; cap (when given) replaces both distance budgets.
inline DistanceResult min_distance(const LinearCode& c, std::optional<u64> cap = std::nullopt,
                                   const Budget& budget = Budget::defaults()) {
    const u64 enum_budget = cap.value_or(budget.enumeration);
    const u64 subset_budget = cap.value_or(budget.subsets);
    if (auto d = min_distance_enumerate(c, enum_budget)) return {*d, true, *d, "enumeration"};
    return min_distance_dependency(c, subset_budget);
}

/// True iff every k-subset of generator columns is independent.
inline bool mds_certificate(const LinearCode& c, u64 budget = Budget::defaults().mds) {
    const std::size_t n = c.n(), k = c.k();
    if (k == 0) return true;
    if (binomial_capped(n, k, budget + 1) > budget)
        fail(ErrorCode::BudgetExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the MDS budget");
    // A dependent j-subset (j <= k) extends to a dependent k-subset, so it is
    // enough to look for the first dependency in a depth-k search.
    detail::ColumnEliminator el(c.generator());
    u64 tests = 0;
    return !detail::dependent_subset(el, n, 0, 0, k, tests);
}

struct SingletonProfile {
    u64 defect = 0;
    u64 dual_defect = 0;
    std::optional<u64> m_mds;
};

/// Singleton defects of C and its e-Galois dual. The zero code is given
/// distance n + 1 (defect 0).
inline SingletonProfile singleton_profile(const LinearCode& c, u64 e, std::optional<u64> cap = std::nullopt) {
    auto defect_of = [&](const LinearCode& x) -> u64 {
        if (x.k() == 0) return 0;
        const DistanceResult d = min_distance(x, cap);
        if (!d.exact) fail(ErrorCode::BudgetExceeded, "minimum distance not computable within budget");
        return x.n() - x.k() + 1 - d.d;
    };
    SingletonProfile p;
    p.defect = defect_of(c);
    p.dual_defect = defect_of(dual(c, e));
    const u64 limit = std::min<u64>(c.k() == 0 ? 0 : c.k() - 1, c.n() / 2);
    if (p.defect == p.dual_defect && p.defect <= limit) p.m_mds = p.defect;
    return p;
}

} // namespace hullforge
