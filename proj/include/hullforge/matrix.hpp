/**************************************************************************
 * matrix.hpp
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

#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"
#include "field.hpp"

namespace hullforge {

/// Dense row-major matrix over a Field.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(FieldPtr field, std::size_t n) {
        Matrix m(std::move(field), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Element{1};
        return m;
    }

    /// All rows must have equal length; `cols` is used when `rows` is empty.
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<Element>>& rows, std::size_t cols = 0) {
        if (!rows.empty()) cols = rows[0].size();
        Matrix m(std::move(field), rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    const FieldPtr& field_ptr() const { return field_; }
    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Element operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Element> row(std::size_t i) const {
        return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
    }

    bool is_zero() const {
        for (Element x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    FieldPtr field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Element> data_;
};

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are taken in the leftmost column that has
/// a nonzero entry at or below the current row, using the topmost such row.
inline RrefResult rref(Matrix m) {
    const Field& F = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
        const Element s = F.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = F.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Element f = F.neg(m(i, c));
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) = F.add(m(i, j), F.mul(f, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// The nonzero rows of rref(m); a canonical basis of the row space.
inline Matrix row_basis(const Matrix& m) {
    RrefResult rr = rref(m);
    Matrix out(m.field_ptr(), rr.rank, m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = rr.reduced(i, j);
    return out;
}

/// Basis of {x : m x^T = 0}, returned in reduced echelon form.
inline Matrix kernel(const Matrix& m) {
    const Field& F = m.field();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    Matrix basis(m.field_ptr(), m.cols() - rr.rank, m.cols());
    std::size_t b = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        basis(b, f) = F.one();
        for (std::size_t r = 0; r < rr.rank; ++r) basis(b, rr.pivots[r]) = F.neg(rr.reduced(r, f));
        ++b;
    }
    return row_basis(basis);
}

inline Matrix transpose(const Matrix& m) {
    Matrix t(m.field_ptr(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::DimensionMismatch, "inner dimensions differ");
    const Field& F = a.field();
    Matrix c(a.field_ptr(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t t = 0; t < a.cols(); ++t) {
            const Element x = a(i, t);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(t, j).is_zero()) c(i, j) = F.add(c(i, j), F.mul(x, b(t, j)));
        }
    return c;
}

/// Entrywise sigma^e.
inline Matrix frobenius(const Matrix& m, u64 e) {
    const Field& F = m.field();
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = F.frobenius(m(i, j), e);
    return out;
}

/// G sigma^e(G^T): entry (i, j) is the e-Galois inner product of rows i and j.
inline Matrix gram(const Matrix& g, u64 e) {
    if (e > g.field().h()) fail(ErrorCode::EOutOfRange, "e = " + std::to_string(e) + " exceeds h");
    return multiply(g, transpose(frobenius(g, e)));
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "vstack column counts differ");
    Matrix out(a.field_ptr(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, j) = b(i, j);
    return out;
}

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "hstack row counts differ");
    Matrix out(a.field_ptr(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

inline Matrix select_columns(const Matrix& m, const std::vector<std::size_t>& cols) {
    Matrix out(m.field_ptr(), m.rows(), cols.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
    return out;
}

inline bool same_row_space(const Matrix& a, const Matrix& b) {
    return a.cols() == b.cols() && row_basis(a) == row_basis(b);
}

inline Element determinant(Matrix m) {
    if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const Field& F = m.field();
    const std::size_t n = m.rows();
    Element det = F.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && m(pr, c).is_zero()) ++pr;
        if (pr == n) return F.zero();
        if (pr != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, m(c, c));
        const Element s = F.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            const Element f = F.neg(F.mul(m(i, c), s));
            for (std::size_t j = c; j < n; ++j) m(i, j) = F.add(m(i, j), F.mul(f, m(c, j)));
        }
    }
    return det;
}

struct StandardForm {
    Matrix systematic;                   // (I_k | A)
    std::vector<std::size_t> permutation; // systematic column j is column permutation[j] of the input
};

/// Row-reduces g and moves pivot columns to the front.
inline StandardForm standard_form(const Matrix& g) {
    RrefResult rr = rref(g);
    if (rr.rank != g.rows()) fail(ErrorCode::RankDeficient, "generator matrix is not of full row rank");
    std::vector<std::size_t> perm = rr.pivots;
    std::vector<bool> is_pivot(g.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < g.cols(); ++c)
        if (!is_pivot[c]) perm.push_back(c);
    return {select_columns(rr.reduced, perm), std::move(perm)};
}

} // namespace hullforge
