/**************************************************************************
 * codefile.hpp
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

// Code file format:
//
//   # comment
//   p=3 h=2 n=4 k=2 modulus=2,2,1
//   1 0 w^3 2
//   0 1 1 w
//
// The header names the field (modulus coefficients little-endian, optional)
// and the shape; then k rows of n element literals follow.

#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "code.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"

namespace hullforge {

namespace detail {

struct Token {
    std::string text;
    std::size_t line = 0, col = 0;
};

inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 1, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) toks.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
            i = j;
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        pos = end + 1;
        ++line_no;
    }
    return lines;
}

[[noreturn]] inline void parse_error(std::size_t line, std::size_t col, const std::string& what) {
    fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

inline u64 parse_uint(const Token& t, std::string_view s) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        parse_error(t.line, t.col, "expected an unsigned integer in '" + t.text + "'");
    return v;
}

} // namespace detail

/// Parses a code file into a LinearCode.
inline LinearCode parse_code_file(std::string_view text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) detail::parse_error(1, 1, "missing header");

    std::map<std::string, u64> header;
    std::optional<std::vector<u64>> modulus;
    for (const auto& tok : lines[0]) {
        const auto eq = tok.text.find('=');
        if (eq == std::string::npos) detail::parse_error(tok.line, tok.col, "expected key=value, got '" + tok.text + "'");
        const std::string key = tok.text.substr(0, eq);
        const std::string_view value = std::string_view(tok.text).substr(eq + 1);
        if (key == "modulus") {
            std::vector<u64> coeffs;
            std::size_t start = 0;
            while (true) {
                const std::size_t comma = value.find(',', start);
                coeffs.push_back(detail::parse_uint(tok, value.substr(start, comma - start)));
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
            modulus = std::move(coeffs);
        } else if (key == "p" || key == "h" || key == "n" || key == "k") {
            if (header.count(key)) detail::parse_error(tok.line, tok.col, "duplicate key '" + key + "'");
            header[key] = detail::parse_uint(tok, value);
        } else {
            detail::parse_error(tok.line, tok.col, "unknown header key '" + key + "'");
        }
    }
    for (const char* key : {"p", "h", "n", "k"})
        if (!header.count(key)) detail::parse_error(lines[0][0].line, 1, std::string("header lacks '") + key + "'");
    const u64 n = header["n"], k = header["k"];
    if (n == 0 || k == 0 || k > n) detail::parse_error(lines[0][0].line, 1, "need 1 <= k <= n");

    const FieldPtr field = Field::create(header["p"], header["h"], modulus);
    if (lines.size() - 1 != k)
        detail::parse_error(lines.back().back().line, 1,
                            "expected " + std::to_string(k) + " rows, found " + std::to_string(lines.size() - 1));
    Matrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r) {
        const auto& row = lines[r + 1];
        if (row.size() != n)
            detail::parse_error(row[0].line, 1,
                                "expected " + std::to_string(n) + " entries, found " + std::to_string(row.size()));
        for (std::size_t j = 0; j < n; ++j) {
            try {
                g(r, j) = parse_literal(*field, row[j].text);
            } catch (const Error& e) {
                fail(ErrorCode::BadLiteral, "line " + std::to_string(row[j].line) + ", column " +
                                                std::to_string(row[j].col) + ": invalid literal '" + row[j].text + "'");
            }
        }
    }
    return LinearCode(g);
}

inline LinearCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::BadArgs, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code_file(ss.str());
}

/// Canonical text: the modulus is written only when it is not the default.
inline std::string serialize_code_file(const LinearCode& c) {
    const Field& F = c.field();
    std::ostringstream out;
    out << "p=" << F.p() << " h=" << F.h() << " n=" << c.n() << " k=" << c.k();
    if (F.modulus() != Field::create(F.p(), F.h())->modulus()) {
        out << " modulus=";
        for (std::size_t i = 0; i < F.modulus().size(); ++i) out << (i ? "," : "") << F.modulus()[i];
    }
    out << "\n";
    const Matrix& g = c.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t j = 0; j < g.cols(); ++j) out << (j ? " " : "") << format_literal(F, g(r, j));
        out << "\n";
    }
    return out.str();
}

} // namespace hullforge
