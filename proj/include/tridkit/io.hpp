#pragma once

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tridkit/errors.hpp"
#include "tridkit/scalar.hpp"
#include "tridkit/tridiagonal.hpp"

namespace tridkit {

// ---------------------------------------------------------------------------
// scalar formatting: every mode round-trips bit-exactly through its format
// ---------------------------------------------------------------------------

/// 17 significant digits, enough to round-trip any double.
inline std::string format_scalar(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// "p" or "p/q", exact.
inline std::string format_scalar(const Rational& v) { return v.to_string(); }

/// "m*2^e" with a round-trip significand; plain "0" for zero. Values whose
/// exponent fits a double print as plain decimals.
inline std::string format_scalar(const Scaled& v) {
    if (v.is_zero()) return "0";
    if (v.exponent() > -900 && v.exponent() < 900) return format_scalar(v.to_double());
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g*2^%lld", v.significand(),
                  static_cast<long long>(v.exponent()));
    return buf;
}

inline std::string format_scalar(Counted<double> v) { return format_scalar(v.value); }

namespace detail {

inline bool parse_double_token(std::string_view tok, double& out) {
    std::string owned(tok);
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size() || owned.empty()) return false;
    if (errno == ERANGE) return false;
    out = v;
    return true;
}

// optionally signed integer-or-decimal-or-scientific numeral -> exact rational
inline bool parse_rational_decimal(std::string_view tok, Rational& out) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
        negative = tok[pos] == '-';
        ++pos;
    }
    std::string digits;
    long long frac_digits = 0;
    bool any = false;
    while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') {
        digits.push_back(tok[pos]);
        ++pos;
        any = true;
    }
    if (pos < tok.size() && tok[pos] == '.') {
        ++pos;
        while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') {
            digits.push_back(tok[pos]);
            ++frac_digits;
            ++pos;
            any = true;
        }
    }
    if (!any) return false;
    long long exp10 = 0;
    if (pos < tok.size() && (tok[pos] == 'e' || tok[pos] == 'E')) {
        ++pos;
        bool exp_neg = false;
        if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
            exp_neg = tok[pos] == '-';
            ++pos;
        }
        if (pos == tok.size()) return false;
        long long e = 0;
        while (pos < tok.size() && tok[pos] >= '0' && tok[pos] <= '9') {
            e = e * 10 + (tok[pos] - '0');
            if (e > 100000) return false;
            ++pos;
        }
        exp10 = exp_neg ? -e : e;
    }
    if (pos != tok.size()) return false;

    BigInt num = BigInt::from_string(digits);
    BigInt den(1);
    long long shift = exp10 - frac_digits;
    BigInt ten(10);
    for (long long k = 0; k < shift; ++k) num *= ten;
    for (long long k = 0; k < -shift; ++k) den *= ten;
    out = Rational(negative ? -num : num, den);
    return true;
}

inline bool split_fraction(std::string_view tok, std::string_view& num,
                           std::string_view& den) {
    std::size_t slash = tok.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == tok.size())
        return false;
    num = tok.substr(0, slash);
    den = tok.substr(slash + 1);
    return true;
}

} // namespace detail

/// Parse one scalar token for the requested mode. Accepted everywhere:
/// decimal and scientific numerals plus exact fractions "p/q"; scaled mode
/// additionally accepts "m*2^e". Throws std::invalid_argument on garbage.
template <class T>
T parse_scalar(std::string_view tok);

template <>
inline double parse_scalar<double>(std::string_view tok) {
    std::string_view num, den;
    if (detail::split_fraction(tok, num, den)) {
        double p = 0, q = 0;
        if (detail::parse_double_token(num, p) && detail::parse_double_token(den, q) &&
            q != 0.0)
            return p / q;
        throw std::invalid_argument("bad fraction: " + std::string(tok));
    }
    double v = 0;
    if (!detail::parse_double_token(tok, v))
        throw std::invalid_argument("bad number: " + std::string(tok));
    return v;
}

template <>
inline Rational parse_scalar<Rational>(std::string_view tok) {
    std::string_view num, den;
    if (detail::split_fraction(tok, num, den)) {
        Rational p, q;
        if (detail::parse_rational_decimal(num, p) &&
            detail::parse_rational_decimal(den, q) && !q.is_zero())
            return p / q;
        throw std::invalid_argument("bad fraction: " + std::string(tok));
    }
    Rational v;
    if (!detail::parse_rational_decimal(tok, v))
        throw std::invalid_argument("bad number: " + std::string(tok));
    return v;
}

template <>
inline Scaled parse_scalar<Scaled>(std::string_view tok) {
    std::size_t mark = tok.find("*2^");
    if (mark != std::string_view::npos) {
        double sig = 0;
        if (!detail::parse_double_token(tok.substr(0, mark), sig))
            throw std::invalid_argument("bad significand: " + std::string(tok));
        std::string exp_text(tok.substr(mark + 3));
        errno = 0;
        char* end = nullptr;
        long long e = std::strtoll(exp_text.c_str(), &end, 10);
        if (end != exp_text.c_str() + exp_text.size() || exp_text.empty() ||
            errno == ERANGE)
            throw std::invalid_argument("bad exponent: " + std::string(tok));
        return Scaled::from_parts(sig, e);
    }
    std::string_view num, den;
    if (detail::split_fraction(tok, num, den)) {
        double p = 0, q = 0;
        if (detail::parse_double_token(num, p) && detail::parse_double_token(den, q) &&
            q != 0.0)
            return Scaled(p) / Scaled(q);
        throw std::invalid_argument("bad fraction: " + std::string(tok));
    }
    double v = 0;
    if (!detail::parse_double_token(tok, v))
        throw std::invalid_argument("bad number: " + std::string(tok));
    return Scaled(v);
}

template <>
inline Counted<double> parse_scalar<Counted<double>>(std::string_view tok) {
    return {parse_scalar<double>(tok)};
}

// ---------------------------------------------------------------------------
// band text format
//
//   line 1: n
//   line 2: n diagonal values
//   line 3: n-1 superdiagonal values (blank when n = 1)
//   line 4: n-1 subdiagonal values (blank when n = 1)
//
// '#' starts a comment; values are whitespace-separated. Comment-only lines
// do not count as rows.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
    std::string text;
    int line;
    int column;
};

struct Row {
    std::vector<Token> tokens;
    int line; // physical line number, 1-based
};

inline std::vector<Row> tokenize_rows(std::string_view text) {
    std::vector<Row> rows;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = eol == std::string_view::npos
                                    ? text.substr(pos)
                                    : text.substr(pos, eol - pos);
        ++line_no;

        std::size_t hash = line.find('#');
        bool comment_only = false;
        if (hash != std::string_view::npos) {
            comment_only =
                line.substr(0, hash).find_first_not_of(" \t\r") == std::string_view::npos;
            line = line.substr(0, hash);
        }

        Row row;
        row.line = line_no;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
                   line[i] != '\r')
                ++i;
            row.tokens.push_back(Token{std::string(line.substr(start, i - start)),
                                       line_no, static_cast<int>(start) + 1});
        }
        if (!(comment_only && row.tokens.empty()))
            rows.push_back(std::move(row));

        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    // drop trailing all-blank rows so a missing final newline parses the same
    while (!rows.empty() && rows.back().tokens.empty()) rows.pop_back();
    return rows;
}

template <class T>
std::vector<T> parse_band(const Row& row, std::size_t expected, const char* what) {
    if (row.tokens.size() != expected)
        throw DimensionError(std::string(what) + " row needs " +
                                 std::to_string(expected) + " values, got " +
                                 std::to_string(row.tokens.size()),
                             row.line, 1);
    std::vector<T> out;
    out.reserve(expected);
    for (const Token& tok : row.tokens) {
        try {
            out.push_back(parse_scalar<T>(tok.text));
        } catch (const std::invalid_argument& e) {
            throw ValueError(e.what(), tok.line, tok.column);
        }
    }
    return out;
}

} // namespace detail

/// Parse the band text format into a matrix. Throws ParseError for
/// malformed structure, DimensionError for wrong band lengths and
/// ValueError for unreadable scalars, each carrying a line/column.
template <class T>
TridiagonalMatrix<T> parse_tridiag(std::string_view text) {
    std::vector<detail::Row> rows = detail::tokenize_rows(text);
    if (rows.empty()) throw ParseError("empty input", 1, 1);

    const detail::Row& head = rows[0];
    if (head.tokens.size() != 1)
        throw ParseError("first row must hold the order n alone", head.line, 1);
    long long n = 0;
    {
        const detail::Token& tok = head.tokens[0];
        errno = 0;
        char* end = nullptr;
        n = std::strtoll(tok.text.c_str(), &end, 10);
        if (end != tok.text.c_str() + tok.text.size() || errno == ERANGE || n < 1)
            throw ParseError("order must be a positive integer, got '" + tok.text + "'",
                             tok.line, tok.column);
    }

    auto row_or_blank = [&](std::size_t idx) -> detail::Row {
        if (idx < rows.size()) return rows[idx];
        detail::Row blank;
        blank.line = rows.back().line + static_cast<int>(idx - rows.size() + 1);
        return blank;
    };

    const std::size_t order = static_cast<std::size_t>(n);
    std::vector<T> diag = detail::parse_band<T>(row_or_blank(1), order, "diagonal");
    std::vector<T> super =
        detail::parse_band<T>(row_or_blank(2), order - 1, "superdiagonal");
    std::vector<T> sub = detail::parse_band<T>(row_or_blank(3), order - 1, "subdiagonal");

    for (std::size_t extra = 4; extra < rows.size(); ++extra)
        if (!rows[extra].tokens.empty())
            throw ParseError("unexpected content after the four band rows",
                             rows[extra].line, rows[extra].tokens[0].column);

    return TridiagonalMatrix<T>(std::move(diag), std::move(super), std::move(sub));
}

/// Inverse of parse_tridiag: parse(format(A)) == A bit-exactly per mode.
template <class T>
std::string format_tridiag(const TridiagonalMatrix<T>& A) {
    std::ostringstream out;
    out << A.order() << '\n';
    auto write_band = [&](const std::vector<T>& band) {
        for (std::size_t i = 0; i < band.size(); ++i) {
            if (i) out << ' ';
            out << format_scalar(band[i]);
        }
        out << '\n';
    };
    write_band(A.diag_band());
    write_band(A.super_band());
    write_band(A.sub_band());
    return out.str();
}

/// A parsed matrix together with where it came from and the scalar mode it
/// was declared to be read in.
template <class T>
struct TridiagFile {
    TridiagonalMatrix<T> matrix;
    std::string path;
    std::string mode;
};

template <class T>
TridiagFile<T> read_tridiag_file(const std::string& path, const std::string& mode) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return TridiagFile<T>{parse_tridiag<T>(buf.str()), path, mode};
}

} // namespace tridkit
