#pragma once

#include <yangian/algebra.hpp>
#include <yangian/hopf.hpp>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace yangian {

class ParseError : public std::invalid_argument {
public:
    ParseError(std::size_t pos, const std::string& what)
        : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Grammar:
//   expr   := sign? term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | 'T[' int ',' int ',' int ']' | 'Z[' int ']' | '(' expr ')'
// Z[r] is the u^-r coefficient of the central series Z(u).
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, int n, int dual_trunc) : s_(text), n_(n), d_(dual_trunc) {}

    AlgElement parse() {
        AlgElement x = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(p_, what); }

    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool accept(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    AlgElement expr() {
        skip();
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        AlgElement x = term();
        if (negate) x = x * Rational(-1);
        while (true) {
            if (accept('+')) x += term();
            else if (accept('-')) x -= term();
            else return x;
        }
    }

    AlgElement term() {
        AlgElement x = factor();
        while (accept('*')) x = x * factor();
        return x;
    }

    long integer() {
        skip();
        const std::size_t start = p_;
        if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) ++p_;
        const std::size_t digits = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ == digits) {
            p_ = start;
            fail("expected an integer");
        }
        try {
            return std::stol(std::string(s_.substr(start, p_ - start)));
        } catch (const std::out_of_range&) {
            p_ = start;
            fail("integer out of range");
        }
    }

    AlgElement factor() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[p_];
        if (c == '(') {
            ++p_;
            AlgElement x = expr();
            expect(')');
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return AlgElement::scalar(n_, rational(), d_);
        if (c == 'T') {
            const std::size_t at = p_++;
            expect('[');
            const long level = integer();
            expect(',');
            const long i = integer();
            expect(',');
            const long j = integer();
            expect(']');
            if (level == 0) throw ParseError(at, "level 0 is not a generator");
            if (i < 1 || i > n_ || j < 1 || j > n_)
                throw ParseError(at, "index out of range 1.." + std::to_string(n_));
            return AlgElement::generator(n_, {static_cast<int>(level), static_cast<int>(i), static_cast<int>(j)}, d_);
        }
        if (c == 'Z') {
            const std::size_t at = p_++;
            expect('[');
            const long r = integer();
            expect(']');
            if (r < 0) throw ParseError(at, "central coefficient index must be >= 0");
            return z_series(n_, static_cast<int>(r))[static_cast<std::size_t>(r)].with_truncation(d_);
        }
        fail("expected a number, T[...], Z[...] or '('");
    }

    Rational rational() {
        const std::size_t start = p_;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
        if (p_ < s_.size() && s_[p_] == '/') {
            ++p_;
            const std::size_t den = p_;
            while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) ++p_;
            if (p_ == den) fail("expected a denominator");
        }
        try {
            return Rational::parse(s_.substr(start, p_ - start));
        } catch (const std::exception& e) {
            throw ParseError(start, e.what());
        }
    }

    std::string_view s_;
    std::size_t p_ = 0;
    int n_;
    int d_;
};

inline AlgElement parse_element(std::string_view text, int n, int dual_trunc = kNoTruncation) {
    return ExpressionParser(text, n, dual_trunc).parse();
}

// A single generator "T[l,i,j]".
inline GenId parse_generator(std::string_view text, int n) {
    AlgElement x = parse_element(text, n);
    if (x.terms().size() != 1 || x.terms().begin()->first.size() != 1 || !x.terms().begin()->second.is_one())
        throw ParseError(0, "expected a single generator T[l,i,j]");
    return x.terms().begin()->first.front();
}

// A single word, kept as written (no reordering): "T[a,b,c] * T[d,e,f] * ..." or "1".
inline Monomial parse_monomial(std::string_view text, int n) {
    const std::string s(text);
    const auto first = s.find_first_not_of(" \t"), last = s.find_last_not_of(" \t");
    if (first != std::string::npos && s.substr(first, last - first + 1) == "1") return {};
    Monomial m;
    std::size_t start = 0;
    while (true) {
        const std::size_t star = s.find('*', start);
        const std::string piece = s.substr(start, star == std::string::npos ? std::string::npos : star - start);
        try {
            m.push_back(parse_generator(piece, n));
        } catch (const ParseError& e) {
            throw ParseError(start + e.position(), std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
        }
        if (star == std::string::npos) return m;
        start = star + 1;
    }
}

}  // namespace yangian
