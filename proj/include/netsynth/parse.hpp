#pragma once

#include <cctype>
#include <string>

#include "netsynth/ratfunc.hpp"

namespace netsynth {

/// Recursive-descent parser for rational-function expressions over exact
/// rational constants and the symbol s. Grammar (standard precedence, ^ binds
/// tightest, integer exponents only):
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('+'|'-')* power
///   power  := atom ('^' ('-')? integer)?
///   atom   := number | 's' | '(' expr ')'
///
/// Number literals are integers or decimals; decimals convert exactly (0.1 -> 1/10).
class ExprParser {
public:
    explicit ExprParser(std::string text) : text_(std::move(text)) {}

    RatFunc<Rational> parse() {
        RatFunc<Rational> r = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return r;
    }

private:
    std::string text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFunc<Rational> expr() {
        RatFunc<Rational> acc = term();
        for (;;) {
            if (eat('+')) {
                acc = acc + term();
            } else if (eat('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    RatFunc<Rational> term() {
        RatFunc<Rational> acc = factor();
        for (;;) {
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                std::size_t at = pos_;
                RatFunc<Rational> d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                acc = acc / d;
            } else {
                return acc;
            }
        }
    }

    RatFunc<Rational> factor() {
        bool neg = false;
        for (;;) {
            if (eat('+')) continue;
            if (eat('-')) {
                neg = !neg;
                continue;
            }
            break;
        }
        RatFunc<Rational> p = power();
        return neg ? -p : p;
    }

    RatFunc<Rational> power() {
        RatFunc<Rational> base = atom();
        if (!eat('^')) return base;
        skip_ws();
        bool neg_exp = eat('-');
        std::size_t at = pos_;
        if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at])))
            throw ParseError("expected integer exponent", pos_);
        long long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + (text_[pos_] - '0');
            if (e > 64) throw ParseError("exponent too large", at);
            ++pos_;
        }
        RatFunc<Rational> acc(Rational(1));
        for (long long i = 0; i < e; ++i) acc = acc * base;
        if (neg_exp) {
            if (acc.is_zero()) throw ParseError("zero to a negative power", at);
            acc = acc.reciprocal();
        }
        return acc;
    }

    RatFunc<Rational> atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc<Rational> r = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return r;
        }
        if (c == 's') {
            ++pos_;
            return RatFunc<Rational>::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            try {
                return RatFunc<Rational>(parse_rational(text_.substr(start, pos_ - start)));
            } catch (const ParseError&) {
                throw ParseError("malformed number", start);
            }
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

inline RatFunc<Rational> parse_ratfunc(const std::string& text) { return ExprParser(text).parse(); }

} // namespace netsynth
