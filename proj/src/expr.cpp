#include "folia/expr.hpp"

#include <cctype>

namespace folia {

namespace {

constexpr unsigned kMaxExponent = 100000;

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& expected) {
        skip_ws();
        throw SyntaxError(pos, expected);
    }

    Int parse_digits() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("a number");
        return Int(std::string(text.substr(start, pos - start)));
    }

    unsigned parse_exponent() {
        char c = peek();
        if (c == '(' || c == '-')
            throw NonPolynomial("exponent must be a nonnegative integer literal");
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("an integer exponent");
        Int e = parse_digits();
        if (e > kMaxExponent) fail("an exponent at most " + std::to_string(kMaxExponent));
        return static_cast<unsigned>(e);
    }

    BivarPoly parse_base() {
        char c = peek();
        if (c == 'x') {
            ++pos;
            return BivarPoly::x();
        }
        if (c == 'y') {
            ++pos;
            return BivarPoly::y();
        }
        if (c == '(') {
            ++pos;
            BivarPoly inner = parse_expr();
            if (!consume(')')) fail("')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_base();
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return BivarPoly::constant(Rat(parse_digits()));
        fail("'x', 'y', a number, '(' or '-'");
    }

    BivarPoly parse_factor() {
        BivarPoly b = parse_base();
        if (consume('^')) return pow(b, parse_exponent());
        return b;
    }

    BivarPoly parse_term() {
        BivarPoly acc = parse_factor();
        for (;;) {
            if (consume('*')) {
                acc = acc * parse_factor();
            } else if (consume('/')) {
                BivarPoly d = parse_factor();
                if (d.degree_y() > 0 || (d.degree_y() == 0 && d.coeff(0).degree() > 0))
                    throw NonPolynomial("division by a non-constant");
                if (d.is_zero()) throw NonPolynomial("division by zero");
                acc = acc * BivarPoly::constant(Rat(1) / d.coeff(0).coeff(0));
            } else {
                return acc;
            }
        }
    }

    BivarPoly parse_expr() {
        BivarPoly acc = parse_term();
        for (;;) {
            if (consume('+'))
                acc = acc + parse_term();
            else if (consume('-'))
                acc = acc - parse_term();
            else
                return acc;
        }
    }
};

}  // namespace

BivarPoly parse(std::string_view text) {
    Parser p{text};
    BivarPoly e = p.parse_expr();
    if (!p.at_end()) p.fail("'+', '-', '*', '/', '^' or end of input");
    return e;
}

}  // namespace folia
