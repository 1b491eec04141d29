// Copyright 2026 The localroots Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "localroots/parse.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace localroots {

ParseError::ParseError(std::size_t position, std::string expected)
    : Error(ErrorCode::SyntaxError,
            "expected " + expected + " at position " + std::to_string(position),
            "position=" + std::to_string(position) + " expected=" + expected),
      position_(position),
      expected_(std::move(expected)) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, const FieldContext& field) : s_(text), F_(field) {}

    Poly parse() {
        Poly e = expr();
        skip();
        if (pos_ != s_.size()) throw ParseError(pos_, "operator or end of input");
        return e;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    mpz_class integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError(start, "integer");
        return mpz_class(std::string(s_.substr(start, pos_ - start)));
    }

    Poly expr() {
        Poly acc(F_);
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (peek() == '/') {
                const std::size_t at = pos_++;
                Poly d = factor();
                if (d.is_zero()) throw Error(ErrorCode::ZeroInverse, "division by zero",
                                             "position=" + std::to_string(at));
                if (d.degree() != 0)
                    throw Error(ErrorCode::BadFieldElement, "division by a non-constant",
                                "position=" + std::to_string(at));
                acc = acc.scale(F_.exact_div(F_.one(), d.leading_coefficient()));
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (!accept('^')) return base;
        bool negative = false;
        if (accept('-'))
            negative = true;
        else
            accept('+');
        const std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) {
            skip();
            throw Error(ErrorCode::NonIntegerExponent, "exponent must be an integer literal",
                        "position=" + std::to_string(pos_));
        }
        mpz_class e = integer();
        if (peek() == '/' || peek() == '.')
            throw Error(ErrorCode::NonIntegerExponent, "exponent must be an integer",
                        "position=" + std::to_string(pos_));
        if (!e.fits_sint_p() || e > std::numeric_limits<int>::max() / 2)
            throw Error(ErrorCode::NonIntegerExponent, "exponent is too large",
                        "position=" + std::to_string(at));
        const int n = static_cast<int>(e.get_si());
        if (!negative) return base.pow(n);
        if (base.is_zero() || base.degree() != 0)
            throw Error(ErrorCode::NonIntegerExponent,
                        "negative exponents apply to nonzero constants only",
                        "position=" + std::to_string(at));
        return Poly::constant(F_, F_.pow(base.leading_coefficient(), -n));
    }

    Poly atom() {
        const char c = peek();
        const std::size_t at = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(F_, F_.from_integer(integer()));
        if (c == 'x' || c == 'X') {
            ++pos_;
            return Poly::x(F_);
        }
        if (c == '(') {
            ++pos_;
            Poly e = expr();
            if (!accept(')')) throw ParseError(pos_, "')'");
            return e;
        }
        const bool equal = F_.mode() == Characteristic::Equal;
        if (c == 'p' && !equal) {
            ++pos_;
            return Poly::constant(F_, F_.uniformizer());
        }
        if (c == 't' && equal) {
            ++pos_;
            return Poly::constant(F_, F_.uniformizer());
        }
        if (c == '[' && equal) {
            ++pos_;
            std::vector<mpz_class> digits;
            do {
                bool neg = accept('-');
                mpz_class d = integer();
                digits.push_back(neg ? mpz_class(-d) : d);
            } while (accept(','));
            if (!accept(']')) throw ParseError(pos_, "',' or ']'");
            if (digits.size() > F_.residue_degree())
                throw Error(ErrorCode::BadFieldElement,
                            "residue vector longer than the residue degree",
                            "position=" + std::to_string(at));
            std::uint32_t packed = 0;
            for (std::size_t i = digits.size(); i-- > 0;) {
                const auto d = static_cast<std::uint32_t>(mpz_fdiv_ui(digits[i].get_mpz_t(), F_.p()));
                packed = packed * F_.p() + d;
            }
            return Poly::constant(F_, F_.from_residue({packed}));
        }
        if (pos_ == s_.size()) throw ParseError(pos_, "operand");
        throw ParseError(at, equal ? "integer, 'x', 't', '[' or '('" : "integer, 'x', 'p' or '('");
    }

    std::string_view s_;
    const FieldContext& F_;
    std::size_t pos_ = 0;
};

bool compound(const std::string& s) {
    return s.find(' ') != std::string::npos;
}

}  // namespace

Poly parse_poly(std::string_view text, const FieldContext& field) {
    return Parser(text, field).parse();
}

KElement parse_element(std::string_view text, const FieldContext& field) {
    Poly f = parse_poly(text, field);
    if (f.is_zero()) return field.zero();
    if (f.degree() != 0)
        throw Error(ErrorCode::BadFieldElement, "expected a constant", std::string(text));
    return f.leading_coefficient();
}

std::string format_element(const KElement& x, const FieldContext& field) {
    return field.to_string(field.exact(x));
}

std::string format_poly(const Poly& f) {
    const FieldContext& F = f.field();
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const int k = it->first;
        KElement c = F.exact(it->second);
        bool negative = false;
        if (c.is_rational() && sgn(c.rational()) < 0) {
            negative = true;
            c = F.neg(c);
        }
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        std::string coeff = F.to_string(c);
        if (compound(coeff)) coeff = "(" + coeff + ")";
        std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
        if (mono.empty())
            out += coeff;
        else if (F.is_zero(F.sub(c, F.one())))
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

}  // namespace localroots
