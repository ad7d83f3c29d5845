#pragma once

// Polynomial text grammar:
//   poly   := "zero" | term ("+" term)*
//   term   := scalar ["*" factor ("*" factor)*] | factor ("*" factor)*
//   scalar := rational [":" (rational | "inf")]        bare rational = tangible
//   factor := var ["^" (rational | "(" rational ")")]
//   var    := "x" | "x" digits
// Univariate input uses `x`; multivariate input uses x1..xn.

#include "layered/layering_map.hpp"
#include "layered/poly.hpp"

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace layered {

namespace detail {

struct ParsedTerm {
    LayeredScalar coeff;
    std::map<std::size_t, Rational> exponents;  // variable index (1-based; 0 = plain x)
    std::size_t position = 0;
};

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> terms;
        skip_ws();
        if (rest_trimmed() == "zero") return terms;
        if (at_end()) fail("empty polynomial");
        terms.push_back(term());
        while (true) {
            skip_ws();
            if (at_end()) break;
            expect('+');
            terms.push_back(term());
        }
        return terms;
    }

    std::size_t max_index = 0;
    bool plain_x = false;

private:
    std::string_view rest_trimmed() const {
        std::string_view r = text_.substr(pos_);
        while (!r.empty() && std::isspace(static_cast<unsigned char>(r.back()))) r.remove_suffix(1);
        return r;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    static bool is_number_start(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '-'; }

    std::string_view number_token() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (peek() == '/') {
            ++pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Rational rational() {
        skip_ws();
        std::size_t start = pos_;
        auto r = parse_rational(number_token());
        if (!r) {
            pos_ = start;
            fail("expected a rational number");
        }
        return *r;
    }

    Layer layer() {
        skip_ws();
        if (text_.substr(pos_, 3) == "inf") {
            pos_ += 3;
            return Layer::infinity();
        }
        return Layer(rational());
    }

    void factor(ParsedTerm& t) {
        skip_ws();
        if (peek() != 'x') fail("expected a variable");
        ++pos_;
        std::size_t index = 0;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            index = std::stoul(std::string(text_.substr(start, pos_ - start)));
            if (index == 0) {
                pos_ = start;
                fail("variables are numbered from x1");
            }
            max_index = std::max(max_index, index);
        } else {
            plain_x = true;
        }
        Rational e = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (peek() == '(') {
                ++pos_;
                e = rational();
                expect(')');
            } else {
                e = rational();
            }
        }
        t.exponents[index] += e;
    }

    ParsedTerm term() {
        skip_ws();
        ParsedTerm t{LayeredScalar::one(), {}, pos_};
        if (is_number_start(peek())) {
            Rational v = rational();
            Layer l(1);
            skip_ws();
            if (peek() == ':') {
                ++pos_;
                l = layer();
            }
            t.coeff = {v, l};
            skip_ws();
            if (peek() != '*') {
                if (peek() == 'x') factor(t);  // `2x` style
                else return t;
            }
        } else if (peek() != 'x') {
            fail("expected a term");
        } else {
            factor(t);
        }
        while (true) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            factor(t);
        }
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Univariate parse over variable `x` (or `x1`); duplicate exponents combine
/// under the sort's addition.
inline LayeredPoly parse_poly(std::string_view text, Sort sort) {
    detail::PolyParser parser(text);
    auto terms = parser.parse();
    if (parser.max_index > 1 || (parser.plain_x && parser.max_index == 1))
        throw ParseError(0, "univariate polynomial expected (use x)");
    LayeredPoly out;
    for (const auto& t : terms) {
        check_layer(t.coeff.layer, sort);
        Rational e = 0;
        for (const auto& [var, ex] : t.exponents) e += ex;
        if (!is_integer(e) || e < 0 || e > 1000000)
            throw ParseError(t.position, "univariate exponents must be non-negative integers");
        out.add_term(e.convert_to<LayeredPoly::Exponent>(), t.coeff, sort);
    }
    return out;
}

/// Multivariate parse over x1..xn; arity is the largest index unless given.
/// A plain `x` counts as x1.
inline MultiPoly parse_multi_poly(std::string_view text, Sort sort, std::size_t arity = 0) {
    detail::PolyParser parser(text);
    auto terms = parser.parse();
    std::size_t n = std::max<std::size_t>(parser.max_index, parser.plain_x ? 1 : 0);
    if (arity == 0) arity = std::max<std::size_t>(n, 1);
    if (n > arity) throw ParseError(0, "variable index exceeds arity " + std::to_string(arity));
    MultiPoly out(arity);
    for (const auto& t : terms) {
        check_layer(t.coeff.layer, sort);
        ExponentVector e(arity, Rational(0));
        for (const auto& [var, ex] : t.exponents) e[var == 0 ? 0 : var - 1] += ex;
        out.add_term(e, t.coeff, sort);
    }
    return out;
}

/// Canonical `v:l`.
inline std::string format_scalar(const LayeredScalar& x) { return x.str(); }
inline std::string format_scalar(const MaybeScalar& x) { return to_string(x); }

}  // namespace layered
