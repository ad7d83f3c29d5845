#pragma once

// Exact rationals used for values, layers and classical (layer) polynomials.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace layered {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

/// Reduced `p/q`, or `p` when the denominator is 1.
inline std::string to_string(const Rational& r) {
    const Integer& num = boost::multiprecision::numerator(r);
    const Integer& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses `[-]digits[/digits]`. Returns nullopt on malformed input or a zero
/// denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    auto digits = [&](std::size_t from) {
        std::size_t end = from;
        while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
        return end;
    };
    std::size_t num_end = digits(pos);
    if (num_end == pos) return std::nullopt;
    Integer num(std::string(text.substr(pos, num_end - pos)));
    Integer den = 1;
    if (num_end < text.size()) {
        if (text[num_end] != '/') return std::nullopt;
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != text.size()) return std::nullopt;
        den = Integer(std::string(text.substr(num_end + 1, den_end - num_end - 1)));
        if (den == 0) return std::nullopt;
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

/// Integer k-th root of a non-negative integer, if exact.
inline std::optional<Integer> exact_root(const Integer& value, unsigned k) {
    if (value < 0 || k == 0) return std::nullopt;
    if (value < 2 || k == 1) return value;
    // binary search on [0, 2^(bits/k + 1)]
    std::size_t bits = boost::multiprecision::msb(value) + 1;
    Integer lo = 0;
    Integer hi = Integer(1) << (bits / k + 1);
    while (lo < hi) {
        Integer mid = (lo + hi + 1) >> 1;
        Integer p = boost::multiprecision::pow(mid, k);
        if (p <= value) lo = mid;
        else hi = mid - 1;
    }
    if (boost::multiprecision::pow(lo, k) == value) return lo;
    return std::nullopt;
}

/// r^(p/q) when it is rational. Negative bases are allowed for odd q.
inline std::optional<Rational> rational_power(const Rational& base, const Rational& exponent) {
    const Integer& p = boost::multiprecision::numerator(exponent);
    const Integer& q = boost::multiprecision::denominator(exponent);
    if (base == 0) {
        if (p <= 0) return std::nullopt;
        return Rational(0);
    }
    if (q > 64 || boost::multiprecision::abs(p) > 4096) return std::nullopt;
    unsigned qq = q.convert_to<unsigned>();
    bool negative = base < 0;
    if (negative && qq % 2 == 0) return std::nullopt;
    Rational magnitude = negative ? Rational(-base) : base;
    auto num_root = exact_root(boost::multiprecision::numerator(magnitude), qq);
    auto den_root = exact_root(boost::multiprecision::denominator(magnitude), qq);
    if (!num_root || !den_root) return std::nullopt;
    Rational root(*num_root, *den_root);
    if (negative) root = -root;
    long pp = p.convert_to<long>();
    Rational out = 1;
    Rational factor = pp < 0 ? Rational(1 / root) : root;
    for (long i = 0; i < (pp < 0 ? -pp : pp); ++i) out *= factor;
    return out;
}

}  // namespace layered
