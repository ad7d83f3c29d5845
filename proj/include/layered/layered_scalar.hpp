#pragma once

// Elements <a>^l of the layered semiring R(L, (Q,+)) in logarithmic notation:
// multiplication adds values and multiplies layers, addition keeps the
// ν-larger summand and adds layers on ν-ties.

#include "layered/sorting_semiring.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace layered {

struct LayeredScalar {
    Rational value;
    Layer layer;

    LayeredScalar() : value(0), layer(1) {}
    LayeredScalar(Rational v, Layer l) : value(std::move(v)), layer(std::move(l)) {}

    /// The multiplicative identity <0>^1.
    static LayeredScalar one() { return {}; }
    static LayeredScalar tangible(Rational v) { return {std::move(v), Layer(1)}; }

    friend bool operator==(const LayeredScalar&, const LayeredScalar&) = default;

    /// Canonical text `v:l`.
    std::string str() const { return to_string(value) + ":" + layer.str(); }
};

/// Scalar-or-bottom. `std::nullopt` is the formally adjoined zero 𝟘.
using MaybeScalar = std::optional<LayeredScalar>;

inline constexpr std::nullopt_t bottom = std::nullopt;

inline std::string to_string(const MaybeScalar& x) { return x ? x->str() : std::string("zero"); }

inline LayeredScalar ls_mul(const LayeredScalar& x, const LayeredScalar& y, Sort sort) {
    return {x.value + y.value, layer_mul(x.layer, y.layer, sort)};
}

inline LayeredScalar ls_add(const LayeredScalar& x, const LayeredScalar& y, Sort sort) {
    if (x.value > y.value) {
        check_layer(y.layer, sort);
        check_layer(x.layer, sort);
        return x;
    }
    if (x.value < y.value) {
        check_layer(x.layer, sort);
        check_layer(y.layer, sort);
        return y;
    }
    return {x.value, layer_add(x.layer, y.layer, sort)};
}

inline MaybeScalar ls_add(const MaybeScalar& x, const MaybeScalar& y, Sort sort) {
    if (!x) return y;
    if (!y) return x;
    return ls_add(*x, *y, sort);
}

inline MaybeScalar ls_mul(const MaybeScalar& x, const MaybeScalar& y, Sort sort) {
    if (!x || !y) return bottom;
    return ls_mul(*x, *y, sort);
}

/// Compares ν-values only.
inline std::strong_ordering nu_cmp(const LayeredScalar& x, const LayeredScalar& y) {
    if (x.value < y.value) return std::strong_ordering::less;
    if (x.value > y.value) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool nu_equal(const LayeredScalar& x, const LayeredScalar& y) { return x.value == y.value; }

inline bool is_ell_ghost(const LayeredScalar& x, const Layer& l, Sort sort) {
    return is_ghost_sort(x.layer, l, sort);
}

/// a ⊨_l b: a = b, or a ≥ν b with a an l-ghost. The ν-greater case is
/// a = b + a; the ν-tie case is covered by the "a ≅ν b, a l-ghost" clause.
inline bool surpasses_ell(const LayeredScalar& a, const LayeredScalar& b, const Layer& l, Sort sort) {
    if (a == b) return true;
    return a.value >= b.value && is_ell_ghost(a, l, sort);
}

inline bool surpasses_L(const LayeredScalar& a, const LayeredScalar& b, Sort sort) {
    return surpasses_ell(a, b, b.layer, sort);
}

inline LayeredScalar ls_inv(const LayeredScalar& x, Sort sort) {
    check_layer(x.layer, sort);
    auto inv = layer_divide(Layer(1), x.layer, sort);
    if (!inv)
        throw Error(ErrorCode::NonInvertibleLayer,
                    "layer " + x.layer.str() + " has no inverse in sort " + sort.name());
    return {-x.value, *inv};
}

inline LayeredScalar ls_pow(const LayeredScalar& x, std::uint64_t n, Sort sort) {
    return {x.value * n, layer_pow(x.layer, n, sort)};
}

/// Rational powers; negative exponents go through ls_inv.
inline LayeredScalar ls_pow(const LayeredScalar& x, const Rational& n, Sort sort) {
    check_layer(x.layer, sort);
    if (n == 0) return LayeredScalar::one();
    if (n < 0) return ls_pow(ls_inv(x, sort), Rational(-n), sort);
    if (is_integer(n)) return ls_pow(x, n.convert_to<std::uint64_t>(), sort);
    Layer layer;
    if (x.layer.is_infinity()) {
        layer = x.layer;
    } else {
        auto root = rational_power(x.layer.value(), n);
        if (!root)
            throw Error(ErrorCode::InvalidLayer,
                        "layer " + x.layer.str() + "^" + to_string(n) + " is not rational");
        layer = Layer(*root);
    }
    if (!is_valid_layer(layer, sort))
        throw Error(ErrorCode::InvalidLayer,
                    "layer " + layer.str() + " leaves sort " + sort.name());
    return {x.value * n, layer};
}

/// Parses `v:l` or a bare `v` (tangible).
inline std::optional<LayeredScalar> parse_scalar(std::string_view text) {
    auto colon = text.find(':');
    auto value = parse_rational(text.substr(0, colon));
    if (!value) return std::nullopt;
    if (colon == std::string_view::npos) return LayeredScalar::tangible(*value);
    auto layer = Layer::parse(text.substr(colon + 1));
    if (!layer) return std::nullopt;
    return LayeredScalar(*value, *layer);
}

}  // namespace layered
