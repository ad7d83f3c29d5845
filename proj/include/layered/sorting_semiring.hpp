#pragma once

// The sorting semiring L: the index set of layers with its own addition,
// multiplication and order. Every supported L embeds in Q ∪ {∞}, so a layer is
// stored as a rational or ∞ and each operation is told which L is active.

#include "layered/error.hpp"
#include "layered/rational.hpp"

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace layered {

enum class SortKind { Unit, Supertropical, Truncated, Naturals, PosRationals, Rationals };

/// The active sorting semiring. `q` is only meaningful for Truncated.
struct Sort {
    SortKind kind = SortKind::Naturals;
    std::uint32_t q = 0;

    static constexpr Sort unit() { return {SortKind::Unit, 0}; }
    static constexpr Sort supertropical() { return {SortKind::Supertropical, 0}; }
    static constexpr Sort truncated(std::uint32_t cap) { return {SortKind::Truncated, cap}; }
    static constexpr Sort naturals() { return {SortKind::Naturals, 0}; }
    static constexpr Sort pos_rationals() { return {SortKind::PosRationals, 0}; }
    static constexpr Sort rationals() { return {SortKind::Rationals, 0}; }

    bool operator==(const Sort&) const = default;

    /// Layers can be divided by any non-zero finite layer.
    bool divisible() const {
        return kind == SortKind::PosRationals || kind == SortKind::Rationals;
    }

    /// Same grammar as the `--sort` flag: unit|super|trunc:<q>|nat|posq|q.
    std::string name() const {
        switch (kind) {
            case SortKind::Unit: return "unit";
            case SortKind::Supertropical: return "super";
            case SortKind::Truncated: return "trunc:" + std::to_string(q);
            case SortKind::Naturals: return "nat";
            case SortKind::PosRationals: return "posq";
            case SortKind::Rationals: return "q";
        }
        return "?";
    }

    static std::optional<Sort> parse(std::string_view text) {
        if (text == "unit") return unit();
        if (text == "super") return supertropical();
        if (text == "nat") return naturals();
        if (text == "posq") return pos_rationals();
        if (text == "q") return rationals();
        if (text.starts_with("trunc:")) {
            auto cap = parse_rational(text.substr(6));
            if (!cap || !is_integer(*cap) || *cap < 1 || *cap > 1000000) return std::nullopt;
            return truncated(static_cast<std::uint32_t>(cap->convert_to<long>()));
        }
        return std::nullopt;
    }
};

/// A layer: a rational or the symbol ∞. Validity depends on the Sort.
class Layer {
public:
    Layer() : value_(1) {}
    Layer(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by design of the encoding
    template <std::integral I>
    Layer(I value) : value_(static_cast<long long>(value)) {}  // NOLINT

    static Layer infinity() {
        Layer l;
        l.infinite_ = true;
        l.value_ = 0;
        return l;
    }

    bool is_infinity() const { return infinite_; }
    /// The rational value; 0 for ∞.
    const Rational& value() const { return value_; }

    bool is_zero() const { return !infinite_ && value_ == 0; }
    bool is_one() const { return !infinite_ && value_ == 1; }
    bool is_positive() const { return infinite_ || value_ > 0; }

    friend bool operator==(const Layer& a, const Layer& b) {
        return a.infinite_ == b.infinite_ && a.value_ == b.value_;
    }

    /// Total order on Q ∪ {∞} with ∞ maximal.
    friend std::strong_ordering operator<=>(const Layer& a, const Layer& b) {
        if (a.infinite_ || b.infinite_) {
            if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
            return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const { return infinite_ ? std::string("inf") : to_string(value_); }

    static std::optional<Layer> parse(std::string_view text) {
        if (text == "inf") return infinity();
        auto r = parse_rational(text);
        if (!r) return std::nullopt;
        return Layer(*r);
    }

private:
    Rational value_;
    bool infinite_ = false;
};

inline bool is_valid_layer(const Layer& l, Sort sort) {
    if (l.is_zero()) return true;  // the adjoined 0-layer exists in every sort
    const Rational& v = l.value();
    switch (sort.kind) {
        case SortKind::Unit: return l.is_one();
        case SortKind::Supertropical: return l.is_one() || l.is_infinity();
        case SortKind::Truncated:
            return !l.is_infinity() && is_integer(v) && v >= 1 && v <= sort.q;
        case SortKind::Naturals: return l.is_infinity() || (is_integer(v) && v > 0);
        case SortKind::PosRationals: return l.is_infinity() || v > 0;
        case SortKind::Rationals: return !l.is_infinity();
    }
    return false;
}

inline void check_layer(const Layer& l, Sort sort) {
    if (!is_valid_layer(l, sort))
        throw Error(ErrorCode::InvalidLayer, "layer " + l.str() + " is not valid for sort " + sort.name());
}

inline Layer layer_add(const Layer& k, const Layer& l, Sort sort) {
    check_layer(k, sort);
    check_layer(l, sort);
    if (k.is_zero()) return l;
    if (l.is_zero()) return k;
    switch (sort.kind) {
        case SortKind::Unit: return Layer(1);
        case SortKind::Supertropical: return Layer::infinity();
        case SortKind::Truncated: {
            Rational s = k.value() + l.value();
            return s >= sort.q ? Layer(Rational(sort.q)) : Layer(s);
        }
        case SortKind::Naturals:
        case SortKind::PosRationals:
            if (k.is_infinity() || l.is_infinity()) return Layer::infinity();
            return Layer(Rational(k.value() + l.value()));
        case SortKind::Rationals: return Layer(Rational(k.value() + l.value()));
    }
    return k;
}

inline Layer layer_mul(const Layer& k, const Layer& l, Sort sort) {
    check_layer(k, sort);
    check_layer(l, sort);
    if (k.is_zero() || l.is_zero()) return Layer(0);
    switch (sort.kind) {
        case SortKind::Unit: return Layer(1);
        case SortKind::Supertropical:
            return (k.is_one() && l.is_one()) ? Layer(1) : Layer::infinity();
        case SortKind::Truncated: {
            Rational p = k.value() * l.value();
            return p >= sort.q ? Layer(Rational(sort.q)) : Layer(p);
        }
        case SortKind::Naturals:
        case SortKind::PosRationals:
            if (k.is_infinity() || l.is_infinity()) return Layer::infinity();
            return Layer(Rational(k.value() * l.value()));
        case SortKind::Rationals: return Layer(Rational(k.value() * l.value()));
    }
    return k;
}

inline std::strong_ordering layer_cmp(const Layer& k, const Layer& l) { return k <=> l; }

/// `l` satisfies l + m = l for every positive m.
inline bool is_infinite_layer(const Layer& l, Sort sort) {
    if (l.is_infinity()) return true;
    if (sort.kind == SortKind::Truncated) return l.value() == sort.q;
    if (sort.kind == SortKind::Unit) return l.is_one();
    return false;
}

/// True iff l = base + p for some positive p in L.
inline bool is_ghost_sort(const Layer& l, const Layer& base, Sort sort) {
    check_layer(l, sort);
    check_layer(base, sort);
    if (is_infinite_layer(base, sort)) return l == base;
    return l > base;
}

/// The quotient L -> [1,q] collapsing every layer >= q onto q.
inline Layer truncate_layer(const Layer& l, const Layer& q) {
    if (q.is_infinity() || q.value() <= 0)
        throw Error(ErrorCode::PreconditionViolated, "truncation level must be finite and positive");
    return l < q ? l : q;
}

/// n·l = l + ... + l (n summands); 0 for n = 0.
inline Layer layer_multiple(std::uint64_t n, const Layer& l, Sort sort) {
    check_layer(l, sort);
    if (n == 0 || l.is_zero()) return Layer(0);
    if (n == 1) return l;
    switch (sort.kind) {
        case SortKind::Unit: return l;
        case SortKind::Supertropical: return Layer::infinity();
        case SortKind::Truncated: {
            Rational p = l.value() * n;
            return p >= sort.q ? Layer(Rational(sort.q)) : Layer(p);
        }
        case SortKind::Naturals:
        case SortKind::PosRationals:
            if (l.is_infinity()) return l;
            [[fallthrough]];
        case SortKind::Rationals: return Layer(Rational(l.value() * n));
    }
    return l;
}

inline Layer layer_pow(const Layer& l, std::uint64_t n, Sort sort) {
    Layer result(1);
    Layer base = l;
    while (n > 0) {
        if (n & 1U) result = layer_mul(result, base, sort);
        n >>= 1U;
        if (n > 0) base = layer_mul(base, base, sort);
    }
    return result;
}

/// The unique x with x·l = k, when it exists in L.
inline std::optional<Layer> layer_divide(const Layer& k, const Layer& l, Sort sort) {
    check_layer(k, sort);
    check_layer(l, sort);
    if (l.is_one()) return k;
    if (l.is_zero() || l.is_infinity()) return std::nullopt;
    if (k.is_zero()) return Layer(0);
    switch (sort.kind) {
        case SortKind::PosRationals:
            if (k.is_infinity()) return k;
            return Layer(Rational(k.value() / l.value()));
        case SortKind::Rationals: return Layer(Rational(k.value() / l.value()));
        case SortKind::Naturals: {
            if (k.is_infinity()) return k;
            Rational x = k.value() / l.value();
            if (is_integer(x)) return Layer(x);
            return std::nullopt;
        }
        case SortKind::Truncated: {
            if (k.value() == sort.q) return std::nullopt;
            Rational x = k.value() / l.value();
            if (is_integer(x)) return Layer(x);
            return std::nullopt;
        }
        case SortKind::Unit:
        case SortKind::Supertropical: return std::nullopt;
    }
    return std::nullopt;
}

/// The unique x with n·x = l, when it exists in L.
inline std::optional<Layer> layer_divide_multiple(const Layer& l, std::uint64_t n, Sort sort) {
    check_layer(l, sort);
    if (n == 0) return std::nullopt;
    if (n == 1 || l.is_zero()) return l;
    switch (sort.kind) {
        case SortKind::Unit: return l;
        case SortKind::Supertropical:
            if (l.is_infinity()) return l;
            return std::nullopt;
        case SortKind::Truncated: {
            if (l.value() == sort.q) return l;
            Rational x = l.value() / n;
            if (is_integer(x)) return Layer(x);
            return std::nullopt;
        }
        case SortKind::Naturals: {
            if (l.is_infinity()) return l;
            Rational x = l.value() / n;
            if (is_integer(x)) return Layer(x);
            return std::nullopt;
        }
        case SortKind::PosRationals:
            if (l.is_infinity()) return l;
            [[fallthrough]];
        case SortKind::Rationals: return Layer(Rational(l.value() / n));
    }
    return std::nullopt;
}

}  // namespace layered
