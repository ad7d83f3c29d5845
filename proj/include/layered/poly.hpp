#pragma once

// Sparse univariate layered polynomials over R(L, Q).

#include "layered/layered_scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace layered {

class LayeredPoly {
public:
    using Exponent = std::uint32_t;
    using Terms = std::map<Exponent, LayeredScalar>;

    LayeredPoly() = default;
    explicit LayeredPoly(Terms terms) : terms_(std::move(terms)) {}

    static LayeredPoly monomial(LayeredScalar c, Exponent e) { return LayeredPoly(Terms{{e, std::move(c)}}); }
    static LayeredPoly constant(LayeredScalar c) { return monomial(std::move(c), 0); }
    /// λ + <a>^l
    static LayeredPoly linear(LayeredScalar root) {
        return LayeredPoly(Terms{{0, std::move(root)}, {1, LayeredScalar::one()}});
    }

    bool is_zero() const { return terms_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first); }
    Exponent low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
    std::size_t size() const { return terms_.size(); }

    const Terms& terms() const { return terms_; }
    const LayeredScalar& leading() const { return terms_.rbegin()->second; }

    const LayeredScalar* coeff(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? nullptr : &it->second;
    }

    /// Adds c·λ^e, combining with an existing coefficient through ls_add.
    void add_term(Exponent e, const LayeredScalar& c, Sort sort) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second = ls_add(it->second, c, sort);
    }

    void set(Exponent e, LayeredScalar c) { terms_[e] = std::move(c); }

    friend bool operator==(const LayeredPoly&, const LayeredPoly&) = default;

    /// Canonical text, highest exponent first: `0:1*x^2 + 2:1*x + 3:1`.
    std::string str() const {
        if (terms_.empty()) return "zero";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += it->second.str();
            if (it->first == 1) out += "*x";
            else if (it->first > 1) out += "*x^" + std::to_string(it->first);
        }
        return out;
    }

private:
    Terms terms_;
};

inline LayeredPoly p_add(const LayeredPoly& f, const LayeredPoly& g, Sort sort) {
    LayeredPoly out = f;
    for (const auto& [e, c] : g.terms()) out.add_term(e, c, sort);
    return out;
}

inline LayeredPoly p_mul(const LayeredPoly& f, const LayeredPoly& g, Sort sort) {
    LayeredPoly out;
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms()) out.add_term(e1 + e2, ls_mul(c1, c2, sort), sort);
    return out;
}

inline LayeredPoly p_scale(const LayeredPoly& f, const LayeredScalar& c, Sort sort) {
    LayeredPoly::Terms terms;
    for (const auto& [e, a] : f.terms()) terms.emplace(e, ls_mul(a, c, sort));
    return LayeredPoly(std::move(terms));
}

inline LayeredPoly p_pow(const LayeredPoly& f, unsigned n, Sort sort) {
    LayeredPoly out = LayeredPoly::constant(LayeredScalar::one());
    for (unsigned i = 0; i < n; ++i) out = p_mul(out, f, sort);
    return out;
}

/// Substitution λ -> x. The zero polynomial evaluates to 𝟘.
inline MaybeScalar p_eval(const LayeredPoly& f, const LayeredScalar& x, Sort sort) {
    MaybeScalar acc = bottom;
    for (const auto& [e, c] : f.terms()) acc = ls_add(acc, MaybeScalar(ls_mul(c, ls_pow(x, e, sort), sort)), sort);
    return acc;
}

namespace detail {

/// Exponents of the vertices of the upper concave hull of {(i, value(α_i))}.
inline std::vector<LayeredPoly::Exponent> hull_vertices(const LayeredPoly& f) {
    std::vector<LayeredPoly::Exponent> hull;
    for (const auto& [e, c] : f.terms()) {
        while (hull.size() >= 2) {
            auto a = hull[hull.size() - 2];
            auto b = hull.back();
            const Rational& va = f.coeff(a)->value;
            const Rational& vb = f.coeff(b)->value;
            // drop b when it lies on or below the segment a -> e
            if ((vb - va) * Rational(e - a) <= (c.value - va) * Rational(b - a)) hull.pop_back();
            else break;
        }
        hull.push_back(e);
    }
    return hull;
}

/// Value of the hull at exponent i between vertices a < i < b.
inline Rational hull_value(const LayeredPoly& f, LayeredPoly::Exponent a, LayeredPoly::Exponent b,
                           LayeredPoly::Exponent i) {
    const Rational& va = f.coeff(a)->value;
    const Rational& vb = f.coeff(b)->value;
    return va + Rational(i - a) * (vb - va) / Rational(b - a);
}

}  // namespace detail

/// Drops monomials strictly below the upper hull and 0-layer monomials on the
/// hull that are not vertices.
inline LayeredPoly essential_form(const LayeredPoly& f) {
    if (f.size() <= 1) return f;
    auto hull = detail::hull_vertices(f);
    LayeredPoly::Terms out;
    for (std::size_t j = 0; j < hull.size(); ++j) {
        out.emplace(hull[j], *f.coeff(hull[j]));
        if (j + 1 == hull.size()) break;
        auto a = hull[j];
        auto b = hull[j + 1];
        for (auto it = f.terms().upper_bound(a); it != f.terms().end() && it->first < b; ++it) {
            if (it->second.layer.is_zero()) continue;
            if (it->second.value == detail::hull_value(f, a, b, it->first)) out.emplace(it->first, it->second);
        }
    }
    return LayeredPoly(std::move(out));
}

/// Fills every exponent between consecutive hull vertices: quasi-essential
/// monomials stay, everything else becomes the interpolated 0-layer coefficient.
inline LayeredPoly full_form(const LayeredPoly& f) {
    if (f.size() <= 1) return f;
    auto hull = detail::hull_vertices(f);
    LayeredPoly::Terms out;
    for (std::size_t j = 0; j < hull.size(); ++j) {
        out.emplace(hull[j], *f.coeff(hull[j]));
        if (j + 1 == hull.size()) break;
        auto a = hull[j];
        auto b = hull[j + 1];
        for (auto i = a + 1; i < b; ++i) {
            Rational v = detail::hull_value(f, a, b, i);
            const LayeredScalar* existing = f.coeff(i);
            if (existing && existing->value == v) out.emplace(i, *existing);
            else out.emplace(i, LayeredScalar(v, Layer(0)));
        }
    }
    return LayeredPoly(std::move(out));
}

inline bool is_full_form(const LayeredPoly& f) { return full_form(f) == f; }

/// A maximal run of equal slopes over the exponent range [from, to].
struct SlopeRun {
    Rational slope;
    LayeredPoly::Exponent from;
    LayeredPoly::Exponent to;

    friend bool operator==(const SlopeRun&, const SlopeRun&) = default;
};

/// Slope over [i, i+1] is value(α_i) - value(α_{i+1}), the corner root of that
/// edge; runs are weakly increasing in the exponent.
inline std::vector<SlopeRun> slopes(const LayeredPoly& f) {
    if (!is_full_form(f)) throw Error(ErrorCode::NotFullForm, "slopes need a polynomial in full form");
    std::vector<SlopeRun> runs;
    if (f.size() <= 1) return runs;
    for (auto it = f.terms().begin(); std::next(it) != f.terms().end(); ++it) {
        auto next = std::next(it);
        Rational s = it->second.value - next->second.value;
        if (!runs.empty() && runs.back().slope == s) runs.back().to = next->first;
        else runs.push_back({s, it->first, next->first});
    }
    return runs;
}

/// One slice per slope run; neighbouring parts share their boundary monomial.
inline std::vector<LayeredPoly> homogeneous_parts(const LayeredPoly& f) {
    std::vector<LayeredPoly> parts;
    for (const auto& run : slopes(f)) {
        LayeredPoly::Terms slice(f.terms().lower_bound(run.from), f.terms().upper_bound(run.to));
        parts.emplace_back(std::move(slice));
    }
    return parts;
}

/// Σ_{i >= u} α_i λ^{i-u}.
inline LayeredPoly reduction(const LayeredPoly& f, LayeredPoly::Exponent u) {
    if (f.is_zero() || static_cast<long>(u) > f.degree())
        throw Error(ErrorCode::OutOfRange, "reduction order " + std::to_string(u) + " exceeds the degree");
    LayeredPoly::Terms out;
    for (auto it = f.terms().lower_bound(u); it != f.terms().end(); ++it) out.emplace(it->first - u, it->second);
    return LayeredPoly(std::move(out));
}

}  // namespace layered
