#pragma once

// Primary polynomials and the primary decomposition f = α·f_{a_1}···f_{a_d},
// plus the separable case, the transfer ψ_a to classical polynomials, and
// closed-form evaluation sorts.

#include "layered/classical.hpp"
#include "layered/poly.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace layered {

struct PrimaryFactor {
    Rational root_value;
    LayeredPoly poly;  // monic, root_value-primary
    unsigned degree = 0;
};

struct PrimaryDecomposition {
    LayeredScalar unit;
    std::vector<PrimaryFactor> factors;  // strictly decreasing root_value
    unsigned lambda_power = 0;           // f = unit · λ^u · Π factors
    bool promoted_sort = false;          // Naturals input needed non-integer layers
    Sort sort = Sort::naturals();        // sort the factor layers live in
};

/// The root value a when monic f is a-primary: α_j has value (deg - j)·a for
/// every present j and the constant term is present.
inline std::optional<Rational> is_primary(const LayeredPoly& f) {
    if (f.is_zero() || f.leading().value != 0)
        throw Error(ErrorCode::NotMonic, "expected a monic polynomial (leading value 0)");
    if (f.degree() < 1 || !f.coeff(0)) return std::nullopt;
    const long t = f.degree();
    Rational a = f.coeff(0)->value / t;
    for (const auto& [e, c] : f.terms())
        if (c.value != a * Rational(t - static_cast<long>(e))) return std::nullopt;
    return a;
}

namespace detail {

inline LayeredScalar divide_scalar(const LayeredScalar& x, const LayeredScalar& by, Sort sort) {
    auto layer = layer_divide(x.layer, by.layer, sort);
    if (!layer)
        throw Error(ErrorCode::LayerNotDivisible,
                    "cannot divide layer " + x.layer.str() + " by " + by.layer.str() + " in sort " +
                        sort.name() + " (try --sort posq)");
    return {x.value - by.value, *layer};
}

inline std::vector<Layer> probe_layers(Sort sort) {
    std::vector<Layer> out;
    for (Layer l : {Layer(1), Layer(2), Layer(Rational(1, 2))})
        if (is_valid_layer(l, sort)) out.push_back(l);
    return out;
}

inline LayeredPoly decomposition_product(const PrimaryDecomposition& d) {
    LayeredPoly out = LayeredPoly::monomial(d.unit, d.lambda_power);
    for (const auto& f : d.factors) out = p_mul(out, f.poly, d.sort);
    return out;
}

}  // namespace detail

/// Splits off the bottom homogeneous part repeatedly (full form first).
/// Naturals input is computed over PosRationals and flagged when the result
/// needs non-integer layers.
inline PrimaryDecomposition primary_decomposition(const LayeredPoly& f, Sort sort) {
    if (f.is_zero()) throw Error(ErrorCode::PreconditionViolated, "cannot factor the zero polynomial");
    for (const auto& [e, c] : f.terms()) check_layer(c.layer, sort);
    const Sort work = sort.kind == SortKind::Naturals ? Sort::pos_rationals() : sort;

    PrimaryDecomposition d;
    d.sort = work;
    d.lambda_power = f.low_degree();
    LayeredPoly cur = full_form(reduction(f, d.lambda_power));
    while (cur.degree() > 0) {
        const auto& terms = cur.terms();
        Rational root = terms.at(0).value - terms.at(1).value;
        LayeredPoly::Exponent j = 1;
        while (static_cast<long>(j) < cur.degree() && terms.at(j).value - terms.at(j + 1).value == root) ++j;
        const LayeredScalar pivot = terms.at(j);
        LayeredPoly::Terms bottom_part;
        for (LayeredPoly::Exponent i = 0; i <= j; ++i)
            bottom_part.emplace(i, detail::divide_scalar(terms.at(i), pivot, work));
        d.factors.push_back({root, LayeredPoly(std::move(bottom_part)), j});
        cur = reduction(cur, j);
    }
    d.unit = cur.terms().at(0);
    std::reverse(d.factors.begin(), d.factors.end());

    if (sort.kind == SortKind::Naturals) {
        bool integral = true;
        for (const auto& factor : d.factors)
            for (const auto& [e, c] : factor.poly.terms())
                if (!is_valid_layer(c.layer, sort)) integral = false;
        if (integral) d.sort = sort;
        else d.promoted_sort = true;
    }

    // product check on probes around every root
    LayeredPoly product = detail::decomposition_product(d);
    std::set<Rational> xs;
    for (const auto& factor : d.factors)
        for (int off = -1; off <= 1; ++off) xs.insert(factor.root_value + off);
    if (xs.empty()) xs.insert(0);
    for (const Rational& x : xs)
        for (const Layer& l : detail::probe_layers(work))
            if (p_eval(product, {x, l}, work) != p_eval(f, {x, l}, work))
                throw Error(ErrorCode::PreconditionViolated,
                            "primary factors do not reproduce the polynomial at " + LayeredScalar(x, l).str());
    return d;
}

/// Linear factors λ + <β_i>^{k_i} of a monic polynomial whose essential form
/// is strictly convex; f = α_t · Π factors, listed by decreasing root.
inline std::vector<LayeredPoly> separable_factor(const LayeredPoly& f, Sort sort) {
    if (f.is_zero() || f.leading().value != 0)
        throw Error(ErrorCode::NotMonic, "expected a monic polynomial (leading value 0)");
    LayeredPoly ess = essential_form(f);
    const long t = ess.degree();
    if (static_cast<long>(ess.size()) != t + 1)
        throw Error(ErrorCode::NotSeparable, "essential form is missing monomials");
    const auto& c = ess.terms();
    for (long i = 1; i < t; ++i) {
        Rational below = c.at(i - 1).value - c.at(i).value;
        Rational above = c.at(i).value - c.at(i + 1).value;
        if (!(below < above)) throw Error(ErrorCode::NotSeparable, "repeated corner root");
    }
    std::vector<LayeredPoly> factors;
    for (long i = t - 1; i >= 0; --i) {
        auto k = layer_divide(c.at(i).layer, c.at(i + 1).layer, sort);
        if (!k)
            throw Error(ErrorCode::LayerNotDivisible,
                        "layer " + c.at(i).layer.str() + "/" + c.at(i + 1).layer.str() + " is not in sort " +
                            sort.name() + " (try --sort posq)");
        factors.push_back(LayeredPoly::linear({c.at(i).value - c.at(i + 1).value, *k}));
    }
    return factors;
}

/// ψ_a: reads off the coefficient layers; missing monomials give 0.
inline ClassicalPoly psi_a(const LayeredPoly& f) {
    if (f.is_zero() || f.leading().value != 0 || !is_primary(f))
        throw Error(ErrorCode::NotPrimary, "ψ_a needs an a-primary polynomial");
    ClassicalPoly out(static_cast<std::size_t>(f.degree()) + 1, Rational(0));
    for (const auto& [e, c] : f.terms()) {
        if (c.layer.is_infinity()) throw Error(ErrorCode::NotPrimary, "ψ_a needs finite layers");
        out[e] = c.layer.value();
    }
    return out;
}

/// Multiplicity of -l as a root of ψ_a(f): (λ + <a>^l)^m divides f.
inline unsigned linear_multiplicity(const LayeredPoly& f, const Layer& l) {
    if (l.is_infinity()) throw Error(ErrorCode::PreconditionViolated, "root layer must be finite");
    ClassicalPoly p = psi_a(f);
    unsigned m = 0;
    while (p.size() > 1) {
        Rational remainder;
        ClassicalPoly q = synthetic_division(p, -l.value(), remainder);
        if (remainder != 0) break;
        p = std::move(q);
        ++m;
    }
    return m;
}

/// s(f(b)) for an a-primary f and b of layer k: k^t above a, Σ l_i k^i at a,
/// l_0 below a.
inline Layer primary_eval_sort(const PrimaryFactor& factor, const LayeredScalar& b, Sort sort) {
    if (b.value > factor.root_value) return layer_pow(b.layer, factor.degree, sort);
    if (b.value < factor.root_value) return factor.poly.terms().at(0).layer;
    Layer acc(0);
    for (const auto& [e, c] : factor.poly.terms())
        acc = layer_add(acc, layer_mul(c.layer, layer_pow(b.layer, e, sort), sort), sort);
    return acc;
}

/// Closed-form sort of f(b) from the primary decomposition of f.
inline Layer eval_sort(const PrimaryDecomposition& d, const LayeredScalar& b) {
    Layer acc = layer_mul(d.unit.layer, layer_pow(b.layer, d.lambda_power, d.sort), d.sort);
    for (const auto& factor : d.factors) acc = layer_mul(acc, primary_eval_sort(factor, b, d.sort), d.sort);
    return acc;
}

}  // namespace layered
