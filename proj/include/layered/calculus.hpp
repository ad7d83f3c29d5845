#pragma once

// Layered derivative and antiderivative, discriminant |ℜ(f,f')| and
// separability through the discriminant's layer.

#include "layered/resultant.hpp"

namespace layered {

/// <α>^l λ^j ↦ <α>^{j·l} λ^{j-1} on the given representative.
inline LayeredPoly formal_derivative(const LayeredPoly& f, Sort sort) {
    LayeredPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (e == 0) continue;
        out.add_term(e - 1, {c.value, layer_multiple(e, c.layer, sort)}, sort);
    }
    return out;
}

/// Derivative of the essential form of f.
inline LayeredPoly derivative(const LayeredPoly& f, Sort sort) { return formal_derivative(essential_form(f), sort); }

/// <α>^l λ^m ↦ <α>^{l/(m+1)} λ^{m+1}, no constant of integration.
inline LayeredPoly antiderivative(const LayeredPoly& f, Sort sort) {
    LayeredPoly out;
    for (const auto& [e, c] : f.terms()) {
        auto l = layer_divide_multiple(c.layer, e + 1ULL, sort);
        if (!l)
            throw Error(ErrorCode::LayerNotDivisible,
                        "layer " + c.layer.str() + " is not divisible by " + std::to_string(e + 1) + " in sort " +
                            sort.name() + " (try --sort posq)");
        out.set(e + 1, {c.value, *l});
    }
    return out;
}

inline MaybeScalar discriminant(const LayeredPoly& f, Sort sort) {
    if (f.degree() < 1) throw Error(ErrorCode::PreconditionViolated, "discriminant needs degree >= 1");
    return resultant(f, derivative(f, sort), sort);
}

/// Sort of the discriminant of a separable monic tangible polynomial of
/// degree m: (2m-1)!! = 1·3·5···(2m-1).
inline Rational separable_sort(unsigned m) {
    Rational out = 1;
    for (unsigned k = 1; k <= m; ++k) out *= 2 * k - 1;
    return out;
}

/// m^{m-1} Π_{k=2}^m (2k-1)/(k(k-1)). Agrees with separable_sort only for m <= 2.
inline Rational discsort_formula(unsigned m) {
    Rational out = 1;
    for (unsigned i = 1; i < m; ++i) out *= m;
    for (unsigned k = 2; k <= m; ++k) out *= Rational(2 * k - 1, k * (k - 1));
    return out;
}

/// True iff s(disc f) equals separable_sort(deg f). Monic tangible input of
/// degree >= 2 over PosRationals.
inline bool is_separable(const LayeredPoly& f, Sort sort) {
    if (sort.kind != SortKind::PosRationals)
        throw Error(ErrorCode::PreconditionViolated, "separability test runs over the posq sort");
    if (f.degree() < 2) throw Error(ErrorCode::PreconditionViolated, "separability test needs degree >= 2");
    if (f.leading().value != 0) throw Error(ErrorCode::PreconditionViolated, "separability test needs a monic polynomial");
    for (const auto& [e, c] : f.terms())
        if (!c.layer.is_one())
            throw Error(ErrorCode::PreconditionViolated, "separability test needs tangible coefficients");
    MaybeScalar d = discriminant(f, sort);
    return d && d->layer == Layer(separable_sort(static_cast<unsigned>(f.degree())));
}

}  // namespace layered
