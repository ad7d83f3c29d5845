#pragma once

// Ordinary polynomials over Q (ascending coefficients), used for the images of
// a-primary polynomials under ψ_a.

#include "layered/rational.hpp"

#include <vector>

namespace layered {

using ClassicalPoly = std::vector<Rational>;

inline void trim(ClassicalPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ClassicalPoly classical_mul(const ClassicalPoly& f, const ClassicalPoly& g) {
    if (f.empty() || g.empty()) return {};
    ClassicalPoly out(f.size() + g.size() - 1, Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    trim(out);
    return out;
}

inline Rational classical_eval(const ClassicalPoly& f, const Rational& x) {
    Rational acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Divides by (λ - r); returns the quotient and sets `remainder`.
inline ClassicalPoly synthetic_division(const ClassicalPoly& f, const Rational& r, Rational& remainder) {
    if (f.empty()) {
        remainder = 0;
        return {};
    }
    ClassicalPoly quotient(f.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t i = f.size(); i-- > 0;) {
        carry = carry * r + f[i];
        if (i > 0) quotient[i - 1] = carry;
    }
    remainder = carry;
    return quotient;
}

}  // namespace layered
