#pragma once

// Layered permanents, Sylvester matrices and resultants, and the classical
// layer Sylvester matrix of an a-primary pair.

#include "layered/factorization.hpp"

#include <cstdint>
#include <vector>

namespace layered {

using LayeredMatrix = std::vector<std::vector<MaybeScalar>>;
using LayerMatrix = std::vector<std::vector<Rational>>;

namespace detail {

template <class Matrix>
void require_square(const Matrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) throw Error(ErrorCode::NotSquare, "permanent needs a square matrix");
    if (m.size() > 24) throw Error(ErrorCode::PreconditionViolated, "permanent limited to 24x24");
}

}  // namespace detail

/// Σ_σ Π a_{i,σ(i)} in the layered semiring. Row-by-row expansion memoised
/// over the set of used columns; exact because it only relies on
/// distributivity, so ν-tied products still add their layers.
inline MaybeScalar layered_permanent(const LayeredMatrix& m, Sort sort) {
    detail::require_square(m);
    const std::size_t n = m.size();
    if (n == 0) return LayeredScalar::one();
    std::vector<MaybeScalar> dp(std::size_t{1} << n);
    dp[0] = LayeredScalar::one();
    // masks with popcount r hold partial sums over the first r rows
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
        if (!dp[mask]) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcount(mask));
        if (row == n) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (mask & (1U << c) || !m[row][c]) continue;
            auto& slot = dp[mask | (1U << c)];
            slot = ls_add(slot, ls_mul(*dp[mask], *m[row][c], sort), sort);
        }
    }
    return dp.back();
}

/// Classical permanent over Q.
inline Rational layer_permanent(const LayerMatrix& m) {
    detail::require_square(m);
    const std::size_t n = m.size();
    std::vector<Rational> dp(std::size_t{1} << n, Rational(0));
    dp[0] = 1;
    for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
        if (dp[mask] == 0) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcount(mask));
        if (row == n) continue;
        for (std::size_t c = 0; c < n; ++c)
            if (!(mask & (1U << c)) && m[row][c] != 0) dp[mask | (1U << c)] += dp[mask] * m[row][c];
    }
    return dp.back();
}

/// (m+n)-square staircase of the full forms: n shifted rows (α_0 … α_m), then
/// m shifted rows (β_0 … β_n); empty entries are 𝟘.
inline LayeredMatrix sylvester(const LayeredPoly& f, const LayeredPoly& g) {
    if (f.degree() < 1 || g.degree() < 1)
        throw Error(ErrorCode::DegreeZero, "Sylvester matrix needs two polynomials of positive degree");
    const LayeredPoly ff = full_form(f);
    const LayeredPoly gf = full_form(g);
    const auto m = static_cast<std::size_t>(ff.degree());
    const auto n = static_cast<std::size_t>(gf.degree());
    LayeredMatrix out(m + n, std::vector<MaybeScalar>(m + n));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [e, c] : ff.terms()) out[i][i + e] = c;
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& [e, c] : gf.terms()) out[n + i][i + e] = c;
    return out;
}

/// |ℜ(f,g)|; α_0^n for constant f and β_0^m for constant g.
inline MaybeScalar resultant(const LayeredPoly& f, const LayeredPoly& g, Sort sort) {
    if (f.is_zero() || g.is_zero()) return bottom;
    auto constant_power = [&](const LayeredPoly& c, long n) -> MaybeScalar {
        const LayeredScalar* a0 = c.coeff(0);
        if (!a0) return bottom;
        return ls_pow(*a0, static_cast<std::uint64_t>(n), sort);
    };
    if (f.degree() == 0) return constant_power(f, g.degree());
    if (g.degree() == 0) return constant_power(g, f.degree());
    return layered_permanent(sylvester(f, g), sort);
}

/// Layers of the Sylvester matrix of two a-primary polynomials (0 where empty).
inline LayerMatrix layer_sylvester(const LayeredPoly& f, const LayeredPoly& g) {
    auto root_of = [](const LayeredPoly& p) -> std::optional<Rational> {
        if (p.is_zero() || p.leading().value != 0) return std::nullopt;
        return is_primary(p);
    };
    auto a = root_of(f);
    auto b = root_of(g);
    if (!a || !b || *a != *b)
        throw Error(ErrorCode::NotPrimaryPair, "layer Sylvester matrix needs two a-primary polynomials with the same a");
    LayeredMatrix s = sylvester(f, g);
    LayerMatrix out(s.size(), std::vector<Rational>(s.size(), Rational(0)));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (!s[i][j]) continue;
            if (s[i][j]->layer.is_infinity())
                throw Error(ErrorCode::NotPrimaryPair, "layer Sylvester matrix needs finite layers");
            out[i][j] = s[i][j]->layer.value();
        }
    return out;
}

}  // namespace layered
