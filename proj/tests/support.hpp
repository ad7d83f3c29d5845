#pragma once

// Shared generators and independent oracles for the test suites.

#include "layered/layered.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <vector>

namespace layered {

// readable gtest failure messages
inline void PrintTo(const Layer& l, std::ostream* os) { *os << l.str(); }
inline void PrintTo(const LayeredScalar& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const LayeredPoly& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const MultiPoly& f, std::ostream* os) { *os << f.str(); }
inline void PrintTo(const SlopeRun& r, std::ostream* os) {
    *os << "(" << to_string(r.slope) << ", [" << r.from << "," << r.to << "])";
}

}  // namespace layered

namespace layered::testing {

using Rng = std::mt19937_64;

inline std::vector<Sort> all_sorts() {
    return {Sort::unit(),     Sort::supertropical(), Sort::truncated(2),    Sort::truncated(3),
            Sort::truncated(4), Sort::naturals(),    Sort::pos_rationals(), Sort::rationals()};
}

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Integers and halves in [lo, hi].
inline Rational random_value(Rng& rng, long lo = -10, long hi = 10) {
    if (chance(rng, 0.25)) return Rational(uniform(rng, 2 * lo, 2 * hi), 2);
    return Rational(uniform(rng, lo, hi));
}

/// A nonzero layer valid for the sort; infinity occasionally where allowed.
inline Layer random_layer(Rng& rng, Sort sort, long max_layer = 4) {
    switch (sort.kind) {
        case SortKind::Unit: return Layer(1);
        case SortKind::Supertropical: return chance(rng, 0.3) ? Layer::infinity() : Layer(1);
        case SortKind::Truncated: return Layer(uniform(rng, 1, sort.q));
        case SortKind::Naturals:
            if (chance(rng, 0.05)) return Layer::infinity();
            return Layer(uniform(rng, 1, max_layer));
        case SortKind::PosRationals:
            if (chance(rng, 0.05)) return Layer::infinity();
            return Layer(Rational(uniform(rng, 1, 2 * max_layer), uniform(rng, 1, 3)));
        case SortKind::Rationals: {
            long p = uniform(rng, 1, 2 * max_layer) * (chance(rng, 0.3) ? -1 : 1);
            return Layer(Rational(p, uniform(rng, 1, 3)));
        }
    }
    return Layer(1);
}

inline Layer random_finite_layer(Rng& rng, Sort sort, long max_layer = 4) {
    for (;;) {
        Layer l = random_layer(rng, sort, max_layer);
        if (!l.is_infinity()) return l;
    }
}

inline LayeredScalar random_scalar(Rng& rng, Sort sort, long lo = -10, long hi = 10) {
    return {random_value(rng, lo, hi), random_layer(rng, sort)};
}

inline MaybeScalar random_maybe(Rng& rng, Sort sort, double zero_density) {
    if (chance(rng, zero_density)) return bottom;
    return random_scalar(rng, sort);
}

/// Random polynomial of exact degree `deg` with a constant term.
inline LayeredPoly random_poly(Rng& rng, unsigned deg, Sort sort, bool finite = true, double density = 0.7) {
    LayeredPoly f;
    for (unsigned e = 0; e <= deg; ++e) {
        if (e != 0 && e != deg && !chance(rng, density)) continue;
        Layer l = finite ? random_finite_layer(rng, sort) : random_layer(rng, sort);
        f.set(e, {random_value(rng), l});
    }
    return f;
}

inline LayeredPoly random_monic(Rng& rng, unsigned deg, Sort sort) {
    LayeredPoly f = random_poly(rng, deg, sort);
    f.set(deg, LayeredScalar::one());
    return f;
}

/// Monic a-primary polynomial of degree t: α_j = <(t-j)a>^{l_j}, interior
/// monomials dropped at random.
inline LayeredPoly random_primary(Rng& rng, const Rational& a, unsigned t, Sort sort, double density = 0.8) {
    LayeredPoly f;
    for (unsigned j = 0; j <= t; ++j) {
        if (j != 0 && j != t && !chance(rng, density)) continue;
        Layer l = j == t ? Layer(1) : random_finite_layer(rng, sort);
        f.set(j, {a * Rational(t - j), l});
    }
    return f;
}

/// Separable monic tangible polynomial with distinct corner roots.
inline LayeredPoly random_separable_tangible(Rng& rng, unsigned m) {
    std::vector<long> roots;
    while (roots.size() < m) {
        long r = uniform(rng, -12, 12);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    // coefficient of λ^{m-1-k} is the sum of the k+1 largest roots
    LayeredPoly f;
    Rational acc = 0;
    f.set(m, LayeredScalar::one());
    for (unsigned k = 0; k < m; ++k) {
        acc += roots[k];
        f.set(m - 1 - k, LayeredScalar::tangible(acc));
    }
    return f;
}

/// Naive permanent: enumerate every permutation.
inline MaybeScalar naive_permanent(const LayeredMatrix& m, Sort sort) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    MaybeScalar total = bottom;
    do {
        MaybeScalar product = LayeredScalar::one();
        for (std::size_t i = 0; i < n && product; ++i) product = ls_mul(product, m[i][perm[i]], sort);
        total = ls_add(total, product, sort);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline Rational naive_classical_permanent(const LayerMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        Rational product = 1;
        for (std::size_t i = 0; i < n; ++i) product *= m[i][perm[i]];
        total += product;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Direct evaluation without the library's p_eval: every monomial computed
/// separately, then the ν-maximal ones have their layers summed.
inline MaybeScalar oracle_eval(const LayeredPoly& f, const LayeredScalar& x, Sort sort) {
    std::vector<LayeredScalar> values;
    for (const auto& [e, c] : f.terms())
        values.push_back({c.value + x.value * e, layer_mul(c.layer, layer_pow(x.layer, e, sort), sort)});
    if (values.empty()) return bottom;
    Rational top = values.front().value;
    for (const auto& v : values) top = std::max(top, v.value);
    Layer layer(0);
    for (const auto& v : values)
        if (v.value == top) layer = layer_add(layer, v.layer, sort);
    return LayeredScalar(top, layer);
}

/// Probe points below, at, between and above every corner of f.
inline std::vector<Rational> probe_values(const LayeredPoly& f) {
    std::vector<Rational> out;
    if (f.size() >= 2) {
        LayeredPoly full = full_form(f);
        for (const auto& run : slopes(full)) {
            out.push_back(run.slope);
            out.push_back(run.slope - Rational(1, 3));
            out.push_back(run.slope + Rational(1, 3));
        }
    }
    std::vector<Rational> extra;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) extra.push_back((out[i] + out[i + 1]) / 2);
    out.insert(out.end(), extra.begin(), extra.end());
    out.push_back(-30);
    out.push_back(30);
    out.push_back(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<Layer> probe_layers(Sort sort) {
    std::vector<Layer> out;
    for (Layer l : {Layer(1), Layer(2), Layer(Rational(1, 2)), Layer(3)})
        if (is_valid_layer(l, sort)) out.push_back(l);
    return out;
}

/// Function equality on the probe grid of both polynomials.
inline bool same_function(const LayeredPoly& f, const LayeredPoly& g, Sort sort) {
    auto xs = probe_values(f);
    auto ys = probe_values(g);
    xs.insert(xs.end(), ys.begin(), ys.end());
    for (const auto& x : xs)
        for (const auto& l : probe_layers(sort))
            if (oracle_eval(f, {x, l}, sort) != oracle_eval(g, {x, l}, sort)) return false;
    return true;
}

/// f̄(λ) = λ^t f(λ^{-1}): reverses coefficients, negating corner roots.
inline LayeredPoly reversed(const LayeredPoly& f) {
    LayeredPoly out;
    const auto t = static_cast<LayeredPoly::Exponent>(f.degree());
    for (const auto& [e, c] : f.terms()) out.set(t - e, c);
    return out;
}

}  // namespace layered::testing
