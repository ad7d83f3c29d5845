// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace layered;
using namespace layered::testing;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

const Sort nat = Sort::naturals();
const Sort posq = Sort::pos_rationals();

/// Layers in {1,...,4} for discrete sorts, positive rationals otherwise.
Layer criterion_layer(Rng& rng, Sort sort) {
    switch (sort.kind) {
        case SortKind::Unit: return Layer(1);
        case SortKind::Supertropical: return chance(rng, 0.3) ? Layer::infinity() : Layer(1);
        case SortKind::Truncated: return Layer(uniform(rng, 1, sort.q));
        case SortKind::Naturals: return Layer(uniform(rng, 1, 4));
        case SortKind::PosRationals:
        case SortKind::Rationals: return Layer(Rational(uniform(rng, 1, 8), uniform(rng, 1, 3)));
    }
    return Layer(1);
}

LayeredPoly criterion_poly(Rng& rng, unsigned deg, Sort sort) {
    LayeredPoly f;
    for (unsigned e = 0; e <= deg; ++e) {
        if (e != 0 && e != deg && chance(rng, 0.3)) continue;
        f.set(e, {random_value(rng, -10, 10), criterion_layer(rng, sort)});
    }
    return f;
}

std::set<Rational> corner_roots(const LayeredPoly& f) {
    std::set<Rational> out;
    if (f.size() < 2) return out;
    for (const auto& run : slopes(full_form(f))) out.insert(run.slope);
    return out;
}

MaybeScalar blockwise_resultant(const LayeredPoly& f, const LayeredPoly& g, Sort sort) {
    auto df = primary_decomposition(f, sort);
    auto dg = primary_decomposition(g, sort);
    if (df.lambda_power || dg.lambda_power) return resultant(f, g, sort);
    MaybeScalar acc = ls_mul(ls_pow(df.unit, static_cast<std::uint64_t>(g.degree()), sort),
                             ls_pow(dg.unit, static_cast<std::uint64_t>(f.degree()), sort), sort);
    for (const auto& a : df.factors)
        for (const auto& b : dg.factors) acc = ls_mul(acc, resultant(a.poly, b.poly, sort), sort);
    return acc;
}

/// 50 probe points: at, just below and above every root, between roots and
/// far outside, padded with evenly spaced values; layers 1, 2 and 1/2.
std::vector<LayeredScalar> probe_grid(const PrimaryDecomposition& d) {
    std::vector<Rational> xs;
    std::vector<Rational> roots;
    for (const auto& fa : d.factors) roots.push_back(fa.root_value);
    std::sort(roots.begin(), roots.end());
    if (roots.empty()) roots.push_back(0);
    auto add = [&](const Rational& x) {
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    };
    add(roots.front() - 5);
    add(roots.back() + 5);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        add(roots[i]);
        add(roots[i] - Rational(1, 3));
        add(roots[i] + Rational(1, 3));
        if (i + 1 < roots.size()) add((roots[i] + roots[i + 1]) / 2);
    }
    Rational lo = roots.front() - 2, hi = roots.back() + 2;
    for (int k = 0; xs.size() < 17; ++k) add(lo + (hi - lo) * Rational(k, 23));
    std::vector<LayeredScalar> points;
    for (const auto& x : xs)
        for (Layer l : {Layer(1), Layer(2), Layer(Rational(1, 2))})
            if (points.size() < 50) points.emplace_back(x, l);
    return points;
}

Outcome c1() {
    auto start = Clock::now();
    MaybeScalar r = resultant(parse_poly("x^2 + 5*x + 7", nat), parse_poly("x^2 + 4*x + 6", nat), nat);
    double ms = ms_since(start);
    bool ok = r && r->str() == "16:2" && ms < 10.0;
    return {ok, "result " + to_string(r) + " in " + std::to_string(ms) + " ms (limit 10 ms)"};
}

Outcome c2() {
    LayeredPoly f = parse_poly("x^2 + 5*x + 7", nat), g = parse_poly("x^2 + 4*x + 6", nat);
    auto df = primary_decomposition(f, nat), dg = primary_decomposition(g, nat);
    auto roots = [](const PrimaryDecomposition& d) {
        std::vector<std::string> out;
        for (const auto& fa : d.factors) out.push_back(fa.poly.str());
        return out;
    };
    bool shape = roots(df) == std::vector<std::string>{"0:1*x + 5:1", "0:1*x + 2:1"} &&
                 roots(dg) == std::vector<std::string>{"0:1*x + 4:1", "0:1*x + 2:1"} &&
                 df.unit == LayeredScalar::one() && dg.unit == LayeredScalar::one() && !df.promoted_sort;
    // <2>^2 from the shared root times 5, 4, 5 from the separated pairs
    MaybeScalar closed = LayeredScalar(2, Layer(2));
    for (long v : {5, 4, 5}) closed = ls_mul(closed, MaybeScalar(LayeredScalar::tangible(v)), nat);
    MaybeScalar blocks = blockwise_resultant(f, g, nat);
    MaybeScalar direct = resultant(f, g, nat);
    bool ok = shape && closed == direct && blocks == direct && closed->str() == "16:2";
    return {ok, "factors (" + roots(df)[0] + ")(" + roots(df)[1] + ") and (" + roots(dg)[0] + ")(" + roots(dg)[1] +
                    "); closed form " + to_string(closed) + ", blockwise " + to_string(blocks) + ", direct " +
                    to_string(direct)};
}

Outcome c3() {
    // f = λ² + <a>^{k1} λ + <2a>^{k0}, g = λ + <a>^ℓ, h = λ + <a>^ℓ̂ with a = 3
    const Rational a = 3;
    LayeredPoly f{{{0, {2 * a, Layer(1)}}, {1, {a, Layer(1)}}, {2, LayeredScalar::one()}}};
    LayeredPoly g = LayeredPoly::linear({a, Layer(1)});
    LayeredPoly h = LayeredPoly::linear({a, Layer(1)});
    Rational lhs = layer_permanent(layer_sylvester(f, p_mul(g, h, posq)));
    Rational rhs = layer_permanent(layer_sylvester(f, g)) * layer_permanent(layer_sylvester(f, h));
    Rational diff = lhs - rhs;
    return {diff == 4, "Per L(f,gh) = " + to_string(lhs) + ", Per L(f,g) Per L(f,h) = " + to_string(rhs) +
                           ", difference " + to_string(diff)};
}

Outcome c4() {
    Rng rng(4004);
    auto sorts = all_sorts();
    std::size_t value_fail = 0, exact_checked = 0, exact_fail = 0;
    for (int i = 0; i < 1000; ++i) {
        Sort sort = sorts[static_cast<std::size_t>(i) % sorts.size()];
        LayeredPoly f = criterion_poly(rng, static_cast<unsigned>(uniform(rng, 0, 4)), sort);
        LayeredPoly g = criterion_poly(rng, static_cast<unsigned>(uniform(rng, 0, 4)), sort);
        LayeredPoly h = criterion_poly(rng, static_cast<unsigned>(uniform(rng, 0, 4)), sort);
        MaybeScalar lhs = resultant(f, p_mul(g, h, sort), sort);
        MaybeScalar rhs = ls_mul(resultant(f, g, sort), resultant(f, h, sort), sort);
        if (!lhs || !rhs || lhs->value != rhs->value) ++value_fail;
        auto rf = corner_roots(f);
        auto rg = corner_roots(g);
        auto rh = corner_roots(h);
        bool disjoint = true;
        for (const auto& r : rf) disjoint = disjoint && !rg.count(r) && !rh.count(r);
        if (disjoint) {
            ++exact_checked;
            if (lhs != rhs) ++exact_fail;
        }
    }
    return {value_fail == 0 && exact_fail == 0,
            "1000 triples over all sorts: " + std::to_string(value_fail) + " value mismatches; " +
                std::to_string(exact_checked) + " root-disjoint triples, " + std::to_string(exact_fail) +
                " exact mismatches"};
}

Outcome c5() {
    Rng rng(5005);
    std::size_t fail = 0;
    for (int i = 0; i < 500; ++i) {
        LayeredPoly f = criterion_poly(rng, static_cast<unsigned>(uniform(rng, 1, 4)), posq);
        LayeredPoly g = criterion_poly(rng, static_cast<unsigned>(uniform(rng, 1, 4)), posq);
        if (blockwise_resultant(f, g, posq) != resultant(f, g, posq)) ++fail;
    }
    return {fail == 0, "500 pairs over posq, " + std::to_string(fail) + " mismatches"};
}

Outcome c6() {
    Rng rng(6006);
    std::size_t fail = 0, checks = 0;
    for (std::uint32_t q : {2U, 3U, 4U}) {
        const Sort sort = Sort::truncated(q);
        for (int i = 0; i < 500; ++i) {
            Rational a = random_value(rng, -10, 10);
            LayeredPoly f = random_primary(rng, a, static_cast<unsigned>(uniform(rng, 1, 3)), sort);
            LayeredPoly g = random_primary(rng, a, static_cast<unsigned>(uniform(rng, 1, 3)), sort);
            LayeredPoly h = random_primary(rng, a, static_cast<unsigned>(uniform(rng, 1, 3)), sort);
            MaybeScalar lhs = resultant(f, p_mul(g, h, sort), sort);
            MaybeScalar rhs = ls_mul(resultant(f, g, sort), resultant(f, h, sort), sort);
            for (std::uint32_t l = 1; l <= q; ++l) {
                ++checks;
                if (!lhs || !rhs || !surpasses_ell(*lhs, *rhs, Layer(l), sort)) ++fail;
            }
        }
    }
    return {fail == 0, std::to_string(checks) + " surpassing checks for q = 2,3,4, " + std::to_string(fail) +
                           " failures"};
}

Outcome c7() {
    Rng rng(7007);
    auto start = Clock::now();
    bool ok = true;
    std::ostringstream detail;
    for (unsigned m = 2; m <= 5; ++m) {
        const Rational expected = discsort_formula(m);
        std::set<Rational> observed;
        std::size_t matches = 0;
        for (int i = 0; i < 50; ++i) {
            MaybeScalar d = discriminant(random_separable_tangible(rng, m), posq);
            if (!d || d->layer.is_infinity()) {
                observed.insert(-1);
                continue;
            }
            observed.insert(d->layer.value());
            if (d->layer == Layer(expected)) ++matches;
        }
        ok = ok && matches == 50;
        detail << "m=" << m << ": formula " << to_string(expected) << ", resultant gives";
        for (const auto& v : observed) detail << ' ' << to_string(v);
        detail << " (" << matches << "/50); ";
    }
    double ms = ms_since(start);
    ok = ok && ms < 5000;
    detail << std::to_string(ms) << " ms";
    return {ok, detail.str()};
}

struct ProbeStats {
    std::size_t polys = 0, points = 0, reconstruction_fail = 0, sort_fail = 0;
};

const ProbeStats& probe_stats() {
    static ProbeStats stats = [] {
        ProbeStats s;
        Rng rng(8008);
        for (int i = 0; i < 500; ++i) {
            LayeredPoly f = random_poly(rng, static_cast<unsigned>(uniform(rng, 1, 6)), posq);
            auto d = primary_decomposition(f, posq);
            LayeredPoly product = LayeredPoly::monomial(d.unit, d.lambda_power);
            for (const auto& fa : d.factors) product = p_mul(product, fa.poly, posq);
            LayeredPoly full = full_form(f);
            ++s.polys;
            for (const auto& b : probe_grid(d)) {
                ++s.points;
                MaybeScalar want = p_eval(full, b, posq);
                if (p_eval(product, b, posq) != want) ++s.reconstruction_fail;
                if (!want || eval_sort(d, b) != want->layer) ++s.sort_fail;
            }
        }
        return s;
    }();
    return stats;
}

Outcome c8() {
    const auto& s = probe_stats();
    return {s.reconstruction_fail == 0 && s.points == 50 * s.polys,
            std::to_string(s.polys) + " polynomials, " + std::to_string(s.points) + " probe points, " +
                std::to_string(s.reconstruction_fail) + " mismatches"};
}

Outcome c9() {
    const auto& s = probe_stats();
    std::size_t spot_fail = 0;
    std::ostringstream spots;
    for (unsigned m = 1; m <= 6; ++m) {
        LayeredPoly f = p_pow(LayeredPoly::linear(LayeredScalar::tangible(3)), m, posq);
        MaybeScalar v = p_eval(f, LayeredScalar::tangible(3), posq);
        Layer want(Rational(1U << m));
        if (!v || v->layer != want || eval_sort(primary_decomposition(f, posq), LayeredScalar::tangible(3)) != want)
            ++spot_fail;
        spots << (m > 1 ? "," : "") << (v ? v->layer.str() : "zero");
    }
    return {s.sort_fail == 0 && spot_fail == 0,
            std::to_string(s.sort_fail) + " closed-form mismatches over " + std::to_string(s.points) +
                " probes; s((x+a)^m at a) for m=1..6: " + spots.str()};
}

Outcome c10() {
    MultiPoly line = parse_multi_poly("x1 + x2 + 0", nat);
    Region region{{-2, 2, Rational(1, 2)}, {-2, 2, Rational(1, 2)}};
    std::size_t fail = 0;
    std::set<Layer> seen1, seen2;
    for (long l : {1L, 2L}) {
        const Layer L(l);
        for (const auto& row : grid_scan(line, region, {L, L}, nat)) {
            const Rational &x = row.coords[0], &y = row.coords[1];
            Layer want = L;                                              // open x1 or x2 region
            if (x < 0 && y < 0) want = Layer(1);                         // constant region
            else if (x == 0 && y == 0) want = Layer(2 * l + 1);          // vertex
            else if (x == y && x > 0) want = Layer(2 * l);               // ray x1 = x2
            else if ((x == 0 && y < 0) || (y == 0 && x < 0)) want = Layer(l + 1);  // rays against the constant
            if (!row.value || row.value->layer != want) ++fail;
            (l == 1 ? seen1 : seen2).insert(row.value->layer);
        }
    }
    auto show = [](const std::set<Layer>& s) {
        std::string out;
        for (const auto& l : s) out += (out.empty() ? "" : ",") + l.str();
        return "{" + out + "}";
    };
    bool ok = fail == 0 && seen1 == std::set<Layer>{Layer(1), Layer(2), Layer(3)} &&
              seen2 == std::set<Layer>{Layer(1), Layer(2), Layer(3), Layer(4), Layer(5)};
    return {ok, "layers on R1xR1 " + show(seen1) + ", on R2xR2 " + show(seen2) + ", " + std::to_string(fail) +
                    " cells off pattern"};
}

Outcome c11() {
    Rng rng(1111);
    auto sorts = all_sorts();
    std::size_t fail = 0;
    for (int i = 0; i < 200; ++i) {
        Sort sort = sorts[static_cast<std::size_t>(i) % sorts.size()];
        auto n = static_cast<std::size_t>(uniform(rng, 1, 7));
        LayeredMatrix m(n, std::vector<MaybeScalar>(n));
        for (auto& row : m)
            for (auto& x : row) {
                x = random_maybe(rng, sort, 0.3);
                if (x && chance(rng, 0.5)) x->value = uniform(rng, -1, 1);  // force ν-ties
            }
        if (layered_permanent(m, sort) != naive_permanent(m, sort)) ++fail;
    }
    return {fail == 0, "200 matrices up to 7x7, " + std::to_string(fail) + " mismatches"};
}

Outcome c12() {
    Rng rng(1212);
    std::size_t cases = 0, fail = 0;
    auto check = [&](bool ok) {
        ++cases;
        if (!ok) ++fail;
    };
    for (const auto& sort : all_sorts()) {
        for (int i = 0; i < 1000; ++i) {
            LayeredScalar x = random_scalar(rng, sort), y = random_scalar(rng, sort), z = random_scalar(rng, sort);
            if (chance(rng, 0.3)) y.value = x.value;
            if (chance(rng, 0.3)) z.value = y.value;
            // semiring laws
            check(ls_add(x, y, sort) == ls_add(y, x, sort));
            check(ls_mul(x, y, sort) == ls_mul(y, x, sort));
            check(ls_add(ls_add(x, y, sort), z, sort) == ls_add(x, ls_add(y, z, sort), sort));
            check(ls_mul(ls_mul(x, y, sort), z, sort) == ls_mul(x, ls_mul(y, z, sort), sort));
            check(ls_mul(x, ls_add(y, z, sort), sort) == ls_add(ls_mul(x, y, sort), ls_mul(x, z, sort), sort));
            check(ls_mul(LayeredScalar::one(), x, sort) == x);
            // Frobenius
            for (unsigned n = 2; n <= 4; ++n) {
                LayeredScalar lhs = ls_pow(ls_add(x, y, sort), n, sort);
                LayeredScalar rhs = ls_add(ls_pow(x, n, sort), ls_pow(y, n, sort), sort);
                check(nu_equal(lhs, rhs));
                if (sort.kind != SortKind::Rationals) check(surpasses_L(lhs, rhs, sort));
            }
            // ν-relations
            check(nu_equal(ls_mul(x, z, sort), ls_mul(y, z, sort)) == nu_equal(x, y));
            if (!x.layer.is_infinity() && !y.layer.is_infinity() && surpasses_L(x, y, sort) && surpasses_L(y, x, sort))
                check(x == y);
            // derivative rules
            LayeredPoly f = random_poly(rng, static_cast<unsigned>(uniform(rng, 0, 4)), sort);
            LayeredPoly g = random_poly(rng, static_cast<unsigned>(uniform(rng, 0, 4)), sort);
            check(formal_derivative(p_add(f, g, sort), sort) ==
                  p_add(formal_derivative(f, sort), formal_derivative(g, sort), sort));
            check(formal_derivative(p_mul(f, g, sort), sort) ==
                  p_add(p_mul(formal_derivative(f, sort), g, sort), p_mul(f, formal_derivative(g, sort), sort), sort));
        }
    }
    // truncation homomorphism from Naturals onto Truncated(q)
    for (std::uint32_t q = 1; q <= 6; ++q) {
        const Sort trunc = Sort::truncated(q);
        const Layer cap(q);
        for (int i = 0; i < 1000; ++i) {
            Layer a(uniform(rng, 1, 10)), b(uniform(rng, 1, 10));
            check(truncate_layer(layer_add(a, b, nat), cap) ==
                  layer_add(truncate_layer(a, cap), truncate_layer(b, cap), trunc));
            check(truncate_layer(layer_mul(a, b, nat), cap) ==
                  layer_mul(truncate_layer(a, cap), truncate_layer(b, cap), trunc));
        }
    }
    return {fail == 0, std::to_string(cases) + " law checks across " + std::to_string(all_sorts().size()) +
                           " sorts, " + std::to_string(fail) + " failures"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"C1  resultant example", c1},          {"C2  factor check of the example", c2},
        {"C3  multiplicativity counterexample", c3}, {"C4  nu-multiplicativity", c4},
        {"C5  primary blockwise product", c5},  {"C6  truncated surpassing", c6},
        {"C7  discriminant sorts", c7},         {"C8  primary decomposition soundness", c8},
        {"C9  evaluation sorts", c9},           {"C10 layering-map raster", c10},
        {"C11 permanent oracle equivalence", c11}, {"C12 algebraic-law suite", c12},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
