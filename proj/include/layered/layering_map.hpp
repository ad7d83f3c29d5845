#pragma once

// Multivariate layered polynomials (rational exponents allowed), the layering
// map ϑ_F(p) = s(F(p)), corner supports, components and grid rasters.

#include "layered/layered_scalar.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace layered {

using ExponentVector = std::vector<Rational>;
using Point = std::vector<LayeredScalar>;

class MultiPoly {
public:
    using Terms = std::map<ExponentVector, LayeredScalar>;

    explicit MultiPoly(std::size_t arity = 1) : arity_(arity) {}
    MultiPoly(std::size_t arity, Terms terms) : arity_(arity), terms_(std::move(terms)) {
        for (const auto& [e, c] : terms_)
            if (e.size() != arity_) throw Error(ErrorCode::ArityMismatch, "exponent vector of wrong length");
    }

    std::size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExponentVector& e, const LayeredScalar& c, Sort sort) {
        if (e.size() != arity_) throw Error(ErrorCode::ArityMismatch, "exponent vector of wrong length");
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second = ls_add(it->second, c, sort);
    }

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    std::string str() const;

private:
    std::size_t arity_;
    Terms terms_;
};

inline std::string exponent_string(const ExponentVector& e, const std::string& sep = ";") {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += sep;
        out += to_string(e[i]);
    }
    return out;
}

inline std::string MultiPoly::str() const {
    if (terms_.empty()) return "zero";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str();
        for (std::size_t i = 0; i < arity_; ++i) {
            const Rational& e = it->first[i];
            if (e == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e != 1) out += is_integer(e) && e > 0 ? "^" + to_string(e) : "^(" + to_string(e) + ")";
        }
    }
    return out;
}

inline MultiPoly mp_add(const MultiPoly& f, const MultiPoly& g, Sort sort) {
    if (f.arity() != g.arity()) throw Error(ErrorCode::ArityMismatch, "arity mismatch in sum");
    MultiPoly out = f;
    for (const auto& [e, c] : g.terms()) out.add_term(e, c, sort);
    return out;
}

inline MultiPoly mp_mul(const MultiPoly& f, const MultiPoly& g, Sort sort) {
    if (f.arity() != g.arity()) throw Error(ErrorCode::ArityMismatch, "arity mismatch in product");
    MultiPoly out(f.arity());
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            ExponentVector e(ef.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
            out.add_term(e, ls_mul(cf, cg, sort), sort);
        }
    return out;
}

/// h(p) for the single monomial c·x^e.
inline LayeredScalar monomial_eval(const ExponentVector& e, const LayeredScalar& c, const Point& p, Sort sort) {
    LayeredScalar acc = c;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) acc = ls_mul(acc, ls_pow(p[i], e[i], sort), sort);
    return acc;
}

inline MaybeScalar mp_eval(const MultiPoly& f, const Point& p, Sort sort) {
    if (p.size() != f.arity())
        throw Error(ErrorCode::ArityMismatch,
                    "point has " + std::to_string(p.size()) + " coordinates, polynomial has arity " +
                        std::to_string(f.arity()));
    for (const auto& x : p) check_layer(x.layer, sort);
    MaybeScalar acc;
    for (const auto& [e, c] : f.terms()) acc = ls_add(acc, MaybeScalar(monomial_eval(e, c, p, sort)), sort);
    return acc;
}

/// ϑ_F(p); the bottom element has layer 0.
inline Layer theta(const MultiPoly& f, const Point& p, Sort sort) {
    MaybeScalar v = mp_eval(f, p, sort);
    return v ? v->layer : Layer(0);
}

/// min over a finite generator list.
inline Layer theta_ideal(const std::vector<MultiPoly>& fs, const Point& p, Sort sort) {
    if (fs.empty()) throw Error(ErrorCode::PreconditionViolated, "ideal layering map needs at least one generator");
    Layer best = theta(fs.front(), p, sort);
    for (std::size_t i = 1; i < fs.size(); ++i) best = std::min(best, theta(fs[i], p, sort));
    return best;
}

/// Monomials of positive layer at p that ν-attain F(p).
inline std::vector<ExponentVector> corner_support(const MultiPoly& f, const Point& p, Sort sort) {
    MaybeScalar v = mp_eval(f, p, sort);
    std::vector<ExponentVector> out;
    if (!v) return out;
    for (const auto& [e, c] : f.terms()) {
        LayeredScalar h = monomial_eval(e, c, p, sort);
        if (h.layer.is_positive() && h.value == v->value) out.push_back(e);
    }
    return out;
}

inline bool is_corner_root(const MultiPoly& f, const Point& p, Sort sort) {
    return corner_support(f, p, sort).size() >= 2;
}

inline bool is_ell_root(const MultiPoly& f, const Point& p, const Layer& l, Sort sort) {
    MaybeScalar v = mp_eval(f, p, sort);
    return v && is_ell_ghost(*v, l, sort);
}

/// The unique monomial h_i with F(p) = h_i(p) exactly (value and layer).
inline std::optional<ExponentVector> component_index(const MultiPoly& f, const Point& p, Sort sort) {
    MaybeScalar v = mp_eval(f, p, sort);
    if (!v) return std::nullopt;
    std::optional<ExponentVector> hit;
    for (const auto& [e, c] : f.terms()) {
        if (monomial_eval(e, c, p, sort) != *v) continue;
        if (hit) return std::nullopt;
        hit = e;
    }
    return hit;
}

struct AxisRange {
    Rational from;
    Rational to;
    Rational step;
};

using Region = std::vector<AxisRange>;

struct GridRow {
    std::vector<Rational> coords;
    MaybeScalar value;
    std::size_t csupp = 0;
    std::optional<ExponentVector> component;
};

/// Lattice points of the region in lexicographic order (first axis slowest).
inline std::vector<std::vector<Rational>> grid_points(const Region& region) {
    for (const auto& axis : region)
        if (axis.step <= 0) throw Error(ErrorCode::PreconditionViolated, "grid steps must be positive");
    std::vector<std::vector<Rational>> out;
    if (region.empty()) return out;
    std::vector<Rational> cur;
    auto rec = [&](auto&& self, std::size_t axis) -> void {
        if (axis == region.size()) {
            out.push_back(cur);
            return;
        }
        for (Rational x = region[axis].from; x <= region[axis].to; x += region[axis].step) {
            cur.push_back(x);
            self(self, axis + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline Point make_point(const std::vector<Rational>& coords, const std::vector<Layer>& layers) {
    if (coords.size() != layers.size())
        throw Error(ErrorCode::ArityMismatch, "need one coordinate layer per axis");
    Point p;
    for (std::size_t i = 0; i < coords.size(); ++i) p.emplace_back(coords[i], layers[i]);
    return p;
}

inline std::vector<GridRow> grid_scan(const MultiPoly& f, const Region& region, const std::vector<Layer>& layers,
                                      Sort sort) {
    if (region.size() != f.arity() || layers.size() != f.arity())
        throw Error(ErrorCode::ArityMismatch, "region and layers must match the polynomial arity");
    std::vector<GridRow> rows;
    for (auto& coords : grid_points(region)) {
        Point p = make_point(coords, layers);
        GridRow row;
        row.value = mp_eval(f, p, sort);
        row.csupp = corner_support(f, p, sort).size();
        row.component = component_index(f, p, sort);
        row.coords = std::move(coords);
        rows.push_back(std::move(row));
    }
    return rows;
}

/// CSV raster: x1..xn,value,layer,csupp,component.
inline void write_grid_csv(std::ostream& out, std::size_t arity, const std::vector<GridRow>& rows) {
    for (std::size_t i = 0; i < arity; ++i) out << 'x' << i + 1 << ',';
    out << "value,layer,csupp,component\n";
    for (const auto& row : rows) {
        for (const auto& x : row.coords) out << to_string(x) << ',';
        if (row.value) out << to_string(row.value->value) << ',' << row.value->layer.str();
        else out << "zero,0";
        out << ',' << row.csupp << ',' << (row.component ? exponent_string(*row.component) : std::string()) << '\n';
    }
}

/// Grid points where every polynomial has a corner root; the whole grid for an
/// empty list.
inline std::set<std::vector<Rational>> corner_locus_on_grid(const std::vector<MultiPoly>& fs, const Region& region,
                                                           const std::vector<Layer>& layers, Sort sort) {
    std::set<std::vector<Rational>> out;
    for (auto& coords : grid_points(region)) {
        Point p = make_point(coords, layers);
        bool all = true;
        for (const auto& f : fs)
            if (!is_corner_root(f, p, sort)) {
                all = false;
                break;
            }
        if (all) out.insert(std::move(coords));
    }
    return out;
}

}  // namespace layered
