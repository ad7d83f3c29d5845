#include "cli_app.hpp"

#include "layered/layered.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace layered::cli {

namespace {

using nlohmann::json;

json scalar_json(const MaybeScalar& x) { return x ? json(x->str()) : json(nullptr); }

json poly_json(const LayeredPoly& f) {
    json terms = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        terms.push_back({it->first, to_string(it->second.value), it->second.layer.str()});
    return terms;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

Rational rational_arg(const std::string& text, const std::string& what) {
    auto r = parse_rational(text);
    if (!r) throw ParseError(0, "bad " + what + " '" + text + "'");
    return *r;
}

Layer layer_arg(const std::string& text) {
    auto l = Layer::parse(text);
    if (!l) throw ParseError(0, "bad layer '" + text + "'");
    return *l;
}

LayeredScalar scalar_arg(const std::string& text) {
    auto x = parse_scalar(text);
    if (!x) throw ParseError(0, "bad scalar '" + text + "' (expected v:l)");
    return *x;
}

Region region_arg(const std::string& text) {
    Region region;
    for (const auto& axis : split(text, ',')) {
        auto parts = split(axis, ':');
        if (parts.size() != 3) throw ParseError(0, "region axis '" + axis + "' must be a:b:step");
        region.push_back({rational_arg(parts[0], "bound"), rational_arg(parts[1], "bound"),
                          rational_arg(parts[2], "step")});
    }
    return region;
}

void print_matrix(std::ostream& out, const LayeredMatrix& m) {
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << to_string(row[j]);
        out << '\n';
    }
}

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return ParseFailure;
        case ErrorCode::InvalidLayer:
        case ErrorCode::NonInvertibleLayer:
        case ErrorCode::LayerNotDivisible:
        case ErrorCode::NotSeparable: return DomainFailure;
        default: return PreconditionFailure;
    }
}

struct Options {
    std::string sort_text = "nat";
    bool json = false;
    std::string f, g, point, level, q, region, layers;
    bool explain = false;
    unsigned max_degree = 2;
    unsigned max_layer = 3;
    unsigned max_reports = 10;
};

struct Runner {
    Options& o;
    Sort sort;
    std::ostream& out;

    void emit(const json& j) { out << j.dump(2) << '\n'; }

    bool looks_multivariate(const std::string& text) const {
        for (std::size_t i = 0; i + 1 < text.size(); ++i)
            if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) return true;
        return false;
    }

    void eval() {
        std::vector<std::string> coords = split(o.point, ',');
        MaybeScalar v;
        if (coords.size() > 1 || looks_multivariate(o.f)) {
            MultiPoly f = parse_multi_poly(o.f, sort, coords.size());
            Point p;
            for (const auto& c : coords) p.push_back(scalar_arg(c));
            v = mp_eval(f, p, sort);
        } else {
            v = p_eval(parse_poly(o.f, sort), scalar_arg(o.point), sort);
        }
        if (o.json) emit({{"sort", sort.name()}, {"value", scalar_json(v)}});
        else out << to_string(v) << '\n';
    }

    void factor() {
        PrimaryDecomposition d = primary_decomposition(parse_poly(o.f, sort), sort);
        if (o.json) {
            json factors = json::array();
            for (const auto& fa : d.factors)
                factors.push_back({{"root", to_string(fa.root_value)}, {"degree", fa.degree}, {"poly", poly_json(fa.poly)}});
            emit({{"sort", d.sort.name()},
                  {"unit", d.unit.str()},
                  {"lambda_power", d.lambda_power},
                  {"factors", factors},
                  {"promoted_sort", d.promoted_sort}});
            return;
        }
        out << "unit " << d.unit.str() << '\n';
        if (d.lambda_power) out << "x^" << d.lambda_power << '\n';
        for (const auto& fa : d.factors)
            out << "root " << to_string(fa.root_value) << " degree " << fa.degree << ": " << fa.poly.str() << '\n';
        if (d.promoted_sort) out << "layers promoted to posq\n";
    }

    void roots() {
        LayeredPoly f = parse_poly(o.f, sort);
        if (f.is_zero()) throw Error(ErrorCode::PreconditionViolated, "the zero polynomial has no corner roots");
        std::vector<SlopeRun> runs = f.size() > 1 ? slopes(full_form(f)) : std::vector<SlopeRun>{};
        std::reverse(runs.begin(), runs.end());
        if (o.json) {
            json list = json::array();
            for (const auto& r : runs) list.push_back({{"root", to_string(r.slope)}, {"multiplicity", r.to - r.from}});
            emit({{"roots", list}, {"lambda_power", f.low_degree()}});
            return;
        }
        for (const auto& r : runs) out << to_string(r.slope) << " multiplicity " << r.to - r.from << '\n';
    }

    void resultant_cmd() {
        LayeredPoly f = parse_poly(o.f, sort), g = parse_poly(o.g, sort);
        MaybeScalar r = resultant(f, g, sort);
        std::optional<LayeredMatrix> matrix;
        std::optional<Rational> layer_perm;
        if (o.explain && f.degree() >= 1 && g.degree() >= 1) {
            matrix = sylvester(f, g);
            try {
                layer_perm = layer_permanent(layer_sylvester(f, g));
            } catch (const Error&) {
                // not a primary pair: no layer permanent to report
            }
        }
        if (o.json) {
            json j{{"sort", sort.name()}, {"resultant", scalar_json(r)}};
            if (matrix) {
                json rows = json::array();
                for (const auto& row : *matrix) {
                    json cells = json::array();
                    for (const auto& x : row) cells.push_back(scalar_json(x));
                    rows.push_back(cells);
                }
                j["sylvester"] = rows;
            }
            if (layer_perm) j["layer_permanent"] = to_string(*layer_perm);
            emit(j);
            return;
        }
        out << to_string(r) << '\n';
        if (matrix) {
            out << "sylvester matrix:\n";
            print_matrix(out, *matrix);
        }
        if (layer_perm) out << "layer permanent: " << to_string(*layer_perm) << '\n';
    }

    void poly_result(const LayeredPoly& p, const char* representative) {
        if (o.json) emit({{"sort", sort.name()}, {"poly", p.str()}, {"terms", poly_json(p)}, {"representative", representative}});
        else out << p.str() << '\n';
    }

    void derivative_cmd() { poly_result(derivative(parse_poly(o.f, sort), sort), "essential"); }

    void integrate() { poly_result(antiderivative(parse_poly(o.f, sort), sort), "as given"); }

    void discriminant_cmd() {
        MaybeScalar d = discriminant(parse_poly(o.f, sort), sort);
        if (o.json) emit({{"sort", sort.name()}, {"discriminant", scalar_json(d)}});
        else out << to_string(d) << '\n';
    }

    void separable() {
        LayeredPoly f = parse_poly(o.f, sort);
        bool sep = is_separable(f, sort);
        if (o.json) {
            emit({{"separable", sep},
                  {"discriminant", scalar_json(discriminant(f, sort))},
                  {"separable_sort", to_string(separable_sort(static_cast<unsigned>(f.degree())))}});
        } else {
            out << (sep ? "true" : "false") << '\n';
        }
    }

    void layermap() {
        Region region = region_arg(o.region);
        MultiPoly f = parse_multi_poly(o.f, sort, region.size());
        std::vector<Layer> layers;
        if (o.layers.empty()) layers.assign(region.size(), Layer(1));
        else
            for (const auto& l : split(o.layers, ',')) layers.push_back(layer_arg(l));
        auto rows = grid_scan(f, region, layers, sort);
        if (!o.json) {
            write_grid_csv(out, f.arity(), rows);
            return;
        }
        json list = json::array();
        for (const auto& row : rows) {
            json coords = json::array();
            for (const auto& x : row.coords) coords.push_back(to_string(x));
            list.push_back({{"point", coords},
                            {"value", scalar_json(row.value)},
                            {"csupp", row.csupp},
                            {"component", row.component ? json(exponent_string(*row.component)) : json(nullptr)}});
        }
        emit({{"sort", sort.name()}, {"rows", list}});
    }

    void truncate() {
        if (o.q.empty()) throw Error(ErrorCode::PreconditionViolated, "truncate needs --q");
        Layer t = truncate_layer(layer_arg(o.level), layer_arg(o.q));
        if (o.json) emit({{"layer", t.str()}});
        else out << t.str() << '\n';
    }

    /// Monic 0-primary polynomials of degree 1..max_degree with every lower
    /// coefficient layer in 1..max_layer.
    std::vector<LayeredPoly> primary_family() const {
        std::vector<LayeredPoly> family;
        for (unsigned t = 1; t <= o.max_degree; ++t) {
            std::vector<unsigned> layers(t, 1);
            for (;;) {
                LayeredPoly f;
                f.set(t, LayeredScalar::one());
                for (unsigned j = 0; j < t; ++j) f.set(j, {0, Layer(layers[j])});
                family.push_back(f);
                unsigned k = 0;
                while (k < t && layers[k] == o.max_layer) layers[k++] = 1;
                if (k == t) break;
                ++layers[k];
            }
        }
        return family;
    }

    void conjecture_search() {
        if (o.max_degree == 0 || o.max_layer == 0)
            throw Error(ErrorCode::PreconditionViolated, "bounds must be positive");
        for (unsigned l = 1; l <= o.max_layer; ++l) check_layer(Layer(l), sort);
        auto family = primary_family();
        std::size_t checked = 0;
        json findings = json::array();
        std::vector<std::string> lines;
        for (const auto& f : family)
            for (const auto& g : family)
                for (const auto& h : family) {
                    ++checked;
                    MaybeScalar lhs = resultant(f, p_mul(g, h, sort), sort);
                    MaybeScalar rhs = ls_mul(resultant(f, g, sort), resultant(f, h, sort), sort);
                    if (lhs && rhs && surpasses_L(*lhs, *rhs, sort)) continue;
                    std::string repro = "layered-cli --sort " + sort.name() + " resultant \"" + f.str() + "\" \"" +
                                        p_mul(g, h, sort).str() + "\"";
                    findings.push_back({{"f", f.str()},
                                        {"g", g.str()},
                                        {"h", h.str()},
                                        {"lhs", scalar_json(lhs)},
                                        {"rhs", scalar_json(rhs)},
                                        {"reproduce", repro}});
                }
        if (o.json) {
            emit({{"sort", sort.name()}, {"checked", checked}, {"violations", findings.size()}, {"findings", findings}});
            return;
        }
        out << "checked " << checked << " triples, " << findings.size() << " violations\n";
        for (std::size_t i = 0; i < findings.size() && i < o.max_reports; ++i) {
            const auto& v = findings[i];
            out << "f = " << v["f"].get<std::string>() << "; g = " << v["g"].get<std::string>()
                << "; h = " << v["h"].get<std::string>() << ": " << v["lhs"].dump() << " vs " << v["rhs"].dump()
                << "\n  " << v["reproduce"].get<std::string>() << '\n';
        }
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact layered tropical algebra", "layered-cli"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_option("--sort", o.sort_text, "unit | super | trunc:<q> | nat | posq | q")->capture_default_str();
    app.add_flag("--json", o.json, "machine-readable output");

    auto poly_arg = [&](CLI::App* sub, std::string& target, const char* name) {
        sub->add_option(name, target, "polynomial, e.g. \"x^2 + 2:1*x + 3:1\"")->required();
    };

    auto* eval = app.add_subcommand("eval", "evaluate f at a point v:l (comma separated for x1..xn)");
    poly_arg(eval, o.f, "f");
    eval->add_option("point", o.point)->required();
    auto* factor = app.add_subcommand("factor", "primary decomposition");
    poly_arg(factor, o.f, "f");
    auto* roots = app.add_subcommand("roots", "corner roots with multiplicities");
    poly_arg(roots, o.f, "f");
    auto* res = app.add_subcommand("resultant", "layered resultant |R(f,g)|");
    poly_arg(res, o.f, "f");
    poly_arg(res, o.g, "g");
    res->add_flag("--explain", o.explain, "print the Sylvester matrix and layer permanent");
    auto* deriv = app.add_subcommand("derivative", "layered derivative of the essential form");
    poly_arg(deriv, o.f, "f");
    auto* integ = app.add_subcommand("integrate", "antiderivative");
    poly_arg(integ, o.f, "f");
    auto* disc = app.add_subcommand("discriminant", "|R(f,f')|");
    poly_arg(disc, o.f, "f");
    auto* sep = app.add_subcommand("separable", "separability via the discriminant sort");
    poly_arg(sep, o.f, "f");
    auto* lmap = app.add_subcommand("layermap", "CSV raster of the layering map");
    poly_arg(lmap, o.f, "F");
    lmap->add_option("--region", o.region, "a:b:step per axis, comma separated")->required();
    lmap->add_option("--layers", o.layers, "coordinate layers k1,...,kn (default 1)");
    auto* trunc = app.add_subcommand("truncate", "truncate a layer at q");
    trunc->add_option("layer", o.level)->required();
    trunc->add_option("--q", o.q, "truncation level")->required();
    auto* search = app.add_subcommand("conjecture-search", "search primary triples for surpassing violations");
    search->add_option("--max-degree", o.max_degree)->capture_default_str();
    search->add_option("--max-layer", o.max_layer)->capture_default_str();
    search->add_option("--max-reports", o.max_reports)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return ParseFailure;
    }

    auto sort = Sort::parse(o.sort_text);
    if (!sort) {
        err << "error: unknown sort '" << o.sort_text << "' (unit, super, trunc:<q>, nat, posq, q)\n";
        return ParseFailure;
    }

    Runner r{o, *sort, out};
    try {
        if (eval->parsed()) r.eval();
        else if (factor->parsed()) r.factor();
        else if (roots->parsed()) r.roots();
        else if (res->parsed()) r.resultant_cmd();
        else if (deriv->parsed()) r.derivative_cmd();
        else if (integ->parsed()) r.integrate();
        else if (disc->parsed()) r.discriminant_cmd();
        else if (sep->parsed()) r.separable();
        else if (lmap->parsed()) r.layermap();
        else if (trunc->parsed()) r.truncate();
        else if (search->parsed()) r.conjecture_search();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return Ok;
}

}  // namespace layered::cli
