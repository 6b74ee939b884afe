#include <algorithm>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "g2calc/exterior.hpp"
#include "g2calc/g2.hpp"
#include "g2calc/numeric.hpp"
#include "g2calc/parser.hpp"
#include "g2calc/presets.hpp"
#include "g2calc/selftest.hpp"
#include "g2calc/symplectic.hpp"
#include "json.hpp"

using namespace g2calc;

namespace {

constexpr int kOk = 0;            // verdict true / identity holds
constexpr int kFalse = 1;         // verdict false, defect printed
constexpr int kUsage = 2;         // usage or expression parse error
constexpr int kPrecondition = 3;  // input violates an operation's precondition

/// Usage problems surfaced by the command layer itself.
struct UsageError {
    std::string message;
};

bool g_json = false;

/// One report line. Text mode prints "key: value"; --json wraps the same pair
/// as {"k": key, "v": value}, one JSON object per line.
void emit(const std::string& key, const std::string& value) {
    if (g_json) {
        nlohmann::json j;
        j["k"] = key;
        j["v"] = value;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << key << ": " << value << "\n";
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string join_doubles(const DVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += fmt_double(v[i]);
    }
    return s;
}

std::string form_text(const DifferentialForm& f) { return f.str(); }

std::string field_text(const VectorField& x) { return print_value(ParsedValue{x}); }

G2Structure g2_from_preset(const std::string& name) {
    std::optional<DifferentialForm> f = preset_form_by_name(name);
    if (!f) throw UsageError{"unknown preset '" + name + "'"};
    if (f->degree() != 3)
        throw UsageError{"preset '" + name + "' is not a 3-form; this command needs one"};
    return G2Structure(std::move(*f));
}

SymplecticStructure symplectic_from_preset(const std::string& name) {
    std::optional<DifferentialForm> f = preset_form_by_name(name);
    if (!f) throw UsageError{"unknown preset '" + name + "'"};
    if (f->degree() != 2)
        throw UsageError{"preset '" + name + "' is not a 2-form; this command needs one"};
    return SymplecticStructure(std::move(*f));
}

DVec parse_point(const std::string& text, int dim) {
    if (text.empty()) return DVec(static_cast<std::size_t>(dim), 0.0);
    DVec out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(std::stod(piece));
        } catch (const std::exception&) {
            throw UsageError{"bad coordinate '" + piece + "' in point"};
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<int>(out.size()) != dim)
        throw UsageError{"point has " + std::to_string(out.size()) +
                         " coordinates, chart dimension is " + std::to_string(dim)};
    return out;
}

/// Interprets a bracketed component list as a coordinate map. Affine maps get
/// an exact inverse attached; higher-degree maps are passed through without
/// one and operations that need the inverse reject them.
PolynomialMap map_from_expression(const std::string& text, int dim) {
    const VectorField comps = parse_field(text, dim);
    bool affine = true;
    for (int i = 1; i <= dim; ++i)
        if (comps.component(i).total_degree() > 1) affine = false;
    if (!affine) return PolynomialMap(dim, comps.components());

    RatMat a(static_cast<std::size_t>(dim), RatVec(static_cast<std::size_t>(dim), Rational(0)));
    RatVec b(static_cast<std::size_t>(dim), Rational(0));
    for (int i = 1; i <= dim; ++i) {
        for (const auto& [mono, coeff] : comps.component(i).terms()) {
            if (mono.is_constant()) {
                b[static_cast<std::size_t>(i - 1)] = coeff;
                continue;
            }
            for (int j = 1; j <= dim; ++j)
                if (mono.exponent(j) == 1)
                    a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = coeff;
        }
    }
    return PolynomialMap::affine(a, b);
}

void emit_gram_exact(const RatMat& gram) {
    for (std::size_t i = 0; i < gram.size(); ++i) {
        std::string row;
        for (std::size_t j = 0; j < gram[i].size(); ++j) {
            if (j) row += " ";
            row += gram[i][j].str();
        }
        emit("gram[" + std::to_string(i + 1) + "]", row);
    }
}

void emit_gram_numeric(const DMat& gram) {
    for (std::size_t i = 0; i < gram.size(); ++i)
        emit("gram[" + std::to_string(i + 1) + "]", join_doubles(gram[i]));
}

int run_check_closed(const std::string& expr, const std::string& preset, int dim) {
    if (!preset.empty()) {
        const std::optional<DifferentialForm> f = preset_form_by_name(preset);
        if (!f) throw UsageError{"unknown preset '" + preset + "'"};
        dim = f->ambient_dim();
    }
    const DifferentialForm form = parse_form(expr, dim);
    if (is_top_degree(form)) {
        emit("closed", "true");
        emit("differential", "0");
        return kOk;
    }
    const DifferentialForm d = exterior_derivative(form);
    emit("closed", d.is_zero() ? "true" : "false");
    emit("differential", form_text(d));
    return d.is_zero() ? kOk : kFalse;
}

int run_is_g2_field(const std::string& expr, const std::string& preset) {
    const G2Structure g2 = g2_from_preset(preset);
    const VectorField x = parse_field(expr, g2.ambient_dim());
    const G2FieldReport r = is_g2_vector_field(g2, x);
    emit("preserves", r.preserves ? "true" : "false");
    emit("certificate", form_text(r.certificate));
    return r.preserves ? kOk : kFalse;
}

int run_rochesterian(const std::string& expr, const std::string& preset) {
    const G2Structure g2 = g2_from_preset(preset);
    const DifferentialForm alpha = parse_form(expr, g2.ambient_dim());
    const VectorField x = rochesterian_field_of(g2, alpha);
    emit("field", field_text(x));
    return kOk;
}

int run_bracket(const std::string& ea, const std::string& eb, const std::string& preset) {
    const G2Structure g2 = g2_from_preset(preset);
    const int dim = g2.ambient_dim();
    const DifferentialForm alpha = parse_form(ea, dim);
    const DifferentialForm beta = parse_form(eb, dim);
    const DifferentialForm bracket = rochesterian_bracket(g2, alpha, beta);
    emit("bracket", form_text(bracket));
    emit("field", field_text(rochesterian_field_of(g2, bracket)));
    return kOk;
}

int run_jacobi_defect(const std::string& ea, const std::string& eb, const std::string& ec,
                      const std::string& preset) {
    const G2Structure g2 = g2_from_preset(preset);
    const int dim = g2.ambient_dim();
    const JacobiDefectReport r = jacobi_defect(g2, parse_form(ea, dim), parse_form(eb, dim),
                                               parse_form(ec, dim));
    emit("cyclic-sum", form_text(r.lhs));
    emit("defect", form_text(r.rhs));
    emit("agree", r.lhs == r.rhs ? "true" : "false");
    return r.lhs.is_zero() && r.lhs == r.rhs ? kOk : kFalse;
}

int run_split2(const std::string& expr, const std::string& preset) {
    const G2Structure g2 = g2_from_preset(preset);
    const TwoFormSplit split = split_two_form(g2, parse_form(expr, g2.ambient_dim()));
    emit("omega7", form_text(split.omega7));
    emit("omega14", form_text(split.omega14));
    if (split.witness) emit("witness", field_text(*split.witness));
    return kOk;
}

int run_metric(const std::string& preset, const std::string& point_text) {
    const G2Structure g2 = g2_from_preset(preset);
    if (g2.has_exact_metric() && point_text.empty()) {
        emit("exact", "true");
        emit_gram_exact(g2.exact_gram());
        emit("volume", g2.exact_volume().str());
        return kOk;
    }
    const DVec point = parse_point(point_text, g2.ambient_dim());
    const MetricReport m = metric_from_phi(g2, point);
    emit("exact", "false");
    emit("point", join_doubles(m.point));
    emit_gram_numeric(m.gram);
    emit("volume", fmt_double(m.volume_coefficient));
    return kOk;
}

int run_cross(const std::string& ex, const std::string& ey, const std::string& preset) {
    const G2Structure g2 = g2_from_preset(preset);
    const int dim = g2.ambient_dim();
    const VectorField prod = cross_product(g2, parse_field(ex, dim), parse_field(ey, dim));
    emit("cross", field_text(prod));
    return kOk;
}

int run_star(const std::string& expr, const std::string& preset) {
    const G2Structure g2 = g2_from_preset(preset);
    emit("star", form_text(hodge_star(g2, parse_form(expr, g2.ambient_dim()))));
    return kOk;
}

int run_morphism(const std::string& map_expr, const std::string& preset,
                 const std::string& dst_preset) {
    const G2Structure src = g2_from_preset(preset);
    const G2Structure dst = g2_from_preset(dst_preset.empty() ? preset : dst_preset);
    const PolynomialMap map = map_from_expression(map_expr, src.ambient_dim());
    const MorphismReport r = is_g2_morphism(src, dst, map);
    emit("morphism", r.is_morphism ? "true" : "false");
    emit("defect", form_text(r.defect));
    return r.is_morphism ? kOk : kFalse;
}

int run_graph_test(const std::string& map_expr, const std::string& preset,
                   const std::string& dst_preset) {
    const G2Structure src = g2_from_preset(preset);
    const G2Structure dst = g2_from_preset(dst_preset.empty() ? preset : dst_preset);
    const PolynomialMap map = map_from_expression(map_expr, src.ambient_dim());
    const GraphReport r = graph_criterion(src, dst, map);
    emit("vanishes", r.vanishes ? "true" : "false");
    emit("restricted", form_text(r.restricted));
    return r.vanishes ? kOk : kFalse;
}

Polynomial scalar_from(const std::string& expr, int dim) {
    const DifferentialForm f = parse_form(expr, dim);
    if (f.degree() != 0)
        throw UsageError{"expected a degree-0 expression, got degree " +
                         std::to_string(f.degree())};
    return f.coefficient(std::vector<int>{});
}

int run_poisson(const std::string& ef, const std::string& eg, const std::string& preset) {
    const SymplecticStructure s = symplectic_from_preset(preset);
    const int dim = s.ambient_dim();
    const Polynomial f = scalar_from(ef, dim);
    const Polynomial g = scalar_from(eg, dim);
    emit("bracket", poisson_bracket(s, f, g).str());
    emit("field-f", field_text(hamiltonian_field(s, f)));
    emit("field-g", field_text(hamiltonian_field(s, g)));
    return kOk;
}

int run_poisson_jacobi(const std::string& ef, const std::string& eg, const std::string& eh,
                       const std::string& preset) {
    const SymplecticStructure s = symplectic_from_preset(preset);
    const int dim = s.ambient_dim();
    const Polynomial sum = poisson_jacobi_check(s, scalar_from(ef, dim), scalar_from(eg, dim),
                                                scalar_from(eh, dim));
    emit("cyclic-sum", sum.str());
    return sum.is_zero() ? kOk : kFalse;
}

int run_flow(const std::string& expr, const std::string& preset, const std::string& start_text,
             double t_end, int steps, double tol) {
    const G2Structure g2 = g2_from_preset(preset);
    const VectorField x = parse_field(expr, g2.ambient_dim());
    const DVec start = parse_point(start_text, g2.ambient_dim());
    const FlowResult r = integrate_flow(g2, x, start, t_end, steps);
    double max_drift = 0.0;
    for (double d : r.pullback_drift) max_drift = std::max(max_drift, d);
    emit("final", join_doubles(r.trajectory.back().second));
    emit("max-drift", fmt_double(max_drift));
    emit("preserves", max_drift <= tol ? "true" : "false");
    return max_drift <= tol ? kOk : kFalse;
}

int run_selftest(bool list) {
    if (list) {
        for (const SelftestCase& c : selftest_list()) emit(c.name, c.claim);
        emit("note", selftest_scope_note());
        return kOk;
    }
    const std::vector<SelftestResult> results = selftest_run();
    int passed = 0;
    for (const SelftestResult& r : results) {
        if (r.passed) {
            ++passed;
            emit("ok", r.name);
        } else {
            emit("FAIL", r.name + ": " + r.detail);
        }
    }
    emit("note", selftest_scope_note());
    emit("passed", std::to_string(passed) + "/" + std::to_string(results.size()));
    return passed == static_cast<int>(results.size()) ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact exterior calculus on polynomial coordinate charts"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string expr_a, expr_b, expr_c;
    std::string preset = "phi0";
    std::string spreset = "symplectic_std:2";
    std::string cc_preset;
    std::string dst_preset;
    std::string start_text, point_text;
    int dim = 7;
    int steps = 1000;
    double t_end = 1.0;
    double tol = 1e-8;
    bool list = false;

    const auto add_json = [](CLI::App* sub) {
        sub->add_flag("--json", g_json, "emit line-delimited JSON instead of text");
    };
    const auto add_preset = [&preset](CLI::App* sub) {
        sub->add_option("--preset", preset, "structure preset")->capture_default_str();
    };
    const auto add_spreset = [&spreset](CLI::App* sub) {
        sub->add_option("--preset", spreset, "structure preset")->capture_default_str();
    };

    {
        CLI::App* sub =
            app.add_subcommand("check-closed", "report whether a form is exactly closed");
        sub->add_option("expr", expr_a, "form expression")->required();
        sub->add_option("--dim", dim, "chart dimension")->capture_default_str();
        sub->add_option("--preset", cc_preset,
                        "take the chart dimension from this preset instead of --dim");
        add_json(sub);
        sub->callback(
            [&] { action = [&] { return run_check_closed(expr_a, cc_preset, dim); }; });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "is-g2-field", "test whether a field's flow preserves the structure form");
        sub->add_option("field", expr_a, "vector field expression")->required();
        add_preset(sub);
        add_json(sub);
        sub->callback([&] { action = [&] { return run_is_g2_field(expr_a, preset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "rochesterian", "solve X from d(alpha) = X contracted into the structure form");
        sub->add_option("alpha", expr_a, "1-form expression")->required();
        add_preset(sub);
        add_json(sub);
        sub->callback([&] { action = [&] { return run_rochesterian(expr_a, preset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand("bracket", "bracket of two admissible 1-forms");
        sub->add_option("alpha", expr_a, "first 1-form")->required();
        sub->add_option("beta", expr_b, "second 1-form")->required();
        add_preset(sub);
        add_json(sub);
        sub->callback([&] { action = [&] { return run_bracket(expr_a, expr_b, preset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "jacobi-defect", "cyclic bracket sum of three 1-forms and its exact defect");
        sub->add_option("alpha", expr_a, "first 1-form")->required();
        sub->add_option("beta", expr_b, "second 1-form")->required();
        sub->add_option("gamma", expr_c, "third 1-form")->required();
        add_preset(sub);
        add_json(sub);
        sub->callback(
            [&] { action = [&] { return run_jacobi_defect(expr_a, expr_b, expr_c, preset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "split2", "decompose a 2-form into the contraction image and its complement");
        sub->add_option("expr", expr_a, "2-form expression")->required();
        add_preset(sub);
        add_json(sub);
        sub->callback([&] { action = [&] { return run_split2(expr_a, preset); }; });
    }
    {
        CLI::App* sub =
            app.add_subcommand("metric", "gram matrix and volume recovered from the 3-form");
        add_preset(sub);
        sub->add_option("--point", point_text,
                        "comma-separated chart point for numeric recovery");
        add_json(sub);
        sub->callback([&] { action = [&] { return run_metric(preset, point_text); }; });
    }
    {
        CLI::App* sub = app.add_subcommand("cross", "cross product of two fields");
        sub->add_option("x", expr_a, "first field")->required();
        sub->add_option("y", expr_b, "second field")->required();
        add_preset(sub);
        add_json(sub);
        sub->callback([&] { action = [&] { return run_cross(expr_a, expr_b, preset); }; });
    }
    {
        CLI::App* sub =
            app.add_subcommand("star", "Hodge star with respect to the recovered metric");
        sub->add_option("expr", expr_a, "form expression")->required();
        add_preset(sub);
        add_json(sub);
        sub->callback([&] { action = [&] { return run_star(expr_a, preset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "morphism", "test whether a coordinate map preserves the structure form");
        sub->add_option("map", expr_a, "bracketed component list of the map")->required();
        add_preset(sub);
        sub->add_option("--dst-preset", dst_preset, "target structure (defaults to --preset)");
        add_json(sub);
        sub->callback(
            [&] { action = [&] { return run_morphism(expr_a, preset, dst_preset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "graph-test", "restrict the product-chart difference form to the map's graph");
        sub->add_option("map", expr_a, "bracketed component list of the map")->required();
        add_preset(sub);
        sub->add_option("--dst-preset", dst_preset, "target structure (defaults to --preset)");
        add_json(sub);
        sub->callback(
            [&] { action = [&] { return run_graph_test(expr_a, preset, dst_preset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand("poisson", "Poisson bracket of two functions");
        sub->add_option("f", expr_a, "first function")->required();
        sub->add_option("g", expr_b, "second function")->required();
        add_spreset(sub);
        add_json(sub);
        sub->callback([&] { action = [&] { return run_poisson(expr_a, expr_b, spreset); }; });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "poisson-jacobi", "cyclic Poisson sum of three functions (identically zero)");
        sub->add_option("f", expr_a, "first function")->required();
        sub->add_option("g", expr_b, "second function")->required();
        sub->add_option("hfn", expr_c, "third function")->required();
        add_spreset(sub);
        add_json(sub);
        sub->callback([&] {
            action = [&] { return run_poisson_jacobi(expr_a, expr_b, expr_c, spreset); };
        });
    }
    {
        CLI::App* sub = app.add_subcommand(
            "flow", "integrate the field's flow and sample the structure form's drift");
        sub->add_option("field", expr_a, "vector field expression")->required();
        add_preset(sub);
        sub->add_option("--start", start_text, "comma-separated start point (default origin)");
        sub->add_option("--t", t_end, "integration time")->capture_default_str();
        sub->add_option("--steps", steps, "fixed step count")->capture_default_str();
        sub->add_option("--tol", tol, "drift threshold for the verdict")
            ->capture_default_str();
        add_json(sub);
        sub->callback([&] {
            action = [&] { return run_flow(expr_a, preset, start_text, t_end, steps, tol); };
        });
    }
    {
        CLI::App* sub =
            app.add_subcommand("selftest", "run the full invariant suite and print verdicts");
        sub->add_flag("--list", list, "list the checks and their claims without running");
        add_json(sub);
        sub->callback([&] { action = [&] { return run_selftest(list); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotRochesterian& e) {
        emit("error", e.what());
        emit("residual", form_text(e.residual()));
        return kPrecondition;
    } catch (const Error& e) {
        emit("error", e.what());
        return kPrecondition;
    }
}
