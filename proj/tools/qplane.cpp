// Command-line front end for the anticommutative plane engine.
//
// Exit codes: 0 success, 1 failed verification, 2 usage error, 3 expression
// parse or evaluation error.

#include "qplane/qplane.hpp"
#include "qplane/report_json.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace qplane;
using json = nlohmann::ordered_json;

enum class Format { text, latex, json };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string star_sign = "+";
    std::string calculus = "A";
    std::optional<std::string> w;
    std::string format = "text";
    std::optional<std::string> output;
};

int parse_star_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1" || s == "plus") return 1;
    if (s == "-" || s == "-1" || s == "minus") return -1;
    throw UsageError("--star-sign must be + or -, got '" + s + "'");
}

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "latex") return Format::latex;
    if (s == "json") return Format::json;
    throw UsageError("--format must be text, latex or json, got '" + s + "'");
}

Scalar parse_scalar(const std::string& text) {
    auto u = parse_element(text);
    if (!u.second().is_zero() || !u.first().is_constant())
        throw EvalError("expected a number, got '" + text + "'");
    return u.first().coefficient(Monomial{});
}

Calculus resolve_calculus(const Globals& g) {
    if (g.calculus == "A") {
        if (g.w) std::cerr << "warning: --w is ignored for calculus A\n";
        return CalculusSpec::A();
    }
    if (g.calculus != "B" && g.calculus != "C")
        throw UsageError("--calculus must be A, B or C, got '" + g.calculus + "'");
    if (!g.w) throw UsageError("calculus " + g.calculus + " needs --w");
    Scalar w = parse_scalar(*g.w);
    return g.calculus == "B" ? CalculusSpec::B(w) : CalculusSpec::C(w);
}

struct Output {
    std::string text;
    int code = 0;
};

std::string element_words(const PlaneElement& u) { return words_str(to_words(u)); }

Output derive_d(const Globals& g, const std::string& expr) {
    auto ctx = plane_context(parse_star_sign(g.star_sign));
    auto cal = resolve_calculus(g);
    auto u = parse_element(expr, ctx);
    auto d = differential(u, cal);
    switch (parse_format(g.format)) {
        case Format::text: return {d.str() + "\n"};
        case Format::latex: return {d.latex() + "\n"};
        case Format::json: {
            json j{{"command", "derive d"}, {"calculus", cal.label()}, {"input", expr}, {"element", pair_str(u)},
                   {"result", d.str()}, {"dX", pair_str(d.cX())}, {"dY", pair_str(d.cY())}};
            return {j.dump(2) + "\n"};
        }
    }
    return {};
}

Output derive_wedge(const Globals& g, const std::string& a, const std::string& b) {
    auto ctx = plane_context(parse_star_sign(g.star_sign));
    auto cal = resolve_calculus(g);
    auto wa = parse_one_form(a, ctx, cal), wb = parse_one_form(b, ctx, cal);
    auto f = wedge(wa, wb, cal);
    switch (parse_format(g.format)) {
        case Format::text: return {f.str() + "\n"};
        case Format::latex: return {f.latex() + "\n"};
        case Format::json: {
            json j{{"command", "derive wedge"}, {"calculus", cal.label()}, {"left", wa.str()}, {"right", wb.str()},
                   {"result", f.str()}};
            return {j.dump(2) + "\n"};
        }
    }
    return {};
}

Output derive_curvature(const Globals& g, const std::vector<std::string>& comps, const std::string& convention) {
    if (comps.size() != 4) throw UsageError("curvature needs four components: psi_X phi_X psi_y phi_y");
    auto ctx = plane_context(parse_star_sign(g.star_sign));
    auto cal = resolve_calculus(g);
    auto conv = parse_convention(convention);
    auto A = Connection::from_components(ctx, parse_base(comps[0], ctx), parse_base(comps[1], ctx),
                                         parse_base(comps[2], ctx), parse_base(comps[3], ctx), conv);
    bool anti = is_antihermitian(A, cal);
    if (!anti) std::cerr << "warning: the connection is not antihermitian under the " << convention << " star\n";
    auto F = curvature(A, cal);
    auto density = yang_mills_density(F);
    switch (parse_format(g.format)) {
        case Format::text:
            return {"A = " + A.form.str() + "\nF = " + F.str() + "\nF*F = " + pair_str(density) + "\n"};
        case Format::latex:
            return {"A = " + A.form.latex() + "\\\\\nF = " + F.latex() + "\\\\\nF^\\star F = " + pair_latex(density) +
                    "\n"};
        case Format::json: {
            json j{{"command", "derive curvature"},
                   {"calculus", cal.label()},
                   {"connection", A.form.str()},
                   {"antihermitian", anti},
                   {"curvature", F.str()},
                   {"density", pair_str(density)},
                   {"action", yang_mills_action(F).str()}};
            return {j.dump(2) + "\n"};
        }
    }
    return {};
}

FieldConfig field(const Globals& g, const std::string& expr, const std::string& convention) {
    auto ctx = plane_context(parse_star_sign(g.star_sign));
    auto cal = resolve_calculus(g);
    if (cal.spec().variant != Variant::A) throw UsageError("the kinetic term is defined for calculus A only");
    auto cfg = FieldConfig::standard(parse_element(expr, ctx));
    cfg.convention = parse_convention(convention);
    return cfg;
}

Output derive_kinetic(const Globals& g, const std::string& expr, const std::string& convention) {
    auto cfg = field(g, expr, convention);
    auto k = kinetic_term(cfg);
    switch (parse_format(g.format)) {
        case Format::text: return {pair_str(k) + "\n"};
        case Format::latex: return {pair_latex(k) + "\n"};
        case Format::json: {
            json j{{"command", "derive kinetic"}, {"field", pair_str(cfg.phi)}, {"star_sign", g.star_sign},
                   {"result", pair_str(k)}};
            return {j.dump(2) + "\n"};
        }
    }
    return {};
}

Output action(const Globals& g, const std::string& expr, const std::string& convention) {
    auto cfg = field(g, expr, convention);
    auto s = scalar_action(cfg);
    switch (parse_format(g.format)) {
        case Format::text: return {s.str() + "\n"};
        case Format::latex: return {s.latex() + "\n"};
        case Format::json: {
            json j{{"command", "action"}, {"field", pair_str(cfg.phi)}, {"star_sign", g.star_sign},
                   {"result", s.str()}};
            return {j.dump(2) + "\n"};
        }
    }
    return {};
}

Output kernel(const Globals& g, int degree) {
    if (degree < 0) throw UsageError("--degree must be nonnegative");
    auto cal = resolve_calculus(g);
    auto basis = kernel_of_d(cal, degree);
    switch (parse_format(g.format)) {
        case Format::text: {
            std::string out;
            for (const auto& b : basis) out += element_words(b) + "\n";
            return {out};
        }
        case Format::latex: {
            std::string out = "\\{";
            for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? ",\\; " : "") + element_words(basis[i]);
            return {out + "\\}\n"};
        }
        case Format::json: {
            json b = json::array();
            for (const auto& e : basis) b.push_back(element_words(e));
            json j{{"command", "kernel"}, {"calculus", cal.label()}, {"degree", degree}, {"basis", b}};
            return {j.dump(2) + "\n"};
        }
    }
    return {};
}

Output metric(const Globals& g, int degree, bool structured) {
    if (degree < 0) throw UsageError("--degree must be nonnegative");
    auto cal = resolve_calculus(g);
    auto sol = metric_solve(cal, degree, plane_context(1), structured);
    switch (parse_format(g.format)) {
        case Format::text:
        case Format::latex: {
            std::string out = "calculus " + sol.calculus + ", degree <= " + std::to_string(degree) + ": dimension " +
                              std::to_string(sol.dimension()) + "\n";
            for (std::size_t i = 0; i < sol.basis.size(); ++i)
                out += "t" + std::to_string(i + 1) + ": " + sol.basis[i].str() + "\n";
            if (sol.is_zero_space()) out += "only the zero metric\n";
            return {out};
        }
        case Format::json: {
            json b = json::array();
            for (const auto& m : sol.basis)
                b.push_back({{"gXX", element_words(m.gXX())},
                             {"gYY", element_words(m.gYY())},
                             {"gXY", element_words(m.gXY())},
                             {"gYX", element_words(m.gYX())}});
            json j{{"command", "metric-solve"}, {"calculus", sol.calculus}, {"degree", degree},
                   {"unknowns", sol.unknowns}, {"equations", sol.equations}, {"dimension", sol.dimension()},
                   {"basis", b}};
            return {j.dump(2) + "\n"};
        }
    }
    return {};
}

Output verify(const Globals& g, const std::string& convention) {
    VerifyOptions opt;
    opt.convention = parse_convention(convention);
    auto rep = verify_identities(opt);
    int code = rep.ok() ? 0 : 1;
    switch (parse_format(g.format)) {
        case Format::text: return {render_text(rep), code};
        case Format::latex: return {render_latex(rep), code};
        case Format::json: return {to_json(rep).dump(2) + "\n", code};
    }
    return {};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for the anticommutative (q = -1) plane"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_option("--star-sign", g.star_sign, "Star structure sign: + or -");
    app.add_option("--calculus", g.calculus, "Differential calculus: A, B or C");
    app.add_option("--w", g.w, "Parameter w of calculi B and C (rational)");
    app.add_option("--format", g.format, "Output format: text, latex or json");
    app.add_option("--output", g.output, "Write output to this file instead of standard output");

    std::string expr, convention = "twisted";
    std::vector<std::string> forms, components;
    int degree = 4;
    bool structured = false;

    auto* derive = app.add_subcommand("derive", "Symbolic derivations")->fallthrough()->require_subcommand(1);
    auto* d_cmd = derive->add_subcommand("d", "Differential of an element")->fallthrough();
    d_cmd->add_option("expr", expr, "Element, e.g. \"pair(y,0)\" or \"X*Y\"")->required();
    auto* wedge_cmd = derive->add_subcommand("wedge", "Wedge product of two one-forms")->fallthrough();
    wedge_cmd->add_option("forms", forms, "Two one-forms, e.g. \"dX*pair(1,0)\" \"Y*dY\"")->required()->expected(2);
    auto* curv_cmd = derive->add_subcommand("curvature", "Curvature of a connection")->fallthrough();
    curv_cmd->add_option("components", components, "psi_X phi_X psi_y phi_y")->required()->expected(4);
    curv_cmd->add_option("--convention", convention, "Form star: twisted or coefficientwise");
    auto* kin_cmd = derive->add_subcommand("kinetic", "Kinetic term g(dPhi*, dPhi)")->fallthrough();
    kin_cmd->add_option("field", expr, "Field pair, e.g. \"pair(x*y, 1)\"")->required();
    kin_cmd->add_option("--convention", convention, "Form star: twisted or coefficientwise");

    auto* action_cmd = app.add_subcommand("action", "Scalar field action, the trace of the kinetic term")->fallthrough();
    action_cmd->add_option("field", expr, "Field pair")->required();
    action_cmd->add_option("--convention", convention, "Form star: twisted or coefficientwise");

    auto* kernel_cmd = app.add_subcommand("kernel", "Basis of the kernel of d up to a degree")->fallthrough();
    kernel_cmd->add_option("--degree", degree, "Maximal word degree");

    auto* metric_cmd = app.add_subcommand("metric-solve", "Admissible metrics up to a degree")->fallthrough();
    metric_cmd->add_option("--degree", degree, "Maximal word degree of the components");
    metric_cmd->add_flag("--structured", structured, "Restrict to central diagonal and XY-type off-diagonal components");

    auto* verify_cmd = app.add_subcommand("verify", "Recompute every displayed identity")->fallthrough();
    verify_cmd->add_option("--convention", convention, "Form star: twisted or coefficientwise");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out;
    try {
        if (d_cmd->parsed())
            out = derive_d(g, expr);
        else if (wedge_cmd->parsed())
            out = derive_wedge(g, forms[0], forms[1]);
        else if (curv_cmd->parsed())
            out = derive_curvature(g, components, convention);
        else if (kin_cmd->parsed())
            out = derive_kinetic(g, expr, convention);
        else if (action_cmd->parsed())
            out = action(g, expr, convention);
        else if (kernel_cmd->parsed())
            out = kernel(g, degree);
        else if (metric_cmd->parsed())
            out = metric(g, degree, structured);
        else if (verify_cmd->parsed())
            out = verify(g, convention);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 3;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (g.output) {
        std::ofstream f(*g.output, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << *g.output << "\n";
            return 2;
        }
        f << out.text;
    } else {
        std::cout << out.text;
    }
    return out.code;
}
