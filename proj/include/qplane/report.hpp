#pragma once

// Identity verification: every displayed identity of the anticommutative
// plane construction is recomputed by the engine and compared with a
// literal transcription of the displayed formula.

#include "qplane/expr.hpp"
#include "qplane/field_theory.hpp"
#include "qplane/metric.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qplane {

enum class CheckStatus { match, mismatch, computed };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::match: return "match";
        case CheckStatus::mismatch: return "mismatch";
        case CheckStatus::computed: return "computed";
    }
    return "?";
}

struct CheckRecord {
    std::string id;
    std::string anchor;
    CheckStatus status = CheckStatus::computed;
    std::string engine;
    std::optional<std::string> transcription;
    /// A required check fails the run unless its status is `match`.
    bool required = false;

    bool failed() const { return required && status != CheckStatus::match; }
};

struct Report {
    FormStarConvention convention = FormStarConvention::twisted;
    std::vector<CheckRecord> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.failed()) return false;
        return true;
    }
    const CheckRecord* find(const std::string& id) const {
        for (const auto& c : checks)
            if (c.id == id) return &c;
        return nullptr;
    }
};

/// Displayed formulas written out literally, on base polynomials.
namespace transcribed {

inline Poly dx(const Poly& p) { return derivative(p, Derivation::x); }
inline Poly dy(const Poly& p) { return derivative(p, Derivation::y); }
inline Poly abs2(const Poly& p) { return star(p) * p; }
inline const Poly& x() {
    static const Poly v = Poly::x();
    return v;
}

/// d(psi, phi) = dX (hat phi + 2x dx hat phi, 2 dx hat psi) + dY (dy psi, dy phi)
inline OneForm differential(const PlaneContext& ctx, const Poly& psi, const Poly& phi) {
    Poly hp = hat(phi);
    return {PlaneElement(ctx, hp + Scalar(2) * x() * dx(hp), Scalar(2) * dx(hat(psi))),
            PlaneElement(ctx, dy(psi), dy(phi))};
}

/// The derivative shorthand with 2 d_X f = f + 2x d_x f.
inline Poly dX(const Poly& f) { return Scalar::fraction(1, 2) * f + x() * dx(f); }

/// 4 (d_X hat phi*, +-d_x psi*)(d_X hat phi, d_x hat psi)
///   + (d_y psi*, +-hat(d_y phi)*)(d_y psi, d_y phi)
inline PlaneElement kinetic_factored(const PlaneContext& ctx, const Poly& psi, const Poly& phi) {
    const Scalar eps(ctx->star_sign);
    PlaneElement a(ctx, star(dX(hat(phi))), eps * star(dx(psi)));
    PlaneElement b(ctx, dX(hat(phi)), dx(hat(psi)));
    PlaneElement c(ctx, star(dy(psi)), eps * star(hat(dy(phi))));
    PlaneElement d(ctx, dy(psi), dy(phi));
    return Scalar(4) * (a * b) + c * d;
}

/// The expanded kinetic term, first component plus second component times X.
/// The unlabeled derivative in "+-x|d hat phi|^2" is taken as d_y.
inline PlaneElement kinetic_expanded(const PlaneContext& ctx, const Poly& psi, const Poly& phi) {
    const Scalar eps(ctx->star_sign);
    Poly hp = hat(phi), hs = hat(psi);
    Poly first = Scalar(4) * abs2(dX(hp)) + Scalar(4) * eps * x() * abs2(dx(psi)) + abs2(dy(psi)) +
                 eps * x() * abs2(hat(dy(phi)));
    Poly second = Scalar(4) * (star(dX(hp)) * dx(hs) + eps * star(dx(psi)) * dX(phi)) +
                  (star(dy(psi)) * dy(phi) + eps * star(hat(dy(phi))) * hat(dy(psi)));
    return {ctx, first, second};
}

/// +-4x|d_x psi|^2 + |d_y psi|^2
inline PlaneElement kinetic_real(const PlaneContext& ctx, const Poly& psi) {
    const Scalar eps(ctx->star_sign);
    return embed(ctx, eps * Scalar(4) * x() * abs2(dx(psi)) + abs2(dy(psi)));
}

/// 4x^2|d_x hat phi|^2 + s x|d_y hat phi|^2 + |hat phi|^2
///   + 2x(hat phi* d_x hat phi + hat phi d_x hat phi*)
/// with s = +1 as displayed, or s = eps as in the expanded form.
inline PlaneElement kinetic_odd(const PlaneContext& ctx, const Poly& phi, bool sign_restored) {
    const Scalar s = sign_restored ? Scalar(ctx->star_sign) : Scalar(1);
    Poly hp = hat(phi);
    Poly v = Scalar(4) * x() * x() * abs2(dx(hp)) + s * x() * abs2(dy(hp)) + abs2(hp) +
             Scalar(2) * x() * (star(hp) * dx(hp) + hp * dx(star(hp)));
    return embed(ctx, v);
}

/// Int_0 (4x^2|d_x hat phi|^2 + x(hat phi* d_x hat phi + hat phi d_x hat phi*))
///   +- Int_0 (4x|d_x psi|^2 + |d_y psi|^2 +- x|d_y hat phi|^2 + |hat phi|^2)
/// with the stray "(." token dropped.
inline Scalar action_display(int star_sign, const Poly& psi, const Poly& phi) {
    const Scalar eps(star_sign);
    Poly hp = hat(phi);
    Poly first = Scalar(4) * x() * x() * abs2(dx(hp)) + x() * (star(hp) * dx(hp) + hp * dx(star(hp)));
    Poly second = Scalar(4) * x() * abs2(dx(psi)) + abs2(dy(psi)) + eps * x() * abs2(dy(hp)) + abs2(hp);
    return base_trace(first) + eps * base_trace(second);
}

/// The full curvature display, with the missing "+" between its second and
/// third terms inserted:
///   dX^dY (-d_y psi_X +- phi_y* +- 2x d_x phi_y* + psi_X(psi_y + hat psi_y)
///          + x phi_y*(hat phi_X - phi_X))
///   + dX^dY (-d_y phi_X + 2 d_x psi_y* + psi_X phi_y -+ psi_X* phi_y*) X
inline TwoForm curvature_full(const Connection& a) {
    const auto& ctx = a.form.context();
    const Scalar eps(a.star_sign());
    const Poly &pX = a.psi_X(), &fX = a.phi_X(), &py = a.psi_y(), &fy = a.phi_y();
    Poly l1 = -dy(pX) + eps * star(fy) + eps * Scalar(2) * x() * dx(star(fy)) + pX * (py + hat(py)) +
              x() * star(fy) * (hat(fX) - fX);
    Poly l2 = -dy(fX) + Scalar(2) * dx(star(py)) + pX * fy - eps * (star(pX) * star(fy));
    return TwoForm(embed(ctx, l1) + embed(ctx, l2) * plane_X(ctx));
}

/// dX^dY (-d_y phi_X + 2 d_x psi_y*), coefficient read as a base element.
inline TwoForm curvature_reduced_literal(const Connection& a) {
    return TwoForm(embed(a.form.context(), -dy(a.phi_X()) + Scalar(2) * dx(star(a.psi_y()))));
}

/// dX^dY (-d_y phi_X + 2 d_x hat(psi_y*)) X
inline TwoForm curvature_reduced(const Connection& a) {
    const auto& ctx = a.form.context();
    return TwoForm(embed(ctx, -dy(a.phi_X()) + Scalar(2) * dx(hat(star(a.psi_y())))) * plane_X(ctx));
}

}  // namespace transcribed

namespace detail {

inline const std::vector<std::string>& sample_polys() {
    static const std::vector<std::string> s{
        "1 + 2*x - i*y + x*y^2 + (1+i)*x^2*y",
        "3 - x*y + 2*i*y^2 + y^3 + x",
        "i*x^3 - 1/2*y + x*y",
        "2 + y^2 - 3*x^2 + i*x*y^3",
    };
    return s;
}

inline std::vector<Poly> samples() {
    std::vector<Poly> out;
    for (const auto& s : sample_polys()) out.push_back(parse_base(s));
    return out;
}

inline std::vector<PlaneElement> sample_elements(const PlaneContext& ctx) {
    auto p = samples();
    std::vector<PlaneElement> out;
    for (std::size_t i = 0; i < p.size(); ++i) out.emplace_back(ctx, p[i], p[(i + 1) % p.size()]);
    out.push_back(plane_X(ctx));
    out.push_back(plane_Y(ctx));
    return out;
}

/// Antihermitian projection of arbitrary components under the twisted
/// convention.
inline Connection antihermitian_connection(const PlaneContext& ctx, const Poly& a, const Poly& b, const Poly& c,
                                           const Poly& d) {
    const Scalar half = Scalar::fraction(1, 2);
    const Scalar eps(ctx->star_sign);
    return Connection::from_components(ctx, half * (a - star(hat(a))), half * (b - eps * star(b)),
                                       half * (c - star(c)), half * (d + eps * star(hat(d))));
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep = "; ") {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

inline std::string basis_str(const std::vector<PlaneElement>& basis) {
    std::vector<std::string> parts;
    for (const auto& b : basis) parts.push_back(words_str(to_words(b)));
    return "{" + join(parts, ", ") + "}";
}

inline CheckStatus status_of(bool ok) { return ok ? CheckStatus::match : CheckStatus::mismatch; }

/// All four components central / of the form XY f.
inline bool structured_metric(const MetricSpec& g) {
    return is_central(g.gXX()) && is_central(g.gYY()) && xy_times_central(g.gXY()) && xy_times_central(g.gYX());
}

/// Words X^{2a} Y^{2b} of degree <= d.
inline std::size_t central_words(int d) {
    std::size_t n = 0;
    for (int a = 0; 2 * a <= d; ++a)
        for (int b = 0; 2 * a + 2 * b <= d; ++b) ++n;
    return n;
}

}  // namespace detail

struct VerifyOptions {
    FormStarConvention convention = FormStarConvention::twisted;
};

/// Runs the full check list. Deterministic: identical options give identical
/// records.
inline Report verify_identities(const VerifyOptions& opt = {}) {
    using detail::status_of;
    Report rep;
    rep.convention = opt.convention;
    const bool twisted = opt.convention == FormStarConvention::twisted;
    auto add = [&](std::string id, std::string anchor, CheckStatus st, std::string engine,
                   std::optional<std::string> transcription, bool required) {
        rep.checks.push_back({std::move(id), std::move(anchor), st, std::move(engine), std::move(transcription),
                              required});
    };
    const auto ctxp = plane_context(1), ctxm = plane_context(-1);
    const auto polys = detail::samples();

    // ---- doubling --------------------------------------------------------
    {
        bool ok = true;
        std::size_t n = 0;
        for (const auto& ctx : {ctxp, ctxm}) {
            auto el = detail::sample_elements(ctx);
            for (const auto& u : el)
                for (const auto& v : el)
                    for (const auto& w : el) {
                        ok = ok && (u * v) * w == u * (v * w);
                        ++n;
                    }
        }
        for (const auto& fctx : {quaternion_context(-1), z2_context(1), z2z2_context(1)}) {
            auto gens = generators(fctx);
            gens.push_back(FiniteDoubled::one(fctx));
            for (const auto& u : gens)
                for (const auto& v : gens)
                    for (const auto& w : gens) {
                        ok = ok && (u * v) * w == u * (v * w);
                        ++n;
                    }
        }
        add("doubling.associativity", "doubling-product", status_of(ok),
            "(uv)w = u(vw) on " + std::to_string(n) + " triples (plane, both star signs; quaternion, z2, z2z2)",
            "(a,b)(A,B) = (aA + xi b hat(B), b hat(A) + aB) is associative", true);
    }
    for (int eps : {1, -1}) {
        const auto& ctx = eps == 1 ? ctxp : ctxm;
        auto el = detail::sample_elements(ctx);
        bool ok = true;
        for (const auto& u : el) {
            ok = ok && double_star(double_star(u)) == u;
            for (const auto& v : el) ok = ok && double_star(u * v) == double_star(v) * double_star(u);
        }
        PlaneElement xy(ctx, Poly::x(), Poly::y());
        auto s = double_star(xy);
        ok = ok && s == PlaneElement(ctx, Poly::x(), Scalar(-eps) * Poly::y());
        add(eps == 1 ? "doubling.star-first" : "doubling.star-second", eps == 1 ? "(fss)" : "(sss)", status_of(ok),
            "pair(x,y)* = " + pair_str(s) + "; involutive and antimultiplicative on samples",
            eps == 1 ? "(a,b)* = (a*, hat(b)*)" : "(a,b)* = (a*, -hat(b)*)", true);
    }
    {
        auto q = quaternion_context(-1);
        auto gens = generators(q);
        const auto& i = gens[0];
        auto j = FiniteDoubled::odd_unit(q);
        auto k = FiniteDoubled(q, FiniteElement::zero(i.first().algebra_ptr()), i.first());
        auto m1 = -FiniteDoubled::one(q);
        auto zero = FiniteDoubled::zero(q);
        bool ok = i * i == m1 && j * j == m1 && k * k == m1 && i * j == k && j * k == i && k * i == j &&
                  i * j + j * i == zero && j * k + k * j == zero && k * i + i * k == zero &&
                  double_star(j) == -j && double_star(i) == -i && double_star(k) == -k;
        add("quaternion.table", "quaternion-example", status_of(ok),
            "i^2 = " + pair_str(i * i) + ", j^2 = " + pair_str(j * j) + ", k^2 = " + pair_str(k * k) +
                ", ij = " + pair_str(i * j) + ", jk = " + pair_str(j * k) + ", ki = " + pair_str(k * i),
            "base C, hat = conjugation, xi = -1, second star: the quaternions", true);
        bool tr = true;
        for (const auto& u : {i, j, k, FiniteDoubled::one(q), i + Scalar(3) * j})
            tr = tr && trace(u) == Scalar(u.first().coefficients()[0].re());
        add("quaternion.trace", "quaternion-trace", status_of(tr),
            "trace(1) = " + trace(FiniteDoubled::one(q)).str() + ", trace(i) = " + trace(i).str() +
                ", trace(j) = " + trace(j).str(),
            "trace of (a,b) is Re a", true);
    }
    {
        bool ok = true;
        for (const auto& ctx : {ctxp, ctxm})
            for (const auto& p : polys) {
                ok = ok && double_star(embed(ctx, p)) == embed(ctx, star(p));
                for (const auto& q : polys) ok = ok && embed(ctx, p * q) == embed(ctx, p) * embed(ctx, q);
            }
        ok = ok && embed(ctxp, Poly::y()) == plane_Y(ctxp) && embed(ctxp, Poly(Scalar(1))) == PlaneElement::one(ctxp);
        add("embedding.homomorphism", "embedding", status_of(ok),
            "a -> pair(a,0) is a unital *-homomorphism on samples; pair(y,0) = Y", "a -> (a,0)", true);
    }
    {
        auto c = z2_context(1);
        auto g = generators(c);
        auto a = g[0];
        auto b = FiniteDoubled::odd_unit(c);
        auto one = FiniteDoubled::one(c);
        bool ok = a * a == one && b * b == one && a * b + b * a == FiniteDoubled::zero(c) &&
                  c->zero.algebra().is_associative();
        add("z2.relations", "(al-1)", status_of(ok),
            "a^2 = " + pair_str(a * a) + ", b^2 = " + pair_str(b * b) + ", ab + ba = " + pair_str(a * b + b * a),
            "a^2 = 1, b^2 = 1, ab + ba = 0", true);
    }
    {
        auto c = z2z2_context(1);
        auto g = generators(c);
        auto a = g[0], b = g[1];
        auto A = FiniteDoubled::odd_unit(c);
        bool ok = b * b == FiniteDoubled::one(c) && A * A == a && A * b + b * A == FiniteDoubled::zero(c) &&
                  c->zero.algebra().is_associative();
        add("z2z2.relations", "(al-2)", status_of(ok),
            "b^2 = " + pair_str(b * b) + ", A^2 = " + pair_str(A * A) + ", Ab + bA = " + pair_str(A * b + b * A),
            "b^2 = 1, A^2 = a, Ab + bA = 0", true);
    }

    // ---- plane ------------------------------------------------------------
    {
        auto X = plane_X(ctxp), Y = plane_Y(ctxp);
        auto r = X * Y + Y * X;
        add("plane.anticommutation", "(qplane)", status_of(r.is_zero()), "XY + YX = " + pair_str(r), "XY + YX = 0",
            true);
        auto s = X * X;
        bool ok = s == plane_x(ctxp);
        for (const auto& p : polys) ok = ok && X * embed(ctxp, p) == embed(ctxp, hat(p)) * X;
        add("plane.square", "X^2 = x", status_of(ok), "X^2 = " + pair_str(s) + "; X a = hat(a) X on samples",
            "X^2 = x", true);
    }

    // ---- calculus ---------------------------------------------------------
    const std::vector<CalculusSpec> b_specs{CalculusSpec::B(Scalar(1)), CalculusSpec::B(Scalar(2)),
                                            CalculusSpec::B(Scalar::fraction(-1, 2))};
    const std::vector<CalculusSpec> c_specs{CalculusSpec::C(Scalar(1)), CalculusSpec::C(Scalar(2))};
    auto relation_check = [&](const CalculusSpec& spec, bool second) {
        Calculus cal = spec;
        auto act = cal.action(ctxp);
        auto one = PlaneElement::one(ctxp);
        auto x = plane_x(ctxp), Y = plane_Y(ctxp);
        OneForm dY = OneForm::dY(one);
        OneForm dx = act.differential(x);
        if (!second) return act.apply(Y, dY) == dY * Y && act.apply(x, dY) == dY * x;
        return act.apply(x, dx) == dx * x && act.apply(Y, dx) == dx * Y;
    };
    {
        std::vector<std::string> parts;
        bool ok = true;
        for (const auto& spec : {CalculusSpec::A(), b_specs[0], b_specs[1], c_specs[0]}) {
            bool r = relation_check(spec, false);
            ok = ok && r;
            parts.push_back(spec.str() + (r ? " holds" : " fails"));
        }
        add("calculus.c1", "(c1)", status_of(ok), detail::join(parts), "Y dY = dY Y, x dY = dY x", true);
    }
    {
        std::vector<std::string> parts;
        bool ok = true;
        for (const auto& spec : {CalculusSpec::A(), b_specs[0], b_specs[1]}) {
            bool r = relation_check(spec, true);
            ok = ok && r;
            parts.push_back(spec.str() + (r ? " holds" : " fails"));
        }
        bool c = relation_check(c_specs[0], true);
        parts.push_back(c_specs[0].str() + (c ? " holds" : " fails (see calculus.consistency-C)"));
        add("calculus.c2", "(c2)", status_of(ok), detail::join(parts),
            "x dx = dx x, Y dx = dx Y with dx = X dX + dX X", true);
    }
    {
        auto rep_a = consistency_check(CalculusSpec::A(), 3);
        add("calculus.consistency-A", "variant A", status_of(rep_a.passed),
            std::to_string(rep_a.checks) + " checks, " + (rep_a.passed ? "consistent" : rep_a.counterexamples.front()),
            "X dX = dX X, Y dX = -dX Y, X dY = -dY X", true);
        bool ok = true;
        std::vector<std::string> parts;
        for (const auto& spec : b_specs) {
            auto r = consistency_check(spec, 3);
            ok = ok && r.passed;
            parts.push_back(spec.str() + ": " + (r.passed ? "consistent" : r.counterexamples.front()));
        }
        add("calculus.consistency-B", "variant B", status_of(ok), detail::join(parts),
            "X dX = -dX X + w dY Y, Y dX = -dX Y, X dY = -dY X", true);
        ok = true;
        parts.clear();
        for (const auto& spec : c_specs) {
            auto r = consistency_check(spec, 3);
            ok = ok && r.passed;
            parts.push_back(spec.str() + ": " + (r.passed ? "consistent" : detail::join(r.counterexamples)));
        }
        add("calculus.consistency-C", "variant C", status_of(ok), detail::join(parts, " | "),
            "X dX = dX X + w dY Y, X dY = dY X, Y dX = -dX Y - 2 dY X", false);
    }
    {
        auto table = RewriteTable::for_spec(CalculusSpec::A());
        table.at(kY, kX, kX) = {0, 0, Scalar(1)};
        table.set_label("A with Y dX = +dX Y");
        auto r = consistency_check(Calculus::from_table(table), 3);
        add("calculus.perturbed", "only three calculi", status_of(!r.passed),
            table.label() + ": " + (r.passed ? "consistent" : detail::join(r.counterexamples)),
            "perturbing a variant breaks compatibility with XY + YX = 0", true);
    }
    {
        bool ok = true;
        std::size_t n = 0;
        Calculus cal = CalculusSpec::A();
        for (const auto& ctx : {ctxp, ctxm})
            for (std::uint32_t m = 0; m <= 5; ++m)
                for (std::uint32_t k = 0; m + k <= 5; ++k) {
                    Poly mono = Poly::monomial(m, k);
                    ok = ok && differential(PlaneElement(ctx, mono, Poly()), cal) ==
                                   transcribed::differential(ctx, mono, Poly());
                    ok = ok && differential(PlaneElement(ctx, Poly(), mono), cal) ==
                                   transcribed::differential(ctx, Poly(), mono);
                    n += 2;
                }
        auto sample = differential(PlaneElement(ctxp, polys[2], polys[3]), cal);
        add("differential.closed-form", "(dphi1)", status_of(ok),
            "Leibniz recursion equals the closed form on " + std::to_string(n) +
                " monomial pairs; e.g. d(pair(" + polys[2].str() + "," + polys[3].str() + ")) = " + sample.str(),
            "d(psi,phi) = dX (hat phi + 2x d_x hat phi, 2 d_x hat psi) + dY (d_y psi, d_y phi)", true);
    }
    {
        auto k = kernel_of_d(CalculusSpec::A(), 5);
        bool ok = k.size() == 1 && k[0] == PlaneElement::one(ctxp);
        add("kernel.A", "Ker d = C", status_of(ok), "kernel_of_d(A, 5) = " + detail::basis_str(k),
            "only variant A has Ker d = C", true);
    }
    {
        bool ok = true;
        std::vector<std::string> parts;
        for (const auto& spec : b_specs) {
            auto target = plane_x(ctxp) - (spec.w * Scalar::fraction(1, 2)) * plane_Y(ctxp) * plane_Y(ctxp);
            auto k = kernel_of_d(spec, 2);
            bool in = differential(target, spec).is_zero() && span_contains(k, target);
            ok = ok && in;
            parts.push_back(spec.str() + ": kernel " + detail::basis_str(k));
        }
        add("kernel.B", "d(X^2 - w/2 Y^2) = 0, variant B", status_of(ok), detail::join(parts),
            "d(X^2 - (w/2) Y^2) = 0", true);
        ok = true;
        parts.clear();
        for (const auto& spec : c_specs) {
            auto target = plane_x(ctxp) - (spec.w * Scalar::fraction(1, 2)) * plane_Y(ctxp) * plane_Y(ctxp);
            auto d = differential(target, spec);
            ok = ok && d.is_zero();
            parts.push_back(spec.str() + ": kernel " + detail::basis_str(kernel_of_d(spec, 2)) +
                            ", d(X^2 - w/2 Y^2) = " + d.str());
        }
        add("kernel.C", "d(X^2 - w/2 Y^2) = 0, variant C", status_of(ok), detail::join(parts),
            "d(X^2 - (w/2) Y^2) = 0", false);
    }
    {
        auto d_squared = [&](const Calculus& cal, std::size_t& n) {
            auto act = cal.action(ctxp);
            for (const auto& w : words_up_to(4)) {
                ++n;
                if (!differential_on_forms(act.differential(w), cal).is_zero()) return false;
            }
            return true;
        };
        std::size_t n = 0;
        bool a = d_squared(CalculusSpec::A(), n);
        add("calculus.d-squared-A", "(calch)", status_of(a),
            "d(d a) = 0 for all " + std::to_string(n) + " words of degree <= 4 under variant A",
            "dX^dX = 0, dY^dY = 0, dX^dY = dY^dX", true);
        std::vector<std::string> parts;
        for (const auto& spec : {b_specs[0], c_specs[0]}) {
            std::size_t m = 0;
            parts.push_back(spec.str() + (d_squared(spec, m) ? ": d^2 = 0" : ": d^2 != 0"));
        }
        add("calculus.d-squared-BC", "(calch) for variants B, C", CheckStatus::computed, detail::join(parts),
            std::nullopt, false);
    }

    // ---- metric -----------------------------------------------------------
    {
        bool ok = true;
        std::vector<std::string> parts;
        std::optional<MetricSolution> deg2;
        for (int d = 1; d <= 4; ++d) {
            auto s = metric_solve(CalculusSpec::A(), d);
            std::size_t expected = 2 * detail::central_words(d) + 2 * (d >= 2 ? detail::central_words(d - 2) : 0);
            bool structured = true;
            for (const auto& g : s.basis) structured = structured && detail::structured_metric(g);
            ok = ok && structured && s.dimension() == expected;
            parts.push_back("degree " + std::to_string(d) + ": dimension " + std::to_string(s.dimension()));
            if (d == 2) deg2 = s;
        }
        add("metric.A", "metric, variant A", status_of(ok),
            detail::join(parts) + "; every solution has central gXX, gYY and gXY, gYX = XY f, f central",
            "gXX, gYY central; gXY, gYX = xy f with f central", true);

        MetricSpec g0 = MetricSpec::standard(ctxp);
        bool in = deg2->contains(g0);
        add("metric.default", "simplest admissible metric", status_of(in),
            g0.str() + (in ? " lies in" : " is outside") + " the variant A solution space",
            "gXX = gYY = 1, gXY = gYX = 0 is admissible", true);
    }
    {
        bool ok = true;
        std::vector<std::string> parts;
        for (const auto& [w, d] : {std::pair{Scalar(2), 4}, std::pair{Scalar(1), 2}}) {
            auto s = metric_solve(CalculusSpec::B(w), d, ctxp, true);
            for (const auto& g : s.basis) {
                auto f = xy_times_central(g.gXY());
                bool r = g.gXY() == -g.gYX() && f && w * g.gYY() == Scalar(2) * plane_x(ctxp) * *f;
                ok = ok && r;
                if (!is_central(g.gXX()) || !g.gYY().is_zero() || !g.gXY().is_zero())
                    parts.push_back("B(w=" + w.str() + "): " + g.str());
            }
        }
        add("metric.B", "metric, variant B", status_of(ok),
            "solutions with central gXX, gYY and gXY, gYX = XY f: " + detail::join(parts) +
                "; all satisfy gXY = -gYX and w gYY = 2 x f",
            "gXY = -gYX and w gyy = 2 X^2 f", true);

        auto s = metric_solve(CalculusSpec::B(Scalar(2)), 2);
        std::vector<std::string> extra;
        bool all = true;
        for (const auto& g : s.basis)
            if (!detail::structured_metric(g) || g.gXY() != -g.gYX()) {
                all = false;
                extra.push_back(g.str());
            }
        add("metric.B-unrestricted", "metric, variant B, all bimodule solutions", status_of(all),
            "dimension " + std::to_string(s.dimension()) + " at degree 2" +
                (all ? "" : "; solutions outside the stated form: " + detail::join(extra)),
            "every admissible metric has central gXX, gYY, gXY = -gYX = xy f", false);
    }
    {
        bool ok = true;
        std::vector<std::string> parts;
        for (int d = 1; d <= 4; ++d) {
            auto s = metric_solve(CalculusSpec::C(Scalar(1)), d);
            ok = ok && s.is_zero_space();
            std::string e = "degree " + std::to_string(d) + ": dimension " + std::to_string(s.dimension());
            if (d == 2 && !s.basis.empty()) {
                std::vector<std::string> b;
                for (const auto& g : s.basis) b.push_back(g.str());
                e += " (" + detail::join(b) + ")";
            }
            parts.push_back(e);
        }
        add("metric.C", "metric, variant C", status_of(ok), detail::join(parts), "the metric must vanish", false);
    }

    // ---- scalar field theory ---------------------------------------------
    auto field_cfg = [&](const PlaneElement& phi) {
        auto cfg = FieldConfig::standard(phi);
        cfg.convention = opt.convention;
        return cfg;
    };
    std::vector<std::pair<Poly, Poly>> fields;
    for (std::size_t i = 0; i < polys.size(); ++i) fields.emplace_back(polys[i], polys[(i + 1) % polys.size()]);
    {
        bool ok = true, ok_full = true, herm = true;
        for (const auto& ctx : {ctxp, ctxm})
            for (const auto& [psi, phi] : fields) {
                auto k = kinetic_term(field_cfg(PlaneElement(ctx, psi, phi)));
                ok = ok && k == transcribed::kinetic_factored(ctx, psi, phi);
                ok_full = ok_full && k == transcribed::kinetic_expanded(ctx, psi, phi);
                if (ctx == ctxp) herm = herm && is_hermitian(k);
            }
        auto k = kinetic_term(field_cfg(PlaneElement(ctxp, Poly::y(), Poly::x())));
        add("kinetic.factored", "kinetic term, factored form", status_of(ok),
            "g(dPhi*, dPhi) for Phi = pair(y,x), + star: " + pair_str(k),
            "4 (d_X hat phi*, +-d_x psi*)(d_X hat phi, d_x hat psi) + (d_y psi*, +-d_y hat phi*)(d_y psi, d_y phi)",
            twisted);
        add("kinetic.expanded", "(meme)", status_of(ok_full),
            "engine equals the expanded form on " + std::to_string(2 * fields.size()) +
                " fields, reading |d hat phi|^2 as |d_y hat phi|^2, d_y hat phi as hat(d_y phi), and 2 d_X f = f + 2x d_x f",
            "4|d_X hat phi|^2 +- 4x|d_x psi|^2 + |d_y psi|^2 +- x|d hat phi|^2 + (4(d_X hat phi* d_x hat psi +- "
            "d_x psi* d_X phi) + (d_y psi* d_y phi +- d_y hat phi* d_y hat psi)) X",
            false);
        add("kinetic.hermitian", "kinetic term reality", status_of(herm),
            "g(dPhi*, dPhi) is self-adjoint on all + star samples, so the action is real", std::nullopt, twisted);
    }
    {
        bool real_ok = true, odd_ok = true, odd_literal = true;
        std::string odd_fail;
        for (const auto& ctx : {ctxp, ctxm})
            for (const auto& p : polys) {
                real_ok = real_ok &&
                          kinetic_term(field_cfg(PlaneElement(ctx, p, Poly()))) == transcribed::kinetic_real(ctx, p);
                auto k = kinetic_term(field_cfg(PlaneElement(ctx, Poly(), p)));
                odd_ok = odd_ok && k == transcribed::kinetic_odd(ctx, p, true);
                if (k != transcribed::kinetic_odd(ctx, p, false)) {
                    if (odd_literal)
                        odd_fail = "star sign " + std::string(ctx->star_sign > 0 ? "+" : "-") + ", phi = " + p.str();
                    odd_literal = false;
                }
            }
        auto kr = kinetic_term(field_cfg(PlaneElement(ctxp, polys[0], Poly())));
        add("kinetic.real", "kinetic term, Phi = (psi, 0)", status_of(real_ok),
            "both star signs, " + std::to_string(polys.size()) + " fields; psi = " + polys[0].str() + " gives " +
                pair_str(kr),
            "+-4x|d_x psi|^2 + |d_y psi|^2", twisted);
        add("kinetic.odd", "kinetic term, Phi = (0, phi)", status_of(odd_ok),
            "both star signs with the x|d_y hat phi|^2 term carrying the star sign, as in the expanded form",
            "4x^2|d_x hat phi|^2 + x|d_y hat phi|^2 + |hat phi|^2 + 2x(hat phi* d_x hat phi + hat phi d_x hat phi*)",
            twisted);
        add("kinetic.odd-literal", "kinetic term, Phi = (0, phi), sign as displayed", status_of(odd_literal),
            odd_literal ? "the displayed form holds for both star signs"
                        : "the displayed +x|d_y hat phi|^2 differs from the engine for " + odd_fail,
            "4x^2|d_x hat phi|^2 + x|d_y hat phi|^2 + |hat phi|^2 + 2x(hat phi* d_x hat phi + hat phi d_x hat phi*)",
            false);
    }
    {
        auto s = scalar_action(field_cfg(embed(ctxp, Poly::y())));
        auto s1 = scalar_action(field_cfg(PlaneElement(ctxp, Poly(), Poly(Scalar(1)))));
        add("action.example", "scalar action", status_of(s == Scalar(4) && s1 == Scalar(4)),
            "S[pair(y,0)] = " + s.str() + ", S[pair(0,1)] = " + s1.str(), "S[(y,0)] = 4, S[(0,1)] = 4", twisted);
        bool ok = true;
        std::vector<std::string> parts;
        for (const auto& ctx : {ctxp, ctxm})
            for (const auto& [psi, phi] : fields) {
                auto e = scalar_action(field_cfg(PlaneElement(ctx, psi, phi)));
                auto t = transcribed::action_display(ctx->star_sign, psi, phi);
                if (e != t && parts.size() < 2)
                    parts.push_back("star " + std::string(ctx->star_sign > 0 ? "+" : "-") + ": engine " + e.str() +
                                    " vs display " + t.str());
                ok = ok && e == t;
            }
        add("action.display", "scalar action display", status_of(ok),
            ok ? "the displayed action equals the trace of the kinetic term" : detail::join(parts),
            "Int_0 (4x^2|d_x hat phi|^2 + x(hat phi* d_x hat phi + hat phi d_x hat phi*)) +- (4x|d_x psi|^2 + "
            "|d_y psi|^2 +- x|d_y hat phi|^2 + |hat phi|^2)",
            false);
    }
    {
        bool ok = true;
        for (const auto& ctx : {ctxp, ctxm}) {
            auto el = detail::sample_elements(ctx);
            for (const auto& u : el) {
                ok = ok && trace(double_star(u)) == trace(u).conj();
                for (const auto& v : el) ok = ok && trace(u * v) == trace(v * u);
            }
        }
        add("trace.cyclic", "trace on the double", status_of(ok),
            "Int(uv) = Int(vu) and Int(u*) = conj Int(u) on samples; Int_0 is integration over [-1,1]^2",
            "(psi, phi) -> Int_0 psi is a trace", true);
    }

    // ---- gauge theory -----------------------------------------------------
    {
        bool ok = true;
        auto c = embed(ctxp, Poly(Scalar(Rational(3, 5), Rational(4, 5))));
        ok = ok && is_unitary(c) && is_unitary(PlaneElement::one(ctxp)) && !is_unitary(embed(ctxp, Poly(Scalar(2))));
        ok = ok && is_unitary(c * c) && is_unitary(double_star(c)) && c * double_star(c) == PlaneElement::one(ctxp);
        auto m = rebind(c, ctxm);
        ok = ok && is_unitary(m) && !is_unitary(plane_X(ctxm));
        add("unitary.group", "unitary group", status_of(ok),
            "pair(3/5+4/5*i,0) unitary, closed under product and star; pair(2,0) and X are not",
            "u u* +- x v v* = 1, v hat(u)* +- u hat(v)* = 0", true);
    }
    {
        // Generic components: compare each slot of A* + A with the stated
        // conditions.
        bool ok1 = true, ok2 = true;
        for (const auto& ctx : {ctxp, ctxm}) {
            const Scalar eps(ctx->star_sign);
            for (std::size_t i = 0; i < polys.size(); ++i) {
                const auto &a = polys[i], &b = polys[(i + 1) % 4], &c = polys[(i + 2) % 4], &d = polys[(i + 3) % 4];
                auto A = Connection::from_components(ctx, a, b, c, d, opt.convention);
                OneForm s = form_star(A.form, opt.convention) + A.form;
                ok1 = ok1 && s.cX() == PlaneElement(ctx, a + star(hat(a)), b + eps * star(b));
                ok2 = ok2 && s.cY() == PlaneElement(ctx, c + star(c), d - eps * star(hat(d)));
                auto P = detail::antihermitian_connection(ctx, a, b, c, d);
                P.convention = opt.convention;
                bool conds = antihermiticity_conditions(P).all();
                ok1 = ok1 && conds == is_antihermitian(P);
            }
        }
        auto A = Connection::from_components(ctxp, polys[0], polys[1], polys[2], polys[3], opt.convention);
        auto s = form_star(A.form, opt.convention);
        add("gauge.conjcond1", "(conjcond1)", status_of(ok1),
            to_string(opt.convention) + " star: (dX.(psi_X, phi_X))* + dX.(psi_X, phi_X) vanishes iff the stated "
            "conditions hold; e.g. (dX." + pair_str(A.form.cX()) + ")* = dX." + pair_str(s.cX()),
            "psi_X = -hat(psi_X)*, phi_X = -+phi_X*", twisted);
        add("gauge.conjcond2", "(conjcond2)", status_of(ok2),
            to_string(opt.convention) + " star: (dY." + pair_str(A.form.cY()) + ")* = dY." + pair_str(s.cY()),
            "psi_y = -psi_y*, phi_y = +-hat(phi_y)*", twisted);
    }
    {
        bool herm = true, full = true, reduced = true, literal = true, density = true;
        std::string full_example, literal_example;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            const auto &a = polys[i], &b = polys[(i + 1) % 4], &c = polys[(i + 2) % 4], &d = polys[(i + 3) % 4];
            for (const auto& ctx : {ctxp, ctxm}) {
                auto A = detail::antihermitian_connection(ctx, a, b, c, d);
                A.convention = opt.convention;
                auto F = curvature(A);
                if (ctx == ctxp) herm = herm && two_form_star(F) == F;
                auto T = transcribed::curvature_full(A);
                if (F != T && full) full_example = "engine " + F.str() + " vs display " + T.str();
                full = full && F == T;

                auto Ar = Connection::from_components(ctx, Poly(), A.phi_X(), A.psi_y(), Poly(), opt.convention);
                auto Fr = curvature(Ar);
                reduced = reduced && Fr == transcribed::curvature_reduced(Ar);
                if (Fr != transcribed::curvature_reduced_literal(Ar) && literal)
                    literal_example = "engine " + Fr.str() + " vs display " +
                                      transcribed::curvature_reduced_literal(Ar).str();
                literal = literal && Fr == transcribed::curvature_reduced_literal(Ar);
            }
            // Commutative U(1) connection a dx + b dy embedded as
            // dX.(0, 2 hat a) + dY.(b, 0).
            Poly ua = Scalar::fraction(1, 2) * (a - star(a)), ub = Scalar::fraction(1, 2) * (b - star(b));
            auto U = Connection::from_components(ctxp, Poly(), Scalar(2) * hat(ua), ub, Poly());
            Poly fc = transcribed::dx(ub) - transcribed::dy(ua);
            auto F = curvature(U);
            density = density && is_antihermitian(U) &&
                      F.coefficient() == plane_X(ctxp) * embed(ctxp, Scalar(-2) * fc) &&
                      yang_mills_density(F) == embed(ctxp, Scalar(4) * Poly::x() * transcribed::abs2(fc));
        }
        add("gauge.curvature-hermitian", "curvature hermiticity", status_of(herm),
            "F* = F for antihermitian A with the + star, (dX^dY.c)* = c*.dX^dY", "F = dA + A^A is hermitian",
            twisted);
        add("gauge.curvature-full", "curvature, general connection", status_of(full),
            full ? "the displayed curvature equals the engine" : full_example,
            "dX^dY(-d_y psi_X +- phi_y* +- 2x d_x phi_y* + psi_X(psi_y + hat psi_y) + x phi_y*(hat phi_X - phi_X)) "
            "+ dX^dY(-d_y phi_X + 2 d_x psi_y* + psi_X phi_y -+ psi_X* phi_y*) X",
            false);
        auto Ar = Connection::from_components(ctxp, Poly(), Poly(Scalar::i()) * Poly::y(), Scalar::i() * Poly::x() * Poly::y(),
                                              Poly(), opt.convention);
        add("gauge.curvature-reduced", "reduced connection curvature", status_of(reduced),
            "A_r = dX.(0, phi_X) + dY.(psi_y, 0) gives dX^dY.(-d_y phi_X + 2 d_x hat(psi_y*)).X; e.g. A_r = " +
                Ar.form.str() + " gives " + curvature(Ar).str(),
            "dX^dy(-d_y phi_X + 2 d_x psi_y*)", twisted);
        add("gauge.curvature-reduced-literal", "reduced connection curvature, as displayed", status_of(literal),
            literal ? "the display holds literally"
                    : literal_example + " (the display omits the trailing X of the general form and the hat on psi_y*)",
            "dX^dy(-d_y phi_X + 2 d_x psi_y*)", false);
        add("gauge.yang-mills", "abelian Yang-Mills reduction", status_of(density),
            "for A = dx.a + dy.b with a, b imaginary: F = dX^dY.X.(-2 F_xy) with F_xy = d_x b - d_y a, and "
            "F*F = 4x|F_xy|^2",
            "its square gives (up to the factor 2) the usual abelian Yang-Mills action", twisted);
    }
    {
        bool ok = true;
        std::optional<Scalar> lambda;
        std::string example;
        for (const auto& ctx : {ctxp, ctxm}) {
            const Scalar eps(ctx->star_sign);
            for (const auto& [p, q] : {std::pair{Scalar(0, 2), Scalar(3, 2)}, std::pair{Scalar(1, -1), Scalar(1, 2)}}) {
                // Constant antihermitian psi_X and phi_y.
                Scalar px = Scalar::fraction(1, 2) * (p - p.conj());
                Scalar fy = Scalar::fraction(1, 2) * (q + eps * q.conj());
                auto A = Connection::from_components(ctx, Poly(px), Poly(), Poly(), Poly(fy), opt.convention);
                auto v = potential_extract(A);
                auto ref = potential_reference(A);
                auto l = proportionality(v, ref);
                if (!l || (lambda && *lambda != *l)) ok = false;
                if (l) lambda = l;
                if (example.empty()) example = "psi_X = " + px.str() + ", phi_y = " + fy.str() + ": " + pair_str(v);
            }
            auto only_y = Connection::from_components(ctx, Poly(), Poly(), Poly(Scalar(0, 1)), Poly(), opt.convention);
            ok = ok && potential_extract(only_y).is_zero();
        }
        add("gauge.potential", "potential term", status_of(ok && lambda.has_value()),
            "derivative-free density = " + (lambda ? lambda->str() : std::string("?")) +
                " * x(psi_X phi_y -+ psi_X* phi_y*)^2 for constant antihermitian fields; " + example,
            "V ~ x(psi_X phi_y -+ psi_X* phi_y*)^2", twisted);
    }
    {
        bool ok = true;
        auto c = embed(ctxp, Poly(Scalar(Rational(3, 5), Rational(4, 5))));
        auto A = detail::antihermitian_connection(ctxp, polys[0], polys[1], polys[2], polys[3]);
        ok = ok && gauge_transform(A, PlaneElement::one(ctxp)).form == A.form;
        ok = ok && gauge_transform(A, c).form == A.form;
        auto zero = Connection{OneForm::zero(ctxp), opt.convention};
        ok = ok && curvature(gauge_transform(zero, c)).is_zero();
        bool threw = false;
        try {
            (void)gauge_transform(A, embed(ctxp, Poly(Scalar(2))));
        } catch (const NonUnitary&) {
            threw = true;
        }
        ok = ok && threw;
        add("gauge.transformation", "gauge transformation", status_of(ok),
            "u = 1 and constant phases leave A fixed; pure gauge u d(u*) is flat; non-unitary u rejected",
            "A -> u A u* + u d(u*)", true);
    }
    {
        bool ok = true;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            Poly a = Scalar::fraction(1, 2) * (polys[i] - star(hat(polys[i])));
            Poly c = Scalar::fraction(1, 2) * (polys[(i + 1) % 4] - star(polys[(i + 1) % 4]));
            auto A = Connection::from_components(ctxp, a, Poly(), c, Poly(), opt.convention);
            ok = ok && potential_extract(A).is_zero();
        }
        add("gauge.commutative-sector", "potential absent for commutative fields", status_of(ok),
            "connections dX.(psi_X, 0) + dY.(psi_y, 0) have no derivative-free density",
            "the potential distinguishes the theory from the commutative plane", true);
    }
    return rep;
}

inline std::string render_text(const Report& rep) {
    std::ostringstream os;
    std::size_t failed = 0, mismatched = 0;
    for (const auto& c : rep.checks) {
        os << "[" << to_string(c.status) << "]" << (c.required ? " " : " (info) ") << c.id << "  <" << c.anchor
           << ">\n";
        os << "    engine: " << c.engine << "\n";
        if (c.transcription) os << "    display: " << *c.transcription << "\n";
        if (c.failed()) ++failed;
        if (c.status == CheckStatus::mismatch) ++mismatched;
    }
    os << rep.checks.size() << " checks, " << mismatched << " mismatches, " << failed << " required failures ("
       << to_string(rep.convention) << " form star)\n";
    return os.str();
}

inline std::string render_latex(const Report& rep) {
    auto esc = [](const std::string& s) {
        std::string out;
        for (char ch : s) {
            if (ch == '_' || ch == '^' || ch == '&' || ch == '%' || ch == '#' || ch == '$' || ch == '{' || ch == '}')
                out += std::string("\\") + (ch == '^' ? "^{}" : std::string(1, ch));
            else
                out += ch;
        }
        return out;
    };
    std::ostringstream os;
    os << "\\begin{description}\n";
    for (const auto& c : rep.checks) {
        os << "\\item[" << esc(c.id) << "] (" << esc(c.anchor) << ") \\textbf{" << to_string(c.status) << "}"
           << (c.required ? "" : " (informational)") << "\\\\\n";
        os << "  engine: \\texttt{" << esc(c.engine) << "}\n";
        if (c.transcription) os << "  \\\\ display: \\texttt{" << esc(*c.transcription) << "}\n";
    }
    os << "\\end{description}\n";
    return os.str();
}

}  // namespace qplane
