// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "support.hpp"

#include "qplane/report_json.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qplane;
using qtest::abs2;
using qtest::Rng;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

Poly dx(const Poly& p) { return derivative(p, Derivation::x); }
Poly dy(const Poly& p) { return derivative(p, Derivation::y); }

const Calculus A = CalculusSpec::A();

Outcome quaternions() {
    Outcome o;
    auto ctx = quaternion_context(-1);
    auto alg = ctx->one.algebra_ptr();
    auto I = FiniteElement::basis(alg, 1);
    // 1, i, j, k and the expected table e_a e_b = sign * e_c.
    std::vector<FiniteDoubled> e{FiniteDoubled::one(ctx), embed(ctx, I), FiniteDoubled::odd_unit(ctx),
                                 FiniteDoubled(ctx, ctx->zero, I)};
    const int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    const char* names = "1ijk";
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            o.require(e[a] * e[b] == Scalar(sgn[a][b]) * e[idx[a][b]],
                      std::string(1, names[a]) + names[b] + " = " + (sgn[a][b] < 0 ? "-" : "") + names[idx[a][b]]);
    for (int a = 1; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) o.require((e[a] * e[b] + e[b] * e[a]).is_zero(), "anticommutator");
    o.note("16 basis products and 3 anticommutators checked");
    return o;
}

template <class Ctx>
bool basis_associative(const Ctx& ctx) {
    std::vector<FiniteDoubled> basis;
    for (std::size_t i = 0; i < ctx->one.algebra().dimension(); ++i) {
        auto e = FiniteElement::basis(ctx->one.algebra_ptr(), i);
        basis.push_back(embed(ctx, e));
        basis.emplace_back(ctx, ctx->zero, e);
    }
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis)
                if (!((a * b) * c == a * (b * c))) return false;
    return true;
}

Outcome discrete_presets() {
    Outcome o;
    {
        auto ctx = z2_context();
        auto g = generators(ctx);
        const auto &a = g[0], &b = g[1];
        auto one = FiniteDoubled::one(ctx);
        o.require(a * a == one && b * b == one && (a * b + b * a).is_zero(), "(al-1) a^2 = b^2 = 1, ab + ba = 0");
    }
    {
        auto ctx = z2z2_context();
        auto alg = ctx->one.algebra_ptr();
        auto a = embed(ctx, FiniteElement::basis(alg, 1));
        auto b = embed(ctx, FiniteElement::basis(alg, 2));
        auto Ag = FiniteDoubled::odd_unit(ctx);
        o.require(b * b == FiniteDoubled::one(ctx) && Ag * Ag == a && (Ag * b + b * Ag).is_zero(),
                  "(al-2) b^2 = 1, A^2 = a, Ab + bA = 0");
    }
    for (auto alg : {finite_presets::z2(), finite_presets::z2z2(), finite_presets::complex_numbers()})
        o.require(alg->is_associative(), alg->name() + " base associativity");
    for (int s : {1, -1}) {
        o.require(basis_associative(z2_context(s)), "Z2 double associativity");
        o.require(basis_associative(z2z2_context(s)), "Z2xZ2 double associativity");
        o.require(basis_associative(quaternion_context(s)), "quaternion double associativity");
    }
    o.note("exhaustive over basis triples of every finite double, both star signs");
    return o;
}

Outcome plane_relations() {
    Outcome o;
    auto ctx = plane_context(1);
    auto X = plane_X(ctx), Y = plane_Y(ctx);
    o.require((X * Y + Y * X).is_zero(), "XY + YX = 0");
    o.require(X * X == plane_x(ctx), "X^2 = x");
    Rng g(1003);
    for (int t = 0; t < 50; ++t) {
        Poly a = g.poly(4);
        o.require(X * embed(ctx, a) == embed(ctx, hat(a)) * X, "X a = hat(a) X for a = " + a.str());
    }
    o.note("50 random base elements of degree <= 4");
    return o;
}

Outcome associativity() {
    Outcome o;
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        Rng g(1004 + s);
        for (int t = 0; t < 200; ++t) {
            auto u = g.element(ctx, 3), v = g.element(ctx, 3), w = g.element(ctx, 3);
            o.require((u * v) * w == u * (v * w), "(uv)w = u(vw) for u = " + pair_str(u));
        }
    }
    o.note("200 random triples per star sign, degree <= 3");
    return o;
}

Outcome calculus_consistency() {
    Outcome o;
    auto check = [&](const Calculus& cal) {
        auto rep = consistency_check(cal, 3);
        std::string msg = cal.label() + " consistent to degree 3";
        if (!rep.passed) msg += " (counterexample: " + rep.counterexamples.front() + ")";
        o.require(rep.passed, msg);
        if (rep.passed) o.note(cal.label() + ": pass, " + std::to_string(rep.checks) + " checks");
    };
    check(A);
    for (Scalar w : {Scalar(1), Scalar(2), Scalar::fraction(-1, 2)}) check(CalculusSpec::B(w));
    for (Scalar w : {Scalar(1), Scalar(2), Scalar::fraction(-1, 2)}) check(CalculusSpec::C(w));

    auto table = RewriteTable::for_spec(CalculusSpec::A());
    table.at(kY, kX, kX) = {Scalar(0), Scalar(0), Scalar(1)};
    table.set_label("A with Y dX = +dX Y");
    auto rep = consistency_check(Calculus::from_table(table), 3);
    o.require(!rep.passed && !rep.counterexamples.empty(), "perturbed table must fail");
    if (!rep.passed) o.note("perturbed table fails: " + rep.counterexamples.front());
    return o;
}

Outcome closed_form_differential() {
    Outcome o;
    auto ctx = plane_context(1);
    int n = 0;
    for (std::uint32_t m = 0; m <= 5; ++m)
        for (std::uint32_t k = 0; m + k <= 5; ++k)
            for (int slot = 0; slot < 2; ++slot) {
                Poly mono = Poly::monomial(m, k);
                qtest::Pair u = slot == 0 ? qtest::Pair{mono, Poly()} : qtest::Pair{Poly(), mono};
                auto d = differential(qtest::to_element(ctx, u), A);
                auto ref = qtest::o_differential(u);
                o.require(qtest::o_of(d.cX()) == ref.X && qtest::o_of(d.cY()) == ref.Y,
                          "d of " + pair_str(qtest::to_element(ctx, u)));
                ++n;
            }
    o.note(std::to_string(n) + " monomials compared");
    return o;
}

Outcome kernels() {
    Outcome o;
    auto ctx = plane_context(1);
    auto ka = kernel_of_d(A, 5);
    o.require(ka.size() == 1 && ka[0] == PlaneElement::one(ctx), "Ker d = span{1} for A up to degree 5");
    for (Scalar w : {Scalar(1), Scalar(2)}) {
        auto e = plane_x(ctx) - Scalar::fraction(1, 2) * w * plane_Y(ctx) * plane_Y(ctx);
        o.require(span_contains(kernel_of_d(CalculusSpec::B(w), 2), e), "X^2 - w/2 Y^2 in Ker d for B, w = " + w.str());
    }
    for (Scalar w : {Scalar(1), Scalar(2)}) {
        std::vector<std::string> b;
        for (const auto& e : kernel_of_d(CalculusSpec::C(w), 2)) b.push_back(words_str(to_words(e)));
        auto e = plane_x(ctx) - Scalar::fraction(1, 2) * w * plane_Y(ctx) * plane_Y(ctx);
        std::string basis;
        for (const auto& s : b) basis += (basis.empty() ? "" : ", ") + s;
        o.note("C(w=" + w.str() + ") kernel to degree 2: {" + basis + "}; d(X^2 - w/2 Y^2) = " +
               differential(e, CalculusSpec::C(w)).str());
    }
    return o;
}

Outcome d_squared() {
    Outcome o;
    auto ctx = plane_context(1);
    Rng g(1008);
    for (int t = 0; t < 50; ++t) {
        auto a = g.element(ctx, 4);
        o.require(differential_on_forms(differential(a, A), A).is_zero(), "d(d a) = 0 for a = " + pair_str(a));
    }
    o.note("50 random elements of degree <= 4");
    return o;
}

Outcome metrics() {
    Outcome o;
    for (int d = 1; d <= 4; ++d) {
        auto s = metric_solve(CalculusSpec::C(Scalar(1)), d);
        std::string msg = "C: only the zero metric at degree " + std::to_string(d);
        if (!s.is_zero_space()) msg += " (dimension " + std::to_string(s.dimension()) + ", e.g. " + s.basis.front().str() + ")";
        o.require(s.is_zero_space(), msg);
    }
    bool a_ok = true;
    for (int d = 1; d <= 4; ++d)
        for (const auto& m : metric_solve(A, d).basis)
            a_ok = a_ok && is_central(m.gXX()) && is_central(m.gYY()) && xy_times_central(m.gXY()) &&
                   xy_times_central(m.gYX());
    o.require(a_ok, "A: central gXX, gYY and gXY, gYX = xy f");
    if (a_ok) o.note("A: every solution to degree 4 has central diagonal and xy f off-diagonal components");

    for (Scalar w : {Scalar(1), Scalar(2)}) {
        auto s = metric_solve(CalculusSpec::B(w), 2);
        std::string bad;
        for (const auto& m : s.basis)
            if (!(m.gXY() == -m.gYX())) bad = m.str();
        o.require(bad.empty(), "B(w=" + w.str() + "): gXY = -gYX for every admissible metric" +
                                   (bad.empty() ? "" : " (solution " + bad + ")"));
        auto st = metric_solve(CalculusSpec::B(w), 4, plane_context(1), true);
        bool ok = true;
        for (const auto& m : st.basis) {
            auto f = xy_times_central(m.gXY());
            ok = ok && m.gXY() == -m.gYX() && f && w * m.gYY() == Scalar(2) * plane_x(m.gYY().context()) * *f;
        }
        o.note("B(w=" + w.str() + ") restricted to central diagonal and xy f off-diagonal: gXY = -gYX and " +
               "w gYY = 2x f " + (ok ? "hold" : "fail") + " on all " + std::to_string(st.dimension()) + " solutions");
    }
    return o;
}

Outcome kinetic_reductions() {
    Outcome o;
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        const Poly x = Poly::x();
        Rng g(1010 + s);
        for (int t = 0; t < 20; ++t) {
            Poly psi = g.poly(3), phi = g.poly(3), h = hat(phi);
            auto kr = kinetic_term(FieldConfig::standard(embed(ctx, psi)));
            o.require(kr == embed(ctx, Scalar(4 * s) * x * abs2(dx(psi)) + abs2(dy(psi))),
                      "Phi = (psi, 0): +-4x|d_x psi|^2 + |d_y psi|^2 for psi = " + psi.str());
            auto kn = kinetic_term(FieldConfig::standard(PlaneElement(ctx, Poly(), phi)));
            Poly display = Scalar(4) * x * x * abs2(dx(h)) + Scalar(s) * x * abs2(dy(h)) + abs2(h) +
                           Scalar(2) * x * (star(h) * dx(h) + h * dx(star(h)));
            o.require(kn == embed(ctx, display), "Phi = (0, phi) display for phi = " + phi.str());
        }
    }
    o.note("20 random psi, phi of degree <= 3 per star sign; the x|d_y hat phi|^2 term carries the star sign as in "
           "the general kinetic term");
    return o;
}

Outcome trace_and_action() {
    Outcome o;
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        Rng g(1012 + s);
        for (int t = 0; t < 100; ++t) {
            auto u = g.element(ctx, 3), v = g.element(ctx, 3);
            o.require(trace(u * v) == trace(v * u), "trace cyclicity");
            o.require(trace(double_star(u)) == trace(u).conj(), "trace star-covariance");
        }
        for (int t = 0; t < 20; ++t) {
            qtest::Pair phi{g.poly(3), g.poly(3)};
            o.require(scalar_action(FieldConfig::standard(qtest::to_element(ctx, phi))) == qtest::o_action(phi, s),
                      "action oracle for " + pair_str(qtest::to_element(ctx, phi)));
        }
    }
    auto sy = scalar_action(FieldConfig::standard(plane_Y(plane_context(1))));
    o.require(sy == Scalar(4), "action of (y, 0) = 4, got " + sy.str());
    o.note("100 random pairs and 20 random fields per star sign; S[(y,0)] = " + sy.str());
    return o;
}

Outcome gauge_sector() {
    Outcome o;
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        const Scalar half = Scalar::fraction(1, 2), eps(s);
        Rng g(1014 + s);
        for (int t = 0; t < 40; ++t) {
            Poly c[4] = {g.poly(3), g.poly(3), g.poly(3), g.poly(3)};
            Poly p[4] = {half * (c[0] - star(hat(c[0]))), half * (c[1] - eps * star(c[1])), half * (c[2] - star(c[2])),
                         half * (c[3] + eps * star(hat(c[3])))};
            for (int slot = 0; slot < 4; ++slot) {
                Poly comp[4];
                comp[slot] = g.coin() ? p[slot] : c[slot];
                auto a = Connection::from_components(ctx, comp[0], comp[1], comp[2], comp[3]);
                auto cond = antihermiticity_conditions(a);
                const bool flags[4] = {cond.psi_X, cond.phi_X, cond.psi_y, cond.phi_y};
                o.require(is_antihermitian(a) == flags[slot], "A* = -A iff the displayed condition, slot " +
                                                                  std::to_string(slot));
            }
            auto ar = Connection::from_components(ctx, Poly(), p[1], p[2], Poly());
            Poly fc = -dy(p[1]) + Scalar(2) * dx(hat(star(p[2])));
            o.require(curvature(ar).coefficient() == embed(ctx, fc) * plane_X(ctx),
                      "reduced curvature dX^dY (-d_y phi_X + 2 d_x psi_y*) X");

            Poly fa = half * (c[0] - star(c[0])), fb = half * (c[1] - star(c[1]));
            Connection u1{differential(plane_x(ctx), A) * embed(ctx, fa) + OneForm::dY(embed(ctx, fb))};
            Poly fxy = dx(fb) - dy(fa);
            o.require(yang_mills_density(curvature(u1)) == embed(ctx, Scalar(4 * s) * Poly::x() * abs2(fxy)),
                      "abelian density 4x|F_xy|^2");

            Scalar p0 = g.scalar(), q = g.scalar();
            Scalar px = half * (p0 - p0.conj());
            Scalar fy = half * (q + eps * q.conj());
            auto ac = Connection::from_components(ctx, Poly(px), Poly(), Poly(), Poly(fy));
            auto lambda = proportionality(potential_extract(ac), potential_reference(ac));
            o.require(lambda.has_value(), "constant-field density proportional to x(psi_X phi_y -+ psi_X* phi_y*)^2");
        }
        for (auto c : {Scalar(Rational(3, 5), Rational(4, 5)), Scalar(0, 1), Scalar(-1)}) {
            auto u = embed(ctx, Poly(c));
            o.require(curvature(gauge_transform(Connection{OneForm::zero(ctx)}, u)).is_zero(),
                      "pure gauge curvature vanishes");
        }
    }
    o.note("reduced curvature carries the trailing X of the general curvature and hat on psi_y*; "
           "abelian density 4x|F_xy|^2 (a factor 2 on F_xy relative to the usual normalisation); "
           "potential constant -1");
    return o;
}

Outcome verification() {
    Outcome o;
    auto rep = verify_identities(VerifyOptions{});
    o.require(rep.ok(), "every match-required check green");
    auto doc = nlohmann::json::parse(to_json(rep).dump());
    auto err = validate_report_json(doc);
    o.require(!err, "JSON validates" + (err ? ": " + *err : std::string()));
    for (const char* id : {"kinetic.expanded", "gauge.curvature-full"}) {
        const auto* c = rep.find(id);
        o.require(c && c->transcription, std::string(id) + " present with transcription");
        if (c) o.note(std::string(id) + ": " + to_string(c->status));
    }
    std::size_t mism = 0;
    for (const auto& c : rep.checks) mism += c.status == CheckStatus::mismatch;
    o.note(std::to_string(rep.checks.size()) + " checks, " + std::to_string(mism) + " documented mismatches");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"quaternion reproduction", quaternions},
        {"discrete presets", discrete_presets},
        {"plane relations", plane_relations},
        {"associativity", associativity},
        {"calculus consistency", calculus_consistency},
        {"closed-form differential", closed_form_differential},
        {"kernel claims", kernels},
        {"d^2 = 0 under variant A", d_squared},
        {"metric solver", metrics},
        {"kinetic reductions", kinetic_reductions},
        {"trace and action", trace_and_action},
        {"gauge sector", gauge_sector},
        {"verification report", verification},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "\n";
        for (const auto& n : o.notes) std::cout << "      " << n << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed in " << secs << " s\n";
    return failures == 0 ? 0 : 1;
}
