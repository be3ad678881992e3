#pragma once

// Scalar and gauge field theory on the anticommutative plane: star on forms,
// kinetic term, trace and action, connections, curvature, Yang-Mills density
// and the potential term.

#include "qplane/calculus.hpp"
#include "qplane/metric.hpp"

#include <stdexcept>
#include <string>

namespace qplane {

/// How the star acts on a one-form dG.c:
///   twisted:          (dG.c)* = c*.dG, renormalized to dG.(...)
///   coefficientwise:  (dG.c)* = dG.c*
enum class FormStarConvention { twisted, coefficientwise };

inline std::string to_string(FormStarConvention c) {
    return c == FormStarConvention::twisted ? "twisted" : "coefficientwise";
}

inline FormStarConvention parse_convention(const std::string& s) {
    if (s == "twisted") return FormStarConvention::twisted;
    if (s == "coefficientwise") return FormStarConvention::coefficientwise;
    throw std::invalid_argument("unknown form-star convention: " + s);
}

struct NonUnitary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline OneForm form_star(const OneForm& omega, FormStarConvention conv = FormStarConvention::twisted,
                         const Calculus& cal = CalculusSpec::A()) {
    if (conv == FormStarConvention::coefficientwise) return {double_star(omega.cX()), double_star(omega.cY())};
    auto act = cal.action(omega.context());
    const auto one = PlaneElement::one(omega.context());
    OneForm out = OneForm::zero(omega.context());
    for (Gen G : {kX, kY})
        if (!omega[G].is_zero()) out += act.apply(double_star(omega[G]), OneForm::basis(G, one));
    return out;
}

/// (dX^dY.c)* = c*.dX^dY in normal form; for calculus A this is
/// dX^dY.sigma_Y(sigma_X(c*)).
inline TwoForm two_form_star(const TwoForm& f, const Calculus& cal = CalculusSpec::A()) {
    const auto& ctx = f.coefficient().context();
    return left_multiply_two_form(double_star(f.coefficient()), TwoForm(PlaneElement::one(ctx)), cal);
}

inline bool is_hermitian(const PlaneElement& u) { return double_star(u) == u; }

struct FieldConfig {
    PlaneElement phi;
    Calculus calculus = CalculusSpec::A();
    MetricSpec metric;
    FormStarConvention convention = FormStarConvention::twisted;

    /// Calculus A, standard metric, twisted star; the star sign comes from
    /// the context of `phi`.
    static FieldConfig standard(PlaneElement phi) {
        auto g = MetricSpec::standard(phi.context());
        return {std::move(phi), CalculusSpec::A(), std::move(g), FormStarConvention::twisted};
    }
};

/// g(dPhi*, dPhi).
inline PlaneElement kinetic_term(const FieldConfig& cfg) {
    OneForm d_phi = differential(cfg.phi, cfg.calculus);
    return metric_eval(form_star(d_phi, cfg.convention, cfg.calculus), d_phi, cfg.metric, cfg.calculus);
}

inline Scalar scalar_action(const FieldConfig& cfg) { return trace(kinetic_term(cfg)); }

/// A = dX.(psi_X, phi_X) + dY.(psi_y, phi_y).
struct Connection {
    OneForm form;
    FormStarConvention convention = FormStarConvention::twisted;

    static Connection from_components(const PlaneContext& ctx, const Poly& psi_X, const Poly& phi_X, const Poly& psi_y,
                                      const Poly& phi_y,
                                      FormStarConvention conv = FormStarConvention::twisted) {
        return {OneForm(PlaneElement(ctx, psi_X, phi_X), PlaneElement(ctx, psi_y, phi_y)), conv};
    }

    const Poly& psi_X() const { return form.cX().first(); }
    const Poly& phi_X() const { return form.cX().second(); }
    const Poly& psi_y() const { return form.cY().first(); }
    const Poly& phi_y() const { return form.cY().second(); }
    int star_sign() const { return form.context()->star_sign; }
};

inline bool is_antihermitian(const Connection& a, const Calculus& cal = CalculusSpec::A()) {
    return form_star(a.form, a.convention, cal) == -a.form;
}

/// The four component conditions equivalent to A* = -A under the twisted
/// convention with calculus A:
///   psi_X = -hat(psi_X)*,  phi_X = -eps phi_X*,
///   psi_y = -psi_y*,       phi_y =  eps hat(phi_y)*.
struct AntihermiticityConditions {
    bool psi_X = false;
    bool phi_X = false;
    bool psi_y = false;
    bool phi_y = false;
    bool all() const { return psi_X && phi_X && psi_y && phi_y; }
};

inline AntihermiticityConditions antihermiticity_conditions(const Connection& a) {
    const Scalar eps(a.star_sign());
    return {a.psi_X() == -star(hat(a.psi_X())), a.phi_X() == -(eps * star(a.phi_X())),
            a.psi_y() == -star(a.psi_y()), a.phi_y() == eps * star(hat(a.phi_y()))};
}

/// F = dA + A^A.
inline TwoForm curvature(const Connection& a, const Calculus& cal = CalculusSpec::A()) {
    return differential_on_forms(a.form, cal) + wedge(a.form, a.form, cal);
}

/// c* c for F = dX^dY.c.
inline PlaneElement yang_mills_density(const TwoForm& f) { return double_star(f.coefficient()) * f.coefficient(); }

inline Scalar yang_mills_action(const TwoForm& f) { return trace(yang_mills_density(f)); }

namespace detail {

inline Poly constant_part(const Poly& p) { return Poly(p.coefficient(Monomial{})); }

}  // namespace detail

/// Connection with every component replaced by its constant term.
inline Connection constant_part(const Connection& a) {
    return Connection::from_components(a.form.context(), detail::constant_part(a.psi_X()),
                                       detail::constant_part(a.phi_X()), detail::constant_part(a.psi_y()),
                                       detail::constant_part(a.phi_y()), a.convention);
}

/// Density of the derivative-free part A^A of the curvature, evaluated on
/// the constant parts of the components.
inline PlaneElement potential_extract(const Connection& a, const Calculus& cal = CalculusSpec::A()) {
    Connection c = constant_part(a);
    return yang_mills_density(wedge(c.form, c.form, cal));
}

/// x (psi_X phi_y - eps psi_X* phi_y*)^2 on the constant parts.
inline PlaneElement potential_reference(const Connection& a) {
    const Scalar eps(a.star_sign());
    Poly px = detail::constant_part(a.psi_X());
    Poly py = detail::constant_part(a.phi_y());
    Poly s = px * py - eps * (star(px) * star(py));
    return embed(a.form.context(), Poly::x() * s * s);
}

/// Scalar lambda with u = lambda v, if one exists (v nonzero).
inline std::optional<Scalar> proportionality(const PlaneElement& u, const PlaneElement& v) {
    if (v.is_zero()) return u.is_zero() ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
    const auto& src = v.first().is_zero() ? v.second() : v.first();
    const auto& [m, c] = *src.terms().begin();
    const auto& tgt = v.first().is_zero() ? u.second() : u.first();
    Scalar lambda = tgt.coefficient(m) / c;
    if (u == lambda * v) return lambda;
    return std::nullopt;
}

/// A -> u A u* + u d(u*).
inline Connection gauge_transform(const Connection& a, const PlaneElement& u, const Calculus& cal = CalculusSpec::A()) {
    if (!is_unitary(u)) throw NonUnitary("gauge transformation by a non-unitary element " + pair_str(u));
    auto us = double_star(u);
    OneForm out = left_multiply_form(u, a.form, cal) * us + left_multiply_form(u, differential(us, cal), cal);
    return {out, a.convention};
}

}  // namespace qplane
