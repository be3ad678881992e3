#pragma once

// Metrics as middle-linear bimodule maps on one-forms,
//
//   g(a.w, n.b) = a g(w, n) b,   g(w.a, n) = g(w, a.n),
//
// determined by the components g_GH = g(dG, dH). `metric_solve` finds all
// component choices (polynomial up to a degree bound) compatible with a
// calculus.

#include "qplane/calculus.hpp"
#include "qplane/linalg.hpp"

#include <array>
#include <map>
#include <tuple>
#include <optional>
#include <string>
#include <vector>

namespace qplane {

class MetricSpec {
public:
    MetricSpec(PlaneElement gXX, PlaneElement gYY, PlaneElement gXY, PlaneElement gYX)
        : g_{std::move(gXX), std::move(gXY), std::move(gYX), std::move(gYY)} {}

    /// gXX = gYY = 1, gXY = gYX = 0.
    static MetricSpec standard(const PlaneContext& ctx) {
        auto one = PlaneElement::one(ctx), zero = PlaneElement::zero(ctx);
        return {one, one, zero, zero};
    }
    static MetricSpec zero(const PlaneContext& ctx) {
        auto z = PlaneElement::zero(ctx);
        return {z, z, z, z};
    }

    const PlaneElement& operator()(Gen G, Gen H) const { return g_[2 * G + H]; }
    PlaneElement& at(Gen G, Gen H) { return g_[2 * G + H]; }

    const PlaneElement& gXX() const { return g_[0]; }
    const PlaneElement& gXY() const { return g_[1]; }
    const PlaneElement& gYX() const { return g_[2]; }
    const PlaneElement& gYY() const { return g_[3]; }

    bool is_zero() const {
        for (const auto& e : g_)
            if (!e.is_zero()) return false;
        return true;
    }

    friend MetricSpec operator+(const MetricSpec& a, const MetricSpec& b) {
        return {a.gXX() + b.gXX(), a.gYY() + b.gYY(), a.gXY() + b.gXY(), a.gYX() + b.gYX()};
    }
    friend MetricSpec operator*(const Scalar& s, const MetricSpec& a) {
        return {s * a.gXX(), s * a.gYY(), s * a.gXY(), s * a.gYX()};
    }
    friend bool operator==(const MetricSpec&, const MetricSpec&) = default;

    std::string str() const {
        return "gXX = " + words_str(to_words(gXX())) + ", gYY = " + words_str(to_words(gYY())) +
               ", gXY = " + words_str(to_words(gXY())) + ", gYX = " + words_str(to_words(gYX()));
    }

private:
    std::array<PlaneElement, 4> g_;  // XX, XY, YX, YY
};

/// g(w, n): move each coefficient of w into the second slot with the left
/// action, then contract generator pairs and keep right coefficients.
inline PlaneElement metric_eval(const OneForm& omega, const OneForm& eta, const MetricSpec& g, const Calculus& cal) {
    auto act = cal.action(omega.context());
    PlaneElement out = PlaneElement::zero(omega.context());
    for (Gen G : {kX, kY}) {
        if (omega[G].is_zero()) continue;
        OneForm moved = act.apply(omega[G], eta);
        for (Gen K : {kX, kY}) out += g(G, K) * moved[K];
    }
    return out;
}

namespace detail {

/// left * g_KL * right
struct ContractionTerm {
    PlaneElement left;
    Gen K;
    Gen L;
    PlaneElement right;
};

/// Terms of g(w, eta) as a function of the (unknown) components.
inline void contraction_terms(std::vector<ContractionTerm>& out, LeftAction& act, const OneForm& omega,
                              const OneForm& eta, const PlaneElement& left, const Scalar& sign) {
    for (Gen K : {kX, kY}) {
        if (omega[K].is_zero()) continue;
        OneForm moved = act.apply(omega[K], eta);
        for (Gen L : {kX, kY})
            if (!moved[L].is_zero()) out.push_back({left, K, L, sign * moved[L]});
    }
}

}  // namespace detail

struct MetricSolution {
    std::string calculus;
    int max_degree = 0;
    std::size_t unknowns = 0;
    std::size_t equations = 0;
    /// Basis of the admissible space; free parameters t1..tn multiply these.
    std::vector<MetricSpec> basis;

    std::size_t dimension() const { return basis.size(); }
    bool is_zero_space() const { return basis.empty(); }

    /// True iff `g` is a linear combination of the basis.
    bool contains(const MetricSpec& g) const {
        using Key = std::tuple<int, int, std::uint32_t, std::uint32_t>;
        auto flat = [](const MetricSpec& m) {
            std::map<Key, Scalar> out;
            int slot = 0;
            for (const auto* e : {&m.gXX(), &m.gXY(), &m.gYX(), &m.gYY()}) {
                for (const auto& [mono, c] : e->first().terms()) out[{slot, 0, mono.x, mono.y}] += c;
                for (const auto& [mono, c] : e->second().terms()) out[{slot, 1, mono.x, mono.y}] += c;
                ++slot;
            }
            return out;
        };
        ColumnSystem<Key> with, without;
        for (const auto& b : basis) {
            with.add_column(flat(b));
            without.add_column(flat(b));
        }
        with.add_column(flat(g));
        return with.nullspace().size() > without.nullspace().size();
    }
};

/// Imposes, for generators a, b in {X, Y}, G, H in {dX, dY} and c in
/// {1, X, Y}:
///   left covariance   g(a.(dG.c), dH) = a g(dG.c, dH)
///   middle linearity  g(dG.(b a), dH) = g(dG.b, a.dH)
/// on components that are polynomials of word degree <= max_degree. Right
/// covariance holds by construction of `metric_eval`.
///
/// With `structured`, the unknowns are restricted to central gXX, gYY and
/// gXY, gYX of the form XY f with f central (words X^odd Y^odd).
inline MetricSolution metric_solve(const Calculus& cal, int max_degree, const PlaneContext& ctx = plane_context(1),
                                   bool structured = false) {
    auto act = cal.action(ctx);
    const auto one = PlaneElement::one(ctx);
    const std::array<PlaneElement, 2> gens{plane_X(ctx), plane_Y(ctx)};
    const std::array<PlaneElement, 3> coeffs{one, gens[0], gens[1]};

    std::vector<std::vector<detail::ContractionTerm>> constraints;
    for (Gen G : {kX, kY})
        for (Gen H : {kX, kY}) {
            OneForm dH = OneForm::basis(H, one);
            for (const auto& a : gens)
                for (const auto& c : coeffs) {
                    std::vector<detail::ContractionTerm> terms;
                    OneForm omega = OneForm::basis(G, c);
                    detail::contraction_terms(terms, act, act.apply(a, omega), dH, one, Scalar(1));
                    detail::contraction_terms(terms, act, omega, dH, a, Scalar(-1));
                    constraints.push_back(std::move(terms));
                }
            for (const auto& b : gens)
                for (const auto& a : gens) {
                    std::vector<detail::ContractionTerm> terms;
                    detail::contraction_terms(terms, act, OneForm::basis(G, b * a), dH, one, Scalar(1));
                    // g(dG.b, a.dH): the coefficient b acts on the already-moved a.dH.
                    OneForm moved = act.apply(b, act.apply(a, dH));
                    for (Gen L : {kX, kY})
                        if (!moved[L].is_zero()) terms.push_back({one, G, L, Scalar(-1) * moved[L]});
                    constraints.push_back(std::move(terms));
                }
        }

    using Key = std::tuple<std::size_t, int, std::uint32_t, std::uint32_t>;
    auto words = words_up_to(max_degree);
    ColumnSystem<Key> sys;
    struct Unknown {
        Gen K, L;
        Word w;
    };
    std::vector<Unknown> unknowns;
    for (Gen K : {kX, kY})
        for (Gen L : {kX, kY})
            for (const auto& w : words) {
                if (structured) {
                    bool diagonal = K == L;
                    bool central = w.k % 2 == 0 && w.l % 2 == 0;
                    bool xy_type = w.k % 2 == 1 && w.l % 2 == 1;
                    if (diagonal ? !central : !xy_type) continue;
                }
                unknowns.push_back({K, L, w});
                auto e = word_element(ctx, w);
                std::map<Key, Scalar> image;
                for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
                    PlaneElement r = PlaneElement::zero(ctx);
                    for (const auto& t : constraints[ci])
                        if (t.K == K && t.L == L) r += t.left * e * t.right;
                    for (const auto& [m, s] : r.first().terms()) image[{ci, 0, m.x, m.y}] += s;
                    for (const auto& [m, s] : r.second().terms()) image[{ci, 1, m.x, m.y}] += s;
                }
                sys.add_column(image);
            }

    MetricSolution sol;
    sol.calculus = cal.label();
    sol.max_degree = max_degree;
    sol.unknowns = sys.unknowns();
    sol.equations = sys.equations();
    for (auto v : sys.nullspace()) {
        detail::normalize_leading(v);
        MetricSpec g = MetricSpec::zero(ctx);
        for (std::size_t j = 0; j < unknowns.size(); ++j)
            if (!v[j].is_zero()) g.at(unknowns[j].K, unknowns[j].L) += word_element(ctx, unknowns[j].w, v[j]);
        sol.basis.push_back(std::move(g));
    }
    return sol;
}

/// Elements anticommuting with X and Y: XY f with f central, i.e. (0, q)
/// with every monomial of q odd in y. Returns f when `u` has that form.
inline std::optional<PlaneElement> xy_times_central(const PlaneElement& u) {
    if (!u.first().is_zero()) return std::nullopt;
    Poly f;
    for (const auto& [m, c] : u.second().terms()) {
        if (m.y % 2 == 0) return std::nullopt;
        // XY = (0, -y), and (0, -y)(f, 0) = (0, -y f) for f even in y.
        f.add_term(Monomial{m.x, m.y - 1}, -c);
    }
    return embed(u.context(), f);
}

}  // namespace qplane
