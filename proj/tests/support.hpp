#pragma once

// Shared generators and independent oracles for the test suite. The oracles
// work on raw (Poly, Poly) pairs with their own product, star and integral so
// they do not share code paths with the engine's calculus and metric layers.

#include "qplane/qplane.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>

namespace qtest {

using namespace qplane;

/// Deterministic generator built on the raw output of mt19937.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : eng_(seed) {}

    std::uint32_t raw() { return static_cast<std::uint32_t>(eng_()); }
    int range(int lo, int hi) { return lo + static_cast<int>(raw() % static_cast<std::uint32_t>(hi - lo + 1)); }
    bool coin() { return (raw() & 1u) != 0; }

    /// Small Gaussian rational, zero about a quarter of the time.
    Scalar scalar() {
        if (raw() % 4 == 0) return Scalar(0);
        auto part = [&] { return Rational(range(-4, 4), range(1, 3)); };
        return Scalar(part(), coin() ? part() : Rational(0));
    }

    Scalar nonzero_scalar() {
        for (;;) {
            Scalar s = scalar();
            if (!s.is_zero()) return s;
        }
    }

    /// Polynomial in x, y of total degree <= deg with a few terms.
    Poly poly(int deg, int max_terms = 4) {
        Poly p;
        const int n = range(0, max_terms);
        for (int t = 0; t < n; ++t) {
            int mx = range(0, deg);
            int my = range(0, deg - mx);
            p.add_term(Monomial{static_cast<std::uint32_t>(mx), static_cast<std::uint32_t>(my)}, scalar());
        }
        return p;
    }

    /// Plane element whose word degree is at most deg.
    PlaneElement element(const PlaneContext& ctx, int deg, int max_terms = 4) {
        WordPoly w;
        const int n = range(0, max_terms);
        for (int t = 0; t < n; ++t) {
            int k = range(0, deg);
            int l = range(0, deg - k);
            w[Word{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l)}] += scalar();
        }
        std::erase_if(w, [](const auto& kv) { return kv.second.is_zero(); });
        return from_words(ctx, w);
    }

    OneForm one_form(const PlaneContext& ctx, int deg) { return {element(ctx, deg), element(ctx, deg)}; }

private:
    std::mt19937 eng_;
};

// ---------------------------------------------------------------------------
// Oracles on raw pairs.

struct Pair {
    Poly a, b;
    friend bool operator==(const Pair&, const Pair&) = default;
};

/// (a,b)(A,B) = (aA + x b hat(B), b hat(A) + aB) on the plane.
inline Pair o_mul(const Pair& u, const Pair& v) {
    return {u.a * v.a + Poly::x() * u.b * hat(v.b), u.b * hat(v.a) + u.a * v.b};
}

inline Pair o_star(const Pair& u, int eps) {
    Poly b = star(hat(u.b));
    return {star(u.a), eps > 0 ? b : -b};
}

inline Pair o_add(const Pair& u, const Pair& v) { return {u.a + v.a, u.b + v.b}; }

inline Pair o_of(const PlaneElement& u) { return {u.first(), u.second()}; }

/// Exact integral over [-1,1]^2, computed monomial by monomial.
inline Scalar o_integrate(const Poly& p) {
    Scalar total(0);
    for (const auto& [m, c] : p.terms()) {
        // int_{-1}^{1} t^n dt = 2/(n+1) for even n, 0 otherwise.
        auto one_dim = [](std::uint32_t n) { return n % 2 ? Rational(0) : Rational(2, n + 1); };
        total += c * Scalar(one_dim(m.x) * one_dim(m.y));
    }
    return total;
}

/// Closed form of d(psi, phi) under calculus A:
///   dX (hat phi + 2x d_x hat phi, 2 d_x hat psi) + dY (d_y psi, d_y phi).
struct FormPair {
    Pair X, Y;
};

inline FormPair o_differential(const Pair& u) {
    Poly hp = hat(u.b), hs = hat(u.a);
    return {{hp + Scalar(2) * Poly::x() * derivative(hp, Derivation::x), Scalar(2) * derivative(hs, Derivation::x)},
            {derivative(u.a, Derivation::y), derivative(u.b, Derivation::y)}};
}

/// Kinetic term with the standard metric: c_X* c_X + c_Y* c_Y for
/// dPhi = dX.c_X + dY.c_Y.
inline Pair o_kinetic(const Pair& phi, int eps) {
    auto d = o_differential(phi);
    return o_add(o_mul(o_star(d.X, eps), d.X), o_mul(o_star(d.Y, eps), d.Y));
}

inline Scalar o_action(const Pair& phi, int eps) { return o_integrate(o_kinetic(phi, eps).a); }

inline Poly abs2(const Poly& p) { return star(p) * p; }

inline PlaneElement to_element(const PlaneContext& ctx, const Pair& p) { return {ctx, p.a, p.b}; }

}  // namespace qtest
