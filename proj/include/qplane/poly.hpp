#pragma once

// Commutative polynomials in x, y over Gaussian rationals: the base algebra
// of the anticommutative plane.

#include "qplane/scalar.hpp"

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace qplane {

/// Exponent pair of x^m y^n.
struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    std::uint32_t degree() const { return x + y; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

enum class Derivation { x, y };

class Poly {
public:
    using Terms = std::map<Monomial, Scalar>;

    Poly() = default;
    Poly(Scalar c) {  // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
    }
    Poly(std::int64_t c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly monomial(std::uint32_t mx, std::uint32_t my, Scalar c = Scalar(1)) {
        Poly p;
        if (!c.is_zero()) p.terms_.emplace(Monomial{mx, my}, std::move(c));
        return p;
    }
    static Poly x() { return monomial(1, 0); }
    static Poly y() { return monomial(0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(Monomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    /// Adds c * x^m.x y^m.y, keeping the no-zero-coefficient invariant.
    void add_term(Monomial m, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
        return d;
    }

    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{}); }

    /// True iff every monomial has even y-exponent, i.e. p is fixed by y -> -y.
    bool is_even_in_y() const {
        for (const auto& [m, c] : terms_)
            if (m.y % 2 != 0) return false;
        return true;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    Poly& operator*=(const Scalar& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Scalar& s, Poly p) { return p *= s; }
    friend Poly operator*(Poly p, const Scalar& s) { return p *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, ca * cb);
        return r;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Human-readable, reparseable form, e.g. `x^2*y - 1/2*i*x + 3`.
    std::string str() const;
    std::string latex() const;

private:
    Terms terms_;
};

inline Poly pow(const Poly& p, unsigned n) {
    Poly r(1);
    for (unsigned k = 0; k < n; ++k) r = r * p;
    return r;
}

/// Mirror symmetry y -> -y.
inline Poly hat(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, m.y % 2 == 0 ? c : -c);
    return r;
}

/// Complex conjugation of coefficients; x and y are self-adjoint.
inline Poly star(const Poly& p) {
    Poly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.conj());
    return r;
}

inline Poly derivative(const Poly& p, Derivation d) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t e = d == Derivation::x ? m.x : m.y;
        if (e == 0) continue;
        Monomial dm = d == Derivation::x ? Monomial{m.x - 1, m.y} : Monomial{m.x, m.y - 1};
        r.add_term(dm, c * Scalar(static_cast<std::int64_t>(e)));
    }
    return r;
}

/// Integral over the square [-1,1]^2. Invariant under y -> -y.
inline Scalar base_trace(const Poly& p) {
    Scalar total;
    for (const auto& [m, c] : p.terms()) {
        if (m.x % 2 != 0 || m.y % 2 != 0) continue;
        total += c * Scalar(Rational(4, static_cast<std::int64_t>(m.x + 1) * (m.y + 1)));
    }
    return total;
}

namespace detail {

inline std::string coefficient_prefix(const Scalar& c, bool bare_monomial) {
    // For a term c*m, returns the textual coefficient (without sign) and
    // handles the unit coefficient.
    if (bare_monomial) {
        if (c.is_one()) return "";
        return c.needs_parens() ? "(" + c.str() + ")*" : c.str() + "*";
    }
    return c.needs_parens() ? "(" + c.str() + ")" : c.str();
}

inline bool scalar_is_negative_display(const Scalar& c) {
    // A scalar displays with a leading minus when its first printed part is
    // negative and it will not be wrapped in parentheses.
    if (c.needs_parens()) return false;
    if (c.im() == 0) return c.re() < 0;
    return c.im() < 0;
}

inline std::string monomial_str(Monomial m, const char* xs, const char* ys, const char* mul) {
    std::string out;
    auto factor = [&](const char* v, std::uint32_t e) {
        if (e == 0) return;
        if (!out.empty()) out += mul;
        out += v;
        if (e > 1) out += "^" + std::to_string(e);
    };
    factor(xs, m.x);
    factor(ys, m.y);
    return out;
}

/// Shared sum renderer for maps of monomial -> scalar.
template <class Map, class MonoFn>
std::string render_sum(const Map& terms, MonoFn&& mono) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest degree first reads closer to hand-written algebra.
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string ms = mono(m);
        bool neg = scalar_is_negative_display(c);
        Scalar mag = neg ? -c : c;
        std::string body;
        if (ms.empty())
            body = mag.needs_parens() ? "(" + mag.str() + ")" : mag.str();
        else
            body = coefficient_prefix(mag, true) + ms;
        if (first)
            out = neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

}  // namespace detail

inline std::string Poly::str() const {
    return detail::render_sum(terms_, [](Monomial m) { return detail::monomial_str(m, "x", "y", "*"); });
}

inline std::string Poly::latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string ms = detail::monomial_str(m, "x", "y", " ");
        bool neg = detail::scalar_is_negative_display(c);
        Scalar mag = neg ? -c : c;
        std::string coeff = mag.needs_parens() ? "(" + mag.latex() + ")" : mag.latex();
        std::string body = ms.empty() ? coeff : (mag.is_one() ? ms : coeff + " " + ms);
        if (first)
            out = neg ? "-" + body : body;
        else
            out += neg ? " - " + body : " + " + body;
        first = false;
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace qplane
