#pragma once

// The twisted double of an algebra A with involutive automorphism hat and a
// central hat-invariant element xi: pairs (a, b) with
//
//   (a, b)(A, B) = (aA + xi b hat(B), b hat(A) + aB),
//   (a, b)*      = (a*, eps hat(b)*),  eps = +1 or -1.
//
// Base algebras model `BaseAlgebra`; the plane (polynomials in x, y with
// y -> -y and xi = x) and the finite presets are provided.

#include "qplane/finite_algebra.hpp"
#include "qplane/poly.hpp"
#include "qplane/scalar.hpp"

#include <concepts>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qplane {

template <class B>
concept BaseAlgebra = requires(const B& a, const B& b, const Scalar& s) {
    { a + b } -> std::convertible_to<B>;
    { a - b } -> std::convertible_to<B>;
    { a * b } -> std::convertible_to<B>;
    { s * a } -> std::convertible_to<B>;
    { -a } -> std::convertible_to<B>;
    { hat(a) } -> std::convertible_to<B>;
    { star(a) } -> std::convertible_to<B>;
    { base_trace(a) } -> std::convertible_to<Scalar>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a == b } -> std::convertible_to<bool>;
};

struct ContextMismatch : std::logic_error {
    using std::logic_error::logic_error;
};

struct InvalidContext : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <BaseAlgebra Base>
struct DoublingContext {
    std::string name;
    Base zero;
    Base one;
    Base xi;
    int star_sign = 1;
    /// Base elements that generate A as an algebra; used for brute-force
    /// centrality checks.
    std::vector<Base> base_generators;

    bool same_as(const DoublingContext& o) const {
        return this == &o || (name == o.name && star_sign == o.star_sign && xi == o.xi);
    }
};

template <BaseAlgebra Base>
using ContextPtr = std::shared_ptr<const DoublingContext<Base>>;

/// Validates the doubling preconditions: xi central, hat(xi) = xi, and
/// xi* = xi (needed for either star structure).
template <BaseAlgebra Base>
ContextPtr<Base> make_context(std::string name, Base zero, Base one, Base xi, int star_sign,
                              std::vector<Base> base_generators) {
    if (star_sign != 1 && star_sign != -1) throw InvalidContext("star sign must be +1 or -1");
    if (!(hat(xi) == xi)) throw InvalidContext(name + ": xi is not hat-invariant");
    if (!(star(xi) == xi)) throw InvalidContext(name + ": xi is not self-adjoint");
    for (const auto& g : base_generators)
        if (!(g * xi == xi * g)) throw InvalidContext(name + ": xi is not central");
    return std::make_shared<const DoublingContext<Base>>(DoublingContext<Base>{
        std::move(name), std::move(zero), std::move(one), std::move(xi), star_sign, std::move(base_generators)});
}

template <BaseAlgebra Base>
class Doubled {
public:
    Doubled(ContextPtr<Base> ctx, Base first, Base second)
        : ctx_(std::move(ctx)), first_(std::move(first)), second_(std::move(second)) {}

    static Doubled zero(const ContextPtr<Base>& ctx) { return {ctx, ctx->zero, ctx->zero}; }
    static Doubled one(const ContextPtr<Base>& ctx) { return {ctx, ctx->one, ctx->zero}; }
    /// The new generator (0, 1).
    static Doubled odd_unit(const ContextPtr<Base>& ctx) { return {ctx, ctx->zero, ctx->one}; }
    static Doubled scalar(const ContextPtr<Base>& ctx, const Scalar& s) { return {ctx, s * ctx->one, ctx->zero}; }

    const Base& first() const { return first_; }
    const Base& second() const { return second_; }
    const ContextPtr<Base>& context() const { return ctx_; }

    bool is_zero() const { return first_.is_zero() && second_.is_zero(); }

    Doubled operator-() const { return {ctx_, -first_, -second_}; }

    friend Doubled operator+(const Doubled& u, const Doubled& v) {
        check(u, v);
        return {u.ctx_, u.first_ + v.first_, u.second_ + v.second_};
    }
    friend Doubled operator-(const Doubled& u, const Doubled& v) {
        check(u, v);
        return {u.ctx_, u.first_ - v.first_, u.second_ - v.second_};
    }
    friend Doubled operator*(const Scalar& s, const Doubled& u) { return {u.ctx_, s * u.first_, s * u.second_}; }
    friend Doubled operator*(const Doubled& u, const Scalar& s) { return s * u; }

    /// The twisted product.
    friend Doubled operator*(const Doubled& u, const Doubled& v) {
        check(u, v);
        const Base& xi = u.ctx_->xi;
        return {u.ctx_, u.first_ * v.first_ + xi * u.second_ * hat(v.second_),
                u.second_ * hat(v.first_) + u.first_ * v.second_};
    }

    Doubled& operator+=(const Doubled& v) { return *this = *this + v; }
    Doubled& operator-=(const Doubled& v) { return *this = *this - v; }
    Doubled& operator*=(const Doubled& v) { return *this = *this * v; }

    friend bool operator==(const Doubled& u, const Doubled& v) {
        check(u, v);
        return u.first_ == v.first_ && u.second_ == v.second_;
    }

private:
    static void check(const Doubled& u, const Doubled& v) {
        if (u.ctx_ != v.ctx_ && !u.ctx_->same_as(*v.ctx_))
            throw ContextMismatch("doubled elements from different contexts: " + u.ctx_->name + " vs " + v.ctx_->name);
    }

    ContextPtr<Base> ctx_;
    Base first_;
    Base second_;
};

template <BaseAlgebra Base>
Doubled<Base> double_product(const Doubled<Base>& u, const Doubled<Base>& v) {
    return u * v;
}

template <BaseAlgebra Base>
Doubled<Base> double_star(const Doubled<Base>& u) {
    const int eps = u.context()->star_sign;
    Base b = star(hat(u.second()));
    return {u.context(), star(u.first()), eps > 0 ? b : -b};
}

template <BaseAlgebra Base>
Doubled<Base> embed(const ContextPtr<Base>& ctx, const Base& a) {
    return {ctx, a, ctx->zero};
}

template <BaseAlgebra Base>
Doubled<Base> power(const Doubled<Base>& u, unsigned n) {
    auto r = Doubled<Base>::one(u.context());
    for (unsigned k = 0; k < n; ++k) r = r * u;
    return r;
}

/// Generators of the double: embedded base generators and (0, 1).
template <BaseAlgebra Base>
std::vector<Doubled<Base>> generators(const ContextPtr<Base>& ctx) {
    std::vector<Doubled<Base>> gens;
    for (const auto& g : ctx->base_generators) gens.push_back(embed(ctx, g));
    gens.push_back(Doubled<Base>::odd_unit(ctx));
    return gens;
}

/// Centrality by commutation with every generator.
template <BaseAlgebra Base>
bool is_central_brute_force(const Doubled<Base>& u) {
    for (const auto& g : generators(u.context()))
        if (!(u * g == g * u)) return false;
    return true;
}

/// The two displayed unitarity conditions, i.e. the components of u u* = 1:
///   u u* + eps xi v v* = 1,   v hat(u)* + eps u hat(v)* = 0.
template <BaseAlgebra Base>
bool is_unitary(const Doubled<Base>& w) {
    const auto& ctx = *w.context();
    const Scalar eps(ctx.star_sign);
    const Base& u = w.first();
    const Base& v = w.second();
    Base norm = u * star(u) + eps * (ctx.xi * v * star(v));
    Base cross = v * star(hat(u)) + eps * (u * star(hat(v)));
    return norm == ctx.one && cross.is_zero();
}

/// Base trace of the first component.
template <BaseAlgebra Base>
Scalar trace(const Doubled<Base>& u) {
    return base_trace(u.first());
}

// ---------------------------------------------------------------------------
// The anticommutative plane.

using PlaneElement = Doubled<Poly>;
using PlaneContext = ContextPtr<Poly>;

/// Polynomials on the plane, hat = mirror y -> -y, xi = x.
inline PlaneContext plane_context(int star_sign = 1) {
    static const PlaneContext plus =
        make_context<Poly>("plane", Poly(), Poly(1), Poly::x(), 1, {Poly::x(), Poly::y()});
    static const PlaneContext minus =
        make_context<Poly>("plane", Poly(), Poly(1), Poly::x(), -1, {Poly::x(), Poly::y()});
    if (star_sign == 1) return plus;
    if (star_sign == -1) return minus;
    throw InvalidContext("star sign must be +1 or -1");
}

inline PlaneElement plane_X(const PlaneContext& ctx) { return PlaneElement::odd_unit(ctx); }
inline PlaneElement plane_Y(const PlaneContext& ctx) { return embed(ctx, Poly::y()); }
inline PlaneElement plane_x(const PlaneContext& ctx) { return embed(ctx, Poly::x()); }

/// Closed-form centre of the plane: second component zero and first even in y.
inline bool is_central(const PlaneElement& u) { return u.second().is_zero() && u.first().is_even_in_y(); }

/// Same-context copy of `u` with `ctx` (used to switch the star sign).
inline PlaneElement rebind(const PlaneElement& u, const PlaneContext& ctx) { return {ctx, u.first(), u.second()}; }

/// Normal-ordered word X^k Y^l.
struct Word {
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    std::uint32_t degree() const { return k + l; }
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// Linear combination of normal-ordered words.
using WordPoly = std::map<Word, Scalar>;

/// (p, q) -> sum p_mn X^{2m} Y^n + sum q_mn (-1)^n X^{2m+1} Y^n, using
/// (0, x^m y^n) = x^m y^n X = (-1)^n X^{2m+1} Y^n.
inline WordPoly to_words(const PlaneElement& u) {
    WordPoly w;
    for (const auto& [m, c] : u.first().terms()) w[Word{2 * m.x, m.y}] += c;
    for (const auto& [m, c] : u.second().terms()) w[Word{2 * m.x + 1, m.y}] += m.y % 2 == 0 ? c : -c;
    std::erase_if(w, [](const auto& kv) { return kv.second.is_zero(); });
    return w;
}

inline PlaneElement word_element(const PlaneContext& ctx, Word w, const Scalar& c = Scalar(1)) {
    if (w.k % 2 == 0) return {ctx, Poly::monomial(w.k / 2, w.l, c), Poly()};
    return {ctx, Poly(), Poly::monomial(w.k / 2, w.l, w.l % 2 == 0 ? c : -c)};
}

inline PlaneElement from_words(const PlaneContext& ctx, const WordPoly& w) {
    Poly a, b;
    for (const auto& [word, c] : w) {
        auto e = word_element(ctx, word, c);
        a += e.first();
        b += e.second();
    }
    return {ctx, std::move(a), std::move(b)};
}

/// Total degree in the generators X, Y; -1 for zero.
inline int word_degree(const PlaneElement& u) {
    int d = -1;
    for (const auto& [w, c] : to_words(u)) d = std::max(d, static_cast<int>(w.degree()));
    return d;
}

inline std::string words_str(const WordPoly& w) {
    return detail::render_sum(w, [](Word m) { return detail::monomial_str(Monomial{m.k, m.l}, "X", "Y", "*"); });
}

inline std::string pair_str(const PlaneElement& u) {
    return "pair(" + u.first().str() + "," + u.second().str() + ")";
}

inline std::string pair_latex(const PlaneElement& u) {
    return "\\left(" + u.first().latex() + ",\\; " + u.second().latex() + "\\right)";
}

// ---------------------------------------------------------------------------
// Finite presets.

using FiniteDoubled = Doubled<FiniteElement>;
using FiniteContext = ContextPtr<FiniteElement>;

namespace detail {

inline std::vector<FiniteElement> non_unit_basis(const std::shared_ptr<const FiniteAlgebra>& alg) {
    std::vector<FiniteElement> gens;
    for (std::size_t i = 1; i < alg->dimension(); ++i) gens.push_back(FiniteElement::basis(alg, i));
    return gens;
}

}  // namespace detail

/// Base C with hat = conjugation and xi = -1; with star sign -1 the double
/// is the quaternion algebra with 1=(1,0), i=(I,0), j=(0,1), k=(0,I).
inline FiniteContext quaternion_context(int star_sign = -1) {
    auto alg = finite_presets::complex_numbers();
    return make_context<FiniteElement>("quaternion", FiniteElement::zero(alg), FiniteElement::one(alg),
                                       -FiniteElement::one(alg), star_sign, detail::non_unit_basis(alg));
}

/// Functions on Z2 with hat(a) = -a and xi = 1.
inline FiniteContext z2_context(int star_sign = 1) {
    auto alg = finite_presets::z2();
    return make_context<FiniteElement>("z2", FiniteElement::zero(alg), FiniteElement::one(alg),
                                       FiniteElement::one(alg), star_sign, detail::non_unit_basis(alg));
}

/// Functions on Z2 x Z2 with hat(a) = a, hat(b) = -b and xi = a.
inline FiniteContext z2z2_context(int star_sign = 1) {
    auto alg = finite_presets::z2z2();
    return make_context<FiniteElement>("z2z2", FiniteElement::zero(alg), FiniteElement::one(alg),
                                       FiniteElement::basis(alg, 1), star_sign, detail::non_unit_basis(alg));
}

struct UnknownPreset : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using AnyContext = std::variant<PlaneContext, FiniteContext>;

/// Looks up a preset by name: plane, quaternion, z2, z2z2. The quaternion
/// preset defaults to star sign -1, the others to +1.
inline AnyContext make_preset(const std::string& name, int star_sign = 0) {
    auto sign = [&](int dflt) { return star_sign == 0 ? dflt : star_sign; };
    if (name == "plane") return plane_context(sign(1));
    if (name == "quaternion") return quaternion_context(sign(-1));
    if (name == "z2") return z2_context(sign(1));
    if (name == "z2z2") return z2z2_context(sign(1));
    throw UnknownPreset("unknown preset: " + name);
}

inline std::string pair_str(const FiniteDoubled& u) {
    return "pair(" + u.first().str() + "," + u.second().str() + ")";
}

}  // namespace qplane
