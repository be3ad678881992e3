#pragma once

// Finite-dimensional unital algebras given by structure constants, with an
// involutive automorphism (hat) and an antilinear star. Used as base algebras
// for the discrete and quaternionic doubling presets.

#include "qplane/scalar.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qplane {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class FiniteAlgebra {
public:
    using Vector = std::vector<Scalar>;
    using Matrix = std::vector<std::vector<Scalar>>;  // [row][col], acts on column vectors

    /// `structure[i][j][k]` is the coefficient of e_k in e_i e_j.
    /// `hat` and `star_basis` give the images of basis vectors as columns;
    /// star is extended antilinearly.
    FiniteAlgebra(std::string name, std::vector<std::string> labels,
                  std::vector<std::vector<Vector>> structure, Vector unit, Matrix hat, Matrix star_basis,
                  Vector trace_weights)
        : name_(std::move(name)),
          labels_(std::move(labels)),
          structure_(std::move(structure)),
          unit_(std::move(unit)),
          hat_(std::move(hat)),
          star_(std::move(star_basis)),
          trace_(std::move(trace_weights)) {
        const std::size_t n = labels_.size();
        auto square = [n](const Matrix& m) {
            if (m.size() != n) return false;
            for (const auto& row : m)
                if (row.size() != n) return false;
            return true;
        };
        if (structure_.size() != n || unit_.size() != n || trace_.size() != n || !square(hat_) || !square(star_))
            throw DimensionMismatch("finite algebra tables do not match dimension " + std::to_string(n));
        for (const auto& row : structure_) {
            if (row.size() != n) throw DimensionMismatch("structure constants: bad row size");
            for (const auto& v : row)
                if (v.size() != n) throw DimensionMismatch("structure constants: bad vector size");
        }
    }

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vector& unit() const { return unit_; }

    Vector basis(std::size_t i) const {
        Vector v(dimension());
        v.at(i) = Scalar(1);
        return v;
    }

    Vector product(const Vector& a, const Vector& b) const {
        check(a);
        check(b);
        const std::size_t n = dimension();
        Vector r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j].is_zero()) continue;
                Scalar ab = a[i] * b[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!structure_[i][j][k].is_zero()) r[k] += ab * structure_[i][j][k];
            }
        }
        return r;
    }

    Vector hat(const Vector& a) const { return apply(hat_, a, false); }
    Vector star(const Vector& a) const { return apply(star_, a, true); }

    Scalar trace(const Vector& a) const {
        check(a);
        Scalar t;
        for (std::size_t i = 0; i < dimension(); ++i) t += trace_[i] * a[i];
        return t;
    }

    /// Exhaustive (e_i e_j) e_k == e_i (e_j e_k).
    bool is_associative() const {
        const std::size_t n = dimension();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (product(product(basis(i), basis(j)), basis(k)) != product(basis(i), product(basis(j), basis(k))))
                        return false;
        return true;
    }

    bool is_unital() const {
        for (std::size_t i = 0; i < dimension(); ++i)
            if (product(unit_, basis(i)) != basis(i) || product(basis(i), unit_) != basis(i)) return false;
        return true;
    }

    /// hat is multiplicative, unital and squares to the identity.
    bool hat_is_involutive_automorphism() const {
        const std::size_t n = dimension();
        if (hat(unit_) != unit_) return false;
        for (std::size_t i = 0; i < n; ++i) {
            if (hat(hat(basis(i))) != basis(i)) return false;
            for (std::size_t j = 0; j < n; ++j)
                if (hat(product(basis(i), basis(j))) != product(hat(basis(i)), hat(basis(j)))) return false;
        }
        return true;
    }

    bool is_commutative() const {
        for (std::size_t i = 0; i < dimension(); ++i)
            for (std::size_t j = 0; j < dimension(); ++j)
                if (product(basis(i), basis(j)) != product(basis(j), basis(i))) return false;
        return true;
    }

private:
    void check(const Vector& a) const {
        if (a.size() != dimension())
            throw DimensionMismatch(name_ + ": expected vector of length " + std::to_string(dimension()) + ", got " +
                                    std::to_string(a.size()));
    }

    Vector apply(const Matrix& m, const Vector& a, bool conjugate) const {
        check(a);
        const std::size_t n = dimension();
        Vector r(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (a[j].is_zero()) continue;
            Scalar c = conjugate ? a[j].conj() : a[j];
            for (std::size_t i = 0; i < n; ++i)
                if (!m[i][j].is_zero()) r[i] += m[i][j] * c;
        }
        return r;
    }

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<std::vector<Vector>> structure_;
    Vector unit_;
    Matrix hat_;
    Matrix star_;
    Vector trace_;
};

/// Element of a finite algebra; carries its algebra so that the generic
/// doubling code can multiply without extra context.
class FiniteElement {
public:
    FiniteElement(std::shared_ptr<const FiniteAlgebra> alg, FiniteAlgebra::Vector v)
        : alg_(std::move(alg)), v_(std::move(v)) {
        if (v_.size() != alg_->dimension()) throw DimensionMismatch("finite element has wrong length");
    }

    static FiniteElement zero(std::shared_ptr<const FiniteAlgebra> alg) {
        auto n = alg->dimension();
        return {std::move(alg), FiniteAlgebra::Vector(n)};
    }
    static FiniteElement one(std::shared_ptr<const FiniteAlgebra> alg) {
        auto u = alg->unit();
        return {std::move(alg), std::move(u)};
    }
    static FiniteElement basis(std::shared_ptr<const FiniteAlgebra> alg, std::size_t i) {
        auto b = alg->basis(i);
        return {std::move(alg), std::move(b)};
    }

    const FiniteAlgebra& algebra() const { return *alg_; }
    const std::shared_ptr<const FiniteAlgebra>& algebra_ptr() const { return alg_; }
    const FiniteAlgebra::Vector& coefficients() const { return v_; }

    bool is_zero() const {
        for (const auto& c : v_)
            if (!c.is_zero()) return false;
        return true;
    }

    FiniteElement operator-() const {
        auto r = v_;
        for (auto& c : r) c = -c;
        return {alg_, std::move(r)};
    }

    friend FiniteElement operator+(const FiniteElement& a, const FiniteElement& b) {
        same(a, b);
        auto r = a.v_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.v_[i];
        return {a.alg_, std::move(r)};
    }
    friend FiniteElement operator-(const FiniteElement& a, const FiniteElement& b) { return a + (-b); }
    friend FiniteElement operator*(const FiniteElement& a, const FiniteElement& b) {
        same(a, b);
        return {a.alg_, a.alg_->product(a.v_, b.v_)};
    }
    friend FiniteElement operator*(const Scalar& s, const FiniteElement& a) {
        auto r = a.v_;
        for (auto& c : r) c *= s;
        return {a.alg_, std::move(r)};
    }
    friend FiniteElement operator*(const FiniteElement& a, const Scalar& s) { return s * a; }

    friend bool operator==(const FiniteElement& a, const FiniteElement& b) {
        return a.alg_->name() == b.alg_->name() && a.v_ == b.v_;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string c = v_[i].needs_parens() ? "(" + v_[i].str() + ")" : v_[i].str();
            out += c + "*" + alg_->labels()[i];
        }
        return out.empty() ? "0" : out;
    }

private:
    static void same(const FiniteElement& a, const FiniteElement& b) {
        if (a.alg_ != b.alg_ && a.alg_->name() != b.alg_->name())
            throw DimensionMismatch("finite elements from different algebras: " + a.alg_->name() + " vs " +
                                    b.alg_->name());
    }

    std::shared_ptr<const FiniteAlgebra> alg_;
    FiniteAlgebra::Vector v_;
};

inline FiniteElement hat(const FiniteElement& a) { return {a.algebra_ptr(), a.algebra().hat(a.coefficients())}; }
inline FiniteElement star(const FiniteElement& a) { return {a.algebra_ptr(), a.algebra().star(a.coefficients())}; }
inline Scalar base_trace(const FiniteElement& a) { return a.algebra().trace(a.coefficients()); }

namespace finite_presets {

namespace detail {

inline FiniteAlgebra::Matrix signed_permutation(const std::vector<std::pair<std::size_t, int>>& images) {
    // images[j] = (i, s): basis j maps to s * e_i.
    const std::size_t n = images.size();
    FiniteAlgebra::Matrix m(n, FiniteAlgebra::Vector(n));
    for (std::size_t j = 0; j < n; ++j) m[images[j].first][j] = Scalar(images[j].second);
    return m;
}

/// Structure constants of a group algebra of an abelian group given by its
/// multiplication table on basis indices with signs.
inline std::vector<std::vector<FiniteAlgebra::Vector>> table(
    std::size_t n, const std::vector<std::vector<std::pair<std::size_t, int>>>& mult) {
    std::vector<std::vector<FiniteAlgebra::Vector>> s(n, std::vector<FiniteAlgebra::Vector>(n, FiniteAlgebra::Vector(n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i][j][mult[i][j].first] = Scalar(mult[i][j].second);
    return s;
}

}  // namespace detail

/// Functions on Z2: basis {1, a}, a^2 = 1, a self-adjoint, hat(a) = -a.
inline std::shared_ptr<const FiniteAlgebra> z2() {
    auto s = detail::table(2, {{{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}});
    return std::make_shared<const FiniteAlgebra>(
        "Z2", std::vector<std::string>{"1", "a"}, std::move(s), FiniteAlgebra::Vector{Scalar(1), Scalar(0)},
        detail::signed_permutation({{0, 1}, {1, -1}}), detail::signed_permutation({{0, 1}, {1, 1}}),
        FiniteAlgebra::Vector{Scalar(1), Scalar(0)});
}

/// Functions on Z2 x Z2: basis {1, a, b, ab}, commuting self-adjoint
/// involutions; hat(a) = a, hat(b) = -b.
inline std::shared_ptr<const FiniteAlgebra> z2z2() {
    // index: 0 -> 1, 1 -> a, 2 -> b, 3 -> ab; the group is Z2 x Z2 via xor.
    std::vector<std::vector<std::pair<std::size_t, int>>> mult(4, std::vector<std::pair<std::size_t, int>>(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) mult[i][j] = {i ^ j, 1};
    return std::make_shared<const FiniteAlgebra>(
        "Z2xZ2", std::vector<std::string>{"1", "a", "b", "ab"}, detail::table(4, mult),
        FiniteAlgebra::Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(0)},
        detail::signed_permutation({{0, 1}, {1, 1}, {2, -1}, {3, -1}}),
        detail::signed_permutation({{0, 1}, {1, 1}, {2, 1}, {3, 1}}),
        FiniteAlgebra::Vector{Scalar(1), Scalar(0), Scalar(0), Scalar(0)});
}

/// The complex numbers as a two-dimensional real algebra with basis {1, I},
/// I^2 = -1. hat is complex conjugation I -> -I, and so is star on the basis.
/// The trace is the real part.
inline std::shared_ptr<const FiniteAlgebra> complex_numbers() {
    auto s = detail::table(2, {{{0, 1}, {1, 1}}, {{1, 1}, {0, -1}}});
    return std::make_shared<const FiniteAlgebra>(
        "C", std::vector<std::string>{"1", "I"}, std::move(s), FiniteAlgebra::Vector{Scalar(1), Scalar(0)},
        detail::signed_permutation({{0, 1}, {1, -1}}), detail::signed_permutation({{0, 1}, {1, -1}}),
        FiniteAlgebra::Vector{Scalar(1), Scalar(0)});
}

}  // namespace finite_presets

}  // namespace qplane
