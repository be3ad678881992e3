#pragma once

// Exact Gaussian rationals: the coefficient field of every algebra in the
// library. Nothing in the engine touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qplane {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// A complex number with rational real and imaginary parts.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return {Rational(0), Rational(1)}; }
    static Scalar fraction(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::domain_error("zero denominator");
        return Scalar(Rational(num, den));
    }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }

    Scalar conj() const { return {re_, -im_}; }
    /// |z|^2, always a nonnegative rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Scalar operator-() const { return {-re_, -im_}; }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        Rational im = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        im_ = std::move(im);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        Rational n = o.norm();
        if (n == 0) throw std::domain_error("division by zero scalar");
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Total order used only for canonical container layout.
    friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.im_ != b.im_) return a.im_ < b.im_ ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// Renders as `3`, `-1/2`, `i`, `2/3*i`, `1+2*i`. Complex values with
    /// both parts nonzero are not parenthesized here; callers embedding the
    /// string in a product add parentheses via `needs_parens()`.
    std::string str() const {
        if (im_ == 0) return rational_to_string(re_);
        std::string imag;
        if (im_ == 1)
            imag = "i";
        else if (im_ == -1)
            imag = "-i";
        else
            imag = rational_to_string(im_) + "*i";
        if (re_ == 0) return imag;
        std::string out = rational_to_string(re_);
        if (imag.front() == '-')
            out += imag;
        else
            out += "+" + imag;
        return out;
    }

    bool needs_parens() const { return re_ != 0 && im_ != 0; }

    std::string latex() const {
        auto frac = [](const Rational& r) {
            if (denominator(r) == 1) return numerator(r).str();
            std::string sign = r < 0 ? "-" : "";
            return sign + "\\frac{" + BigInt(abs(numerator(r))).str() + "}{" + denominator(r).str() + "}";
        };
        if (im_ == 0) return frac(re_);
        std::string imag;
        if (im_ == 1)
            imag = "i";
        else if (im_ == -1)
            imag = "-i";
        else
            imag = frac(im_) + "i";
        if (re_ == 0) return imag;
        return frac(re_) + (imag.front() == '-' ? "" : "+") + imag;
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace qplane
