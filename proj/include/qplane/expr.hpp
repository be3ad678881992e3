#pragma once

// Expression language for plane elements.
//
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | atom ('^' natural)?
//   atom   := rational | 'i' | 'X' | 'Y' | 'x' | 'y'
//           | 'pair(' expr ',' expr ')' | '(' expr ')'
//
// A rational literal is an integer optionally followed by '/' integer.
// Lowercase x and y are the embedded commutative generators x = X^2, y = Y.
// Products keep their written order. One-form expressions additionally
// accept the atoms dX and dY.

#include "qplane/calculus.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qplane {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Expr {
    enum class Kind { number, imag, gen, differential, pair, sum, difference, product, power, negate, group };

    Kind kind = Kind::number;
    Rational value{0};   // number
    char symbol = 0;     // gen: one of X Y x y; differential: X or Y
    std::uint32_t exponent = 0;
    std::vector<Expr> kids;

    friend bool operator==(const Expr&, const Expr&) = default;
};

/// Largest accepted exponent; larger ones are rejected as overflow.
inline constexpr std::uint32_t kMaxExponent = 4096;

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Expr parse() {
        Expr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = Expr{Expr::Kind::sum, Rational(0), 0, 0, {std::move(lhs), term()}};
            else if (accept('-'))
                lhs = Expr{Expr::Kind::difference, Rational(0), 0, 0, {std::move(lhs), term()}};
            else
                return lhs;
        }
    }

    Expr term() {
        Expr lhs = factor();
        while (accept('*')) lhs = Expr{Expr::Kind::product, Rational(0), 0, 0, {std::move(lhs), factor()}};
        return lhs;
    }

    Expr factor() {
        if (accept('-')) return Expr{Expr::Kind::negate, Rational(0), 0, 0, {factor()}};
        Expr base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            BigInt n = digits();
            if (n > kMaxExponent) throw ParseError("exponent overflow", start);
            base = Expr{Expr::Kind::power, Rational(0), 0, static_cast<std::uint32_t>(n), {std::move(base)}};
        }
        return base;
    }

    BigInt digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a natural number");
        return BigInt(std::string(s_.substr(start, pos_ - start)));
    }

    Expr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = digits();
            BigInt den = 1;
            // '/' only appears inside rational literals.
            if (accept('/')) {
                std::size_t at = pos_;
                den = digits();
                if (den == 0) throw ParseError("zero denominator", at);
            }
            return Expr{Expr::Kind::number, Rational(num, den), 0, 0, {}};
        }
        if (s_.substr(pos_, 5) == "pair(") {
            pos_ += 5;
            Expr a = expr();
            expect(',');
            Expr b = expr();
            expect(')');
            return Expr{Expr::Kind::pair, Rational(0), 0, 0, {std::move(a), std::move(b)}};
        }
        if (c == 'd' && pos_ + 1 < s_.size() && (s_[pos_ + 1] == 'X' || s_[pos_ + 1] == 'Y')) {
            char g = s_[pos_ + 1];
            pos_ += 2;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                pos_ -= 2;
                fail("unknown identifier");
            }
            return Expr{Expr::Kind::differential, Rational(0), g, 0, {}};
        }
        if (c == 'i' || c == 'X' || c == 'Y' || c == 'x' || c == 'y') {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                --pos_;
                fail("unknown identifier");
            }
            if (c == 'i') return Expr{Expr::Kind::imag, Rational(0), 0, 0, {}};
            return Expr{Expr::Kind::gen, Rational(0), c, 0, {}};
        }
        if (accept('(')) {
            Expr inner = expr();
            expect(')');
            return Expr{Expr::Kind::group, Rational(0), 0, 0, {std::move(inner)}};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace detail

inline Expr parse_expression(std::string_view text) { return detail::Parser(text).parse(); }

/// Renders an AST back to text accepted by `parse_expression`; parsing the
/// rendering yields an equal AST.
inline std::string render(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return rational_to_string(e.value);
        case K::imag: return "i";
        case K::gen: return std::string(1, e.symbol);
        case K::differential: return std::string("d") + e.symbol;
        case K::pair: return "pair(" + render(e.kids[0]) + "," + render(e.kids[1]) + ")";
        case K::sum: return render(e.kids[0]) + " + " + render(e.kids[1]);
        case K::difference: return render(e.kids[0]) + " - " + render(e.kids[1]);
        case K::product: return render(e.kids[0]) + "*" + render(e.kids[1]);
        case K::power: return render(e.kids[0]) + "^" + std::to_string(e.exponent);
        case K::negate: return "-" + render(e.kids[0]);
        case K::group: return "(" + render(e.kids[0]) + ")";
    }
    return "";
}

inline PlaneElement evaluate(const Expr& e, const PlaneContext& ctx) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return PlaneElement::scalar(ctx, Scalar(e.value));
        case K::imag: return PlaneElement::scalar(ctx, Scalar::i());
        case K::gen:
            switch (e.symbol) {
                case 'X': return plane_X(ctx);
                case 'x': return plane_x(ctx);
                default: return plane_Y(ctx);
            }
        case K::differential: throw EvalError("dX, dY are only allowed in one-form expressions");
        case K::pair: {
            auto a = evaluate(e.kids[0], ctx);
            auto b = evaluate(e.kids[1], ctx);
            if (!a.second().is_zero() || !b.second().is_zero())
                throw EvalError("pair components must be commutative polynomials in x, y");
            return {ctx, a.first(), b.first()};
        }
        case K::sum: return evaluate(e.kids[0], ctx) + evaluate(e.kids[1], ctx);
        case K::difference: return evaluate(e.kids[0], ctx) - evaluate(e.kids[1], ctx);
        case K::product: return evaluate(e.kids[0], ctx) * evaluate(e.kids[1], ctx);
        case K::power: return power(evaluate(e.kids[0], ctx), e.exponent);
        case K::negate: return -evaluate(e.kids[0], ctx);
        case K::group: return evaluate(e.kids[0], ctx);
    }
    throw EvalError("malformed expression");
}

inline PlaneElement parse_element(std::string_view text, const PlaneContext& ctx = plane_context(1)) {
    return evaluate(parse_expression(text), ctx);
}

/// A commutative polynomial in x, y, e.g. a connection component.
inline Poly parse_base(std::string_view text, const PlaneContext& ctx = plane_context(1)) {
    auto u = parse_element(text, ctx);
    if (!u.second().is_zero()) throw EvalError("expected a commutative polynomial in x, y: " + std::string(text));
    return u.first();
}

namespace detail {

/// Value of a subexpression in a one-form expression: an algebra element or
/// a one-form.
struct FormValue {
    std::optional<PlaneElement> element;
    std::optional<OneForm> form;
};

inline FormValue eval_form(const Expr& e, const PlaneContext& ctx, const Calculus& cal) {
    using K = Expr::Kind;
    auto as_form = [&](const FormValue& v) { return v.form ? *v.form : OneForm::zero(ctx); };
    switch (e.kind) {
        case K::differential:
            return {std::nullopt, OneForm::basis(e.symbol == 'X' ? kX : kY, PlaneElement::one(ctx))};
        case K::sum:
        case K::difference: {
            auto a = eval_form(e.kids[0], ctx, cal);
            auto b = eval_form(e.kids[1], ctx, cal);
            const bool sum = e.kind == K::sum;
            if (a.element && b.element) return {sum ? *a.element + *b.element : *a.element - *b.element, std::nullopt};
            // A literal 0 may stand next to a one-form.
            for (const auto* v : {&a, &b})
                if (v->element && !v->element->is_zero()) throw EvalError("cannot add an algebra element to a one-form");
            return {std::nullopt, sum ? as_form(a) + as_form(b) : as_form(a) - as_form(b)};
        }
        case K::product: {
            auto a = eval_form(e.kids[0], ctx, cal);
            auto b = eval_form(e.kids[1], ctx, cal);
            if (a.element && b.element) return {*a.element * *b.element, std::nullopt};
            if (a.form && b.element) return {std::nullopt, *a.form * *b.element};
            if (a.element && b.form) return {std::nullopt, left_multiply_form(*a.element, *b.form, cal)};
            throw EvalError("product of two one-forms is a two-form; use the wedge command");
        }
        case K::negate: {
            auto a = eval_form(e.kids[0], ctx, cal);
            if (a.element) return {-*a.element, std::nullopt};
            return {std::nullopt, -*a.form};
        }
        case K::group: return eval_form(e.kids[0], ctx, cal);
        case K::power: {
            auto a = eval_form(e.kids[0], ctx, cal);
            if (a.form) throw EvalError("power of a one-form");
            return {power(*a.element, e.exponent), std::nullopt};
        }
        default: return {evaluate(e, ctx), std::nullopt};
    }
}

}  // namespace detail

/// Evaluates e.g. "dX*pair(1,0) + Y*dY" to normal form; left factors are
/// moved through the form symbols with the calculus.
inline OneForm parse_one_form(std::string_view text, const PlaneContext& ctx, const Calculus& cal) {
    auto v = detail::eval_form(parse_expression(text), ctx, cal);
    if (v.element) {
        if (v.element->is_zero()) return OneForm::zero(ctx);
        throw EvalError("expected a one-form, got an algebra element: " + std::string(text));
    }
    return *v.form;
}

}  // namespace qplane
