#pragma once

// First- and second-order differential calculi on the anticommutative plane.
//
// One-forms are kept in right normal form  dX.cX + dY.cY  (form symbols on
// the left, algebra coefficients on the right). A calculus is a rewrite
// table expressing g.dG for generators g in {X, Y} and G in {dX, dY} in that
// normal form, with coefficients in span{1, X, Y}. Two-forms collapse onto
// the single symbol dX^dY via dX^dX = dY^dY = 0, dX^dY = dY^dX.

#include "qplane/doubling.hpp"
#include "qplane/linalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qplane {

enum class Variant { A, B, C };

inline std::string to_string(Variant v) {
    switch (v) {
        case Variant::A: return "A";
        case Variant::B: return "B";
        case Variant::C: return "C";
    }
    return "?";
}

/// Variant plus the parameter w (ignored by A).
struct CalculusSpec {
    Variant variant = Variant::A;
    Scalar w = Scalar(0);

    static CalculusSpec A() { return {Variant::A, Scalar(0)}; }
    static CalculusSpec B(Scalar w) { return {Variant::B, std::move(w)}; }
    static CalculusSpec C(Scalar w) { return {Variant::C, std::move(w)}; }

    std::string str() const { return variant == Variant::A ? "A" : to_string(variant) + "(w=" + w.str() + ")"; }
};

enum Gen : std::size_t { kX = 0, kY = 1 };

/// a*1 + b*X + c*Y.
struct LinearCoeff {
    Scalar one, X, Y;

    PlaneElement on(const PlaneContext& ctx) const {
        return PlaneElement::scalar(ctx, one) + X * plane_X(ctx) + Y * plane_Y(ctx);
    }
    bool is_zero() const { return one.is_zero() && X.is_zero() && Y.is_zero(); }
    friend bool operator==(const LinearCoeff&, const LinearCoeff&) = default;
};

/// rule[g][K][G] is the coefficient of dK in the normal form of g.dG.
class RewriteTable {
public:
    using Rules = std::array<std::array<std::array<LinearCoeff, 2>, 2>, 2>;

    RewriteTable() = default;
    explicit RewriteTable(Rules rules, std::string label = "custom") : rules_(rules), label_(std::move(label)) {}

    /// The variant lists together with the common relations
    /// Y dY = dY Y and x dY = dY x.
    static RewriteTable for_spec(const CalculusSpec& spec) {
        Rules r{};
        const Scalar one(1);
        const Scalar& w = spec.w;
        // Y dY = dY Y in every variant.
        r[kY][kY][kY] = {0, 0, one};
        switch (spec.variant) {
            case Variant::A:
                r[kX][kX][kX] = {0, one, 0};   // X dX = dX X
                r[kY][kX][kX] = {0, 0, -one};  // Y dX = -dX Y
                r[kX][kY][kY] = {0, -one, 0};  // X dY = -dY X
                break;
            case Variant::B:
                r[kX][kX][kX] = {0, -one, 0};  // X dX = -dX X + w dY Y
                r[kX][kY][kX] = {0, 0, w};
                r[kY][kX][kX] = {0, 0, -one};  // Y dX = -dX Y
                r[kX][kY][kY] = {0, -one, 0};  // X dY = -dY X
                break;
            case Variant::C:
                r[kX][kX][kX] = {0, one, 0};  // X dX = dX X + w dY Y
                r[kX][kY][kX] = {0, 0, w};
                r[kX][kY][kY] = {0, one, 0};        // X dY = dY X
                r[kY][kX][kX] = {0, 0, -one};       // Y dX = -dX Y - 2 dY X
                r[kY][kY][kX] = {0, Scalar(-2), 0};
                break;
        }
        return RewriteTable(r, spec.str());
    }

    const LinearCoeff& operator()(Gen g, Gen K, Gen G) const { return rules_[g][K][G]; }
    LinearCoeff& at(Gen g, Gen K, Gen G) { return rules_[g][K][G]; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    std::string describe() const {
        static const char* gen[] = {"X", "Y"};
        static const char* form[] = {"dX", "dY"};
        std::string out;
        for (std::size_t g = 0; g < 2; ++g)
            for (std::size_t G = 0; G < 2; ++G) {
                out += std::string(gen[g]) + " " + form[G] + " = ";
                std::string rhs;
                for (std::size_t K = 0; K < 2; ++K) {
                    const auto& c = rules_[g][K][G];
                    if (c.is_zero()) continue;
                    WordPoly wp;
                    if (!c.one.is_zero()) wp[Word{0, 0}] = c.one;
                    if (!c.X.is_zero()) wp[Word{1, 0}] = c.X;
                    if (!c.Y.is_zero()) wp[Word{0, 1}] = c.Y;
                    if (!rhs.empty()) rhs += " + ";
                    rhs += std::string(form[K]) + " (" + words_str(wp) + ")";
                }
                out += (rhs.empty() ? "0" : rhs) + "\n";
            }
        return out;
    }

private:
    Rules rules_{};
    std::string label_ = "custom";
};

/// dX.cX + dY.cY
class OneForm {
public:
    OneForm(PlaneElement cX, PlaneElement cY) : c_{std::move(cX), std::move(cY)} {}
    static OneForm zero(const PlaneContext& ctx) { return {PlaneElement::zero(ctx), PlaneElement::zero(ctx)}; }
    static OneForm dX(const PlaneElement& c) { return {c, PlaneElement::zero(c.context())}; }
    static OneForm dY(const PlaneElement& c) { return {PlaneElement::zero(c.context()), c}; }
    static OneForm basis(Gen G, const PlaneElement& c) { return G == kX ? dX(c) : dY(c); }

    const PlaneElement& cX() const { return c_[kX]; }
    const PlaneElement& cY() const { return c_[kY]; }
    const PlaneElement& operator[](Gen G) const { return c_[G]; }
    const PlaneContext& context() const { return c_[0].context(); }

    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero(); }

    OneForm operator-() const { return {-c_[0], -c_[1]}; }
    friend OneForm operator+(const OneForm& a, const OneForm& b) { return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1]}; }
    friend OneForm operator-(const OneForm& a, const OneForm& b) { return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1]}; }
    friend OneForm operator*(const Scalar& s, const OneForm& a) { return {s * a.c_[0], s * a.c_[1]}; }
    /// Right multiplication by an algebra element.
    friend OneForm operator*(const OneForm& a, const PlaneElement& b) { return {a.c_[0] * b, a.c_[1] * b}; }
    OneForm& operator+=(const OneForm& o) { return *this = *this + o; }
    friend bool operator==(const OneForm& a, const OneForm& b) { return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1]; }

    std::string str() const {
        std::string out;
        if (!c_[0].is_zero()) out += "dX·" + pair_str(c_[0]);
        if (!c_[1].is_zero()) out += std::string(out.empty() ? "" : " + ") + "dY·" + pair_str(c_[1]);
        return out.empty() ? "0" : out;
    }
    std::string latex() const {
        std::string out;
        if (!c_[0].is_zero()) out += "dX\\," + pair_latex(c_[0]);
        if (!c_[1].is_zero()) out += std::string(out.empty() ? "" : " + ") + "dY\\," + pair_latex(c_[1]);
        return out.empty() ? "0" : out;
    }

private:
    std::array<PlaneElement, 2> c_;
};

/// dX^dY . c
class TwoForm {
public:
    explicit TwoForm(PlaneElement c) : c_(std::move(c)) {}
    static TwoForm zero(const PlaneContext& ctx) { return TwoForm(PlaneElement::zero(ctx)); }

    const PlaneElement& coefficient() const { return c_; }
    bool is_zero() const { return c_.is_zero(); }

    TwoForm operator-() const { return TwoForm(-c_); }
    friend TwoForm operator+(const TwoForm& a, const TwoForm& b) { return TwoForm(a.c_ + b.c_); }
    friend TwoForm operator-(const TwoForm& a, const TwoForm& b) { return TwoForm(a.c_ - b.c_); }
    friend TwoForm operator*(const Scalar& s, const TwoForm& a) { return TwoForm(s * a.c_); }
    friend TwoForm operator*(const TwoForm& a, const PlaneElement& b) { return TwoForm(a.c_ * b); }
    friend bool operator==(const TwoForm& a, const TwoForm& b) { return a.c_ == b.c_; }

    std::string str() const { return c_.is_zero() ? "0" : "dX∧dY·" + pair_str(c_); }
    std::string latex() const { return c_.is_zero() ? "0" : "dX\\wedge dY\\," + pair_latex(c_); }

private:
    PlaneElement c_;
};

/// 2x2 matrix with algebra entries acting on the coefficient column
/// (cX, cY) by left multiplication: (M v)_K = sum_G M[K][G] v_G.
struct FormMatrix {
    std::array<std::array<PlaneElement, 2>, 2> m;

    static FormMatrix make(PlaneElement a, PlaneElement b, PlaneElement c, PlaneElement d) {
        std::array<std::array<PlaneElement, 2>, 2> m{{{{std::move(a), std::move(b)}}, {{std::move(c), std::move(d)}}}};
        return FormMatrix{std::move(m)};
    }
    static FormMatrix identity(const PlaneContext& ctx) {
        auto z = PlaneElement::zero(ctx);
        auto o = PlaneElement::one(ctx);
        return make(o, z, z, o);
    }
    static FormMatrix zero(const PlaneContext& ctx) {
        auto z = PlaneElement::zero(ctx);
        return make(z, z, z, z);
    }

    friend FormMatrix operator*(const FormMatrix& a, const FormMatrix& b) {
        FormMatrix r = a;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
        return r;
    }
    friend FormMatrix operator+(const FormMatrix& a, const FormMatrix& b) {
        FormMatrix r = a;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }

    OneForm apply(const OneForm& v) const {
        return {m[0][0] * v.cX() + m[0][1] * v.cY(), m[1][0] * v.cX() + m[1][1] * v.cY()};
    }
    OneForm column(Gen G) const { return {m[0][G], m[1][G]}; }
    bool is_zero() const { return m[0][0].is_zero() && m[0][1].is_zero() && m[1][0].is_zero() && m[1][1].is_zero(); }
};

/// A rewrite table bound to a context with cached generator powers. The
/// left action of an element is computed word by word on its normal-ordered
/// expansion X^k Y^l, acting as M_X^k M_Y^l. Caches are local to one
/// instance; instances are cheap and not shared between threads.
class LeftAction {
public:
    LeftAction(const RewriteTable& table, PlaneContext ctx) : ctx_(std::move(ctx)) {
        for (std::size_t g = 0; g < 2; ++g) {
            FormMatrix mg = FormMatrix::identity(ctx_);
            for (std::size_t K = 0; K < 2; ++K)
                for (std::size_t G = 0; G < 2; ++G)
                    mg.m[K][G] = table(static_cast<Gen>(g), static_cast<Gen>(K), static_cast<Gen>(G)).on(ctx_);
            gen_.push_back(std::move(mg));
        }
        powers_[0].push_back(FormMatrix::identity(ctx_));
        powers_[1].push_back(FormMatrix::identity(ctx_));
    }

    const FormMatrix& generator(Gen g) const { return gen_[g]; }

    const FormMatrix& power(Gen g, std::uint32_t n) {
        auto& p = powers_[g];
        while (p.size() <= n) p.push_back(p.back() * gen_[g]);
        return p[n];
    }

    FormMatrix word(Word w) { return power(kX, w.k) * power(kY, w.l); }

    FormMatrix matrix_of(const PlaneElement& a) {
        FormMatrix r = FormMatrix::zero(ctx_);
        for (const auto& [w, c] : to_words(a)) {
            FormMatrix t = word(w);
            for (auto& row : t.m)
                for (auto& e : row) e = c * e;
            r = r + t;
        }
        return r;
    }

    OneForm apply(const PlaneElement& a, const OneForm& omega) { return matrix_of(a).apply(omega); }

    /// d(X^k Y^l) by the Leibniz rule over the letters of the word.
    OneForm differential(Word w) {
        auto it = d_cache_.find(w);
        if (it != d_cache_.end()) return it->second;
        OneForm out = OneForm::zero(ctx_);
        for (std::uint32_t i = 0; i < w.k; ++i)
            out += power(kX, i).column(kX) * word_element(ctx_, Word{w.k - 1 - i, w.l});
        for (std::uint32_t j = 0; j < w.l; ++j)
            out += word(Word{w.k, j}).column(kY) * word_element(ctx_, Word{0, w.l - 1 - j});
        d_cache_.emplace(w, out);
        return out;
    }

    OneForm differential(const PlaneElement& a) {
        OneForm out = OneForm::zero(ctx_);
        for (const auto& [w, c] : to_words(a)) out += c * differential(w);
        return out;
    }

    const PlaneContext& context() const { return ctx_; }

private:
    PlaneContext ctx_;
    std::vector<FormMatrix> gen_;
    std::array<std::vector<FormMatrix>, 2> powers_;
    std::map<Word, OneForm> d_cache_;
};

/// A calculus: spec label plus rewrite table. Implicitly built from a
/// CalculusSpec; custom (e.g. perturbed) tables via `from_table`.
class Calculus {
public:
    Calculus(const CalculusSpec& spec)  // NOLINT(google-explicit-constructor)
        : spec_(spec), table_(RewriteTable::for_spec(spec)) {}
    static Calculus from_table(RewriteTable table) {
        Calculus c(CalculusSpec::A());
        c.table_ = std::move(table);
        c.custom_ = true;
        return c;
    }

    const CalculusSpec& spec() const { return spec_; }
    const RewriteTable& table() const { return table_; }
    bool is_custom() const { return custom_; }
    std::string label() const { return custom_ ? table_.label() : spec_.str(); }

    LeftAction action(const PlaneContext& ctx) const { return LeftAction(table_, ctx); }

private:
    CalculusSpec spec_;
    RewriteTable table_;
    bool custom_ = false;
};

inline OneForm left_multiply_form(const PlaneElement& a, const OneForm& omega, const Calculus& cal) {
    return cal.action(a.context()).apply(a, omega);
}

inline OneForm differential(const PlaneElement& a, const Calculus& cal) {
    return cal.action(a.context()).differential(a);
}

namespace detail {

/// dG ^ eta for a one-form eta in normal form.
inline TwoForm basis_wedge(Gen G, const OneForm& eta) {
    return TwoForm(G == kX ? eta.cY() : eta.cX());
}

}  // namespace detail

/// omega ^ eta: move each coefficient of omega rightward through eta's form
/// symbols, then collapse with dX^dX = dY^dY = 0, dX^dY = dY^dX.
inline TwoForm wedge(const OneForm& omega, const OneForm& eta, const Calculus& cal) {
    auto act = cal.action(omega.context());
    TwoForm out = TwoForm::zero(omega.context());
    for (Gen G : {kX, kY}) {
        if (omega[G].is_zero()) continue;
        out = out + detail::basis_wedge(G, act.apply(omega[G], eta));
    }
    return out;
}

/// d(dG.c) = -dG ^ dc, extended linearly.
inline TwoForm differential_on_forms(const OneForm& omega, const Calculus& cal) {
    auto act = cal.action(omega.context());
    TwoForm out = TwoForm::zero(omega.context());
    for (Gen G : {kX, kY}) out = out - detail::basis_wedge(G, act.differential(omega[G]));
    return out;
}

/// a.(dX^dY.c) = (a.dX) ^ (dY.c).
inline TwoForm left_multiply_two_form(const PlaneElement& a, const TwoForm& f, const Calculus& cal) {
    const auto& ctx = a.context();
    OneForm a_dx = left_multiply_form(a, OneForm::dX(PlaneElement::one(ctx)), cal);
    return wedge(a_dx, OneForm::dY(f.coefficient()), cal);
}

/// Normal-ordered words of total degree <= max_degree, ordered by degree.
inline std::vector<Word> words_up_to(int max_degree) {
    std::vector<Word> out;
    for (int d = 0; d <= max_degree; ++d)
        for (int k = d; k >= 0; --k) out.push_back(Word{static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(d - k)});
    return out;
}

namespace detail {

using FormKey = std::tuple<int, int, std::uint32_t, std::uint32_t>;  // (slot, component, x-exp, y-exp)

inline void flatten_into(std::map<FormKey, Scalar>& out, int slot, const PlaneElement& c) {
    for (const auto& [m, s] : c.first().terms()) out[{slot, 0, m.x, m.y}] += s;
    for (const auto& [m, s] : c.second().terms()) out[{slot, 1, m.x, m.y}] += s;
}

inline std::map<FormKey, Scalar> flatten(const OneForm& f) {
    std::map<FormKey, Scalar> out;
    flatten_into(out, 0, f.cX());
    flatten_into(out, 1, f.cY());
    return out;
}

/// Scales v so its first nonzero entry is 1.
inline void normalize_leading(DenseVector& v) {
    for (const auto& c : v)
        if (!c.is_zero()) {
            Scalar inv = Scalar(1) / c;
            for (auto& e : v) e *= inv;
            return;
        }
}

}  // namespace detail

/// Basis of { a : word degree <= max_degree, d a = 0 } by exact elimination.
inline std::vector<PlaneElement> kernel_of_d(const Calculus& cal, int max_degree,
                                             const PlaneContext& ctx = plane_context(1)) {
    auto act = cal.action(ctx);
    auto words = words_up_to(max_degree);
    ColumnSystem<detail::FormKey> sys;
    for (const auto& w : words) sys.add_column(detail::flatten(act.differential(w)));
    std::vector<PlaneElement> basis;
    for (auto v : sys.nullspace()) {
        detail::normalize_leading(v);
        WordPoly wp;
        for (std::size_t j = 0; j < words.size(); ++j)
            if (!v[j].is_zero()) wp[words[j]] = v[j];
        basis.push_back(from_words(ctx, wp));
    }
    return basis;
}

/// True iff `v` lies in the linear span of `basis`.
inline bool span_contains(const std::vector<PlaneElement>& basis, const PlaneElement& v) {
    auto flat = [](const PlaneElement& e) {
        std::map<detail::FormKey, Scalar> out;
        detail::flatten_into(out, 0, e);
        return out;
    };
    ColumnSystem<detail::FormKey> with, without;
    for (const auto& b : basis) {
        with.add_column(flat(b));
        without.add_column(flat(b));
    }
    with.add_column(flat(v));
    // v is in the span iff appending it adds a null direction.
    return with.nullspace().size() > without.nullspace().size();
}

struct ConsistencyReport {
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> counterexamples;

    void record(bool ok, const std::string& what) {
        ++checks;
        if (ok) return;
        passed = false;
        if (counterexamples.size() < 8) counterexamples.push_back(what);
    }
};

/// Bimodule well-definedness of a rewrite table against XY + YX = 0:
///   - (XY + YX).dG = 0 letter by letter,
///   - d(XY + YX) = 0 by the Leibniz rule,
///   - (ab).dG = a.(b.dG) for all words a, b of degree <= max_degree,
///   - Y dY = dY Y, x dY = dY x, x dx = dx x, Y dx = dx Y with dx = d(X^2).
inline ConsistencyReport consistency_check(const Calculus& cal, int max_degree,
                                           const PlaneContext& ctx = plane_context(1)) {
    ConsistencyReport rep;
    auto act = cal.action(ctx);
    const auto one = PlaneElement::one(ctx);
    const auto X = plane_X(ctx);
    const auto Y = plane_Y(ctx);
    const char* names[] = {"dX", "dY"};

    FormMatrix relation = act.generator(kX) * act.generator(kY) + act.generator(kY) * act.generator(kX);
    for (Gen G : {kX, kY}) {
        OneForm r = relation.column(G);
        rep.record(r.is_zero(), "(XY+YX)·" + std::string(names[G]) + " = " + r.str() + " ≠ 0");
    }

    OneForm dX = OneForm::dX(one), dY = OneForm::dY(one);
    OneForm d_rel = dX * Y + act.generator(kX).column(kY) + dY * X + act.generator(kY).column(kX);
    rep.record(d_rel.is_zero(), "d(XY+YX) = " + d_rel.str() + " ≠ 0");

    auto words = words_up_to(max_degree);
    for (const auto& wa : words)
        for (const auto& wb : words) {
            auto a = word_element(ctx, wa);
            auto b = word_element(ctx, wb);
            for (Gen G : {kX, kY}) {
                OneForm base = OneForm::basis(G, one);
                OneForm lhs = act.apply(a * b, base);
                OneForm rhs = act.apply(a, act.apply(b, base));
                if (lhs == rhs) {
                    rep.record(true, "");
                    continue;
                }
                rep.record(false, "(" + words_str(to_words(a)) + ")(" + words_str(to_words(b)) + ")·" + names[G] +
                                      ": " + lhs.str() + " vs " + rhs.str());
            }
        }

    auto x = X * X;
    OneForm dx = act.differential(x);
    auto commutes = [&](const PlaneElement& a, const OneForm& f, const std::string& label) {
        OneForm l = act.apply(a, f), r = f * a;
        rep.record(l == r, label + ": " + l.str() + " vs " + r.str());
    };
    commutes(Y, dY, "Y dY = dY Y");
    commutes(x, dY, "x dY = dY x");
    commutes(x, dx, "x dx = dx x");
    commutes(Y, dx, "Y dx = dx Y");
    return rep;
}

}  // namespace qplane
