#include "support.hpp"

#include <gtest/gtest.h>

using namespace qplane;
using qtest::Rng;

namespace {

struct Quaternions {
    FiniteContext ctx = quaternion_context(-1);
    std::shared_ptr<const FiniteAlgebra> alg = ctx->one.algebra_ptr();
    FiniteElement I = FiniteElement::basis(alg, 1);
    FiniteDoubled one = FiniteDoubled::one(ctx);
    FiniteDoubled i = embed(ctx, I);
    FiniteDoubled j = FiniteDoubled::odd_unit(ctx);
    FiniteDoubled k{ctx, ctx->zero, I};
};

TEST(Doubling, QuaternionTable) {
    Quaternions q;
    const auto m1 = -q.one;
    EXPECT_EQ(q.i * q.i, m1);
    EXPECT_EQ(q.j * q.j, m1);
    EXPECT_EQ(q.k * q.k, m1);
    EXPECT_EQ(q.i * q.j, q.k);
    EXPECT_EQ(q.j * q.k, q.i);
    EXPECT_EQ(q.k * q.i, q.j);
    EXPECT_TRUE((q.i * q.j + q.j * q.i).is_zero());
    EXPECT_TRUE((q.j * q.k + q.k * q.j).is_zero());
    EXPECT_TRUE((q.k * q.i + q.i * q.k).is_zero());
}

TEST(Doubling, QuaternionStarAndTrace) {
    Quaternions q;
    EXPECT_EQ(double_star(q.j), -q.j);
    EXPECT_EQ(double_star(q.i), -q.i);
    EXPECT_EQ(double_star(q.k), -q.k);
    // The trace is the real part of the first component.
    FiniteDoubled u{q.ctx, Scalar(3) * q.ctx->one + Scalar(5) * q.I, Scalar(7) * q.ctx->one};
    EXPECT_EQ(trace(u), Scalar(3));
}

template <class Ctx>
void exhaustive_associativity(const Ctx& ctx) {
    const auto n = ctx->one.algebra().dimension();
    std::vector<FiniteDoubled> basis;
    for (std::size_t i = 0; i < n; ++i) {
        auto e = FiniteElement::basis(ctx->one.algebra_ptr(), i);
        basis.push_back(embed(ctx, e));
        basis.emplace_back(ctx, ctx->zero, e);
    }
    for (const auto& a : basis)
        for (const auto& b : basis) {
            EXPECT_EQ(double_star(a * b), double_star(b) * double_star(a));
            for (const auto& c : basis) EXPECT_EQ((a * b) * c, a * (b * c));
        }
}

TEST(Doubling, FinitePresetsAssociativeAndAntimultiplicative) {
    for (int s : {1, -1}) {
        exhaustive_associativity(quaternion_context(s));
        exhaustive_associativity(z2_context(s));
        exhaustive_associativity(z2z2_context(s));
    }
}

TEST(Doubling, Z2Relations) {
    auto ctx = z2_context();
    auto gens = generators(ctx);
    ASSERT_EQ(gens.size(), 2u);
    const auto &a = gens[0], &b = gens[1];
    auto one = FiniteDoubled::one(ctx);
    EXPECT_EQ(a * a, one);
    EXPECT_EQ(b * b, one);
    EXPECT_TRUE((a * b + b * a).is_zero());
}

TEST(Doubling, Z2Z2Relations) {
    auto ctx = z2z2_context();
    auto alg = ctx->one.algebra_ptr();
    auto a = embed(ctx, FiniteElement::basis(alg, 1));
    auto b = embed(ctx, FiniteElement::basis(alg, 2));
    auto A = FiniteDoubled::odd_unit(ctx);
    EXPECT_EQ(A * A, a);
    EXPECT_TRUE((A * b + b * A).is_zero());
    EXPECT_EQ(b * b, FiniteDoubled::one(ctx));
}

TEST(Doubling, PlaneRelations) {
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        auto X = plane_X(ctx), Y = plane_Y(ctx);
        EXPECT_TRUE((X * Y + Y * X).is_zero());
        EXPECT_EQ(X * X, plane_x(ctx));
        EXPECT_EQ(embed(ctx, Poly::y()), Y);
        Rng g(10 + s);
        for (int t = 0; t < 50; ++t) {
            Poly a = g.poly(4);
            EXPECT_EQ(X * embed(ctx, a), embed(ctx, hat(a)) * X);
            EXPECT_EQ(X * embed(ctx, a), PlaneElement(ctx, Poly(), hat(a)));
            EXPECT_EQ(embed(ctx, a) * X, PlaneElement(ctx, Poly(), a));
        }
    }
}

TEST(Doubling, PlaneAssociativityRandom) {
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        Rng g(20 + s);
        for (int t = 0; t < 200; ++t) {
            auto u = g.element(ctx, 3), v = g.element(ctx, 3), w = g.element(ctx, 3);
            ASSERT_EQ((u * v) * w, u * (v * w));
        }
    }
}

TEST(Doubling, ProductMatchesOracle) {
    auto ctx = plane_context(1);
    Rng g(21);
    for (int t = 0; t < 100; ++t) {
        auto u = g.element(ctx, 4), v = g.element(ctx, 4);
        EXPECT_EQ(qtest::o_of(u * v), qtest::o_mul(qtest::o_of(u), qtest::o_of(v)));
    }
}

TEST(Doubling, StarExamples) {
    auto ctx = plane_context(1);
    PlaneElement u(ctx, Poly::x(), Poly::y());
    EXPECT_EQ(double_star(u), PlaneElement(ctx, Poly::x(), -Poly::y()));
}

TEST(Doubling, StarInvolutiveAntilinearAntimultiplicative) {
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        Rng g(30 + s);
        for (int t = 0; t < 100; ++t) {
            auto u = g.element(ctx, 3), v = g.element(ctx, 3);
            Scalar c = g.scalar();
            EXPECT_EQ(double_star(double_star(u)), u);
            EXPECT_EQ(double_star(u * v), double_star(v) * double_star(u));
            EXPECT_EQ(double_star(c * u), c.conj() * double_star(u));
        }
    }
}

TEST(Doubling, EmbeddingIsStarHomomorphism) {
    auto ctx = plane_context(-1);
    EXPECT_EQ(embed(ctx, Poly(1)), PlaneElement::one(ctx));
    Rng g(40);
    for (int t = 0; t < 50; ++t) {
        Poly p = g.poly(3), q = g.poly(3);
        EXPECT_EQ(embed(ctx, p * q), embed(ctx, p) * embed(ctx, q));
        EXPECT_EQ(embed(ctx, star(p)), double_star(embed(ctx, p)));
    }
}

TEST(Doubling, CentralityExamples) {
    auto ctx = plane_context(1);
    PlaneElement c(ctx, Poly::x() + Poly::y() * Poly::y(), Poly());
    EXPECT_TRUE(is_central(c));
    EXPECT_FALSE(is_central(plane_Y(ctx)));
    EXPECT_FALSE(is_central(plane_X(ctx)));
}

TEST(Doubling, CentralityClosedFormMatchesBruteForce) {
    auto ctx = plane_context(1);
    // Exhaustive over words of degree <= 4 and their pairwise sums.
    auto words = words_up_to(4);
    for (const auto& w : words) {
        auto u = word_element(ctx, w);
        auto X = plane_X(ctx), Y = plane_Y(ctx);
        bool brute = u * X == X * u && u * Y == Y * u;
        EXPECT_EQ(is_central(u), brute);
        EXPECT_EQ(is_central_brute_force(u), brute);
    }
    Rng g(41);
    for (int t = 0; t < 100; ++t) {
        auto u = g.element(ctx, 4);
        EXPECT_EQ(is_central(u), is_central_brute_force(u));
    }
}

TEST(Doubling, Unitarity) {
    auto ctx = plane_context(1);
    EXPECT_TRUE(is_unitary(embed(ctx, Poly(Scalar(Rational(3, 5), Rational(4, 5))))));
    EXPECT_TRUE(is_unitary(PlaneElement::one(ctx)));
    EXPECT_FALSE(is_unitary(embed(ctx, Poly(2))));
    EXPECT_FALSE(is_unitary(plane_X(ctx)));
}

TEST(Doubling, UnitariesClosedUnderProductAndInverse) {
    const std::vector<Scalar> phases{Scalar(1), Scalar(-1), Scalar(0, 1), Scalar(Rational(3, 5), Rational(4, 5)),
                                     Scalar(Rational(5, 13), Rational(-12, 13))};
    for (int s : {1, -1}) {
        auto ctx = plane_context(s);
        for (const auto& a : phases)
            for (const auto& b : phases) {
                auto u = embed(ctx, Poly(a)), v = embed(ctx, Poly(b));
                EXPECT_TRUE(is_unitary(u * v));
                EXPECT_TRUE(is_unitary(double_star(u)));
                EXPECT_EQ(u * double_star(u), PlaneElement::one(ctx));
            }
    }
}

TEST(Doubling, WordViewRoundTrip) {
    auto ctx = plane_context(1);
    auto X = plane_X(ctx), Y = plane_Y(ctx);
    // (0, y) = y X = -X Y.
    EXPECT_EQ(words_str(to_words(PlaneElement(ctx, Poly(), Poly::y()))), "-X*Y");
    EXPECT_EQ(word_element(ctx, Word{3, 2}), X * X * X * Y * Y);
    Rng g(42);
    for (int t = 0; t < 100; ++t) {
        auto u = g.element(ctx, 5);
        EXPECT_EQ(from_words(ctx, to_words(u)), u);
    }
}

TEST(Doubling, PresetsAndErrors) {
    EXPECT_TRUE(std::holds_alternative<PlaneContext>(make_preset("plane")));
    EXPECT_EQ(std::get<FiniteContext>(make_preset("quaternion"))->star_sign, -1);
    EXPECT_TRUE(std::holds_alternative<FiniteContext>(make_preset("z2")));
    EXPECT_TRUE(std::holds_alternative<FiniteContext>(make_preset("z2z2")));
    EXPECT_THROW(make_preset("octonion"), UnknownPreset);
    EXPECT_THROW(plane_context(0), InvalidContext);
}

TEST(Doubling, ContextMismatchIsAnError) {
    auto u = plane_X(plane_context(1));
    auto v = plane_X(plane_context(-1));
    EXPECT_THROW((void)(u * v), ContextMismatch);
    EXPECT_THROW((void)(u + v), ContextMismatch);
    EXPECT_THROW((void)(u == v), ContextMismatch);
}

TEST(Doubling, InvalidXiRejected) {
    // xi = y is not hat-invariant.
    EXPECT_THROW(make_context<Poly>("bad", Poly(), Poly(1), Poly::y(), 1, {Poly::x(), Poly::y()}), InvalidContext);
}

}  // namespace
