#include "support.hpp"

#include <gtest/gtest.h>

using namespace qplane;
using qtest::Rng;

namespace {

const Calculus A = CalculusSpec::A();

/// Number of central words X^{2m} Y^{2n} with 2m + 2n <= d.
std::size_t central_count(int d) {
    std::size_t n = 0;
    for (int k = 0; k <= d; k += 2)
        for (int l = 0; k + l <= d; l += 2) ++n;
    return n;
}

TEST(Metric, EvalExamples) {
    auto ctx = plane_context(1);
    auto g = MetricSpec::standard(ctx);
    auto one = PlaneElement::one(ctx);
    EXPECT_EQ(metric_eval(OneForm::dX(one), OneForm::dX(one), g, A), one);
    EXPECT_TRUE(metric_eval(OneForm::dX(plane_X(ctx)), OneForm::dY(one), g, A).is_zero());
    EXPECT_EQ(metric_eval(OneForm::dY(one), OneForm::dY(one), g, A), one);
}

TEST(Metric, DefaultMetricIsAdmissibleForA) {
    auto sol = metric_solve(A, 2);
    EXPECT_TRUE(sol.contains(MetricSpec::standard(plane_context(1))));
}

TEST(Metric, VariantAStructure) {
    for (int d = 1; d <= 4; ++d) {
        auto sol = metric_solve(A, d);
        EXPECT_EQ(sol.dimension(), 2 * central_count(d) + 2 * (d >= 2 ? central_count(d - 2) : 0)) << d;
        for (const auto& m : sol.basis) {
            EXPECT_TRUE(is_central(m.gXX())) << m.str();
            EXPECT_TRUE(is_central(m.gYY())) << m.str();
            EXPECT_TRUE(xy_times_central(m.gXY()).has_value()) << m.str();
            EXPECT_TRUE(xy_times_central(m.gYX()).has_value()) << m.str();
        }
    }
}

TEST(Metric, VariantBStructuredSolutions) {
    for (Scalar w : {Scalar(1), Scalar(2), Scalar::fraction(-1, 2)}) {
        auto sol = metric_solve(CalculusSpec::B(w), 4, plane_context(1), true);
        ASSERT_FALSE(sol.is_zero_space());
        bool off_diagonal = false;
        for (const auto& m : sol.basis) {
            EXPECT_EQ(m.gXY(), -m.gYX()) << m.str();
            auto f = xy_times_central(m.gXY());
            ASSERT_TRUE(f.has_value()) << m.str();
            EXPECT_EQ(w * m.gYY(), Scalar(2) * plane_x(m.gYY().context()) * *f) << m.str();
            off_diagonal = off_diagonal || !m.gXY().is_zero();
        }
        EXPECT_TRUE(off_diagonal);
    }
}

TEST(Metric, VariantBUnrestrictedHasExtraSolutions) {
    // gXX = Y with gXY = -2X/w solves the bimodule constraints.
    auto ctx = plane_context(1);
    const Scalar w(2);
    auto zero = PlaneElement::zero(ctx);
    MetricSpec m(plane_Y(ctx), zero, -plane_X(ctx), zero);
    auto sol = metric_solve(CalculusSpec::B(w), 2);
    EXPECT_TRUE(sol.contains(m));
}

TEST(Metric, VariantCAsPrintedAdmitsCentralGXX) {
    for (int d = 1; d <= 4; ++d) {
        auto sol = metric_solve(CalculusSpec::C(Scalar(2)), d);
        EXPECT_EQ(sol.dimension(), central_count(d)) << d;
        for (const auto& m : sol.basis) {
            EXPECT_TRUE(is_central(m.gXX()));
            EXPECT_TRUE(m.gYY().is_zero() && m.gXY().is_zero() && m.gYX().is_zero());
        }
    }
}

TEST(Metric, SolutionsAreCovariantAndMiddleLinear) {
    auto ctx = plane_context(1);
    Rng g(200);
    for (const Calculus& cal : {A, Calculus(CalculusSpec::B(Scalar(2)))}) {
        auto sol = metric_solve(cal, 3, ctx);
        for (const auto& m : sol.basis) {
            for (int t = 0; t < 6; ++t) {
                auto a = g.element(ctx, 3), b = g.element(ctx, 3);
                auto om = g.one_form(ctx, 2), eta = g.one_form(ctx, 2);
                EXPECT_EQ(metric_eval(om * a, eta, m, cal), metric_eval(om, left_multiply_form(a, eta, cal), m, cal))
                    << cal.label() << " " << m.str();
                EXPECT_EQ(metric_eval(left_multiply_form(a, om, cal), eta, m, cal), a * metric_eval(om, eta, m, cal))
                    << cal.label() << " " << m.str();
                EXPECT_EQ(metric_eval(om, eta * b, m, cal), metric_eval(om, eta, m, cal) * b);
            }
        }
    }
}

TEST(Metric, EvalIsBilinear) {
    auto ctx = plane_context(-1);
    auto g = MetricSpec::standard(ctx);
    Rng r(201);
    for (int t = 0; t < 20; ++t) {
        auto a = r.one_form(ctx, 2), b = r.one_form(ctx, 2), c = r.one_form(ctx, 2);
        EXPECT_EQ(metric_eval(a + b, c, g, A), metric_eval(a, c, g, A) + metric_eval(b, c, g, A));
        EXPECT_EQ(metric_eval(a, b + c, g, A), metric_eval(a, b, g, A) + metric_eval(a, c, g, A));
    }
}

TEST(Metric, SolutionCountsReported) {
    auto sol = metric_solve(A, 2);
    EXPECT_GT(sol.unknowns, 0u);
    EXPECT_GT(sol.equations, 0u);
    EXPECT_EQ(sol.max_degree, 2);
}

}  // namespace
