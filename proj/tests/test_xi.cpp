#include "printed_values.hpp"
#include "support.hpp"
#include "xili/xi_functions.hpp"

#include <gtest/gtest.h>

using namespace xili;
using xili::testing::ctx50;
using xili::testing::kEven;
using xili::testing::kOdd;
using xili::testing::matches_printed;
using xili::testing::xi200;

namespace {

// xi(s) = s(s-1)/2 pi^(-s/2) Gamma(s/2) zeta(s) for real s != 1, straight from MPFR
Real xi_closed_form(const Real& s) {
    Real g, z;
    Real half = s / 2;
    mpfr_gamma(g.backend().data(), half.backend().data(), MPFR_RNDN);
    mpfr_zeta(z.backend().data(), s.backend().data(), MPFR_RNDN);
    return s * (s - 1) / 2 * pow(pi_value(), -half) * g * z;
}

}  // namespace

TEST(XiCoefficients, XiZeroPrinted) {
    ScopedPrecision g(ctx50());
    EXPECT_TRUE(matches_printed(xi200()[0], "0.49712077818831410991"));
}

TEST(XiCoefficients, XiZeroAgainstZetaClosedForm) {
    ScopedPrecision g(ctx50());
    EXPECT_LT(relative_difference(xi200()[0], xi_closed_form(Real("0.5"))), PrecisionContext::pow10(-48));
}

TEST(XiCoefficients, UnitSumIsTwoXiOfOne) {
    ScopedPrecision g(ctx50());
    EXPECT_LT(abs(xi_unit_sum(xi200()) - 1), PrecisionContext::pow10(-48));
}

TEST(XiCoefficients, PositiveAndDecreasing) {
    ScopedPrecision g(ctx50());
    const auto& xi = xi200();
    for (int r = 0; r <= xi.R(); ++r) {
        EXPECT_GT(xi[r], 0) << r;
        if (r > 0) EXPECT_LT(xi[r], xi[r - 1]) << r;
    }
}

TEST(XiCoefficients, HigherPrecisionAgrees) {
    auto fine = xi_r_table(60, PrecisionContext::with_digits(70));
    auto coarse = xi_r_table(60, ctx50());
    ScopedPrecision g(ctx50());
    for (int r = 0; r <= 60; ++r)
        EXPECT_LT(relative_difference(coarse[r], Real(fine[r])), PrecisionContext::pow10(-48)) << r;
}

TEST(XiCoefficients, QuadratureReportConverged) {
    ScopedPrecision g(ctx50());
    const auto& q = xi200().quadrature;
    EXPECT_GE(q.levels, 1);
    EXPECT_LT(q.achieved_error, PrecisionContext::pow10(-50));
    EXPECT_EQ(xi200().method, XiMethod::quadrature);
}

TEST(XiCoefficients, RefusesWhenHalvingsRunOut) {
    try {
        xi_r_table(40, ctx50(), 0);
        FAIL() << "expected refusal";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::refusal);
    }
}

TEST(XiCoefficients, ArgumentErrors) {
    EXPECT_THROW(xi_r_table(-1, ctx50()), Error);
    EXPECT_THROW(phi_weight(Real(-1), ctx50()), Error);
}

TEST(PhiWeight, PositiveOnGrid) {
    ScopedPrecision g(ctx50());
    for (int k = 0; k <= 40; ++k) EXPECT_GT(phi_weight(Real(k) / 10, ctx50()), 0) << k;
}

TEST(XiEval, AgreesWithZetaOnRealAxis) {
    ScopedPrecision g(ctx50());
    for (const char* s : {"0.5", "0.9", "2", "3.75", "7", "12.5"}) {
        Real x = parse_decimal(s);
        EXPECT_LT(relative_difference(xi_eval_real(x, xi200()), xi_closed_form(x)), PrecisionContext::pow10(-45)) << s;
    }
}

TEST(XiEval, FunctionalAndConjugateSymmetry) {
    ScopedPrecision g(ctx50());
    Complex s(Real("0.3"), Real("7.5"));
    Complex a = xi_eval(s, xi200());
    Complex b = xi_eval(Complex(1) - s, xi200());
    Complex c = xi_eval(s.conj(), xi200());
    EXPECT_LT((a - b).abs(), PrecisionContext::pow10(-45) * a.abs());
    EXPECT_LT((a.conj() - c).abs(), PrecisionContext::pow10(-45) * a.abs());
}

TEST(XiEval, RealOnCriticalLine) {
    ScopedPrecision g(ctx50());
    for (int t : {3, 11, 20, 35}) {
        Complex v = xi_eval(Complex(Real("0.5"), Real(t)), xi200());
        EXPECT_LT(abs(v.im), PrecisionContext::pow10(-30) * (abs(v.re) + PrecisionContext::pow10(-30))) << t;
    }
}

TEST(XiEval, SignChangeAtFirstZero) {
    ScopedPrecision g(ctx50());
    Real lo = xi_eval(Complex(Real("0.5"), Real("14.13")), xi200()).re;
    Real hi = xi_eval(Complex(Real("0.5"), Real("14.14")), xi200()).re;
    EXPECT_LT(lo * hi, 0);
}

TEST(XiEval, RefusesOutsideCertifiedRegion) {
    auto small = xi_r_table(30, ctx50());
    try {
        xi_eval(Complex(Real("0.5"), Real(200)), small);
        FAIL() << "expected refusal";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::refusal);
    }
}

TEST(XiPlusMinus, SumAndDifferenceIdentities) {
    ScopedPrecision g(ctx50());
    for (const char* t : {"0", "3", "17.5"}) {
        Complex s(Real("1.25"), parse_decimal(t));
        auto [p, m] = xi_pm_eval(s, xi200());
        Complex up = xi_eval(s + Complex(Real("0.5")), xi200());
        Complex down = xi_eval(s - Complex(Real("0.5")), xi200());
        Real scale = up.abs() + down.abs();
        EXPECT_LT((p + m - up * Real(2)).abs(), PrecisionContext::pow10(-45) * scale) << t;
        EXPECT_LT((p - m - down * Real(2)).abs(), PrecisionContext::pow10(-45) * scale) << t;
    }
}

TEST(XiPlusMinus, SeriesMatchesDirectEvaluation) {
    ScopedPrecision g(ctx50());
    auto [P, M] = xi_pm_series(60, xi200());
    for (const char* x : {"0.1", "0.5", "-0.4"}) {
        Real s = parse_decimal(x);
        auto [p, m] = xi_pm_eval(Complex(s), xi200());
        EXPECT_LT(abs(P.evaluate(s) - p.re), PrecisionContext::pow10(-40)) << x;
        EXPECT_LT(abs(M.evaluate(s) - m.re), PrecisionContext::pow10(-40)) << x;
    }
}

TEST(XiPlusMinus, MinusVanishesAtOneHalf) {
    // xi_-(1/2) = xi(1) - xi(0) = 0
    ScopedPrecision g(ctx50());
    auto [P, M] = xi_pm_series(60, xi200());
    EXPECT_LT(abs(M.evaluate(Real("0.5"))), PrecisionContext::pow10(-40));
    EXPECT_LT(abs(P.evaluate(Real("0.5")) - 1), PrecisionContext::pow10(-40));
}

TEST(XiPlusMinus, OnCriticalLineRealAndImaginary) {
    ScopedPrecision g(ctx50());
    auto [p, m] = xi_pm_eval(Complex(Real("0.5"), Real("9.5")), xi200());
    EXPECT_LT(abs(p.im), PrecisionContext::pow10(-40) * p.abs());
    EXPECT_LT(abs(m.re), PrecisionContext::pow10(-40) * m.abs());
}

TEST(XiPlusMinus, RangeErrors) {
    auto small = xi_r_table(10, ctx50());
    EXPECT_THROW(xi_pm_series(25, small), Error);
    EXPECT_THROW(xi_pm_series(0, small), Error);
}

TEST(EvenOdd, PrintedLists) {
    ScopedPrecision g(ctx50());
    auto eo = even_odd_coeffs(10, xi200());
    for (int l = 0; l < 10; ++l) {
        EXPECT_TRUE(matches_printed(eo.E[static_cast<std::size_t>(l)], kEven[l])) << "E" << l + 1;
        EXPECT_TRUE(matches_printed(eo.O[static_cast<std::size_t>(l)], kOdd[l])) << "O" << l + 1;
    }
}

TEST(EvenOdd, FirstOddIsA1) {
    ScopedPrecision g(ctx50());
    auto eo = even_odd_coeffs(1, xi200());
    Real a1 = 1 + euler_gamma() / 2 - log(4 * pi_value()) / 2;
    EXPECT_LT(relative_difference(eo.O[0], a1), PrecisionContext::pow10(-45));
}

TEST(EvenOdd, SeriesReproducesTwoXi) {
    ScopedPrecision g(ctx50());
    auto eo = even_odd_coeffs(60, xi200());
    auto two_xi = eo.two_xi_series(121, Real(1));
    for (const char* x : {"0.2", "-0.7", "1.5"}) {
        Real s = parse_decimal(x);
        EXPECT_LT(abs(two_xi.evaluate(s) - 2 * xi_eval_real(s, xi200())), PrecisionContext::pow10(-40)) << x;
    }
}

TEST(EvenOdd, RangeAndPositivity) {
    auto small = xi_r_table(8, ctx50());
    EXPECT_THROW(even_odd_coeffs(9, small), Error);
    EXPECT_THROW(even_odd_coeffs(0, small), Error);
    auto eo = even_odd_coeffs(5, xi200());
    for (int l = 0; l < 5; ++l) {
        EXPECT_GT(eo.E[static_cast<std::size_t>(l)], 0);
        EXPECT_GT(eo.O[static_cast<std::size_t>(l)], 0);
    }
}
