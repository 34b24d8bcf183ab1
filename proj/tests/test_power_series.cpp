#include "xili/power_series.hpp"

#include <gtest/gtest.h>

using namespace xili;

namespace {

PowerSeries<Real> exp_series(int order, const Real& scale) {
    std::vector<Real> c(static_cast<std::size_t>(order));
    Real term = 1;
    for (int k = 0; k < order; ++k) {
        c[static_cast<std::size_t>(k)] = term;
        term = term * scale / (k + 1);
    }
    return PowerSeries<Real>(c, Real(0));
}

}  // namespace

TEST(PowerSeries, LogOfExpIsLinear) {
    ScopedPrecision g(60);
    const Real k = Real(3) / 7;
    auto L = series_log(series_scale(exp_series(30, k), Real(5)));
    EXPECT_LT(abs(L[0] - log(Real(5))), PrecisionContext::pow10(-55));
    EXPECT_LT(abs(L[1] - k), PrecisionContext::pow10(-55));
    for (std::size_t j = 2; j < L.order(); ++j) EXPECT_LT(abs(L[j]), PrecisionContext::pow10(-55)) << j;
}

TEST(PowerSeries, ReciprocalTimesSeriesIsOne) {
    ScopedPrecision g(50);
    std::vector<Real> c;
    for (int k = 0; k < 25; ++k) c.push_back(Real(1) / (k * k + 2));
    PowerSeries<Real> a(c, Real(0));
    auto prod = series_mul(a, series_reciprocal(a));
    EXPECT_LT(abs(prod[0] - 1), PrecisionContext::pow10(-45));
    for (std::size_t j = 1; j < prod.order(); ++j) EXPECT_LT(abs(prod[j]), PrecisionContext::pow10(-45));
}

TEST(PowerSeries, ExactReciprocalOfGeometric) {
    PowerSeries<Rational> a({Rational(1), Rational(-1)}, Rational(0));
    a.coeffs.resize(10, Rational(0));
    auto b = series_reciprocal(a);
    for (std::size_t j = 0; j < b.order(); ++j) EXPECT_EQ(b[j], Rational(1));
}

TEST(PowerSeries, DerivativeAntiderivativeInverse) {
    ScopedPrecision g(40);
    auto a = exp_series(12, Real(2));
    auto back = series_antiderivative(series_derivative(a), a[0]);
    ASSERT_EQ(back.order(), a.order());
    for (std::size_t j = 0; j < a.order(); ++j) EXPECT_LT(abs(back[j] - a[j]), PrecisionContext::pow10(-35));
    EXPECT_EQ(series_derivative(a).order(), a.order() - 1);
}

TEST(PowerSeries, TruncatesToShorterOperand) {
    PowerSeries<Rational> a({Rational(1), Rational(2), Rational(3)}, Rational(0));
    PowerSeries<Rational> b({Rational(1), Rational(1)}, Rational(0));
    EXPECT_EQ(series_mul(a, b).order(), 2u);
    EXPECT_EQ(series_add(a, b).order(), 2u);
    EXPECT_EQ(series_mul(a, b)[1], Rational(3));
}

TEST(PowerSeries, Errors) {
    PowerSeries<Rational> a({Rational(1)}, Rational(0));
    PowerSeries<Rational> b({Rational(1)}, Rational(1));
    EXPECT_THROW(series_add(a, b), Error);
    EXPECT_THROW(series_mul(a, b), Error);
    PowerSeries<Rational> z({Rational(0), Rational(1)}, Rational(0));
    EXPECT_THROW(series_reciprocal(z), Error);
    ScopedPrecision g(30);
    PowerSeries<Real> neg({Real(-1), Real(1)}, Real(0));
    EXPECT_THROW(series_log(neg), Error);
}

TEST(PowerSeries, HornerEvaluation) {
    PowerSeries<Rational> a({Rational(1), Rational(2), Rational(3)}, Rational(1));
    // 1 + 2(x-1) + 3(x-1)^2 at x = 3
    EXPECT_EQ(a.evaluate(Rational(3)), Rational(17));
}

TEST(BinomialRatio, LinearCoefficientIsTwoR) {
    for (int r = 0; r <= 40; ++r) {
        auto c = binomial_ratio_coefficients(r, 3);
        EXPECT_EQ(c[0], 1);
        EXPECT_EQ(c[1], 2 * r);
        EXPECT_EQ(c[2], BigInt(2) * r * r);
    }
}

TEST(BinomialRatio, MatchesRepeatedProduct) {
    // ((1+w)/(1-w)) = 1 + 2w + 2w^2 + ...
    const int order = 15;
    PowerSeries<BigInt> base(std::vector<BigInt>(order + 1, BigInt(2)), BigInt(0));
    base.coeffs[0] = 1;
    PowerSeries<BigInt> acc(std::vector<BigInt>(order + 1, BigInt(0)), BigInt(0));
    acc.coeffs[0] = 1;
    for (int r = 1; r <= 9; ++r) {
        acc = series_mul(acc, base);
        auto c = binomial_ratio_coefficients(r, order);
        for (int n = 0; n <= order; ++n) EXPECT_EQ(c[static_cast<std::size_t>(n)], acc[static_cast<std::size_t>(n)]);
    }
}

TEST(BinomialRatio, ClosedFormSum) {
    // a_r(n) = sum_k 2^k C(r,k) C(n-1,k-1)
    for (int r = 1; r <= 12; ++r) {
        auto c = binomial_ratio_coefficients(r, 12);
        for (int n = 1; n <= 12; ++n) {
            BigInt s = 0;
            for (int k = 1; k <= std::min(r, n); ++k)
                s += (BigInt(1) << k) * binomial(static_cast<unsigned>(r), static_cast<unsigned>(k)) *
                     binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k - 1));
            EXPECT_EQ(c[static_cast<std::size_t>(n)], s) << r << "," << n;
        }
    }
}
