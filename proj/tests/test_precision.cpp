#include "xili/precision.hpp"

#include <gtest/gtest.h>

using namespace xili;

TEST(PrecisionContext, ValidatesLimits) {
    EXPECT_NO_THROW(PrecisionContext::with_digits(20));
    EXPECT_THROW(PrecisionContext::with_digits(19), Error);
    EXPECT_THROW(PrecisionContext::with_digits(50, 4), Error);
    PrecisionContext ctx;
    ctx.tail_digits = ctx.digits + 1;
    EXPECT_THROW(ctx.validate(), Error);
    ctx.series_order = 0;
    ctx.tail_digits = 10;
    EXPECT_THROW(ctx.validate(), Error);
}

TEST(PrecisionContext, WorkingDigitsAddGuard) {
    auto ctx = PrecisionContext::with_digits(40, 12);
    EXPECT_EQ(ctx.working_digits(), 52);
    EXPECT_EQ(ctx.tail_digits, 40);
}

TEST(PrecisionContext, ErrorKindIsCarried) {
    try {
        PrecisionContext::with_digits(3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::argument);
    }
}

TEST(ScopedPrecision, RestoresPrevious) {
    unsigned before = Real::default_precision();
    {
        ScopedPrecision g(120);
        EXPECT_EQ(Real::default_precision(), 120u);
        {
            ScopedPrecision inner(30);
            EXPECT_EQ(Real::default_precision(), 30u);
        }
        EXPECT_EQ(Real::default_precision(), 120u);
    }
    EXPECT_EQ(Real::default_precision(), before);
}

TEST(ScopedPrecision, ConstantsCarryRequestedDigits) {
    ScopedPrecision g(80);
    // pi to 70 digits
    Real ref = parse_decimal("3.141592653589793238462643383279502884197169399375105820974944592307816");
    EXPECT_LT(abs(pi_value() - ref), PrecisionContext::pow10(-68));
}

TEST(Decimal, RoundTrip) {
    ScopedPrecision g(60);
    Real x = pi_value() / 7;
    Real y = parse_decimal(to_decimal(x, 55));
    EXPECT_LT(relative_difference(x, y), PrecisionContext::pow10(-54));
    EXPECT_EQ(to_decimal(Real(0), 10), "0");
    EXPECT_THROW(parse_decimal("1.2.3x"), Error);
}

TEST(Binomial, PascalRule) {
    for (unsigned n = 1; n < 60; ++n)
        for (unsigned k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    EXPECT_EQ(binomial(10, 0), 1);
    EXPECT_EQ(binomial(10, 11), 0);
}

TEST(LogGamma, MatchesExactFactorial) {
    ScopedPrecision g(60);
    BigInt f = 1;
    for (int n = 1; n <= 80; ++n) {
        f *= n;
        EXPECT_LT(abs(log_gamma(Real(n + 1)) - log(to_real(f))), PrecisionContext::pow10(-55)) << n;
    }
}

TEST(Conversions, RationalAndInteger) {
    ScopedPrecision g(50);
    EXPECT_EQ(to_real(Rational(3, 4)), Real(0.75));
    BigInt big = BigInt(1) << 200;
    EXPECT_EQ(to_real(big), pow(Real(2), 200));
}

TEST(Complex, FieldIdentities) {
    ScopedPrecision g(50);
    Complex a(Real(3), Real(-2)), b(Real("0.5"), Real(7));
    Complex q = (a * b) / b;
    EXPECT_LT((q - a).abs(), PrecisionContext::pow10(-45));
    EXPECT_EQ(Complex(Real(3), Real(4)).abs(), Real(5));
    EXPECT_EQ((a * a.conj()).im, Real(0));
    EXPECT_THROW(a / Complex(), Error);
    Complex e = cexp_i(pi_value());
    EXPECT_LT(abs(e.re + 1), PrecisionContext::pow10(-45));
}

TEST(RelativeDifference, Basics) {
    ScopedPrecision g(30);
    EXPECT_EQ(relative_difference(Real(0), Real(0)), Real(0));
    EXPECT_EQ(relative_difference(Real(1), Real(2)), Real("0.5"));
}
