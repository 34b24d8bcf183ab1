#include "support.hpp"
#include "xili/power_series.hpp"

#include <gtest/gtest.h>

using namespace xili;
using xili::testing::ctx50;
using xili::testing::li1000;
using xili::testing::matches_printed;
using xili::testing::sigma1001;
using xili::testing::xi200;

namespace {

const CnpTable<Rational>& exact100() {
    static const CnpTable<Rational> t = cnp_build<Rational>(100);
    return t;
}

Rational factorial(int n) {
    BigInt f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return Rational(f);
}

}  // namespace

TEST(Cnp, ParityZerosAndPositivity) {
    const auto& c = exact100();
    for (int n = 1; n <= 100; ++n)
        for (int p = 1; p <= n; ++p) {
            if ((n + p) % 2 != 0)
                EXPECT_EQ(c.at(n, p), 0) << n << "," << p;
            else
                EXPECT_GT(c.at(n, p), 0) << n << "," << p;
        }
    EXPECT_EQ(c.at(5, 0), 0);
    EXPECT_EQ(c.at(5, 6), 0);
}

TEST(Cnp, DiagonalIsFourToTheNOverFactorial) {
    const auto& c = exact100();
    for (int n = 1; n <= 100; ++n) {
        Rational four_n = Rational(BigInt(1) << (2 * n));
        EXPECT_EQ(c.at(n, n), four_n / factorial(n)) << n;
    }
}

TEST(Cnp, RowSumsAreFourN) {
    const auto& c = exact100();
    for (int n = 1; n <= 100; ++n) {
        Rational s = 0;
        for (const auto& v : c.row(n)) s += v;
        EXPECT_EQ(s, Rational(4 * n)) << n;
    }
}

TEST(Cnp, PolynomialIdentityWithBinomialRatio) {
    const auto& c = exact100();
    for (int r = 0; r <= 6; ++r) {
        auto a = binomial_ratio_coefficients(2 * r, 8);
        for (int n = 1; n <= 8; ++n) {
            Rational s = 0;
            Rational rp = r;
            for (int p = 1; p <= n; ++p, rp *= r) s += c.at(n, p) * rp;
            EXPECT_EQ(s, Rational(a[static_cast<std::size_t>(n)])) << "r=" << r << " n=" << n;
        }
    }
}

TEST(Cnp, ExactModeLimit) {
    try {
        cnp_build<Rational>(kExactCnpRowLimit + 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::range);
    }
    EXPECT_THROW(cnp_build<Rational>(0), Error);
    EXPECT_THROW(exact100().at(101, 1), Error);
    EXPECT_EQ(CnpTable<Rational>::arithmetic_mode, ArithmeticMode::exact_rational);
}

TEST(Cnp, FloatTableMatchesExact) {
    auto f = cnp_build_float(100, ctx50());
    ScopedPrecision g(ctx50());
    for (int n = 1; n <= 100; n += 7)
        for (int p = n % 2 == 0 ? 2 : 1; p <= n; p += 2)
            EXPECT_LT(relative_difference(f.at(n, p), to_real(exact100().at(n, p))), PrecisionContext::pow10(-50));
}

TEST(Cnp, GeneratorMatchesTable) {
    const auto& c = exact100();
    CnpRowGenerator<Rational> gen;
    for (int n = 1; n <= 60; ++n) {
        const auto& row = gen.next();
        EXPECT_EQ(gen.n(), n);
        EXPECT_EQ(row, c.row(n));
    }
}

TEST(Sigma, IncreasingAndBaseValue) {
    ScopedPrecision g(ctx50());
    const auto& sig = sigma1001();
    for (int p = 1; p <= sig.p_max(); ++p) EXPECT_GT(sig[p], sig[p - 1]) << p;
    Real base = xi_unit_sum(xi200()) / 2 - xi200()[0];
    EXPECT_LT(relative_difference(sig[0], base), PrecisionContext::pow10(-48));
    EXPECT_LE(sig.terms_used, xi200().R());
}

TEST(Sigma, DirectSumOracle) {
    ScopedPrecision g(ctx50());
    const auto& xi = xi200();
    for (int p : {1, 7, 40, 250}) {
        Real s = 0;
        for (int r = 1; r <= xi.R(); ++r) s += xi[r] * pow(Real(r), p) / pow(Real(4), r);
        EXPECT_LT(relative_difference(sigma1001()[p], s), PrecisionContext::pow10(-48)) << p;
    }
}

TEST(Sigma, RangeErrorWhenRTooSmall) {
    auto small = xi_r_table(40, ctx50());
    try {
        sigma_table(400, small);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::range);
    }
}

TEST(LiCoefficients, A1PrintedAndClosedForm) {
    ScopedPrecision g(ctx50());
    Real a1 = li1000().a(1);
    EXPECT_TRUE(matches_printed(a1, "0.023095708966121033814"));
    Real closed = 1 + euler_gamma() / 2 - log(4 * pi_value()) / 2;
    EXPECT_LT(relative_difference(a1, closed), PrecisionContext::pow10(-45));
    EXPECT_EQ(li1000().a(0), 1);
    EXPECT_THROW(li1000().a(1001), Error);
}

TEST(LiCoefficients, OracleEquivalence) {
    auto oracle = an_oracle(100, xi200());
    ScopedPrecision g(ctx50());
    for (int n = 1; n <= 100; ++n)
        EXPECT_LT(relative_difference(li1000().a(n), oracle.a(n)), PrecisionContext::pow10(-40)) << n;
    EXPECT_EQ(oracle.method, LiMethod::oracle_composition);
}

TEST(LiCoefficients, TableAndStreamingAgree) {
    auto cnp = cnp_build_float(200, ctx50());
    auto li = li_an(200, cnp, sigma1001());
    ScopedPrecision g(ctx50());
    for (int n = 1; n <= 200; ++n) EXPECT_EQ(li.a(n), li1000().a(n)) << n;
    EXPECT_THROW(li_an(300, cnp, sigma1001()), Error);
}

TEST(LiCoefficients, PositiveAndIncreasing) {
    ScopedPrecision g(ctx50());
    const auto& li = li1000();
    for (int n = 1; n <= li.N(); ++n) EXPECT_GT(li.a(n), li.a(n - 1) * (n == 1 ? 0 : 1)) << n;
}

TEST(Bounds, NoViolationsToThousand) {
    auto rep = an_bounds_check(li1000(), sigma1001());
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.N, 1000);
    EXPECT_GE(rep.checks.size(), 9u);
    for (const auto& [name, count] : rep.checks) EXPECT_GT(count, 0) << name;
}

TEST(Bounds, DetectsCorruptedValue) {
    LiCoefficients bad = li1000();
    ScopedPrecision g(ctx50());
    bad.values[499] = bad.values[497];  // a_500 := a_498 breaks monotonicity and the recurrence bound
    auto rep = an_bounds_check(bad, sigma1001());
    EXPECT_FALSE(rep.ok());
    bool monotone = false;
    for (const auto& v : rep.violations) monotone |= (v.check == "monotone" && v.n == 500);
    EXPECT_TRUE(monotone);
}

TEST(Recurrence, ResidualVanishes) {
    auto cnp = cnp_build_float(300, ctx50());
    ScopedPrecision g(ctx50());
    for (int n : {3, 4, 17, 100, 301}) {
        Real res = an_recurrence_residual(li1000(), cnp, sigma1001(), n);
        EXPECT_LT(abs(res), PrecisionContext::pow10(-45) * li1000().a(n)) << n;
        EXPECT_GT(an_recurrence_correction(cnp, sigma1001(), n), 0) << n;
    }
    EXPECT_THROW(an_recurrence_residual(li1000(), cnp, sigma1001(), 302), Error);
    EXPECT_THROW(an_recurrence_residual(li1000(), cnp, sigma1001(), 2), Error);
}
