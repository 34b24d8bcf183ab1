#pragma once

// Keiper-Li constants, the log xi series, Titchmarsh's b_n transform and
// radius-of-convergence estimates.

#include "xili/li_coefficients.hpp"
#include "xili/power_series.hpp"
#include "xili/xi_functions.hpp"

#include <string>
#include <vector>

namespace xili {

/// phi(z) = 1 + sum_{j=1..order-1} a_j z^j.
inline PowerSeries<Real> phi_series(const LiCoefficients& li, int order) {
    if (order < 1 || order > li.N() + 1) throw Error(ErrorKind::range, "phi_series: order exceeds computed a_n");
    ScopedPrecision guard(li.ctx);
    std::vector<Real> c(static_cast<std::size_t>(order));
    for (int j = 0; j < order; ++j) c[static_cast<std::size_t>(j)] = li.a(j);
    return PowerSeries<Real>(std::move(c), Real(0));
}

struct LambdaSequence {
    std::vector<Real> li_values;      // li_values[n-1]     = lambda_n (Li normalization)
    std::vector<Real> keiper_values;  // keiper_values[n-1] = lambda_n / n
    std::vector<Real> reciprocal;     // reciprocal[j-1]    = A_j of 1/phi
    int J() const { return static_cast<int>(li_values.size()); }
};

/// lambda_1..lambda_J from [sum j a_j z^(j-1)] * [1 + sum A_j z^j].
inline LambdaSequence lambda_sequence(const LiCoefficients& li, int J) {
    if (J < 1) throw Error(ErrorKind::argument, "lambda_sequence: J must be >= 1");
    if (li.N() < J + 1)
        throw Error(ErrorKind::range, "lambda_sequence: need a_n up to n = " + std::to_string(J + 1));
    ScopedPrecision guard(li.ctx);
    PowerSeries<Real> phi = phi_series(li, J + 1);
    PowerSeries<Real> inverse = series_reciprocal(phi);
    PowerSeries<Real> derivative = series_derivative(phi);  // order J
    PowerSeries<Real> ratio = series_mul(derivative, inverse);
    LambdaSequence out;
    for (int n = 1; n <= J; ++n) {
        const Real& v = ratio[static_cast<std::size_t>(n - 1)];
        if (!(v > 0)) throw Error(ErrorKind::invariant, "lambda_" + std::to_string(n) + " is not positive");
        out.li_values.push_back(v);
        out.keiper_values.push_back(v / n);
        out.reciprocal.push_back(inverse[static_cast<std::size_t>(n)]);
    }
    return out;
}

/// Series of log xi(s) about s = 0 with `order` coefficients, from the even/odd
/// series of 2 xi(s) through series_log; the constant term is log(2 xi(0)) - log 2.
inline PowerSeries<Real> log_xi_series(int order, const XiCoefficients& xi) {
    if (order < 1) throw Error(ErrorKind::argument, "log_xi_series: order must be >= 1");
    if (order > 2 * xi.R()) throw Error(ErrorKind::range, "log_xi_series: order exceeds 2R");
    ScopedPrecision guard(xi.ctx);
    int L = order / 2 + 1;
    if (L > xi.R()) L = xi.R();
    EvenOddCoefficients eo = even_odd_coeffs(L, xi);
    PowerSeries<Real> two_xi = eo.two_xi_series(order, xi_unit_sum(xi));
    PowerSeries<Real> out = series_log(two_xi);
    out[0] -= log(Real(2));
    return out;
}

/// b_n = sum_{m=0..n} C(n,m) a_m with a_0 = 1, and the singularity estimates b_n^(-1/n).
struct SingularityDiagnostics {
    std::vector<Real> b;               // b[n], n = 0..N
    std::vector<Real> root_estimates;  // root_estimates[n] = b_n^(-1/n), entry 0 unused
    std::vector<Real> R_estimates;     // R_estimates[n-1] = exp(-log a_n / n)
};

inline SingularityDiagnostics titchmarsh_bn(const LiCoefficients& li, int N) {
    if (N < 0 || N > li.N()) throw Error(ErrorKind::range, "titchmarsh_bn: N exceeds computed a_n");
    ScopedPrecision guard(li.ctx);
    SingularityDiagnostics out;
    out.b.reserve(static_cast<std::size_t>(N) + 1);
    out.root_estimates.reserve(static_cast<std::size_t>(N) + 1);
    std::vector<Real> a(static_cast<std::size_t>(N) + 1);
    for (int m = 0; m <= N; ++m) a[static_cast<std::size_t>(m)] = li.a(m);
    for (int n = 0; n <= N; ++n) {
        Real sum = 0;
        BigInt binom = 1;
        for (int m = 0; m <= n; ++m) {
            sum += to_real(binom) * a[static_cast<std::size_t>(m)];
            binom = binom * (n - m) / (m + 1);
        }
        out.b.push_back(sum);
        out.root_estimates.push_back(n == 0 ? Real(0) : Real(exp(-log(sum) / n)));
    }
    return out;
}

/// R_n = exp(-log a_n / n), n = 1..N.
inline std::vector<Real> radius_estimates(const LiCoefficients& li) {
    ScopedPrecision guard(li.ctx);
    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(li.N()));
    for (int n = 1; n <= li.N(); ++n) {
        Real an = li.a(n);
        if (!(an > 0)) throw Error(ErrorKind::invariant, "radius_estimates: a_" + std::to_string(n) + " <= 0");
        out.push_back(exp(-log(an) / n));
    }
    return out;
}

}  // namespace xili
