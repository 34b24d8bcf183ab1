#pragma once

// Point and series evaluation of xi(s), xi(s +- 1/2), xi_+ and xi_-, and the
// even/odd coefficients of 2 xi(s) about s = 0, all built on the xi_r table.

#include "xili/power_series.hpp"
#include "xili/xi_coefficients.hpp"

#include <string>
#include <utility>
#include <vector>

namespace xili {

/// A certified evaluation: the value plus the truncation bound it was
/// accepted under and the largest term seen (cancellation indicator).
struct XiValue {
    Complex value;
    Real tail_bound;
    Real max_term;
};

namespace detail {

/// Sum xi_r y^r with a ratio-test tail bound. The xi_r ratios decrease (they
/// satisfy Turan-type inequalities), so with q = |y| xi_R / xi_{R-1} < 1 the
/// neglected tail is at most xi_R |y|^R q / (1 - q).
inline XiValue xi_series_at(const Complex& y, const XiCoefficients& xi) {
    const int R = xi.R();
    XiValue out;
    Complex acc;
    Complex power(Real(1), Real(0));
    Real max_term = 0;
    Real last_mag = 0;
    for (int r = 0; r <= R; ++r) {
        Complex term = power * xi[r];
        acc += term;
        Real mag = term.abs();
        if (mag > max_term) max_term = mag;
        last_mag = mag;
        if (r < R) power *= y;
    }
    Real ymag = y.abs();
    if (ymag == 0) {
        out.tail_bound = 0;
    } else if (R < 1) {
        throw Error(ErrorKind::refusal, "xi_eval: need at least two xi_r terms away from s = 1/2");
    } else {
        Real q = ymag * xi[R] / xi[R - 1];
        if (!(q < Real(1) / 2))
            throw Error(ErrorKind::refusal, "xi_eval: |s - 1/2|^2 = " + to_decimal(ymag, 6) +
                                                " is outside the region certified by R = " + std::to_string(R));
        out.tail_bound = last_mag * ymag * xi[R] / xi[R - 1] / (1 - q);
    }
    out.value = std::move(acc);
    out.max_term = std::move(max_term);
    return out;
}

inline void require_certified(const XiValue& v, const XiCoefficients& xi, const char* where) {
    Real tol = xi.ctx.tail_tol();
    Real scale = std::max(Real(1), v.value.abs());
    if (v.tail_bound > tol * scale)
        throw Error(ErrorKind::refusal, std::string(where) + ": truncation bound " + to_decimal(v.tail_bound, 3) +
                                            " exceeds tail_tol; increase R");
}

}  // namespace detail

/// xi(s) = sum_r xi_r (s - 1/2)^(2r), with its truncation bound. Refuses when
/// the bound exceeds tail_tol * max(1, |xi(s)|).
inline XiValue xi_eval_detailed(const Complex& s, const XiCoefficients& xi) {
    ScopedPrecision guard(xi.ctx);
    Complex x = s - Complex(Real(1) / 2);
    XiValue v = detail::xi_series_at(x * x, xi);
    detail::require_certified(v, xi, "xi_eval");
    return v;
}

inline Complex xi_eval(const Complex& s, const XiCoefficients& xi) { return xi_eval_detailed(s, xi).value; }

inline Real xi_eval_real(const Real& s, const XiCoefficients& xi) {
    return xi_eval_detailed(Complex(s), xi).value.re;
}

/// (xi_+(s), xi_-(s)) = sum_r xi_r [s^(2r) +- (s-1)^(2r)].
inline std::pair<Complex, Complex> xi_pm_eval(const Complex& s, const XiCoefficients& xi) {
    ScopedPrecision guard(xi.ctx);
    Complex sm1 = s - Complex(Real(1));
    XiValue upper = detail::xi_series_at(s * s, xi);        // xi(s + 1/2)
    XiValue lower = detail::xi_series_at(sm1 * sm1, xi);    // xi(s - 1/2)
    detail::require_certified(upper, xi, "xi_pm_eval");
    detail::require_certified(lower, xi, "xi_pm_eval");
    return {upper.value + lower.value, upper.value - lower.value};
}

/// Series of xi_+ and xi_- about s = 0, `order` coefficients each:
///   xi_- : s^(2n)   -> -sum_{r>n} C(2r,2n)   xi_r
///          s^(2n+1) ->  sum_{r>n} C(2r,2n+1) xi_r
///   xi_+ = 2 sum_n xi_n s^(2n) - xi_-.
inline std::pair<PowerSeries<Real>, PowerSeries<Real>> xi_pm_series(int order, const XiCoefficients& xi) {
    if (order < 1) throw Error(ErrorKind::argument, "xi_pm_series: order must be >= 1");
    const int R = xi.R();
    if (order > 2 * R)
        throw Error(ErrorKind::range, "xi_pm_series: order " + std::to_string(order) + " needs more than R = " +
                                          std::to_string(R) + " coefficients");
    ScopedPrecision guard(xi.ctx);
    const Real tol = xi.ctx.tail_tol();
    std::vector<Real> minus(static_cast<std::size_t>(order), Real(0));
    for (int k = 0; k < order; ++k) {
        // r runs over 2r > k
        Real sum = 0;
        Real last = 0;
        int r0 = k / 2 + 1;
        for (int r = r0; r <= R; ++r) {
            last = to_real(binomial(static_cast<unsigned>(2 * r), static_cast<unsigned>(k))) * xi[r];
            sum += last;
        }
        if (last > tol * abs(sum))
            throw Error(ErrorKind::range, "xi_pm_series: coefficient " + std::to_string(k) +
                                              " not converged with R = " + std::to_string(R));
        minus[static_cast<std::size_t>(k)] = (k % 2 == 0) ? Real(-sum) : sum;
    }
    std::vector<Real> plus(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        Real even = (k % 2 == 0) ? Real(2 * xi[k / 2]) : Real(0);
        plus[static_cast<std::size_t>(k)] = even - minus[static_cast<std::size_t>(k)];
    }
    return {PowerSeries<Real>(std::move(plus), Real(0)), PowerSeries<Real>(std::move(minus), Real(0))};
}

/// Coefficients of 2 xi(s) = 1 + sum E_l s^(2l) - sum O_l s^(2l-1).
struct EvenOddCoefficients {
    std::vector<Real> E;  // E[l-1] = E_l
    std::vector<Real> O;  // O[l-1] = O_l
    int L() const { return static_cast<int>(E.size()); }

    /// The 2 xi(s) series about s = 0 with `order` coefficients; order <= 2L + 1.
    PowerSeries<Real> two_xi_series(int order, const Real& constant) const {
        if (order < 1 || order > 2 * L() + 1)
            throw Error(ErrorKind::range, "two_xi_series: order outside computed E/O range");
        std::vector<Real> c(static_cast<std::size_t>(order));
        c[0] = constant;
        for (int k = 1; k < order; ++k) {
            int l = (k + 1) / 2;
            c[static_cast<std::size_t>(k)] = (k % 2 == 0) ? E[static_cast<std::size_t>(l - 1)]
                                                          : Real(-O[static_cast<std::size_t>(l - 1)]);
        }
        return PowerSeries<Real>(std::move(c), Real(0));
    }
};

/// E_l = 2 sum_{r>=l} C(2r,2l) xi_r / 2^(2r-2l),
/// O_l = 2 sum_{r>=l} C(2r,2l-1) xi_r / 2^(2r-2l+1), l = 1..L.
inline EvenOddCoefficients even_odd_coeffs(int L, const XiCoefficients& xi) {
    if (L < 1) throw Error(ErrorKind::argument, "even_odd_coeffs: L must be >= 1");
    const int R = xi.R();
    if (L > R) throw Error(ErrorKind::range, "even_odd_coeffs: L exceeds R");
    ScopedPrecision guard(xi.ctx);
    const Real tol = xi.ctx.tail_tol();
    EvenOddCoefficients out;
    out.E.resize(static_cast<std::size_t>(L));
    out.O.resize(static_cast<std::size_t>(L));
    for (int l = 1; l <= L; ++l) {
        Real se = 0, so = 0, last_e = 0, last_o = 0;
        Real scale = 1;  // 2^-(2r-2l)
        for (int r = l; r <= R; ++r) {
            auto r2 = static_cast<unsigned>(2 * r);
            last_e = to_real(binomial(r2, static_cast<unsigned>(2 * l))) *
                     xi[r] * scale;
            last_o = to_real(binomial(r2, static_cast<unsigned>(2 * l - 1))) *
                     xi[r] * scale / 2;
            se += last_e;
            so += last_o;
            scale /= 4;
        }
        if (last_e > tol * se || last_o > tol * so)
            throw Error(ErrorKind::range, "even_odd_coeffs: xi_r tail not negligible at l = " + std::to_string(l));
        out.E[static_cast<std::size_t>(l - 1)] = 2 * se;
        out.O[static_cast<std::size_t>(l - 1)] = 2 * so;
    }
    for (int l = 0; l < L; ++l)
        if (!(out.E[static_cast<std::size_t>(l)] > 0) || !(out.O[static_cast<std::size_t>(l)] > 0))
            throw Error(ErrorKind::invariant, "even_odd_coeffs: non-positive coefficient at l = " + std::to_string(l + 1));
    return out;
}

}  // namespace xili
