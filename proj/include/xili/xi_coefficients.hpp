#pragma once

// Taylor coefficients xi_r of xi(1/2 + s) in powers of s^2, from the
// moment integrals
//
//     xi_r = 4/(2r)! * int_0^inf Phi(u) u^(2r) du,
//     Phi(u) = sum_{n>=1} (2 pi^2 n^4 e^(9u/2) - 3 pi n^2 e^(5u/2)) exp(-pi n^2 e^(2u)).
//
// Phi is even and analytic in a strip about the real axis and decays doubly
// exponentially, so the trapezoidal rule on the half line converges
// geometrically in the number of nodes. Halving the step reuses every
// previous node and doubles as the error estimate.

#include "xili/precision.hpp"

#include <string>
#include <vector>

namespace xili {

enum class XiMethod { quadrature, imported };

inline std::string to_string(XiMethod m) { return m == XiMethod::quadrature ? "quadrature" : "imported"; }

struct QuadratureReport {
    int levels = 0;           ///< number of step halvings performed
    long nodes = 0;           ///< nodes in the final rule (excluding u = 0)
    double step = 0;          ///< final step h
    double upper_limit = 0;   ///< truncation point U
    Real achieved_error;      ///< max_r relative change over the last halving
    Real tail_bound;          ///< first-term bound on the neglected [U, inf) contribution, relative
};

struct XiCoefficients {
    std::vector<Real> values;  // values[r] = xi_r, r = 0..R
    XiMethod method = XiMethod::quadrature;
    PrecisionContext ctx;
    QuadratureReport quadrature;

    int R() const { return static_cast<int>(values.size()) - 1; }
    const Real& operator[](int r) const { return values[static_cast<std::size_t>(r)]; }
};

namespace detail {

/// Phi(u) at the active precision; stops once a term drops below tol * sum.
inline Real phi_weight_impl(const Real& u, const Real& pi, const Real& tol) {
    Real e2u = exp(2 * u);
    Real e_half = exp(u / 2);
    Real e5 = pow(e_half, 5);
    Real e9 = pow(e_half, 9);
    Real q = exp(-pi * e2u);
    // q^(n^2) built incrementally: q^((n+1)^2) = q^(n^2) * q^(2n+1)
    Real qn2 = q;
    Real step = q * q * q;
    Real q2 = q * q;
    Real sum = 0;
    for (long n = 1;; ++n) {
        Real n2 = Real(n * n);
        Real term = (2 * pi * pi * n2 * n2 * e9 - 3 * pi * n2 * e5) * qn2;
        sum += term;
        if (qn2 == 0 || abs(term) <= tol * abs(sum)) break;
        qn2 *= step;
        step *= q2;
    }
    return sum;
}

}  // namespace detail

/// The weight Phi(u); defined for u >= 0 (it is even in u).
inline Real phi_weight(const Real& u, const PrecisionContext& ctx) {
    if (u < 0) throw Error(ErrorKind::argument, "phi_weight: u must be non-negative");
    ScopedPrecision guard(ctx);
    Real eps = PrecisionContext::pow10(-ctx.working_digits());
    return detail::phi_weight_impl(u, pi_value(), eps);
}

/// xi_r, r = 0..R, by trapezoidal quadrature of the Phi moments.
inline XiCoefficients xi_r_table(int R, const PrecisionContext& ctx, int max_levels = 12) {
    if (R < 0) throw Error(ErrorKind::argument, "xi_r_table: R must be >= 0");
    ctx.validate();
    ScopedPrecision guard(ctx);

    const Real pi = pi_value();
    const Real eps_phi = PrecisionContext::pow10(-ctx.working_digits() - 5);
    // accuracy target for the moments; tighter than the promised digits
    const Real target = PrecisionContext::pow10(-(ctx.digits + ctx.guard_digits / 2));
    const Real tail_eps = PrecisionContext::pow10(-ctx.working_digits() - 5);
    const std::size_t nr = static_cast<std::size_t>(R) + 1;

    // sums[r] accumulates sum_k f_r(k h) over nodes k >= 1 of the current rule
    std::vector<Real> sums(nr, Real(0));
    auto add_node = [&](const Real& u, std::vector<Real>& acc) {
        Real f = detail::phi_weight_impl(u, pi, eps_phi);
        Real u2 = u * u;
        for (std::size_t r = 0; r < nr; ++r) {
            acc[r] += f;
            f *= u2;
        }
    };

    // Level 0 also fixes the truncation point U: march until every moment's
    // integrand is past its peak and negligible against its running sum.
    Real h = Real(1) / 8;
    double upper = 0;
    std::vector<Real> prev_term(nr, Real(0));
    long k = 1;
    for (;; ++k) {
        Real u = h * k;
        Real f = detail::phi_weight_impl(u, pi, eps_phi);
        Real u2 = u * u;
        bool negligible = u > 1;
        for (std::size_t r = 0; r < nr; ++r) {
            sums[r] += f;
            if (!(f < prev_term[r]) || f > tail_eps * sums[r]) negligible = false;
            prev_term[r] = f;
            f *= u2;
        }
        if (negligible) break;
        if (k > 4000)
            throw Error(ErrorKind::refusal, "xi_r_table: integrand did not decay; R too large for quadrature");
    }
    long k_max = k;
    upper = static_cast<double>(k_max) / 8.0;

    const Real phi0 = detail::phi_weight_impl(Real(0), pi, eps_phi);
    auto moments = [&](const Real& step) {
        std::vector<Real> m(nr);
        for (std::size_t r = 0; r < nr; ++r) m[r] = step * sums[r];
        m[0] += step * phi0 / 2;
        return m;
    };

    std::vector<Real> current = moments(h);
    QuadratureReport report;
    Real change = 1;
    int level = 0;
    long nodes = k_max;
    while (level < max_levels) {
        ++level;
        // add midpoints of the current rule
        Real half = h / 2;
        long count = nodes;
        for (long j = 0; j < count; ++j) add_node(half * (2 * j + 1), sums);
        nodes += count;
        h = half;
        std::vector<Real> refined = moments(h);
        change = 0;
        for (std::size_t r = 0; r < nr; ++r) {
            Real d = relative_difference(refined[r], current[r]);
            if (d > change) change = d;
        }
        current = std::move(refined);
        if (change < target) break;
    }
    if (!(change < target)) {
        throw Error(ErrorKind::refusal, "xi_r_table: quadrature reached relative change " + to_decimal(change, 3) +
                                            " after " + std::to_string(level) + " halvings; requested " +
                                            to_decimal(target, 3));
    }

    // Neglected tail beyond U from the leading term of Phi:
    // int_U^inf u^(2r) 2 pi^2 e^(9u/2 - pi e^(2u)) du  <~  integrand(U) / (2 pi e^(2U) - 9/2 - 2r/U)
    Real U = Real(upper);
    Real lead = 2 * pi * pi * exp(Real(9) * U / 2 - pi * exp(2 * U));
    Real tail_rel = 0;
    {
        Real upow = 1;
        Real U2 = U * U;
        for (std::size_t r = 0; r < nr; ++r) {
            Real rate = 2 * pi * exp(2 * U) - Real(9) / 2 - Real(2 * static_cast<long>(r)) / U;
            Real bound = rate > 1 ? lead * upow / rate : lead * upow;
            Real rel = bound / current[r];
            if (rel > tail_rel) tail_rel = rel;
            upow *= U2;
        }
    }

    XiCoefficients xi;
    xi.method = XiMethod::quadrature;
    xi.ctx = ctx;
    xi.values.resize(nr);
    Real factorial = 1;
    for (std::size_t r = 0; r < nr; ++r) {
        if (r > 0) factorial *= Real(static_cast<long>((2 * r - 1) * (2 * r)));
        xi.values[r] = 4 * current[r] / factorial;
        if (!(xi.values[r] > 0))
            throw Error(ErrorKind::invariant, "xi_r_table: computed xi_" + std::to_string(r) + " is not positive");
    }
    report.levels = level;
    report.nodes = nodes;
    report.step = static_cast<double>(h);
    report.upper_limit = upper;
    report.achieved_error = change;
    report.tail_bound = tail_rel;
    xi.quadrature = report;
    return xi;
}

/// 2 * sum_r xi_r / 4^r, which equals 2 xi(1) = 1.
inline Real xi_unit_sum(const XiCoefficients& xi) {
    ScopedPrecision guard(xi.ctx);
    Real s = 0;
    Real w = 1;
    for (const auto& v : xi.values) {
        s += v * w;
        w /= 4;
    }
    return 2 * s;
}

}  // namespace xili
