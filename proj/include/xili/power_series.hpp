#pragma once

// Dense truncated power series. Binary operations require equal centres and
// truncate to the shorter operand, so the error order of every result is
// explicit in its length.

#include "xili/precision.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace xili {

template <class T>
struct PowerSeries {
    T center{};
    std::vector<T> coeffs;  // coeffs[k] multiplies (x - center)^k

    PowerSeries() = default;
    explicit PowerSeries(std::vector<T> c, T centre = T{}) : center(std::move(centre)), coeffs(std::move(c)) {}

    std::size_t order() const { return coeffs.size(); }
    const T& operator[](std::size_t k) const { return coeffs[k]; }
    T& operator[](std::size_t k) { return coeffs[k]; }

    /// Horner evaluation of the truncated series.
    template <class U>
    U evaluate(const U& x) const {
        U dx = x - U(center);
        U acc = U(T{});
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * dx + U(coeffs[k]);
        return acc;
    }
};

namespace detail {

template <class T>
void require_same_center(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    if (!(a.center == b.center))
        throw Error(ErrorKind::argument, "power series: operands have different expansion points");
}

}  // namespace detail

template <class T>
PowerSeries<T> series_add(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    detail::require_same_center(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a[k] + b[k];
    return PowerSeries<T>(std::move(c), a.center);
}

template <class T>
PowerSeries<T> series_sub(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    detail::require_same_center(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n);
    for (std::size_t k = 0; k < n; ++k) c[k] = a[k] - b[k];
    return PowerSeries<T>(std::move(c), a.center);
}

template <class T, class K>
PowerSeries<T> series_scale(const PowerSeries<T>& a, const K& factor) {
    PowerSeries<T> out = a;
    for (auto& c : out.coeffs) c = c * factor;
    return out;
}

/// Cauchy product truncated to min(order a, order b).
template <class T>
PowerSeries<T> series_mul(const PowerSeries<T>& a, const PowerSeries<T>& b) {
    detail::require_same_center(a, b);
    std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n, T{});
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == T{}) continue;
        for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
    }
    return PowerSeries<T>(std::move(c), a.center);
}

/// B with a * B = 1 through the order of `a`, via
/// B_0 = 1/a_0, B_j = -(1/a_0) * sum_{p=1..j} a_p B_{j-p}.
/// For a_0 = 1 this is the A_j recurrence used for 1/phi(z).
template <class T>
PowerSeries<T> series_reciprocal(const PowerSeries<T>& a) {
    if (a.order() == 0) throw Error(ErrorKind::argument, "series_reciprocal: empty series");
    if (a[0] == T{}) throw Error(ErrorKind::argument, "series_reciprocal: zero constant term");
    std::size_t n = a.order();
    std::vector<T> b(n, T{});
    T inv0 = T(1) / a[0];
    b[0] = inv0;
    for (std::size_t j = 1; j < n; ++j) {
        T acc = a[j] * b[0];
        for (std::size_t p = 1; p < j; ++p) acc += a[p] * b[j - p];
        b[j] = -(acc * inv0);
    }
    return PowerSeries<T>(std::move(b), a.center);
}

/// Term-by-term derivative; the result is one order shorter.
template <class T>
PowerSeries<T> series_derivative(const PowerSeries<T>& a) {
    std::vector<T> d;
    if (a.order() > 1) {
        d.resize(a.order() - 1);
        for (std::size_t k = 1; k < a.order(); ++k) d[k - 1] = a[k] * T(static_cast<long>(k));
    }
    return PowerSeries<T>(std::move(d), a.center);
}

/// Antiderivative with the given constant term; one order longer.
template <class T>
PowerSeries<T> series_antiderivative(const PowerSeries<T>& a, T constant = T{}) {
    std::vector<T> out(a.order() + 1);
    out[0] = std::move(constant);
    for (std::size_t k = 0; k < a.order(); ++k) out[k + 1] = a[k] / T(static_cast<long>(k + 1));
    return PowerSeries<T>(std::move(out), a.center);
}

/// log of a series with positive constant term, computed as
/// log a_0 + integral(a'/a). The result keeps the order of `a`.
inline PowerSeries<Real> series_log(const PowerSeries<Real>& a) {
    if (a.order() == 0) throw Error(ErrorKind::argument, "series_log: empty series");
    if (a[0] <= 0) throw Error(ErrorKind::argument, "series_log: constant term must be positive");
    PowerSeries<Real> quotient = series_mul(series_derivative(a), series_reciprocal(a));
    return series_antiderivative(quotient, Real(log(a[0])));
}

/// Exact coefficients a_r(n), n = 0..order, of ((1+w)/(1-w))^r.
inline std::vector<BigInt> binomial_ratio_coefficients(int r, int order) {
    if (order < 1) throw Error(ErrorKind::argument, "binomial_ratio_series: order must be >= 1");
    if (r < 0) throw Error(ErrorKind::argument, "binomial_ratio_series: r must be non-negative");
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
    c[0] = 1;
    for (int step = 0; step < r; ++step) {
        // multiply by (1 + w), then divide by (1 - w) (prefix sums)
        for (std::size_t n = c.size() - 1; n > 0; --n) c[n] += c[n - 1];
        for (std::size_t n = 1; n < c.size(); ++n) c[n] += c[n - 1];
    }
    return c;
}

/// Exact series of ((1+w)/(1-w))^r, for cross-checks in integer arithmetic.
inline PowerSeries<BigInt> binomial_ratio_series_exact(int r, int order) {
    return PowerSeries<BigInt>(binomial_ratio_coefficients(r, order), BigInt(0));
}

/// a_r(n) cast to the active working precision.
inline PowerSeries<Real> binomial_ratio_series(int r, int order) {
    auto exact = binomial_ratio_coefficients(r, order);
    std::vector<Real> c;
    c.reserve(exact.size());
    for (const auto& v : exact) c.push_back(to_real(v));
    return PowerSeries<Real>(std::move(c), Real(0));
}

}  // namespace xili
