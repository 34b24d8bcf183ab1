#pragma once

// Least-squares fits and asymptotic checks on a_n and the C_{n,p} triangle.

#include "xili/li_coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace xili {

struct FitResult {
    std::string model;
    std::vector<std::pair<std::string, Real>> params;
    Real residual_rms;
    Real max_abs_residual;
    Real lo, hi;
    int sample_count = 0;

    const Real& param(const std::string& name) const {
        for (const auto& [k, v] : params)
            if (k == name) return v;
        throw Error(ErrorKind::argument, "FitResult: no parameter '" + name + "'");
    }
};

/// Ordinary least squares y ~ X beta via the normal equations, solved by
/// Gaussian elimination with partial pivoting at the active precision.
inline FitResult least_squares(const std::string& model, const std::vector<std::string>& names,
                               const std::vector<std::vector<Real>>& X, const std::vector<Real>& y, const Real& lo,
                               const Real& hi) {
    const std::size_t k = names.size();
    const std::size_t m = y.size();
    if (X.size() != m) throw Error(ErrorKind::argument, "least_squares: row count mismatch");
    if (m < k + 1) throw Error(ErrorKind::argument, "least_squares: degenerate range, too few samples");
    std::vector<std::vector<Real>> A(k, std::vector<Real>(k + 1, Real(0)));
    for (std::size_t r = 0; r < m; ++r) {
        if (X[r].size() != k) throw Error(ErrorKind::argument, "least_squares: row width mismatch");
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) A[i][j] += X[r][i] * X[r][j];
            A[i][k] += X[r][i] * y[r];
        }
    }
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < k; ++r)
            if (abs(A[r][c]) > abs(A[piv][c])) piv = r;
        if (A[piv][c] == 0) throw Error(ErrorKind::argument, "least_squares: singular design");
        std::swap(A[c], A[piv]);
        for (std::size_t r = 0; r < k; ++r) {
            if (r == c) continue;
            Real f = A[r][c] / A[c][c];
            for (std::size_t j = c; j <= k; ++j) A[r][j] -= f * A[c][j];
        }
    }
    FitResult out;
    out.model = model;
    std::vector<Real> beta(k);
    for (std::size_t i = 0; i < k; ++i) {
        beta[i] = A[i][k] / A[i][i];
        out.params.emplace_back(names[i], beta[i]);
    }
    Real ss = 0, worst = 0;
    for (std::size_t r = 0; r < m; ++r) {
        Real pred = 0;
        for (std::size_t i = 0; i < k; ++i) pred += X[r][i] * beta[i];
        Real e = y[r] - pred;
        ss += e * e;
        worst = std::max(worst, Real(abs(e)));
    }
    out.residual_rms = sqrt(ss / static_cast<long>(m));
    out.max_abs_residual = worst;
    out.lo = lo;
    out.hi = hi;
    out.sample_count = static_cast<int>(m);
    return out;
}

namespace detail {

inline void require_li_range(const LiCoefficients& li, int lo, int hi, const char* who) {
    if (lo < 1 || hi > li.N() || hi < lo)
        throw Error(ErrorKind::range, std::string(who) + ": range outside computed a_n");
}

}  // namespace detail

/// log a_n / n ~ c0 + c1 log n over n in [lo, hi].
inline FitResult fit_log_an(const LiCoefficients& li, int lo, int hi) {
    if (lo < 2 || hi <= lo) throw Error(ErrorKind::argument, "fit_log_an: need hi > lo >= 2");
    detail::require_li_range(li, lo, hi, "fit_log_an");
    ScopedPrecision guard(li.ctx);
    std::vector<std::vector<Real>> X;
    std::vector<Real> y;
    for (int n = lo; n <= hi; ++n) {
        X.push_back({Real(1), log(Real(n))});
        y.push_back(log(li.a(n)) / n);
    }
    return least_squares("log_an_over_n", {"c0", "c1"}, X, y, Real(lo), Real(hi));
}

/// 15 n / log^3 n.
inline Real asym_formula(int n) {
    Real l = log(Real(n));
    return Real(15) * n / (l * l * l);
}

struct AsymReport {
    std::vector<std::pair<int, Real>> ratios;  // (n, log a_n / (15 n / log^3 n))
    Real min, max;
};

inline AsymReport asym_check(const LiCoefficients& li, int lo, int hi) {
    if (lo < 2) throw Error(ErrorKind::argument, "asym_check: need lo >= 2");
    detail::require_li_range(li, lo, hi, "asym_check");
    ScopedPrecision guard(li.ctx);
    AsymReport rep;
    for (int n = lo; n <= hi; ++n) {
        Real r = log(li.a(n)) / asym_formula(n);
        if (rep.ratios.empty() || r < rep.min) rep.min = r;
        if (rep.ratios.empty() || r > rep.max) rep.max = r;
        rep.ratios.emplace_back(n, r);
    }
    return rep;
}

/// j_m(n) = argmax_{j>=1} a_j (1 - 1/n)^j for integer n = 2..n_max, j <= N.
/// A maximiser at j = N means the a_j table is too short.
inline std::vector<std::pair<int, int>> jm_scan(const LiCoefficients& li, int n_max) {
    if (n_max < 2) throw Error(ErrorKind::argument, "jm_scan: n_max must be >= 2");
    ScopedPrecision guard(li.ctx);
    const int N = li.N();
    std::vector<Real> loga(static_cast<std::size_t>(N) + 1);
    for (int j = 0; j <= N; ++j) loga[static_cast<std::size_t>(j)] = log(li.a(j));
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= n_max; ++n) {
        Real step = log(Real(n - 1) / n);
        int best = 1;
        Real best_val = loga[1] + step;
        for (int j = 2; j <= N; ++j) {
            Real v = loga[static_cast<std::size_t>(j)] + step * j;
            if (v > best_val) {
                best_val = v;
                best = j;
            }
        }
        if (best >= N)
            throw Error(ErrorKind::range, "jm_scan: maximiser at the table edge for n = " + std::to_string(n));
        out.emplace_back(n, best);
    }
    return out;
}

/// log j_m ~ c + exponent log n over the scanned n >= lo.
inline FitResult fit_jm_exponent(const std::vector<std::pair<int, int>>& jm, int lo) {
    std::vector<std::vector<Real>> X;
    std::vector<Real> y;
    int hi = lo;
    for (const auto& [n, j] : jm) {
        if (n < lo || j < 1) continue;
        X.push_back({Real(1), log(Real(n))});
        y.push_back(log(Real(j)));
        hi = std::max(hi, n);
    }
    return least_squares("jm_power_law", {"c", "exponent"}, X, y, Real(lo), Real(hi));
}

struct PaRow {
    int n = 0;
    int p_a = 0;
    Real log_summand;  ///< log(C_{n,p_a} Sigma_{p_a})
    Real log_sigma;    ///< log Sigma_{p_a}
    Real derivative;   ///< log Sigma_{p_a+1} - log Sigma_{p_a}
    Real central_derivative;  ///< (log Sigma_{p_a+1} - log Sigma_{p_a-1}) / 2
};

/// Peak of the a_n summand over one stored row of C.
inline PaRow pa_row(int n, const std::vector<Real>& row, const SigmaTable& sig) {
    if (sig.p_max() < n + 1) throw Error(ErrorKind::range, "pa_table: Sigma table does not reach p = n + 1");
    PaRow out;
    out.n = n;
    bool first = true;
    const int p0 = CnpTable<Real>::first_p(n);
    for (int p = p0, i = 0; p <= n; p += 2, ++i) {
        const Real& c = row[static_cast<std::size_t>(i)];
        if (!(c > 0)) continue;
        Real v = log(c) + log(sig[p]);
        if (first || v > out.log_summand) {
            out.log_summand = v;
            out.p_a = p;
            first = false;
        }
    }
    out.log_sigma = log(sig[out.p_a]);
    out.derivative = log(sig[out.p_a + 1]) - out.log_sigma;
    out.central_derivative = (log(sig[out.p_a + 1]) - log(sig[out.p_a - 1])) / 2;
    return out;
}

inline std::vector<PaRow> pa_table(const CnpTable<Real>& cnp, const SigmaTable& sig, const std::vector<int>& n_list) {
    ScopedPrecision guard(sig.ctx);
    std::vector<PaRow> out;
    for (int n : n_list) {
        if (n < 1 || n > cnp.n_max()) throw Error(ErrorKind::range, "pa_table: row " + std::to_string(n) + " not built");
        out.push_back(pa_row(n, cnp.row(n), sig));
    }
    return out;
}

/// Streams C rows up to max(n_list); for n beyond a practical full table.
inline std::vector<PaRow> pa_table_streaming(const SigmaTable& sig, std::vector<int> n_list) {
    ScopedPrecision guard(sig.ctx);
    std::sort(n_list.begin(), n_list.end());
    std::vector<PaRow> out;
    CnpRowGenerator<Real> gen;
    std::size_t next = 0;
    while (next < n_list.size()) {
        const auto& row = gen.next();
        while (next < n_list.size() && n_list[next] == gen.n()) out.push_back(pa_row(gen.n(), row, sig)), ++next;
        while (next < n_list.size() && n_list[next] < gen.n()) ++next;
    }
    return out;
}

struct PeakRow {
    int n = 0;
    int p_m = 0;
    Real peak;     ///< C_{n,p_m}
    Real row_sum;  ///< should equal 4n
};

inline PeakRow peak_of_row(int n, const std::vector<Real>& row) {
    PeakRow out;
    out.n = n;
    out.row_sum = 0;
    const int p0 = CnpTable<Real>::first_p(n);
    for (int p = p0, i = 0; p <= n; p += 2, ++i) {
        const Real& c = row[static_cast<std::size_t>(i)];
        out.row_sum += c;
        if (out.p_m == 0 || c > out.peak) {
            out.peak = c;
            out.p_m = p;
        }
    }
    return out;
}

inline std::vector<PeakRow> cnp_peak_scan(const CnpTable<Real>& cnp, int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi > cnp.n_max() || n_hi < n_lo) throw Error(ErrorKind::range, "cnp_peak_scan: range outside table");
    std::vector<PeakRow> out;
    for (int n = n_lo; n <= n_hi; ++n) out.push_back(peak_of_row(n, cnp.row(n)));
    return out;
}

/// 0.78237057 n + 151.978136, the empirical peak-height line.
inline Real peak_height_line(int n) { return Real("0.78237057") * n + Real("151.978136"); }

/// log C_{n,p} - log n ~ a x log x + b x + c with x = p - log n, over
/// admissible p in [p_lo, p_hi].
inline FitResult cnp_fit_row(int n, const std::vector<Real>& row, int p_lo, int p_hi) {
    if (p_lo < 1 || p_hi > n || p_hi <= p_lo) throw Error(ErrorKind::argument, "cnp_fit: p range must lie in [1, n]");
    const Real ln = log(Real(n));
    std::vector<std::vector<Real>> X;
    std::vector<Real> y;
    const int p0 = CnpTable<Real>::first_p(n);
    for (int p = p0, i = 0; p <= n; p += 2, ++i) {
        if (p < p_lo || p > p_hi) continue;
        Real x = p - ln;
        if (!(x > 0)) throw Error(ErrorKind::argument, "cnp_fit: p - log n must be positive");
        const Real& c = row[static_cast<std::size_t>(i)];
        if (!(c > 0)) throw Error(ErrorKind::invariant, "cnp_fit: non-positive C entry");
        X.push_back({x * log(x), x, Real(1)});
        y.push_back(log(c) - ln);
    }
    return least_squares("log_cnp", {"a", "b", "c"}, X, y, Real(p_lo), Real(p_hi));
}

inline FitResult cnp_fit(const CnpTable<Real>& cnp, int n, int p_lo, int p_hi) {
    if (n < 1 || n > cnp.n_max()) throw Error(ErrorKind::range, "cnp_fit: row not built");
    return cnp_fit_row(n, cnp.row(n), p_lo, p_hi);
}

/// Row n of C at the active precision without holding the triangle.
inline std::vector<Real> cnp_row_streaming(int n) {
    if (n < 1) throw Error(ErrorKind::argument, "cnp_row_streaming: n must be >= 1");
    CnpRowGenerator<Real> gen;
    while (gen.n() < n - 1) gen.next();
    return gen.next();
}

/// -1 - 2 / log n, the slow drift of the fitted a.
inline Real cnp_fit_a_estimate(int n) { return -1 - 2 / log(Real(n)); }

/// Stirling form of log(4^n / (n! n)) through the 1/(12 n) term.
inline Real stirling_log_cnn_over_n(int n) {
    Real ln = log(Real(n));
    return -n * ln + (1 + log(Real(4))) * n - Real(3) / 2 * ln - log(2 * pi_value()) / 2 - Real(1) / (12 * n);
}

inline Real exact_log_cnn_over_n(int n) { return n * log(Real(4)) - log_gamma(Real(n + 1)) - log(Real(n)); }

struct CollapseCurve {
    int n = 0;
    std::vector<std::pair<Real, Real>> points;  ///< (p - 2 log n, C_{n,p} / n)
    Real mass;                                  ///< sum of C_{n,p} / n, should be 4
};

struct CollapseReport {
    std::vector<CollapseCurve> curves;
    /// (n1, n2, sup |F_1 - F_2| on the common x-window)
    std::vector<std::tuple<int, int, Real>> distances;
    int stirling_n = 50;
    Real stirling_error;
};

namespace detail {

inline Real interpolate(const std::vector<std::pair<Real, Real>>& pts, const Real& x) {
    auto it = std::lower_bound(pts.begin(), pts.end(), x, [](const auto& p, const Real& v) { return p.first < v; });
    if (it == pts.begin()) return it->second;
    if (it == pts.end()) return pts.back().second;
    const auto& [x1, y1] = *it;
    const auto& [x0, y0] = *(it - 1);
    return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
}

}  // namespace detail

inline CollapseReport continuum_collapse_rows(const std::vector<std::pair<int, std::vector<Real>>>& rows,
                                              int stirling_n = 50) {
    CollapseReport rep;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (rows[i].first == rows[j].first) throw Error(ErrorKind::argument, "continuum_collapse: repeated n");
    for (const auto& [n, row] : rows) {
        if (n < 100) throw Error(ErrorKind::argument, "continuum_collapse: each n must be >= 100");
        CollapseCurve curve;
        curve.n = n;
        curve.mass = 0;
        const Real shift = 2 * log(Real(n));
        const int p0 = CnpTable<Real>::first_p(n);
        for (int p = p0, i = 0; p <= n; p += 2, ++i) {
            Real f = row[static_cast<std::size_t>(i)] / n;
            curve.mass += f;
            curve.points.emplace_back(p - shift, f);
        }
        rep.curves.push_back(std::move(curve));
    }
    for (std::size_t i = 0; i < rep.curves.size(); ++i) {
        for (std::size_t j = i + 1; j < rep.curves.size(); ++j) {
            const auto& A = rep.curves[i].points;
            const auto& B = rep.curves[j].points;
            Real lo = std::max(A.front().first, B.front().first);
            Real hi = std::min(A.back().first, B.back().first);
            if (!(hi > lo)) throw Error(ErrorKind::argument, "continuum_collapse: insufficient overlap window");
            Real sup = 0;
            for (const auto& [x, y] : A)
                if (x >= lo && x <= hi) sup = std::max(sup, Real(abs(y - detail::interpolate(B, x))));
            for (const auto& [x, y] : B)
                if (x >= lo && x <= hi) sup = std::max(sup, Real(abs(y - detail::interpolate(A, x))));
            rep.distances.emplace_back(rep.curves[i].n, rep.curves[j].n, sup);
        }
    }
    rep.stirling_n = stirling_n;
    rep.stirling_error = abs(exact_log_cnn_over_n(stirling_n) - stirling_log_cnn_over_n(stirling_n));
    return rep;
}

inline CollapseReport continuum_collapse(const CnpTable<Real>& cnp, const std::vector<int>& n_list) {
    std::vector<std::pair<int, std::vector<Real>>> rows;
    for (int n : n_list) {
        if (n < 1 || n > cnp.n_max()) throw Error(ErrorKind::range, "continuum_collapse: row not built");
        rows.emplace_back(n, cnp.row(n));
    }
    return continuum_collapse_rows(rows);
}

}  // namespace xili
