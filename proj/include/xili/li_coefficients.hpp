#pragma once

// Li coefficients a_n through the triangle C_{n,p} and the moment sums
// Sigma_p = sum_{r>=1} xi_r r^p / 4^r:
//
//     a_n = 2 sum_{p=1..n} C_{n,p} Sigma_p,
//     C_{n,p} = (4/n) C_{n-1,p-1} + ((n-2)/n) C_{n-2,p},   C_{1,1} = 4,
//
// together with an independent route that expands
// phi(z) = 2 sum_r (xi_r/4^r) ((1+z)/(1-z))^(2r) directly.

#include "xili/power_series.hpp"
#include "xili/xi_coefficients.hpp"

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace xili {

enum class ArithmeticMode { exact_rational, bigfloat };

/// Largest row built in exact rational arithmetic; entries grow like n! in size.
inline constexpr int kExactCnpRowLimit = 300;

/// Triangular C_{n,p}, 1 <= p <= n <= n_max. Only entries with n + p even are
/// stored; the others are zero by construction.
template <class T>
class CnpTable {
public:
    static constexpr ArithmeticMode arithmetic_mode =
        std::is_same_v<T, Rational> ? ArithmeticMode::exact_rational : ArithmeticMode::bigfloat;

    CnpTable() = default;
    explicit CnpTable(std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {}

    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    /// C_{n,p}; zero for mixed parity or p outside [1, n].
    T at(int n, int p) const {
        if (n < 1 || n > n_max()) throw Error(ErrorKind::range, "CnpTable: row " + std::to_string(n) + " not built");
        if (p < 1 || p > n || (n + p) % 2 != 0) return T(0);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(slot(n, p))];
    }

    /// Stored entries of row n, p = n%2==0 ? 2,4,..,n : 1,3,..,n.
    const std::vector<T>& row(int n) const { return rows_.at(static_cast<std::size_t>(n)); }

    static int slot(int n, int p) { return (n % 2 == 0) ? p / 2 - 1 : (p - 1) / 2; }
    static int first_p(int n) { return (n % 2 == 0) ? 2 : 1; }

private:
    std::vector<std::vector<T>> rows_;  // rows_[0] is empty
};

/// Streams rows of the C_{n,p} triangle keeping only the last two.
template <class T>
class CnpRowGenerator {
public:
    /// Advances to the next row and returns it (row 1 first).
    const std::vector<T>& next() {
        ++n_;
        std::vector<T> row(static_cast<std::size_t>((n_ + 1) / 2));
        if (n_ == 1) {
            row[0] = T(4);
        } else {
            const T a = T(4) / T(n_);
            const T b = T(n_ - 2) / T(n_);
            const int p0 = CnpTable<T>::first_p(n_);
            for (int p = p0, i = 0; p <= n_; p += 2, ++i) {
                T v = T(0);
                // C_{n-1,p-1}: row n-1 has the opposite parity, so p-1 is admissible there
                if (p - 1 >= 1) v += a * prev1_[static_cast<std::size_t>(CnpTable<T>::slot(n_ - 1, p - 1))];
                if (n_ - 2 >= 1 && p <= n_ - 2) v += b * prev2_[static_cast<std::size_t>(CnpTable<T>::slot(n_ - 2, p))];
                row[static_cast<std::size_t>(i)] = std::move(v);
            }
        }
        prev2_ = std::move(prev1_);
        prev1_ = std::move(row);
        return prev1_;
    }

    int n() const { return n_; }

private:
    int n_ = 0;
    std::vector<T> prev1_;
    std::vector<T> prev2_;
};

/// Builds the full triangle. Rational tables are exact and limited to
/// kExactCnpRowLimit rows; Real tables use the active precision.
template <class T>
CnpTable<T> cnp_build(int n_max) {
    if (n_max < 1) throw Error(ErrorKind::argument, "cnp_build: n_max must be >= 1");
    if constexpr (std::is_same_v<T, Rational>) {
        if (n_max > kExactCnpRowLimit)
            throw Error(ErrorKind::range, "cnp_build: exact mode is limited to n <= " +
                                              std::to_string(kExactCnpRowLimit));
    }
    std::vector<std::vector<T>> rows(static_cast<std::size_t>(n_max) + 1);
    CnpRowGenerator<T> gen;
    for (int n = 1; n <= n_max; ++n) rows[static_cast<std::size_t>(n)] = gen.next();
    return CnpTable<T>(std::move(rows));
}

inline CnpTable<Real> cnp_build_float(int n_max, const PrecisionContext& ctx) {
    ScopedPrecision guard(ctx);
    return cnp_build<Real>(n_max);
}

/// Sigma_p for p = 0..p_max.
struct SigmaTable {
    std::vector<Real> values;
    PrecisionContext ctx;
    int terms_used = 0;  ///< largest r touched by any p

    int p_max() const { return static_cast<int>(values.size()) - 1; }
    const Real& operator[](int p) const { return values.at(static_cast<std::size_t>(p)); }
};

/// Sigma_p = sum_{r>=1} xi_r r^p / 4^r. The summand is unimodal in r; each sum
/// stops once three consecutive terms past the peak fall below tail_tol * sum.
inline SigmaTable sigma_table(int p_max, const XiCoefficients& xi) {
    if (p_max < 0) throw Error(ErrorKind::argument, "sigma_table: p_max must be >= 0");
    ScopedPrecision guard(xi.ctx);
    const int R = xi.R();
    const Real tol = PrecisionContext::pow10(-xi.ctx.working_digits());
    std::vector<Real> weight(static_cast<std::size_t>(R) + 1);  // xi_r / 4^r * r^p, updated per p
    {
        Real quarter = 1;
        for (int r = 0; r <= R; ++r) {
            weight[static_cast<std::size_t>(r)] = xi[r] * quarter;
            quarter /= 4;
        }
    }
    SigmaTable out;
    out.ctx = xi.ctx;
    out.values.resize(static_cast<std::size_t>(p_max) + 1);
    int used = 0;
    int r_end = R;  // weights beyond the last used r stay valid: we update all r <= R
    for (int p = 0; p <= p_max; ++p) {
        if (p > 0)
            for (int r = 1; r <= r_end; ++r) weight[static_cast<std::size_t>(r)] *= Real(r);
        Real sum = 0;
        Real prev = 0;
        bool past_peak = false;
        int quiet = 0;
        int r = 1;
        for (; r <= R; ++r) {
            const Real& term = weight[static_cast<std::size_t>(r)];
            sum += term;
            if (r > 1 && term < prev) past_peak = true;
            prev = term;
            if (past_peak && term < tol * sum) {
                if (++quiet == 3) break;
            } else {
                quiet = 0;
            }
        }
        if (quiet < 3)
            throw Error(ErrorKind::range, "sigma_table: R = " + std::to_string(R) +
                                              " xi_r terms do not resolve Sigma_" + std::to_string(p));
        if (r > used) used = r;
        out.values[static_cast<std::size_t>(p)] = std::move(sum);
    }
    out.terms_used = used;
    return out;
}

enum class LiMethod { cnp_sum, oracle_composition };

inline std::string to_string(LiMethod m) { return m == LiMethod::cnp_sum ? "cnp-sum" : "oracle-composition"; }

/// a_n for n = 1..N; a(0) = 1 is the constant term of phi.
struct LiCoefficients {
    std::vector<Real> values;  // values[n-1] = a_n
    LiMethod method = LiMethod::cnp_sum;
    PrecisionContext ctx;

    int N() const { return static_cast<int>(values.size()); }
    Real a(int n) const {
        if (n == 0) return Real(1);
        if (n < 0 || n > N()) throw Error(ErrorKind::range, "a_n: index " + std::to_string(n) + " not computed");
        return values[static_cast<std::size_t>(n - 1)];
    }
};

namespace detail {

inline void check_li_positive(const LiCoefficients& li) {
    for (int n = 1; n <= li.N(); ++n)
        if (!(li.values[static_cast<std::size_t>(n - 1)] > 0))
            throw Error(ErrorKind::invariant, "a_" + std::to_string(n) + " is not positive");
}

template <class Row>
Real cnp_row_dot(int n, const Row& row, const SigmaTable& sig) {
    Real acc = 0;
    const int p0 = CnpTable<Real>::first_p(n);
    for (int p = p0, i = 0; p <= n; p += 2, ++i) acc += row[static_cast<std::size_t>(i)] * sig[p];
    return 2 * acc;
}

}  // namespace detail

/// a_n = 2 sum_p C_{n,p} Sigma_p.
inline LiCoefficients li_an(int N, const CnpTable<Real>& cnp, const SigmaTable& sig) {
    if (N < 1) throw Error(ErrorKind::argument, "li_an: N must be >= 1");
    if (cnp.n_max() < N || sig.p_max() < N)
        throw Error(ErrorKind::range, "li_an: tables do not reach n = " + std::to_string(N));
    ScopedPrecision guard(sig.ctx);
    LiCoefficients li;
    li.ctx = sig.ctx;
    li.method = LiMethod::cnp_sum;
    li.values.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) li.values.push_back(detail::cnp_row_dot(n, cnp.row(n), sig));
    detail::check_li_positive(li);
    return li;
}

/// Same sum with streamed C rows, for N too large to hold the triangle.
inline LiCoefficients li_an_streaming(int N, const SigmaTable& sig) {
    if (N < 1) throw Error(ErrorKind::argument, "li_an: N must be >= 1");
    if (sig.p_max() < N) throw Error(ErrorKind::range, "li_an: Sigma table does not reach p = " + std::to_string(N));
    ScopedPrecision guard(sig.ctx);
    LiCoefficients li;
    li.ctx = sig.ctx;
    li.values.reserve(static_cast<std::size_t>(N));
    CnpRowGenerator<Real> gen;
    for (int n = 1; n <= N; ++n) li.values.push_back(detail::cnp_row_dot(n, gen.next(), sig));
    detail::check_li_positive(li);
    return li;
}

/// a_n from the coefficients of 2 sum_r (xi_r/4^r) ((1+z)/(1-z))^(2r),
/// with the binomial-ratio coefficients in exact integers. Shares nothing
/// with the C_{n,p} route beyond the xi_r themselves.
inline LiCoefficients an_oracle(int N, const XiCoefficients& xi) {
    if (N < 1) throw Error(ErrorKind::argument, "an_oracle: N must be >= 1");
    ScopedPrecision guard(xi.ctx);
    const int R = xi.R();
    const Real tol = xi.ctx.tail_tol();
    const auto len = static_cast<std::size_t>(N) + 1;
    std::vector<Real> acc(len, Real(0));
    std::vector<Real> last(len, Real(0));
    // power = ((1+z)/(1-z))^(2r), advanced by two factors per r
    std::vector<BigInt> power(len, BigInt(0));
    power[0] = 1;
    Real weight = 1;  // xi_r / 4^r
    for (int r = 0; r <= R; ++r) {
        for (std::size_t n = 0; n < len; ++n) {
            if (power[n] == 0) continue;
            last[n] = xi[r] * weight * to_real(power[n]);
            acc[n] += last[n];
        }
        weight /= 4;
        for (int twice = 0; twice < 2; ++twice) {
            for (std::size_t n = len - 1; n > 0; --n) power[n] += power[n - 1];
            for (std::size_t n = 1; n < len; ++n) power[n] += power[n - 1];
        }
    }
    for (std::size_t n = 1; n < len; ++n)
        if (last[n] > tol * acc[n])
            throw Error(ErrorKind::range, "an_oracle: R = " + std::to_string(R) + " does not resolve a_" +
                                              std::to_string(n));
    LiCoefficients li;
    li.ctx = xi.ctx;
    li.method = LiMethod::oracle_composition;
    for (std::size_t n = 1; n < len; ++n) li.values.push_back(2 * acc[n]);
    detail::check_li_positive(li);
    return li;
}

/// One failed inequality.
struct BoundViolation {
    std::string check;
    int n = 0;
    Real lhs;
    Real rhs;
};

struct BoundsReport {
    int N = 0;
    std::vector<std::pair<std::string, int>> checks;  ///< check name, number of instances tested
    std::vector<BoundViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Tests every proven or derived inequality on the computed a_n:
///   n a_1 < a_n < 8 n Sigma_n                 (n >= 3; equality at n = 2)
///   a_n > (4/n) a_{n-1} + ((n-2)/n) a_{n-2}   (n >= 3)
///   a_n > ((n+2)/n) min(a_{n-1}, a_{n-2})     (n >= 3)
///   a_n > ((n+2)/n) a_{n-2}                   (n >= 3)
///   a_{2m} > ((m+1)/2) a_2,  a_{2m-1} > ((2m+1)/3) a_1   (m >= 2)
///   sum_{n<=M} a_n > a_1 M(M+1)/2             (M >= 2)
///   a_n > a_{n-1}                             (n >= 2)
inline BoundsReport an_bounds_check(const LiCoefficients& li, const SigmaTable& sig) {
    ScopedPrecision guard(li.ctx);
    BoundsReport rep;
    const int N = li.N();
    rep.N = N;
    auto tally = [&](const std::string& name) -> int& {
        for (auto& c : rep.checks)
            if (c.first == name) return c.second;
        rep.checks.emplace_back(name, 0);
        return rep.checks.back().second;
    };
    auto expect_less = [&](const std::string& name, int n, const Real& lo, const Real& hi) {
        ++tally(name);
        if (!(lo < hi)) rep.violations.push_back({name, n, lo, hi});
    };
    const Real a1 = li.a(1);
    for (int n = 2; n <= N; ++n) {
        Real an = li.a(n);
        expect_less("lower n*a1", n, Real(n) * a1, an);
        if (n <= sig.p_max()) {
            Real upper = 8 * n * sig[n];
            if (n == 2) {
                // row 2 holds the single entry C_{2,2} = 8, so the bound is attained
                ++tally("upper 8n*Sigma_n");
                if (relative_difference(an, upper) > PrecisionContext::pow10(-li.ctx.digits))
                    rep.violations.push_back({"upper 8n*Sigma_n", n, an, upper});
            } else {
                expect_less("upper 8n*Sigma_n", n, an, upper);
            }
        }
        expect_less("monotone", n, li.a(n - 1), an);
        if (n >= 3) {
            Real rec = Real(4) / n * li.a(n - 1) + Real(n - 2) / n * li.a(n - 2);
            expect_less("recurrence lower bound", n, rec, an);
            Real weak = Real(n + 2) / n * std::min(li.a(n - 1), li.a(n - 2));
            expect_less("min lower bound", n, weak, an);
            expect_less("two-step lower bound", n, Real(n + 2) / n * li.a(n - 2), an);
        }
    }
    const Real a2 = N >= 2 ? li.a(2) : Real(0);
    for (int m = 2; 2 * m <= N; ++m) expect_less("even product bound", 2 * m, Real(m + 1) / 2 * a2, li.a(2 * m));
    for (int m = 2; 2 * m - 1 <= N; ++m)
        expect_less("odd product bound", 2 * m - 1, Real(2 * m + 1) / 3 * a1, li.a(2 * m - 1));
    Real partial = a1;
    for (int M = 2; M <= N; ++M) {
        partial += li.a(M);
        expect_less("partial sum", M, a1 * M * (M + 1) / 2, partial);
    }
    return rep;
}

/// (8/n) sum_{p=2..n} C_{n-1,p-1} (Sigma_p - Sigma_{p-1}); positive because
/// Sigma_p increases with p.
inline Real an_recurrence_correction(const CnpTable<Real>& cnp, const SigmaTable& sig, int n) {
    Real acc = 0;
    for (int p = (n % 2 == 0) ? 2 : 3; p <= n; p += 2) acc += cnp.at(n - 1, p - 1) * (sig[p] - sig[p - 1]);
    return Real(8) / n * acc;
}

/// a_n - (4/n) a_{n-1} - ((n-2)/n) a_{n-2} - (8/n) sum_{p=2..n} C_{n-1,p-1} (Sigma_p - Sigma_{p-1}).
inline Real an_recurrence_residual(const LiCoefficients& li, const CnpTable<Real>& cnp, const SigmaTable& sig,
                                   int n) {
    if (n < 3 || n > li.N()) throw Error(ErrorKind::range, "an_recurrence_residual: n outside [3, N]");
    if (cnp.n_max() < n - 1 || sig.p_max() < n)
        throw Error(ErrorKind::range, "an_recurrence_residual: tables too short");
    ScopedPrecision guard(li.ctx);
    return li.a(n) - Real(4) / n * li.a(n - 1) - Real(n - 2) / n * li.a(n - 2) - an_recurrence_correction(cnp, sig, n);
}

}  // namespace xili
