#pragma once

// Sampled scans of xi, xi(s +- 1/2), xi_+ and xi_- along the real axis (the
// sandwich orderings) and along the unit circle image of the critical line
// (zeros show up as dips of log|f|).

#include "xili/xi_functions.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace xili {

enum class PathKind { real_axis, unit_circle };
enum class EventKind { dip, sign_change, inequality_violation };

inline std::string to_string(PathKind p) { return p == PathKind::real_axis ? "real-axis" : "unit-circle"; }

inline std::string to_string(EventKind k) {
    switch (k) {
        case EventKind::dip: return "dip";
        case EventKind::sign_change: return "sign-change";
        case EventKind::inequality_violation: return "inequality-violation";
    }
    return "?";
}

struct ScanEvent {
    EventKind kind = EventKind::dip;
    std::string function;
    Real location;          ///< grid parameter where the event was detected
    Real refined_location;  ///< within one grid step of `location`
    std::string detail;
};

struct ScanSample {
    Real parameter;
    std::vector<Real> values;  ///< one per ScanReport::functions
};

struct ScanReport {
    PathKind path = PathKind::real_axis;
    Real lo, hi, step;
    std::vector<std::string> functions;
    std::vector<ScanSample> samples;
    std::vector<ScanEvent> events;  ///< sorted by location

    /// Real axis: smallest grid sigma from which log xi_-(sigma) > 0 holds on
    /// the rest of the grid.
    std::optional<Real> log_minus_positive_from;

    /// Unit circle: samples whose evaluation was refused (outside the region
    /// certified by R), and the parameter range that was evaluated.
    int refused = 0;
    std::optional<std::pair<Real, Real>> certified;

    std::size_t count(EventKind kind, const std::string& function = {}) const {
        return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [&](const ScanEvent& e) {
            return e.kind == kind && (function.empty() || e.function == function);
        }));
    }
};

namespace detail {

inline void sort_events(std::vector<ScanEvent>& events) {
    std::stable_sort(events.begin(), events.end(),
                     [](const ScanEvent& a, const ScanEvent& b) { return a.location < b.location; });
}

inline int grid_count(const Real& lo, const Real& hi, const Real& step) {
    if (!(step > 0) || hi < lo) throw Error(ErrorKind::argument, "scan: need lo <= hi and step > 0");
    Real k = round((hi - lo) / step);
    return static_cast<int>(k.convert_to<long>()) + 1;
}

}  // namespace detail

/// Checks, at every grid sigma:
///   sigma >= 3/2 : xi(sigma+1/2) > xi(sigma) > xi(sigma-1/2) > 0
///   sigma >= 1   : xi_+(sigma) > xi(sigma) > xi_-(sigma) > 0
///   sigma >= 1   : log xi_+(sigma) > log xi(sigma) > log xi_-(sigma)
/// Each failed link is an inequality-violation event.
inline ScanReport sandwich_scan_real(const Real& lo, const Real& hi, const Real& step, const XiCoefficients& xi) {
    ScopedPrecision guard(xi.ctx);
    ScanReport rep;
    rep.path = PathKind::real_axis;
    rep.lo = lo;
    rep.hi = hi;
    rep.step = step;
    rep.functions = {"xi_shift_up", "xi", "xi_shift_down", "xi_plus", "xi_minus"};
    const int count = detail::grid_count(lo, hi, step);
    const Real half = Real(1) / 2;
    std::optional<Real> positive_from;

    auto violation = [&](const Real& sigma, const std::string& chain, const std::string& link) {
        rep.events.push_back({EventKind::inequality_violation, chain, sigma, sigma, link});
    };

    for (int k = 0; k < count; ++k) {
        Real sigma = lo + step * k;
        Real up = xi_eval_real(sigma + half, xi);
        Real mid = xi_eval_real(sigma, xi);
        Real down = xi_eval_real(sigma - half, xi);
        Real plus = up + down;
        Real minus = up - down;
        if (sigma >= Real(3) / 2) {
            if (!(up > mid)) violation(sigma, "shift", "xi(s+1/2) > xi(s)");
            if (!(mid > down)) violation(sigma, "shift", "xi(s) > xi(s-1/2)");
            if (!(down > 0)) violation(sigma, "shift", "xi(s-1/2) > 0");
        }
        if (sigma >= 1) {
            if (!(plus > mid)) violation(sigma, "plus-minus", "xi_+ > xi");
            if (!(mid > minus)) violation(sigma, "plus-minus", "xi > xi_-");
            if (!(minus > 0)) violation(sigma, "plus-minus", "xi_- > 0");
            if (minus > 0) {
                Real lp = log(plus), lm = log(mid), ln = log(minus);
                if (!(lp > lm)) violation(sigma, "log", "log xi_+ > log xi");
                if (!(lm > ln)) violation(sigma, "log", "log xi > log xi_-");
                if (ln > 0) {
                    if (!positive_from) positive_from = sigma;
                } else {
                    positive_from.reset();
                }
            }
        }
        rep.samples.push_back({sigma, {up, mid, down, plus, minus}});
    }
    rep.log_minus_positive_from = positive_from;
    detail::sort_events(rep.events);
    return rep;
}

/// s = 1/(1 - e^(i theta)) = 1/2 + (i/2) cot(theta/2).
inline Complex circle_point(const Real& theta) {
    return Complex(Real(1) / 2, cos(theta / 2) / sin(theta / 2) / 2);
}

inline Real t_for_theta(const Real& theta) { return cos(theta / 2) / sin(theta / 2) / 2; }
inline Real theta_for_t(const Real& t) { return 2 * atan(1 / (2 * t)); }

struct CircleScanOptions {
    int neighborhood = 20;      ///< samples in the median window (half on each side)
    double dip_depth = 3.0;     ///< required drop of the refined log|f| below that median
    int refine_iterations = 60; ///< golden-section steps per dip
};

/// Samples log|xi|, log|xi_+|, log|xi_-| at s = 1/(1 - e^(i theta)).
/// Every strict local minimum of log|f| is refined by golden-section search
/// on |f| over the two adjacent grid cells and kept as a dip when the refined
/// log|f| lies at least `dip_depth` below the median of its neighbourhood.
/// On the critical line xi and xi_+ are real and xi_- is imaginary, so their
/// sign changes are recorded as independent events.
inline ScanReport circle_scan(const Real& theta_lo, const Real& theta_hi, int steps, const XiCoefficients& xi,
                              const CircleScanOptions& opt = {}) {
    if (steps < 3) throw Error(ErrorKind::argument, "circle_scan: need at least 3 steps");
    if (!(theta_lo > 0) || !(theta_hi > theta_lo) || !(theta_hi < 2 * pi_value()))
        throw Error(ErrorKind::argument, "circle_scan: theta range must lie in (0, 2 pi)");
    ScopedPrecision guard(xi.ctx);
    ScanReport rep;
    rep.path = PathKind::unit_circle;
    rep.lo = theta_lo;
    rep.hi = theta_hi;
    rep.step = (theta_hi - theta_lo) / steps;
    rep.functions = {"xi", "xi_plus", "xi_minus"};
    const std::size_t nf = rep.functions.size();

    using Eval = std::function<Complex(const Real&)>;
    const std::vector<Eval> eval = {
        [&](const Real& th) { return xi_eval(circle_point(th), xi); },
        [&](const Real& th) { return xi_pm_eval(circle_point(th), xi).first; },
        [&](const Real& th) { return xi_pm_eval(circle_point(th), xi).second; },
    };
    // real-valued projection on the critical line
    auto projection = [](std::size_t f, const Complex& v) -> Real { return f == 2 ? v.im : v.re; };

    std::vector<Real> theta;
    std::vector<std::vector<Real>> logabs(nf);
    std::vector<std::vector<Real>> signed_part(nf);
    for (int k = 0; k <= steps; ++k) {
        Real th = theta_lo + rep.step * k;
        try {
            Complex vx = xi_eval(circle_point(th), xi);
            auto [vp, vm] = xi_pm_eval(circle_point(th), xi);
            const Complex vals[3] = {vx, vp, vm};
            ScanSample sample{th, {}};
            for (std::size_t f = 0; f < nf; ++f) {
                Real mag = vals[f].abs();
                Real l = mag > 0 ? Real(log(mag)) : Real(-1e6);
                logabs[f].push_back(l);
                signed_part[f].push_back(projection(f, vals[f]));
                sample.values.push_back(l);
            }
            theta.push_back(th);
            rep.samples.push_back(std::move(sample));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::refusal) throw;
            ++rep.refused;
        }
    }
    if (theta.size() < 3) throw Error(ErrorKind::refusal, "circle_scan: no certified samples in range");
    rep.certified = std::make_pair(theta.front(), theta.back());

    const Real phi = (sqrt(Real(5)) - 1) / 2;
    const std::size_t m = theta.size();
    const std::size_t half = static_cast<std::size_t>(opt.neighborhood / 2);
    for (std::size_t f = 0; f < nf; ++f) {
        const auto& L = logabs[f];
        for (std::size_t k = 1; k + 1 < m; ++k) {
            if (!(L[k] < L[k - 1]) || !(L[k] <= L[k + 1])) continue;
            // golden-section search for the minimum of |f| on [theta_{k-1}, theta_{k+1}]
            Real a = theta[k - 1], b = theta[k + 1];
            auto mag = [&](const Real& th) { return eval[f](th).abs(); };
            Real c = b - phi * (b - a), d = a + phi * (b - a);
            Real fc = mag(c), fd = mag(d);
            for (int it = 0; it < opt.refine_iterations; ++it) {
                if (fc < fd) {
                    b = d; d = c; fd = fc;
                    c = b - phi * (b - a);
                    fc = mag(c);
                } else {
                    a = c; c = d; fc = fd;
                    d = a + phi * (b - a);
                    fd = mag(d);
                }
            }
            Real best = fc < fd ? c : d;
            Real best_mag = fc < fd ? fc : fd;
            Real refined_log = best_mag > 0 ? Real(log(best_mag)) : Real(-1e6);

            std::vector<Real> window;
            std::size_t from = k >= half ? k - half : 0;
            std::size_t to = std::min(m - 1, k + half);
            for (std::size_t j = from; j <= to; ++j)
                if (j != k) window.push_back(L[j]);
            std::nth_element(window.begin(), window.begin() + static_cast<long>(window.size() / 2), window.end());
            Real median = window[window.size() / 2];
            if (refined_log <= median - Real(opt.dip_depth))
                rep.events.push_back({EventKind::dip, rep.functions[f], theta[k], best,
                                      "t=" + to_decimal(t_for_theta(best), 12)});
        }
        const auto& S = signed_part[f];
        for (std::size_t k = 0; k + 1 < m; ++k) {
            if ((S[k] > 0 && S[k + 1] < 0) || (S[k] < 0 && S[k + 1] > 0)) {
                Real w = S[k] / (S[k] - S[k + 1]);
                Real refined = theta[k] + w * (theta[k + 1] - theta[k]);
                rep.events.push_back({EventKind::sign_change, rep.functions[f], theta[k], refined,
                                      "t=" + to_decimal(t_for_theta(refined), 12)});
            }
        }
    }
    detail::sort_events(rep.events);
    return rep;
}

/// Heights t = Im s of the refined events of one kind and function, ascending in t.
inline std::vector<Real> event_heights(const ScanReport& rep, EventKind kind, const std::string& function) {
    ScopedPrecision guard(static_cast<unsigned>(rep.lo.precision()));
    std::vector<Real> t;
    for (const auto& e : rep.events)
        if (e.kind == kind && e.function == function) t.push_back(t_for_theta(e.refined_location));
    std::sort(t.begin(), t.end());
    return t;
}

/// True when, after merging, the two ascending sequences alternate strictly.
inline bool strictly_interleave(const std::vector<Real>& a, const std::vector<Real>& b) {
    std::vector<std::pair<Real, int>> merged;
    for (const auto& x : a) merged.emplace_back(x, 0);
    for (const auto& x : b) merged.emplace_back(x, 1);
    std::sort(merged.begin(), merged.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t i = 1; i < merged.size(); ++i) {
        if (merged[i].second == merged[i - 1].second) return false;
        if (!(merged[i].first > merged[i - 1].first)) return false;
    }
    return true;
}

/// Mean distance from each point of `from` to its nearest point of `to`.
inline Real mean_nearest_distance(const std::vector<Real>& from, const std::vector<Real>& to) {
    if (from.empty() || to.empty()) throw Error(ErrorKind::argument, "mean_nearest_distance: empty input");
    Real total = 0;
    for (const auto& x : from) {
        Real best = abs(x - to.front());
        for (const auto& y : to) best = std::min(best, Real(abs(x - y)));
        total += best;
    }
    return total / static_cast<long>(from.size());
}

}  // namespace xili
