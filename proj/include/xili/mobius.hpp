#pragma once

// Fractional-linear maps carrying the lines sigma = 1/2, 0 and 1 onto the unit
// circle, and the constant-modulus loci they induce in the w-plane.

#include "xili/precision.hpp"

#include <array>
#include <string>
#include <vector>

namespace xili {

enum class MobiusKind {
    w,    ///< w   = (s - 1)/s,         sigma = 1/2 -> |w| = 1
    w_h,  ///< w_h = (s - 1/2)/(s + 1/2), sigma = 0 -> |w_h| = 1
    w_m,  ///< w_m = (s - 3/2)/(s - 1/2), sigma = 1 -> |w_m| = 1
};

inline std::string to_string(MobiusKind k) {
    switch (k) {
        case MobiusKind::w: return "w";
        case MobiusKind::w_h: return "w_h";
        case MobiusKind::w_m: return "w_m";
    }
    return "?";
}

inline MobiusKind parse_mobius_kind(const std::string& name) {
    if (name == "w") return MobiusKind::w;
    if (name == "w_h") return MobiusKind::w_h;
    if (name == "w_m") return MobiusKind::w_m;
    throw Error(ErrorKind::argument, "unknown map kind '" + name + "'");
}

/// p -> (a p + b) / (c p + d) with real coefficients, plus its inverse.
struct MobiusMap {
    MobiusKind kind = MobiusKind::w;
    std::array<Rational, 4> forward;
    std::array<Rational, 4> inverse;

    /// Map from the s-plane onto the `kind` plane.
    static MobiusMap from_s(MobiusKind kind) {
        using Q = Rational;
        const Q half(1, 2);
        switch (kind) {
            case MobiusKind::w:
                return {kind, {Q(1), Q(-1), Q(1), Q(0)}, {Q(0), Q(1), Q(-1), Q(1)}};
            case MobiusKind::w_h:
                return {kind, {Q(1), Q(-half), Q(1), half}, {half, half, Q(-1), Q(1)}};
            case MobiusKind::w_m:
                return {kind, {Q(1), Q(-3, 2), Q(1), Q(-half)}, {Q(-half), Q(3, 2), Q(-1), Q(1)}};
        }
        throw Error(ErrorKind::argument, "unknown map kind");
    }

    /// Map from the w-plane onto the `kind` plane: w_h = (1+w)/(3-w), w_m = (3w-1)/(w+1).
    static MobiusMap from_w(MobiusKind kind) {
        using Q = Rational;
        switch (kind) {
            case MobiusKind::w:
                return {kind, {Q(1), Q(0), Q(0), Q(1)}, {Q(1), Q(0), Q(0), Q(1)}};
            case MobiusKind::w_h:
                return {kind, {Q(1), Q(1), Q(-1), Q(3)}, {Q(3), Q(-1), Q(1), Q(1)}};
            case MobiusKind::w_m:
                return {kind, {Q(3), Q(-1), Q(1), Q(1)}, {Q(1), Q(1), Q(-1), Q(3)}};
        }
        throw Error(ErrorKind::argument, "unknown map kind");
    }
};

namespace detail {

inline Complex apply_coeffs(const std::array<Rational, 4>& m, const Complex& p) {
    Complex num = p * to_real(m[0]) + Complex(to_real(m[1]));
    Complex den = p * to_real(m[2]) + Complex(to_real(m[3]));
    if (den.re == 0 && den.im == 0) throw Error(ErrorKind::argument, "mobius_apply: point is the pole of the map");
    return num / den;
}

}  // namespace detail

inline Complex mobius_apply(const MobiusMap& map, const Complex& p) { return detail::apply_coeffs(map.forward, p); }

inline Complex mobius_invert(const MobiusMap& map, const Complex& p) { return detail::apply_coeffs(map.inverse, p); }

/// {w : |map(w)| = modulus} for a real-coefficient map given on the w-plane.
/// |a w + b|^2 = m^2 |c w + d|^2 reduces to A |w|^2 + 2 B u + C = 0.
struct Locus {
    enum class Shape { circle, line } shape = Shape::circle;
    Real center;  ///< circle: centre on the real axis
    Real radius;  ///< circle: radius
    Real line_u;  ///< line: the vertical line u = line_u
    std::vector<Complex> points;
};

inline Locus locus_emit(MobiusKind kind, const Real& modulus, int samples, const Real& line_half_height = Real(2)) {
    if (samples < 2) throw Error(ErrorKind::argument, "locus_emit: need at least 2 samples");
    if (!(modulus > 0)) throw Error(ErrorKind::argument, "locus_emit: modulus must be positive");
    MobiusMap map = MobiusMap::from_w(kind);
    Real a = to_real(map.forward[0]), b = to_real(map.forward[1]);
    Real c = to_real(map.forward[2]), d = to_real(map.forward[3]);
    Real m2 = modulus * modulus;
    Real A = a * a - m2 * c * c;
    Real B = a * b - m2 * c * d;
    Real C = b * b - m2 * d * d;

    Locus out;
    const Real pi = pi_value();
    if (A == 0) {
        if (B == 0) throw Error(ErrorKind::argument, "locus_emit: degenerate locus");
        out.shape = Locus::Shape::line;
        out.line_u = -C / (2 * B);
        for (int k = 0; k < samples; ++k) {
            Real v = -line_half_height + 2 * line_half_height * k / (samples - 1);
            out.points.emplace_back(out.line_u, v);
        }
        return out;
    }
    out.shape = Locus::Shape::circle;
    out.center = -B / A;
    Real r2 = B * B / (A * A) - C / A;
    if (r2 < 0) throw Error(ErrorKind::argument, "locus_emit: empty locus");
    out.radius = sqrt(r2);
    for (int k = 0; k < samples; ++k) {
        Real theta = 2 * pi * k / (samples - 1);
        out.points.emplace_back(out.center + out.radius * cos(theta), out.radius * sin(theta));
    }
    return out;
}

}  // namespace xili
