#pragma once

// Arbitrary-precision scalar types, the precision context threaded through
// every computation, and the library's error type.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdint>
#include <ios>
#include <stdexcept>
#include <string>
#include <utility>

namespace xili {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Failure categories. The CLI maps `refusal` and `range` to exit code 2 and
/// `invariant` to exit code 3.
enum class ErrorKind {
    argument,   ///< malformed input (mismatched centres, bad order, ...)
    refusal,    ///< the requested precision or truncation cannot be certified
    range,      ///< a table or sequence does not cover the requested index
    invariant,  ///< a computed value contradicts a proven property
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Working precision and truncation policy.
///
/// Arithmetic runs at `digits + guard_digits` decimal digits; results are
/// promised to `digits`. Series and sums are truncated once their tails fall
/// below `tail_tol() = 10^-tail_digits`.
struct PrecisionContext {
    int digits = 50;
    int guard_digits = 10;
    int series_order = 64;
    int tail_digits = 50;

    static PrecisionContext with_digits(int digits, int guard = 10) {
        PrecisionContext ctx;
        ctx.digits = digits;
        ctx.guard_digits = guard;
        ctx.tail_digits = digits;
        ctx.validate();
        return ctx;
    }

    int working_digits() const { return digits + guard_digits; }

    void validate() const {
        if (digits < 20)
            throw Error(ErrorKind::argument, "precision context: digits must be >= 20");
        if (guard_digits < 5)
            throw Error(ErrorKind::argument, "precision context: guard_digits must be >= 5");
        if (series_order < 1)
            throw Error(ErrorKind::argument, "precision context: series_order must be >= 1");
        if (tail_digits > digits)
            throw Error(ErrorKind::argument, "precision context: tail_tol must be >= 10^-digits");
    }

    /// Must be called with the working precision active.
    Real tail_tol() const { return pow10(-tail_digits); }

    static Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

    friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;
};

/// Sets the MPFR default precision for the lifetime of the guard.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned digits10) : saved_(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    explicit ScopedPrecision(const PrecisionContext& ctx)
        : ScopedPrecision(static_cast<unsigned>(ctx.working_digits())) {}
    ~ScopedPrecision() { Real::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

inline Real pi_value() {
    Real r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

inline Real euler_gamma() {
    Real r;
    mpfr_const_euler(r.backend().data(), MPFR_RNDN);
    return r;
}

/// log Gamma(x) for x > 0.
inline Real log_gamma(const Real& x) {
    Real r;
    mpfr_lngamma(r.backend().data(), x.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const BigInt& v) {
    Real r;
    mpfr_set_z(r.backend().data(), v.backend().data(), MPFR_RNDN);
    return r;
}

inline Real to_real(const Rational& v) {
    Real r;
    mpfr_set_q(r.backend().data(), v.backend().data(), MPFR_RNDN);
    return r;
}

/// Exact binomial coefficient C(n, k).
inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.backend().data(), n, k);
    return r;
}

/// Scientific notation with `significant` digits; independent of locale.
inline std::string to_decimal(const Real& x, int significant) {
    if (x == 0) return "0";
    return x.str(significant, std::ios_base::scientific);
}

inline Real parse_decimal(const std::string& text) {
    Real r;
    if (mpfr_set_str(r.backend().data(), text.c_str(), 10, MPFR_RNDN) != 0)
        throw Error(ErrorKind::argument, "not a decimal number: '" + text + "'");
    return r;
}

/// |a - b| / max(|a|, |b|), zero when both vanish.
inline Real relative_difference(const Real& a, const Real& b) {
    Real scale = std::max(abs(a), abs(b));
    if (scale == 0) return Real(0);
    return abs(a - b) / scale;
}

/// Minimal complex type over Real; std::complex is unspecified for it.
struct Complex {
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit widening
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        if (d == 0) throw Error(ErrorKind::argument, "complex division by zero");
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
    Complex& operator*=(const Real& k) { re *= k; im *= k; return *this; }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator*(Complex a, const Real& k) { return a *= k; }
    friend Complex operator*(const Real& k, Complex a) { return a *= k; }
    friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }

    Real norm() const { return re * re + im * im; }
    Real abs() const { return boost::multiprecision::hypot(re, im); }
    Complex conj() const { return Complex(re, -im); }
};

inline Complex cexp_i(const Real& theta) {
    return Complex(boost::multiprecision::cos(theta), boost::multiprecision::sin(theta));
}

}  // namespace xili
