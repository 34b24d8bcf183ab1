#pragma once

// Shared fixtures for the test binaries: cached coefficient tables and a
// comparison against decimal strings to their last printed digit.

#include "xili/li_coefficients.hpp"
#include "xili/xi_coefficients.hpp"

#include <string>

namespace xili::testing {

inline const PrecisionContext& ctx50() {
    static const PrecisionContext ctx = PrecisionContext::with_digits(50);
    return ctx;
}

inline const XiCoefficients& xi200() {
    static const XiCoefficients xi = xi_r_table(200, ctx50());
    return xi;
}

inline const SigmaTable& sigma1001() {
    static const SigmaTable sig = sigma_table(1001, xi200());
    return sig;
}

inline const LiCoefficients& li1000() {
    static const LiCoefficients li = li_an_streaming(1000, sigma1001());
    return li;
}

/// One unit in the last printed place of a decimal such as "1.25e-6".
inline Real last_place(const std::string& text) {
    std::string mant = text;
    long exp10 = 0;
    auto e = text.find_first_of("eE");
    if (e != std::string::npos) {
        mant = text.substr(0, e);
        exp10 = std::stol(text.substr(e + 1));
    }
    long decimals = 0;
    auto dot = mant.find('.');
    if (dot != std::string::npos) decimals = static_cast<long>(mant.size() - dot - 1);
    return PrecisionContext::pow10(static_cast<int>(exp10 - decimals));
}

/// |value - printed| within one unit of the printed last place.
inline bool matches_printed(const Real& value, const std::string& printed) {
    return abs(value - parse_decimal(printed)) <= last_place(printed);
}

}  // namespace xili::testing
