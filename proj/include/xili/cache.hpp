#pragma once

// Text caches for coefficient sequences and the run configuration stamped
// into every output.
//
//     # family: a_n
//     # digits: 50
//     # method: cnp-sum
//     # generator-version: xili 1.0
//     # <key>: <value>          (truncation parameters, run config)
//     1<TAB>2.3095708966121033814310247906495291621932127152051e-02
//     ...

#include "xili/li_coefficients.hpp"
#include "xili/xi_coefficients.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace xili {

inline constexpr const char* kGeneratorVersion = "xili 1.0";

enum class CacheFamily { xi_r, a_n, lambda_n, c_row, sigma_p };

inline std::string to_string(CacheFamily f) {
    switch (f) {
        case CacheFamily::xi_r: return "xi_r";
        case CacheFamily::a_n: return "a_n";
        case CacheFamily::lambda_n: return "lambda_n";
        case CacheFamily::c_row: return "C-row";
        case CacheFamily::sigma_p: return "Sigma_p";
    }
    return "?";
}

inline CacheFamily parse_cache_family(const std::string& s) {
    for (auto f : {CacheFamily::xi_r, CacheFamily::a_n, CacheFamily::lambda_n, CacheFamily::c_row,
                   CacheFamily::sigma_p})
        if (to_string(f) == s) return f;
    throw Error(ErrorKind::argument, "unknown cache family '" + s + "'");
}

/// First index of each family: xi_0, a_1, lambda_1, C_{n,1}, Sigma_0.
inline long natural_start(CacheFamily f) {
    return (f == CacheFamily::xi_r || f == CacheFamily::sigma_p) ? 0 : 1;
}

struct CacheFile {
    CacheFamily family = CacheFamily::xi_r;
    int digits = 0;
    std::string method;
    std::string generator_version = kGeneratorVersion;
    std::vector<std::pair<std::string, std::string>> extra;  ///< further "# key: value" lines, in order
    std::vector<std::pair<long, std::string>> rows;

    std::optional<std::string> header(const std::string& key) const {
        for (const auto& [k, v] : extra)
            if (k == key) return v;
        return std::nullopt;
    }

    /// Rows as Real at the active precision.
    std::vector<Real> values() const {
        std::vector<Real> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(parse_decimal(r.second));
        return out;
    }

    std::string serialize() const {
        std::ostringstream os;
        os << "# family: " << to_string(family) << '\n';
        os << "# digits: " << digits << '\n';
        os << "# method: " << method << '\n';
        os << "# generator-version: " << generator_version << '\n';
        for (const auto& [k, v] : extra) os << "# " << k << ": " << v << '\n';
        for (const auto& [i, v] : rows) os << i << '\t' << v << '\n';
        return os.str();
    }

    static CacheFile parse(const std::string& text) {
        CacheFile out;
        bool have_family = false, have_digits = false;
        std::istringstream is(text);
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            if (line.empty()) continue;
            if (line[0] == '#') {
                auto colon = line.find(": ");
                if (line.size() < 2 || line[1] != ' ' || colon == std::string::npos)
                    throw Error(ErrorKind::argument, "cache line " + std::to_string(lineno) + ": malformed header");
                std::string key = line.substr(2, colon - 2);
                std::string value = line.substr(colon + 2);
                if (key == "family") {
                    out.family = parse_cache_family(value);
                    have_family = true;
                } else if (key == "digits") {
                    out.digits = std::stoi(value);
                    have_digits = true;
                } else if (key == "method") {
                    out.method = value;
                } else if (key == "generator-version") {
                    out.generator_version = value;
                } else {
                    out.extra.emplace_back(key, value);
                }
                continue;
            }
            auto tab = line.find('\t');
            if (tab == std::string::npos)
                throw Error(ErrorKind::argument, "cache line " + std::to_string(lineno) + ": expected index<TAB>value");
            out.rows.emplace_back(std::stol(line.substr(0, tab)), line.substr(tab + 1));
        }
        if (!have_family || !have_digits) throw Error(ErrorKind::argument, "cache: missing family or digits header");
        return out;
    }

    void write(const std::string& path) const {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw Error(ErrorKind::argument, "cannot open '" + path + "' for writing");
        f << serialize();
    }

    static CacheFile read(const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw Error(ErrorKind::argument, "cannot open '" + path + "'");
        std::ostringstream os;
        os << f.rdbuf();
        return parse(os.str());
    }
};

/// Structural checks shared by every family: contiguous indices from the
/// natural start and decimal strings that round-trip at the declared digits.
/// Returns a list of problems (empty when the file is sound).
inline std::vector<std::string> cache_structure_problems(const CacheFile& c) {
    std::vector<std::string> out;
    if (c.digits < 1) out.push_back("digits header must be positive");
    long expect = natural_start(c.family);
    ScopedPrecision guard(static_cast<unsigned>(std::max(c.digits, 1) + 10));
    for (const auto& [i, v] : c.rows) {
        if (i != expect) {
            out.push_back("index " + std::to_string(i) + " breaks contiguity (expected " + std::to_string(expect) + ")");
            expect = i;
        }
        ++expect;
        try {
            Real x = parse_decimal(v);
            Real y = parse_decimal(to_decimal(x, c.digits));
            if (x != 0 && relative_difference(x, y) > PrecisionContext::pow10(1 - c.digits))
                out.push_back("row " + std::to_string(i) + " does not round-trip at " + std::to_string(c.digits) +
                              " digits");
        } catch (const Error&) {
            out.push_back("row " + std::to_string(i) + " is not a decimal number");
        }
    }
    return out;
}

inline std::vector<std::pair<long, std::string>> decimal_rows(const std::vector<Real>& v, long start, int digits) {
    std::vector<std::pair<long, std::string>> rows;
    rows.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) rows.emplace_back(start + static_cast<long>(i), to_decimal(v[i], digits));
    return rows;
}

inline CacheFile xi_cache(const XiCoefficients& xi) {
    ScopedPrecision guard(xi.ctx);
    CacheFile c;
    c.family = CacheFamily::xi_r;
    c.digits = xi.ctx.digits;
    c.method = to_string(xi.method);
    c.extra = {{"terms", std::to_string(xi.R())},
               {"guard-digits", std::to_string(xi.ctx.guard_digits)},
               {"tail-digits", std::to_string(xi.ctx.tail_digits)}};
    if (xi.method == XiMethod::quadrature) {
        c.extra.emplace_back("quadrature-levels", std::to_string(xi.quadrature.levels));
        c.extra.emplace_back("quadrature-nodes", std::to_string(xi.quadrature.nodes));
        c.extra.emplace_back("quadrature-error", to_decimal(xi.quadrature.achieved_error, 3));
    }
    c.rows = decimal_rows(xi.values, 0, xi.ctx.digits);
    return c;
}

/// Reads a xi_r cache at `ctx` precision. The cache must carry at least ctx.digits.
inline XiCoefficients xi_from_cache(const CacheFile& c, const PrecisionContext& ctx) {
    if (c.family != CacheFamily::xi_r) throw Error(ErrorKind::argument, "expected a xi_r cache");
    if (c.digits < ctx.digits)
        throw Error(ErrorKind::refusal, "xi_r cache has " + std::to_string(c.digits) + " digits, " +
                                            std::to_string(ctx.digits) + " requested");
    ScopedPrecision guard(ctx);
    XiCoefficients xi;
    xi.values = c.values();
    xi.method = XiMethod::imported;
    xi.ctx = ctx;
    if (xi.values.empty()) throw Error(ErrorKind::argument, "empty xi_r cache");
    return xi;
}

inline CacheFile li_cache(const LiCoefficients& li, int xi_terms) {
    ScopedPrecision guard(li.ctx);
    CacheFile c;
    c.family = CacheFamily::a_n;
    c.digits = li.ctx.digits;
    c.method = to_string(li.method);
    c.extra = {{"nmax", std::to_string(li.N())},
               {"xi-terms", std::to_string(xi_terms)},
               {"guard-digits", std::to_string(li.ctx.guard_digits)}};
    c.rows = decimal_rows(li.values, 1, li.ctx.digits);
    return c;
}

inline LiCoefficients li_from_cache(const CacheFile& c, const PrecisionContext& ctx) {
    if (c.family != CacheFamily::a_n) throw Error(ErrorKind::argument, "expected an a_n cache");
    if (c.digits < ctx.digits)
        throw Error(ErrorKind::refusal, "a_n cache has " + std::to_string(c.digits) + " digits, " +
                                            std::to_string(ctx.digits) + " requested");
    ScopedPrecision guard(ctx);
    LiCoefficients li;
    li.values = c.values();
    li.method = c.method == to_string(LiMethod::oracle_composition) ? LiMethod::oracle_composition : LiMethod::cnp_sum;
    li.ctx = ctx;
    if (li.values.empty()) throw Error(ErrorKind::argument, "empty a_n cache");
    return li;
}

/// Command-line run parameters; embedded in every output header.
struct RunConfig {
    int digits = 50;
    int terms = 200;
    int nmax = 1000;
    std::optional<std::string> range_lo, range_hi;
    std::string out;
    std::string format = "csv";
    bool long_running = false;

    void validate() const {
        if (digits < 20) throw Error(ErrorKind::argument, "--digits must be >= 20");
        if (terms < 0) throw Error(ErrorKind::argument, "--terms must be >= 0");
        if (nmax < 1) throw Error(ErrorKind::argument, "--nmax must be >= 1");
        if (format != "csv" && format != "json") throw Error(ErrorKind::argument, "--format must be csv or json");
    }

    PrecisionContext context() const { return PrecisionContext::with_digits(digits); }

    std::vector<std::pair<std::string, std::string>> describe() const {
        std::vector<std::pair<std::string, std::string>> d = {
            {"config-digits", std::to_string(digits)},
            {"config-terms", std::to_string(terms)},
            {"config-nmax", std::to_string(nmax)},
        };
        if (range_lo && range_hi) d.emplace_back("config-range", *range_lo + ":" + *range_hi);
        d.emplace_back("config-format", format);
        d.emplace_back("config-long-running", long_running ? "true" : "false");
        return d;
    }
};

}  // namespace xili
