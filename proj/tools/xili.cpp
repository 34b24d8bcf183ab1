// xili: batch front end for the xi / Li / lambda pipelines, scans and fits.
//
// exit codes: 0 ok, 1 usage, 2 precision or range refusal, 3 invariant violated

#include "xili/cache.hpp"
#include "xili/fit.hpp"
#include "xili/lambda.hpp"
#include "xili/mobius.hpp"
#include "xili/scan.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace xili;
using nlohmann::ordered_json;

namespace {

struct Options {
    RunConfig cfg;
    std::string range;
    std::string xi_cache_path;
    std::string a_cache_path;
    std::string cache_path;
    std::string report_path;
    std::string lambda_cache_path;
    int oracle_limit = 100;
    // scan
    std::string scan_kind = "real";
    std::string step = "0.05";
    int steps = 6000;
    std::string t_range;
    std::string map = "w_m";
    std::string modulus = "3";
    int samples = 201;
    // fit
    std::vector<int> table_n{1000};
    int cnp_n = 2000;
    std::string p_range;
    int jm_max = 30;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::argument, "cannot open '" + path + "' for writing");
    f << text;
}

std::string header_comment(const RunConfig& cfg, const std::string& what) {
    std::ostringstream os;
    os << "# output: " << what << '\n' << "# generator-version: " << kGeneratorVersion << '\n';
    for (const auto& [k, v] : cfg.describe()) os << "# " << k << ": " << v << '\n';
    return os.str();
}

ordered_json config_json(const RunConfig& cfg) {
    ordered_json j;
    for (const auto& [k, v] : cfg.describe()) j[k] = v;
    j["generator-version"] = kGeneratorVersion;
    return j;
}

void split_range(const std::string& text, std::string& lo, std::string& hi) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::argument, "range must be LO:HI, got '" + text + "'");
    lo = text.substr(0, colon);
    hi = text.substr(colon + 1);
}

void apply_range(Options& o) {
    if (o.range.empty()) return;
    std::string lo, hi;
    split_range(o.range, lo, hi);
    o.cfg.range_lo = lo;
    o.cfg.range_hi = hi;
}

std::string dec(const Real& x, int digits) { return to_decimal(x, digits); }

XiCoefficients obtain_xi(const Options& o, const PrecisionContext& ctx) {
    if (!o.xi_cache_path.empty()) return xi_from_cache(CacheFile::read(o.xi_cache_path), ctx);
    return xi_r_table(o.cfg.terms, ctx);
}

int xi_terms_of(const Options& o, const XiCoefficients& xi) { return o.xi_cache_path.empty() ? o.cfg.terms : xi.R(); }

LiCoefficients obtain_li(const Options& o, const PrecisionContext& ctx, int need) {
    if (!o.a_cache_path.empty()) {
        LiCoefficients li = li_from_cache(CacheFile::read(o.a_cache_path), ctx);
        if (li.N() < need) throw Error(ErrorKind::range, "a_n cache stops at n = " + std::to_string(li.N()));
        return li;
    }
    XiCoefficients xi = obtain_xi(o, ctx);
    SigmaTable sig = sigma_table(need + 1, xi);
    return li_an_streaming(need, sig);
}

// ---------------------------------------------------------------- xi

int cmd_xi(const Options& o) {
    PrecisionContext ctx = o.cfg.context();
    XiCoefficients xi = xi_r_table(o.cfg.terms, ctx);
    CacheFile c = xi_cache(xi);
    for (auto kv : o.cfg.describe()) c.extra.push_back(kv);
    c.write(o.cfg.out.empty() ? "xi_r.tsv" : o.cfg.out);
    ScopedPrecision guard(ctx);
    std::cout << "xi_0 = " << dec(xi[0], ctx.digits) << '\n';
    std::cout << "2 sum xi_r/4^r = " << dec(xi_unit_sum(xi), ctx.digits) << '\n';
    std::cout << "quadrature levels " << xi.quadrature.levels << ", nodes " << xi.quadrature.nodes
              << ", relative change " << dec(xi.quadrature.achieved_error, 3) << '\n';
    return 0;
}

// ---------------------------------------------------------------- li

int cmd_li(const Options& o) {
    PrecisionContext ctx = o.cfg.context();
    XiCoefficients xi = obtain_xi(o, ctx);
    const int N = o.cfg.nmax;
    SigmaTable sig = sigma_table(N + 1, xi);
    LiCoefficients li = li_an_streaming(N, sig);
    CacheFile c = li_cache(li, xi.R());
    for (auto kv : o.cfg.describe()) c.extra.push_back(kv);
    c.write(o.cfg.out.empty() ? "a_n.tsv" : o.cfg.out);

    ScopedPrecision guard(ctx);
    std::ostringstream rep;
    rep << "a_1 = " << dec(li.a(1), ctx.digits) << '\n';
    Real closed = 1 + euler_gamma() / 2 - log(4 * pi_value()) / 2;
    rep << "a_1 closed form 1 + gamma/2 - log(4 pi)/2 relative difference " << dec(relative_difference(li.a(1), closed), 3)
        << '\n';

    BoundsReport bounds = an_bounds_check(li, sig);
    rep << "bounds N=" << bounds.N << '\n';
    for (const auto& [name, count] : bounds.checks) rep << "  " << name << ": " << count << " checked\n";
    rep << "  violations: " << bounds.violations.size() << '\n';
    for (const auto& v : bounds.violations) rep << "    " << v.check << " at n=" << v.n << '\n';

    int limit = std::min(o.oracle_limit, N);
    Real worst = 0;
    if (limit >= 1) {
        LiCoefficients oracle = an_oracle(limit, xi);
        for (int n = 1; n <= limit; ++n) worst = std::max(worst, relative_difference(li.a(n), oracle.a(n)));
        rep << "oracle agreement n<=" << limit << ": max relative difference " << dec(worst, 3) << '\n';
    }
    if (!o.report_path.empty()) emit(o.report_path, header_comment(o.cfg, "li report") + rep.str());
    std::cout << rep.str();

    Real agreement = PrecisionContext::pow10(-(ctx.digits - 10));
    if (!bounds.ok() || worst > agreement) {
        std::cerr << "xili li: invariant check failed\n";
        return 3;
    }
    return 0;
}

// ---------------------------------------------------------------- lambda

int cmd_lambda(const Options& o) {
    PrecisionContext ctx = o.cfg.context();
    const int J = o.cfg.nmax;
    LiCoefficients li = obtain_li(o, ctx, J + 1);
    LambdaSequence lam = lambda_sequence(li, J);
    SingularityDiagnostics diag = titchmarsh_bn(li, J);
    std::vector<Real> R = radius_estimates(li);
    ScopedPrecision guard(ctx);
    const int d = ctx.digits;

    if (!o.lambda_cache_path.empty()) {
        CacheFile c;
        c.family = CacheFamily::lambda_n;
        c.digits = d;
        c.method = "phi-derivative-ratio";
        c.extra = o.cfg.describe();
        c.rows = decimal_rows(lam.li_values, 1, d);
        c.write(o.lambda_cache_path);
    }

    std::ostringstream os;
    if (o.cfg.format == "json") {
        ordered_json j;
        j["config"] = config_json(o.cfg);
        j["b_0"] = dec(diag.b[0], d);
        ordered_json rows = ordered_json::array();
        for (int n = 1; n <= J; ++n) {
            auto i = static_cast<std::size_t>(n);
            rows.push_back({{"n", n},
                            {"lambda_li", dec(lam.li_values[i - 1], d)},
                            {"lambda_keiper", dec(lam.keiper_values[i - 1], d)},
                            {"A", dec(lam.reciprocal[i - 1], d)},
                            {"b", dec(diag.b[i], d)},
                            {"b_root", dec(diag.root_estimates[i], d)},
                            {"R", dec(R[i - 1], d)}});
        }
        j["rows"] = rows;
        os << j.dump(2) << '\n';
    } else {
        os << header_comment(o.cfg, "lambda");
        os << "n,lambda_li,lambda_keiper,A,b,b_root,R\n";
        for (int n = 1; n <= J; ++n) {
            auto i = static_cast<std::size_t>(n);
            os << n << ',' << dec(lam.li_values[i - 1], d) << ',' << dec(lam.keiper_values[i - 1], d) << ','
               << dec(lam.reciprocal[i - 1], d) << ',' << dec(diag.b[i], d) << ',' << dec(diag.root_estimates[i], d)
               << ',' << dec(R[i - 1], d) << '\n';
        }
    }
    emit(o.cfg.out, os.str());
    return 0;
}

// ---------------------------------------------------------------- scan

std::string scan_csv(const ScanReport& rep, int d) {
    std::ostringstream os;
    os << "parameter";
    if (rep.path == PathKind::unit_circle) os << ",t";
    for (const auto& f : rep.functions) os << ',' << (rep.path == PathKind::unit_circle ? "log_abs_" : "") << f;
    os << ",events\n";
    std::size_t e = 0;
    for (std::size_t k = 0; k < rep.samples.size(); ++k) {
        const auto& s = rep.samples[k];
        os << dec(s.parameter, d);
        if (rep.path == PathKind::unit_circle) os << ',' << dec(t_for_theta(s.parameter), d);
        for (const auto& v : s.values) os << ',' << dec(v, d);
        os << ',';
        bool first = true;
        while (e < rep.events.size() && rep.events[e].location <= s.parameter) {
            if (rep.events[e].location == s.parameter) {
                os << (first ? "" : ";") << to_string(rep.events[e].kind) << ':' << rep.events[e].function;
                first = false;
            }
            ++e;
        }
        os << '\n';
    }
    return os.str();
}

ordered_json scan_json(const ScanReport& rep, int d) {
    ordered_json j;
    j["path"] = to_string(rep.path);
    j["range"] = {dec(rep.lo, d), dec(rep.hi, d)};
    j["step"] = dec(rep.step, d);
    j["functions"] = rep.functions;
    ordered_json samples = ordered_json::array();
    for (const auto& s : rep.samples) {
        ordered_json vals = ordered_json::array();
        for (const auto& v : s.values) vals.push_back(dec(v, d));
        samples.push_back({{"parameter", dec(s.parameter, d)}, {"values", vals}});
    }
    j["samples"] = samples;
    ordered_json events = ordered_json::array();
    for (const auto& e : rep.events)
        events.push_back({{"kind", to_string(e.kind)},
                          {"function", e.function},
                          {"location", dec(e.location, d)},
                          {"refined_location", dec(e.refined_location, d)},
                          {"detail", e.detail}});
    j["events"] = events;
    if (rep.log_minus_positive_from) j["log_minus_positive_from"] = dec(*rep.log_minus_positive_from, d);
    if (rep.path == PathKind::unit_circle) j["refused"] = rep.refused;
    return j;
}

int cmd_scan(const Options& o) {
    PrecisionContext ctx = o.cfg.context();
    const int d = std::min(ctx.digits, 30);
    std::ostringstream os;

    if (o.scan_kind == "locus") {
        ScopedPrecision guard(ctx);
        Locus loc = locus_emit(parse_mobius_kind(o.map), parse_decimal(o.modulus), o.samples);
        if (o.cfg.format == "json") {
            ordered_json j;
            j["config"] = config_json(o.cfg);
            j["map"] = o.map;
            j["modulus"] = o.modulus;
            j["shape"] = loc.shape == Locus::Shape::line ? "line" : "circle";
            if (loc.shape == Locus::Shape::line) {
                j["line_u"] = dec(loc.line_u, d);
            } else {
                j["center"] = dec(loc.center, d);
                j["radius"] = dec(loc.radius, d);
            }
            ordered_json pts = ordered_json::array();
            for (const auto& p : loc.points) pts.push_back({dec(p.re, d), dec(p.im, d)});
            j["points"] = pts;
            os << j.dump(2) << '\n';
        } else {
            os << header_comment(o.cfg, "locus " + o.map + " modulus " + o.modulus);
            os << "# shape: " << (loc.shape == Locus::Shape::line ? "line u=" + dec(loc.line_u, d)
                                                                  : "circle center=" + dec(loc.center, d) +
                                                                        " radius=" + dec(loc.radius, d))
               << '\n';
            os << "u,v\n";
            for (const auto& p : loc.points) os << dec(p.re, d) << ',' << dec(p.im, d) << '\n';
        }
        emit(o.cfg.out, os.str());
        return 0;
    }

    XiCoefficients xi = obtain_xi(o, ctx);
    ScopedPrecision guard(ctx);
    ScanReport rep;
    if (o.scan_kind == "real") {
        std::string lo = "1", hi = "30";
        if (o.cfg.range_lo) lo = *o.cfg.range_lo, hi = *o.cfg.range_hi;
        rep = sandwich_scan_real(parse_decimal(lo), parse_decimal(hi), parse_decimal(o.step), xi);
    } else if (o.scan_kind == "circle") {
        Real th_lo, th_hi;
        if (!o.t_range.empty()) {
            std::string lo, hi;
            split_range(o.t_range, lo, hi);
            th_lo = theta_for_t(parse_decimal(hi));
            th_hi = theta_for_t(parse_decimal(lo));
        } else if (o.cfg.range_lo) {
            th_lo = parse_decimal(*o.cfg.range_lo);
            th_hi = parse_decimal(*o.cfg.range_hi);
        } else {
            th_lo = theta_for_t(Real(60));
            th_hi = theta_for_t(Real(10));
        }
        rep = circle_scan(th_lo, th_hi, o.steps, xi);
    } else {
        throw Error(ErrorKind::argument, "--kind must be real, circle or locus");
    }

    if (o.cfg.format == "json") {
        ordered_json j = scan_json(rep, d);
        j["config"] = config_json(o.cfg);
        os << j.dump(2) << '\n';
    } else {
        os << header_comment(o.cfg, "scan " + to_string(rep.path));
        os << "# events: " << rep.events.size() << '\n';
        if (rep.log_minus_positive_from)
            os << "# log-xi-minus-positive-from: " << dec(*rep.log_minus_positive_from, d) << '\n';
        if (rep.path == PathKind::unit_circle) os << "# refused: " << rep.refused << '\n';
        os << scan_csv(rep, d);
    }
    emit(o.cfg.out, os.str());

    std::cerr << "scan " << to_string(rep.path) << ": " << rep.samples.size() << " samples, "
              << rep.count(EventKind::inequality_violation) << " violations, " << rep.count(EventKind::dip)
              << " dips, " << rep.count(EventKind::sign_change) << " sign changes\n";
    return rep.count(EventKind::inequality_violation) == 0 ? 0 : 3;
}

// ---------------------------------------------------------------- fit

ordered_json fit_json(const FitResult& f, int d) {
    ordered_json params;
    for (const auto& [k, v] : f.params) params[k] = dec(v, d);
    return {{"model", f.model},
            {"params", params},
            {"residual_rms", dec(f.residual_rms, d)},
            {"range", {dec(f.lo, d), dec(f.hi, d)}},
            {"sample_count", f.sample_count}};
}

int cmd_fit(const Options& o) {
    PrecisionContext ctx = o.cfg.context();
    const int d = std::min(ctx.digits, 25);
    int lo = 500, hi = 1000;
    if (o.cfg.range_lo) lo = std::stoi(*o.cfg.range_lo), hi = std::stoi(*o.cfg.range_hi);
    std::vector<int> table_n = o.table_n;
    int cnp_n = o.cnp_n;
    int p_lo = cnp_n / 50, p_hi = cnp_n / 10;
    if (!o.p_range.empty()) {
        std::string a, b;
        split_range(o.p_range, a, b);
        p_lo = std::stoi(a);
        p_hi = std::stoi(b);
    }
    int nmax = std::max(o.cfg.nmax, hi);
    if (o.cfg.long_running) {
        for (int n : {2000, 3000, 4000})
            if (std::find(table_n.begin(), table_n.end(), n) == table_n.end()) table_n.push_back(n);
        nmax = std::max(nmax, 4000);
    }
    int table_max = *std::max_element(table_n.begin(), table_n.end());

    XiCoefficients xi = obtain_xi(o, ctx);
    SigmaTable sig = sigma_table(std::max(nmax, table_max) + 1, xi);
    LiCoefficients li = o.a_cache_path.empty() ? li_an_streaming(nmax, sig) : obtain_li(o, ctx, hi);
    ScopedPrecision guard(ctx);

    FitResult log_fit = fit_log_an(li, lo, hi);
    AsymReport asym = asym_check(li, lo, hi);
    std::vector<PaRow> table = pa_table_streaming(sig, table_n);
    std::vector<Real> row = cnp_row_streaming(cnp_n);
    FitResult cfit = cnp_fit_row(cnp_n, row, p_lo, p_hi);
    PeakRow peak = peak_of_row(cnp_n, row);
    std::vector<std::pair<int, int>> jm = jm_scan(li, o.jm_max);

    ordered_json j;
    j["config"] = config_json(o.cfg);
    j["fit_log_an"] = fit_json(log_fit, d);
    j["asym_check"] = {{"range", {lo, hi}}, {"min", dec(asym.min, d)}, {"max", dec(asym.max, d)}};
    ordered_json rows = ordered_json::array();
    for (const auto& r : table)
        rows.push_back({{"n", r.n},
                        {"p_a", r.p_a},
                        {"log_summand", dec(r.log_summand, d)},
                        {"log_sigma", dec(r.log_sigma, d)},
                        {"derivative", dec(r.derivative, d)},
                        {"central_derivative", dec(r.central_derivative, d)}});
    j["table1"] = rows;
    ordered_json cj = fit_json(cfit, d);
    cj["n"] = cnp_n;
    cj["a_estimate"] = dec(cnp_fit_a_estimate(cnp_n), d);
    j["cnp_fit"] = cj;
    j["cnp_peak"] = {{"n", cnp_n},
                     {"p_m", peak.p_m},
                     {"peak", dec(peak.peak, d)},
                     {"line", dec(peak_height_line(cnp_n), d)},
                     {"row_sum", dec(peak.row_sum, d)}};
    ordered_json jmj = ordered_json::array();
    for (const auto& [n, jj] : jm) jmj.push_back({n, jj});
    j["jm_scan"] = jmj;

    std::ostringstream os;
    if (o.cfg.format == "json") {
        os << j.dump(2) << '\n';
    } else {
        os << header_comment(o.cfg, "fit");
        os << "# fit_log_an: c0=" << dec(log_fit.param("c0"), d) << " c1=" << dec(log_fit.param("c1"), d)
           << " rms=" << dec(log_fit.residual_rms, 6) << '\n';
        os << "# asym_check: [" << lo << "," << hi << "] min=" << dec(asym.min, d) << " max=" << dec(asym.max, d)
           << '\n';
        os << "# cnp_fit: n=" << cnp_n << " p=" << p_lo << ":" << p_hi << " a=" << dec(cfit.param("a"), d)
           << " b=" << dec(cfit.param("b"), d) << " c=" << dec(cfit.param("c"), d)
           << " a_estimate=" << dec(cnp_fit_a_estimate(cnp_n), d) << '\n';
        os << "# cnp_peak: p_m=" << peak.p_m << " peak=" << dec(peak.peak, d)
           << " line=" << dec(peak_height_line(cnp_n), d) << '\n';
        os << "# jm_scan:";
        for (const auto& [n, jj] : jm) os << ' ' << n << ':' << jj;
        os << '\n';
        os << "n,p_a,log_summand,log_sigma,derivative,central_derivative\n";
        for (const auto& r : table)
            os << r.n << ',' << r.p_a << ',' << dec(r.log_summand, d) << ',' << dec(r.log_sigma, d) << ','
               << dec(r.derivative, d) << ',' << dec(r.central_derivative, d) << '\n';
    }
    emit(o.cfg.out, os.str());
    std::cerr << "fit_log_an slope " << dec(log_fit.param("c1"), 8) << ", asym ratio [" << dec(asym.min, 6) << ", "
              << dec(asym.max, 6) << "], cnp_fit a " << dec(cfit.param("a"), 6) << '\n';
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Options& o) {
    if (o.cache_path.empty()) throw Error(ErrorKind::argument, "verify needs --cache PATH");
    CacheFile c = CacheFile::read(o.cache_path);
    std::vector<std::string> problems = cache_structure_problems(c);
    ScopedPrecision guard(static_cast<unsigned>(c.digits + 10));
    std::vector<Real> v = c.values();
    switch (c.family) {
        case CacheFamily::xi_r:
            for (std::size_t r = 0; r < v.size(); ++r) {
                if (!(v[r] > 0)) problems.push_back("xi_" + std::to_string(r) + " is not positive");
                if (r > 0 && !(v[r] < v[r - 1])) problems.push_back("xi_r not decreasing at r=" + std::to_string(r));
            }
            break;
        case CacheFamily::a_n:
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (!(v[i] > 0)) problems.push_back("a_" + std::to_string(i + 1) + " is not positive");
                if (i > 0 && !(v[i] > v[i - 1])) problems.push_back("a_n not increasing at n=" + std::to_string(i + 1));
            }
            if (!v.empty()) {
                Real closed = 1 + euler_gamma() / 2 - log(4 * pi_value()) / 2;
                if (relative_difference(v[0], closed) > PrecisionContext::pow10(5 - c.digits))
                    problems.push_back("a_1 disagrees with 1 + gamma/2 - log(4 pi)/2");
            }
            break;
        case CacheFamily::lambda_n:
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!(v[i] > 0)) problems.push_back("lambda_" + std::to_string(i + 1) + " is not positive");
            break;
        case CacheFamily::sigma_p:
            for (std::size_t p = 1; p < v.size(); ++p)
                if (!(v[p] > v[p - 1])) problems.push_back("Sigma_p not increasing at p=" + std::to_string(p));
            break;
        case CacheFamily::c_row: {
            long n = static_cast<long>(v.size());
            Real sum = 0;
            for (long p = 1; p <= n; ++p) {
                const Real& x = v[static_cast<std::size_t>(p - 1)];
                if ((n + p) % 2 != 0 && x != 0) problems.push_back("C-row parity zero violated at p=" + std::to_string(p));
                if ((n + p) % 2 == 0 && !(x > 0)) problems.push_back("C-row entry not positive at p=" + std::to_string(p));
                sum += x;
            }
            if (n > 0 && relative_difference(sum, Real(4 * n)) > PrecisionContext::pow10(5 - c.digits))
                problems.push_back("C-row sum differs from 4n");
            break;
        }
    }
    if (problems.empty()) {
        std::cout << o.cache_path << ": ok (" << to_string(c.family) << ", " << c.rows.size() << " rows, " << c.digits
                  << " digits)\n";
        return 0;
    }
    for (const auto& p : problems) std::cout << o.cache_path << ": " << p << '\n';
    return 3;
}

void add_common(CLI::App* sub, Options& o) {
    sub->add_option("--digits", o.cfg.digits, "decimal digits promised")->capture_default_str();
    sub->add_option("--terms", o.cfg.terms, "number R of xi_r terms")->capture_default_str();
    sub->add_option("--nmax", o.cfg.nmax, "largest n")->capture_default_str();
    sub->add_option("--range", o.range, "LO:HI");
    sub->add_option("--out", o.cfg.out, "output path (stdout when empty)");
    sub->add_option("--format", o.cfg.format, "csv or json")->capture_default_str();
    sub->add_flag("--long-running", o.cfg.long_running, "enable full-scale checks");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Riemann xi and Li coefficients at high precision"};
    app.require_subcommand(1);
    Options o;

    auto* xi = app.add_subcommand("xi", "compute and cache xi_r");
    add_common(xi, o);
    auto* li = app.add_subcommand("li", "compute and cache a_n with bounds and oracle report");
    add_common(li, o);
    li->add_option("--xi-cache", o.xi_cache_path, "read xi_r from this cache");
    li->add_option("--oracle-limit", o.oracle_limit, "cross-check a_n against the direct expansion up to this n")
        ->capture_default_str();
    li->add_option("--report", o.report_path, "also write the report here");
    auto* lam = app.add_subcommand("lambda", "lambda_n, A_j, b_n and R_n");
    add_common(lam, o);
    lam->add_option("--a-cache", o.a_cache_path, "read a_n from this cache");
    lam->add_option("--xi-cache", o.xi_cache_path, "read xi_r from this cache");
    lam->add_option("--lambda-cache", o.lambda_cache_path, "write lambda_n cache here");
    auto* scan = app.add_subcommand("scan", "real-axis sandwich scan, circle scan or locus");
    add_common(scan, o);
    scan->add_option("--kind", o.scan_kind, "real, circle or locus")->capture_default_str();
    scan->add_option("--step", o.step, "real-axis step")->capture_default_str();
    scan->add_option("--steps", o.steps, "circle samples")->capture_default_str();
    scan->add_option("--t-range", o.t_range, "circle range as heights LO:HI");
    scan->add_option("--map", o.map, "locus map: w, w_h, w_m")->capture_default_str();
    scan->add_option("--modulus", o.modulus, "locus modulus")->capture_default_str();
    scan->add_option("--samples", o.samples, "locus points")->capture_default_str();
    scan->add_option("--xi-cache", o.xi_cache_path, "read xi_r from this cache");
    auto* fit = app.add_subcommand("fit", "fits, asymptotic checks and peak tables");
    add_common(fit, o);
    fit->add_option("--table-n", o.table_n, "n values for the peak table")->delimiter(',');
    fit->add_option("--cnp-n", o.cnp_n, "row n for the C_{n,p} fit")->capture_default_str();
    fit->add_option("--p-range", o.p_range, "p window LO:HI for the C_{n,p} fit (default n/50:n/10)");
    fit->add_option("--jm-max", o.jm_max, "largest argument for the j_m scan")->capture_default_str();
    fit->add_option("--a-cache", o.a_cache_path, "read a_n from this cache");
    fit->add_option("--xi-cache", o.xi_cache_path, "read xi_r from this cache");
    auto* verify = app.add_subcommand("verify", "re-check the invariants of a cache file");
    verify->add_option("--cache", o.cache_path, "cache file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        apply_range(o);
        if (!verify->parsed()) o.cfg.validate();
        if (xi->parsed()) return cmd_xi(o);
        if (li->parsed()) return cmd_li(o);
        if (lam->parsed()) return cmd_lambda(o);
        if (scan->parsed()) return cmd_scan(o);
        if (fit->parsed()) return cmd_fit(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const Error& e) {
        std::cerr << "xili: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::argument: return 1;
            case ErrorKind::refusal:
            case ErrorKind::range: return 2;
            case ErrorKind::invariant: return 3;
        }
    } catch (const std::exception& e) {
        std::cerr << "xili: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
