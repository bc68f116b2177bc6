#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include "qmu/hermite.hpp"
#include "qmu/modular.hpp"
#include "qmu/registry.hpp"
#include "qmu/transform.hpp"

namespace qmu::cli {

enum ExitCode { kOk = 0, kParse = 2, kDomain = 3, kDivergent = 4, kVerifyFailed = 5 };

struct ParseError : Error {
    using Error::Error;
};

/// Shortest round-trip decimal form of a double.
inline std::string format_real(double x) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

/// "a", "a+bi" or "a-bi"; the imaginary part is omitted when it is zero.
inline std::string format_complex(cplx z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) return format_real(z.real());
    std::string im = format_real(std::abs(z.imag()));
    return format_real(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + im + "i";
}

/// Parses "a", "bi", "a+bi", "a-bi" with decimal reals; a bare "i" means unit coefficient.
inline cplx parse_complex(const std::string& s) {
    static const std::string num = R"((?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex re_only("^([+-]?" + num + ")$");
    static const std::regex im_only("^([+-]?)(" + num + ")?i$");
    static const std::regex both("^([+-]?" + num + ")([+-])(" + num + ")?i$");
    auto real = [&](const std::string& t) { return std::strtod(t.c_str(), nullptr); };
    std::smatch m;
    if (std::regex_match(s, m, re_only)) return {real(m[1]), 0.0};
    if (std::regex_match(s, m, im_only)) {
        double b = m[2].matched ? real(m[2]) : 1.0;
        return {0.0, m[1] == "-" ? -b : b};
    }
    if (std::regex_match(s, m, both)) {
        double b = m[3].matched ? real(m[3]) : 1.0;
        return {real(m[1]), m[2] == "-" ? -b : b};
    }
    throw ParseError("malformed complex literal '" + s + "'");
}

inline long parse_integer(const std::string& s) {
    static const std::regex re("^[+-]?\\d+$");
    if (!std::regex_match(s, re)) throw ParseError("malformed integer '" + s + "'");
    return std::stol(s);
}

/// One point of a table sweep: the text substituted for the swept flag and its numeric value.
struct SweepPoint {
    std::string text;
    nlohmann::json param;
};

/// "a..b" (integers, inclusive) or "a:b:step" (reals, inclusive up to rounding); nullopt if `s` is not a range.
inline std::optional<std::vector<SweepPoint>> parse_range(const std::string& s) {
    static const std::regex ints(R"(^([+-]?\d+)\.\.([+-]?\d+)$)");
    std::smatch m;
    if (std::regex_match(s, m, ints)) {
        long a = std::stol(m[1]), b = std::stol(m[2]);
        if (b < a) throw ParseError("empty range '" + s + "'");
        std::vector<SweepPoint> out;
        for (long n = a; n <= b; ++n) out.push_back({std::to_string(n), n});
        return out;
    }
    if (s.find(':') == std::string::npos) return std::nullopt;
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t pos; (pos = s.find(':', start)) != std::string::npos; start = pos + 1) parts.push_back(s.substr(start, pos - start));
    parts.push_back(s.substr(start));
    if (parts.size() != 3) throw ParseError("malformed range '" + s + "', expected start:stop:step");
    double v[3];
    for (int i = 0; i < 3; ++i) {
        cplx z = parse_complex(parts[static_cast<size_t>(i)]);
        if (z.imag() != 0.0) throw ParseError("range bounds must be real in '" + s + "'");
        v[i] = z.real();
    }
    if (!(v[2] > 0.0) || v[1] < v[0]) throw ParseError("malformed range '" + s + "', need start <= stop and step > 0");
    const long count = static_cast<long>(std::floor((v[1] - v[0]) / v[2] + 1e-9)) + 1;
    if (count > 100000) throw ParseError("range '" + s + "' has too many points");
    std::vector<SweepPoint> out;
    for (long k = 0; k < count; ++k) {
        // 12 significant digits drop the accumulated step error (0.15000000000000002 -> 0.15)
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v[0] + static_cast<double>(k) * v[2]);
        double x = std::strtod(buf, nullptr);
        out.push_back({format_real(x), x});
    }
    return out;
}

/// Parameter flags of eval/table, by name.
class Args {
public:
    explicit Args(std::map<std::string, std::string> raw) : raw_(std::move(raw)) {}

    bool has(const std::string& k) const { return raw_.count(k) > 0; }
    const std::string& text(const std::string& k) const {
        auto it = raw_.find(k);
        if (it == raw_.end()) throw ParseError("missing parameter --" + k);
        return it->second;
    }
    cplx cx(const std::string& k) const { return parse_complex(text(k)); }
    double re(const std::string& k) const {
        cplx z = cx(k);
        if (z.imag() != 0.0) throw ParseError("parameter --" + k + " must be real");
        return z.real();
    }
    long integer(const std::string& k) const { return parse_integer(text(k)); }
    std::vector<cplx> list(const std::string& k) const {
        std::vector<cplx> out;
        const std::string& s = text(k);
        if (s.empty()) return out;
        size_t start = 0;
        for (size_t pos; (pos = s.find(',', start)) != std::string::npos; start = pos + 1)
            out.push_back(parse_complex(s.substr(start, pos - start)));
        out.push_back(parse_complex(s.substr(start)));
        return out;
    }
    const std::map<std::string, std::string>& raw() const { return raw_; }
    void set(const std::string& k, const std::string& v) { raw_[k] = v; }

private:
    std::map<std::string, std::string> raw_;
};

struct FunctionSpec {
    std::vector<std::string> required;
    std::vector<std::string> optional;
    std::set<std::string> integers;  // flags echoed as integers
    std::set<std::string> words;     // flags echoed as strings
    std::set<std::string> lists;     // comma-separated complex lists
    std::function<EvalResult(const Args&, const Truncation&)> eval;
};

inline const std::map<std::string, FunctionSpec>& functions() {
    static const std::map<std::string, FunctionSpec> table = [] {
        std::map<std::string, FunctionSpec> f;
        auto tau = [](const Args& a) { return ModularPoint(a.cx("tau")); };
        f["mu"] = {{"u", "v", "tau"}, {}, {}, {}, {},
                   [tau](const Args& a, const Truncation& t) { return mu_zwegers(a.cx("u"), a.cx("v"), tau(a), t); }};
        f["mu_alpha"] = {{"u", "v", "alpha", "tau"}, {"form"}, {}, {"form"}, {},
                         [tau](const Args& a, const Truncation& t) {
                             MuPoint p{a.cx("u"), a.cx("v"), a.cx("alpha"), tau(a)};
                             if (!a.has("form")) return mu_general(p, t);
                             return mu_general_expr(p, parse_mu_form(a.text("form")), t);
                         }};
        f["theta11"] = {{"u", "tau"}, {}, {}, {}, {},
                        [tau](const Args& a, const Truncation& t) { return theta11(a.cx("u"), tau(a), t); }};
        f["theta_q"] = {{"x", "q"}, {}, {}, {}, {},
                        [](const Args& a, const Truncation& t) { return theta_q(a.cx("x"), a.cx("q"), t); }};
        f["qpoch"] = {{"x", "q"}, {"n"}, {"n"}, {}, {},
                      [](const Args& a, const Truncation& t) {
                          if (!a.has("n")) return qpoch_inf(a.cx("x"), a.cx("q"), t);
                          require_nome(a.cx("q"));
                          return EvalResult{qpoch(a.cx("x"), a.cx("q"), a.integer("n")), 0.0,
                                            static_cast<int>(std::labs(a.integer("n")))};
                      }};
        f["phi"] = {{"upper", "lower", "q", "x"}, {}, {}, {}, {"upper", "lower"},
                    [](const Args& a, const Truncation& t) { return phi({a.list("upper"), a.list("lower"), a.cx("q"), a.cx("x")}, t); }};
        f["psi"] = {{"upper", "lower", "q", "x"}, {}, {}, {}, {"upper", "lower"},
                    [](const Args& a, const Truncation& t) { return psi({a.list("upper"), a.list("lower"), a.cx("q"), a.cx("x")}, t); }};
        f["appell_phi1"] = {{"a", "b1", "b2", "c", "q", "x", "y"}, {}, {}, {}, {},
                            [](const Args& a, const Truncation& t) {
                                return q_appell_phi1(a.cx("a"), a.cx("b1"), a.cx("b2"), a.cx("c"), a.cx("q"), a.cx("x"),
                                                     a.cx("y"), t);
                            }};
        f["bessel_j2"] = {{"nu", "x", "q"}, {}, {}, {}, {},
                          [](const Args& a, const Truncation& t) { return q_bessel_J2(a.cx("nu"), a.cx("x"), a.cx("q"), t); }};
        f["hermite"] = {{"n", "w", "q"}, {}, {"n"}, {}, {},
                        [](const Args& a, const Truncation&) {
                            const cplx q = a.cx("q");
                            require_nome(q);
                            const long n = a.integer("n");
                            return EvalResult{hermite_cq(n, {a.cx("w"), q}), 0.0, static_cast<int>(n + 1)};
                        }};
        f["g3"] = {{"x", "q"}, {}, {}, {}, {}, [](const Args& a, const Truncation& t) { return g3(a.cx("x"), a.cx("q"), t); }};
        f["mock_theta"] = {{"which", "q"}, {}, {}, {"which"}, {},
                           [](const Args& a, const Truncation& t) {
                               return mock_theta(parse_mock_theta(a.text("which")), a.cx("q"), t);
                           }};
        f["S"] = {{"r", "u", "v", "tau"}, {"method"}, {}, {"method"}, {},
                  [tau](const Args& a, const Truncation& t) {
                      SMethod m = a.has("method") ? parse_s_method(a.text("method")) : SMethod::Direct;
                      return gen_S(a.cx("r"), a.cx("u"), a.cx("v"), tau(a), t, m);
                  }};
        f["f0"] = {{"w", "alpha", "tau", "lambda"}, {}, {}, {}, {},
                   [tau](const Args& a, const Truncation& t) {
                       return f0_solution_w(a.cx("w"), HWParams{a.cx("alpha"), tau(a), a.cx("lambda")}, t);
                   }};
        f["g0"] = {{"w", "alpha", "tau"}, {}, {}, {}, {},
                   [tau](const Args& a, const Truncation& t) {
                       return g0_solution_w(a.cx("w"), HWParams{a.cx("alpha"), tau(a), 1.0}, t);
                   }};
        f["R"] = {{"u", "tau"}, {}, {}, {}, {}, [tau](const Args& a, const Truncation& t) { return R_func(a.cx("u"), tau(a), t); }};
        f["mu_tilde"] = {{"u", "v", "tau"}, {}, {}, {}, {},
                         [tau](const Args& a, const Truncation& t) { return mu_tilde(a.cx("u"), a.cx("v"), tau(a), t); }};
        f["nu_tilde"] = {{"u", "v", "k", "tau"}, {}, {"k"}, {}, {},
                         [tau](const Args& a, const Truncation& t) {
                             long k = a.integer("k");
                             if (k < 1) throw DomainError("k must be a positive integer");
                             return nu_tilde(a.cx("u"), a.cx("v"), k, tau(a), t);
                         }};
        f["kronecker"] = {{"x", "y", "q"}, {}, {}, {}, {},
                          [](const Args& a, const Truncation& t) { return kronecker_k(a.cx("x"), a.cx("y"), a.cx("q"), t); }};
        // value is the Gauss sum; err is |sum - product|
        f["gauss_sum"] = {{"N"}, {}, {"N"}, {}, {},
                          [](const Args& a, const Truncation&) {
                              long N = a.integer("N");
                              auto [s, p] = gauss_sum_product(N);
                              return EvalResult{s, std::abs(s - p), static_cast<int>(2 * N + 1)};
                          }};
        return f;
    }();
    return table;
}

inline const std::vector<std::string>& param_names() {
    static const std::vector<std::string> names = {"u", "v",  "w",  "x", "y",  "q",  "tau",    "alpha", "n",     "N",      "k",
                                                   "r", "a",  "b1", "b2", "c", "nu", "lambda", "which", "method", "form", "upper",
                                                   "lower"};
    return names;
}

inline const FunctionSpec& lookup(const std::string& name) {
    auto it = functions().find(name);
    if (it == functions().end()) throw ParseError("unknown function '" + name + "'");
    return it->second;
}

inline void check_params(const std::string& name, const FunctionSpec& f, const Args& a) {
    std::set<std::string> allowed(f.required.begin(), f.required.end());
    allowed.insert(f.optional.begin(), f.optional.end());
    for (const auto& [k, v] : a.raw())
        if (!allowed.count(k)) throw ParseError("parameter --" + k + " does not apply to " + name);
    for (const auto& k : f.required)
        if (!a.has(k)) throw ParseError("missing parameter --" + k + " for " + name);
}

inline nlohmann::json inputs_json(const FunctionSpec& f, const Args& a) {
    nlohmann::json in = nlohmann::json::object();
    for (const auto& [k, v] : a.raw()) {
        if (f.integers.count(k)) {
            in[k] = a.integer(k);
        } else if (f.words.count(k)) {
            in[k] = v;
        } else if (f.lists.count(k)) {
            nlohmann::json arr = nlohmann::json::array();
            for (cplx z : a.list(k)) arr.push_back(to_json(z));
            in[k] = arr;
        } else {
            in[k] = to_json(a.cx(k));
        }
    }
    return in;
}

/// Truncation for eval/table: --tol sets rel_tol, QMU_MAX_TERMS sets max_terms.
inline Truncation cli_truncation(std::optional<double> tol) {
    Truncation t;
    if (tol) t.rel_tol = *tol;
    if (const char* env = std::getenv("QMU_MAX_TERMS"); env && *env) {
        long m = parse_integer(env);
        if (m < 1 || m > 100000000) throw ParseError("QMU_MAX_TERMS must be a positive integer");
        t.max_terms = static_cast<int>(m);
    }
    if (!(t.rel_tol > 0.0)) throw ParseError("--tol must be positive");
    if (t.max_terms < t.settle_count) throw ParseError("QMU_MAX_TERMS must be at least " + std::to_string(t.settle_count));
    return t;
}

inline int cmd_eval(const std::string& name, const Args& args, std::optional<double> tol, bool json, std::ostream& out) {
    const FunctionSpec& f = lookup(name);
    check_params(name, f, args);
    Truncation t = cli_truncation(tol);
    nlohmann::json in = inputs_json(f, args);
    EvalResult r = f.eval(args, t);
    if (json) {
        out << nlohmann::json{{"function", name}, {"inputs", in}, {"value", to_json(r.value)}, {"err", r.err_estimate},
                              {"terms", r.terms_used}}
                   .dump()
            << "\n";
    } else {
        out << "value  " << format_complex(r.value) << "\n";
        out << "err    " << format_real(r.err_estimate) << "\n";
        out << "terms  " << r.terms_used << "\n";
    }
    return kOk;
}

inline int cmd_table(const std::string& name, Args args, std::optional<double> tol, const std::string& format, std::ostream& out) {
    const FunctionSpec& f = lookup(name);
    if (format != "csv" && format != "json") throw ParseError("--format must be csv or json");
    std::string swept;
    std::vector<SweepPoint> points;
    for (const auto& [k, v] : args.raw()) {
        if (f.words.count(k) || f.lists.count(k)) continue;
        if (auto r = parse_range(v)) {
            if (!swept.empty()) throw ParseError("table takes exactly one range flag, got --" + swept + " and --" + k);
            swept = k;
            points = std::move(*r);
        }
    }
    if (swept.empty()) throw ParseError("table needs one range flag, e.g. --n 0..10 or --q 0.1:0.5:0.05");
    if (f.integers.count(swept) && !points.front().param.is_number_integer())
        throw ParseError("--" + swept + " takes an integer range a..b");
    check_params(name, f, args);
    Truncation t = cli_truncation(tol);

    nlohmann::json rows = nlohmann::json::array();
    if (format == "csv") out << "param,re,im,err\n";
    for (const auto& p : points) {
        args.set(swept, p.text);
        EvalResult r = f.eval(args, t);
        if (format == "csv") {
            out << p.text << "," << format_real(r.value.real()) << "," << format_real(r.value.imag()) << ","
                << format_real(r.err_estimate) << "\n";
        } else {
            rows.push_back({{"param", p.param}, {"re", r.value.real()}, {"im", r.value.imag()}, {"err", r.err_estimate}});
        }
    }
    if (format == "json") out << rows.dump(2) << "\n";
    return kOk;
}

inline int cmd_verify(const std::vector<std::string>& suites, int samples, std::uint64_t seed, std::optional<double> tol,
                      const std::string& report, std::ostream& out) {
    if (samples < 1) throw ParseError("--samples must be positive");
    if (tol && !(*tol > 0.0)) throw ParseError("--tol must be positive");
    static const Registry reg = register_all();
    std::vector<std::string> names = suites.empty() ? std::vector<std::string>{"all"} : suites;
    auto reps = run(reg, names, samples, seed, tol);

    size_t width = 4;
    for (const auto& r : reps) width = std::max(width, r.name.size());
    int failed = 0;
    char line[512];
    std::snprintf(line, sizeof line, "%-6s %-*s %12s %9s  %s\n", "status", static_cast<int>(width), "case", "max_rel", "tol",
                  "expectation");
    out << line;
    for (const auto& r : reps) {
        if (!r.ok()) ++failed;
        std::snprintf(line, sizeof line, "%-6s %-*s %12.3e %9.1e  %s\n", r.ok() ? "PASS" : "FAIL", static_cast<int>(width),
                      r.name.c_str(), r.max_rel_residual, r.tol, r.expected_holds ? "holds" : "variant expected to fail");
        out << line;
    }
    out << reps.size() - static_cast<size_t>(failed) << "/" << reps.size() << " cases pass (samples " << samples << ", seed "
        << seed << ")\n";

    if (!report.empty()) {
        std::ofstream f(report, std::ios::binary);
        if (!f) throw ParseError("cannot write report '" + report + "'");
        f << report_json(reps, seed, samples, tol).dump(2) << "\n";
    }
    return failed == 0 ? kOk : kVerifyFailed;
}

/// Entry point of the qmu command; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"q-series and generalized mu-function toolkit"};
    app.require_subcommand(1);

    std::string function, format = "csv", report;
    std::map<std::string, std::string> params;
    std::optional<double> tol;
    bool json = false;
    std::vector<std::string> suites;
    int samples = 20;
    std::uint64_t seed = 42;

    auto add_params = [&](CLI::App* sub) {
        for (const auto& p : param_names())
            sub->add_option_function<std::string>("--" + p, [&params, p](const std::string& v) { params[p] = v; },
                                                  "function parameter " + p);
    };

    auto* eval = app.add_subcommand("eval", "Evaluate one function at a point");
    eval->add_option("function", function, "function name")->required();
    eval->add_option("--tol", tol, "relative truncation tolerance");
    eval->add_flag("--json", json, "emit JSON");
    add_params(eval);

    auto* table = app.add_subcommand("table", "Tabulate one function over a 1-D sweep");
    table->add_option("function", function, "function name")->required();
    table->add_option("--tol", tol, "relative truncation tolerance");
    table->add_option("--format", format, "csv or json");
    add_params(table);

    auto* verify = app.add_subcommand("verify", "Check registered identities at random admissible points");
    verify->add_option("--suite", suites, "case name, prefix or 'all'")->delimiter(',');
    verify->add_option("--samples", samples, "points per case");
    verify->add_option("--seed", seed, "RNG seed");
    verify->add_option("--tol", tol, "override every case tolerance");
    verify->add_option("--report", report, "write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? kOk : kParse;
    }

    try {
        if (*eval) return cmd_eval(function, Args(params), tol, json, out);
        if (*table) return cmd_table(function, Args(params), tol, format, out);
        return cmd_verify(suites, samples, seed, tol, report, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const UnknownIdentity& e) {
        err << "error: " << e.what() << "\n";
        return kParse;
    } catch (const PoleHit& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const Divergent& e) {
        err << "error: " << e.what() << "\n";
        return kDivergent;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kDivergent;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qmu::cli
