#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qmu/transform.hpp"

namespace qmu {

/// Raised by a sampler when a draw falls outside the case's admissible domain.
struct SampleRejected : Error {
    using Error::Error;
};

/// Draws the inputs of one sample and records them in draw order.
class Draw {
public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    /// Uniform in [lo, hi) from the top 53 bits, identical on every platform.
    double uniform(double lo, double hi) {
        double r = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * r;
    }

    double real(const std::string& name, double lo, double hi) {
        double x = uniform(lo, hi);
        set(name, x);
        return x;
    }

    cplx box(const std::string& name, double re0, double re1, double im0, double im1) {
        double re = uniform(re0, re1), im = uniform(im0, im1);
        return set(name, {re, im});
    }

    /// r e^{i phi} with r in [r0, r1), phi in [p0, p1).
    cplx polar(const std::string& name, double r0, double r1, double p0, double p1) {
        double r = uniform(r0, r1), p = uniform(p0, p1);
        return set(name, std::polar(r, p));
    }

    long integer(const std::string& name, long lo, long hi) {
        long k = lo + static_cast<long>(uniform(0.0, 1.0) * static_cast<double>(hi - lo + 1));
        k = std::min(k, hi);
        set(name, static_cast<double>(k));
        return k;
    }

    cplx choice(const std::string& name, const std::vector<cplx>& opts) {
        size_t i = std::min(opts.size() - 1, static_cast<size_t>(uniform(0.0, 1.0) * static_cast<double>(opts.size())));
        return set(name, opts[i]);
    }

    /// Default additive coordinate: Re in (-0.45, 0.45), Im in (-0.15, 0.15).
    cplx coord(const std::string& name) { return box(name, -0.45, 0.45, -0.15, 0.15); }

    /// Default tau from {0.9i, 1.2i, 0.15+0.85i}.
    ModularPoint tau(const std::string& name = "tau") {
        return ModularPoint(choice(name, {cplx{0.0, 0.9}, cplx{0.0, 1.2}, cplx{0.15, 0.85}}));
    }

    /// Real alpha in (lo, hi) kept 1e-3 away from the integers.
    double alpha(const std::string& name = "alpha", double lo = -2.5, double hi = 2.5) {
        for (;;) {
            double a = uniform(lo, hi);
            if (std::abs(a - std::round(a)) >= 1e-3) return set(name, a).real();
        }
    }

    /// Real nome in [lo, hi).
    cplx real_nome(const std::string& name = "q", double lo = 0.1, double hi = 0.5) { return set(name, uniform(lo, hi)); }

    void clear_inputs() { inputs_.clear(); }

    cplx set(const std::string& name, cplx v) {
        inputs_.emplace_back(name, v);
        return v;
    }

    const std::vector<std::pair<std::string, cplx>>& inputs() const { return inputs_; }

private:
    std::mt19937_64 rng_;
    std::vector<std::pair<std::string, cplx>> inputs_;
};

/// Sampler rejection helpers. The margin keeps draws away from near-singular configurations.
inline constexpr double sample_margin = 0.02;

inline void reject_unless(bool ok, const std::string& why) {
    if (!ok) throw SampleRejected(why);
}

inline void keep_off_lattice(cplx z, cplx tau, const std::string& name, double margin = sample_margin) {
    reject_unless(lattice_distance(z, tau) >= margin, name + " too close to Z+Z tau");
}

/// Rejects z with |1 - z q^{-m}| < margin for the nearest m.
inline void keep_off_qlattice(cplx z, cplx q, const std::string& name, double margin = sample_margin) {
    reject_unless(z != 0.0, name + " is zero");
    long m0 = std::lround(std::log(std::abs(z)) / std::log(std::abs(q)));
    for (long m = m0 - 1; m <= m0 + 1; ++m)
        reject_unless(std::abs(1.0 - z / ipow(q, m)) >= margin, name + " too close to q^Z");
}

/// One registered identity.
struct IdentityCase {
    std::string name;
    std::string anchor;  // LaTeX label(s) of the checked statement, "; "-separated
    std::string domain;  // human-readable description of the sampler
    std::function<std::vector<IdentityPair>(Draw&)> check;
    double tol;
    bool expected_holds = true;
};

struct CheckRecord {
    std::string label;
    cplx lhs, rhs;
    double abs_residual, rel_residual;
};

struct SampleRecord {
    std::vector<std::pair<std::string, cplx>> inputs;
    std::vector<CheckRecord> checks;
    double rel_residual;  // max over checks
};

struct IdentityReport {
    std::string name;
    std::string anchor;
    double tol;
    bool expected_holds;
    std::uint64_t seed;
    std::vector<SampleRecord> samples;
    int rejected = 0;
    double max_rel_residual = 0.0;
    bool pass = false;

    /// Agreement with the registered expectation; refuted variants are ok when they fail.
    bool ok() const { return pass == expected_holds; }
};

inline double rel_residual(cplx a, cplx b) { return std::abs(a - b) / (std::abs(a) + std::abs(b) + 1e-300); }

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class Registry {
public:
    void add(IdentityCase c) {
        if (index_.count(c.name)) throw DuplicateName("duplicate identity case '" + c.name + "'");
        index_[c.name] = cases_.size();
        cases_.push_back(std::move(c));
    }

    const IdentityCase& get(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw UnknownIdentity("unknown identity case '" + name + "'");
        return cases_[it->second];
    }

    bool contains(const std::string& name) const { return index_.count(name) > 0; }
    size_t size() const { return cases_.size(); }
    const std::vector<IdentityCase>& cases() const { return cases_; }

    /// Expands "all", exact names and prefixes ("thm1.2" selects "thm1.2-*") into sorted unique names.
    std::vector<std::string> select(const std::vector<std::string>& patterns) const {
        std::vector<std::string> out;
        for (const auto& p : patterns) {
            if (p == "all") {
                for (const auto& c : cases_) out.push_back(c.name);
                continue;
            }
            if (contains(p)) {
                out.push_back(p);
                continue;
            }
            bool any = false;
            for (const auto& c : cases_)
                if (c.name.rfind(p + "-", 0) == 0) {
                    out.push_back(c.name);
                    any = true;
                }
            if (!any) throw UnknownIdentity("unknown identity case '" + p + "'");
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    std::vector<IdentityCase> cases_;
    std::map<std::string, size_t> index_;
};

/// Evaluates one case at `samples` admissible points. Rejected draws are redrawn, at most 100x samples.
inline IdentityReport run_case(const IdentityCase& c, int samples, std::uint64_t seed, std::optional<double> tol_override) {
    IdentityReport rep{c.name, c.anchor, tol_override.value_or(c.tol), c.expected_holds, seed, {}, 0, 0.0, false};
    Draw draw(seed ^ fnv1a(c.name));
    const int cap = 100 * samples;
    while (static_cast<int>(rep.samples.size()) < samples && rep.rejected < cap) {
        draw.clear_inputs();
        std::vector<IdentityPair> rows;
        std::string error;
        try {
            rows = c.check(draw);
        } catch (const SampleRejected&) {
            ++rep.rejected;
            continue;
        } catch (const PoleHit&) {
            ++rep.rejected;
            continue;
        } catch (const Error& e) {
            error = e.what();
        }
        SampleRecord s{draw.inputs(), {}, 0.0};
        if (!error.empty()) {
            double inf = std::numeric_limits<double>::infinity();
            s.checks.push_back({"error: " + error, 0.0, 0.0, inf, inf});
        }
        for (const auto& r : rows) {
            double ar = std::abs(r.lhs - r.rhs);
            double rr = rel_residual(r.lhs, r.rhs);
            if (!std::isfinite(rr)) rr = std::numeric_limits<double>::infinity();
            s.checks.push_back({r.label, r.lhs, r.rhs, ar, rr});
        }
        for (const auto& ch : s.checks) s.rel_residual = std::max(s.rel_residual, ch.rel_residual);
        rep.max_rel_residual = std::max(rep.max_rel_residual, s.rel_residual);
        rep.samples.push_back(std::move(s));
    }
    rep.pass = static_cast<int>(rep.samples.size()) == samples && rep.max_rel_residual <= rep.tol;
    return rep;
}

/// Runs the selected cases, in parallel across cases; the result is sorted by name.
inline std::vector<IdentityReport> run(const Registry& reg, const std::vector<std::string>& names, int samples,
                                       std::uint64_t seed, std::optional<double> tol_override = std::nullopt,
                                       unsigned threads = 0) {
    if (samples < 1) throw DomainError("samples must be positive");
    auto sel = reg.select(names);
    std::vector<IdentityReport> out(sel.size());
    std::vector<std::exception_ptr> errs(sel.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < sel.size();) {
            try {
                out[i] = run_case(reg.get(sel[i]), samples, seed, tol_override);
            } catch (...) {
                errs[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<size_t>(threads, sel.size()); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

inline nlohmann::json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline nlohmann::json to_json(const IdentityReport& r) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples) {
        nlohmann::json in = nlohmann::json::object();
        for (const auto& [k, v] : s.inputs) in[k] = to_json(v);
        // headline lhs/rhs are the worst check of the sample
        const CheckRecord* worst = &s.checks.front();
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : s.checks) {
            if (c.rel_residual > worst->rel_residual) worst = &c;
            checks.push_back({{"label", c.label},
                              {"lhs", to_json(c.lhs)},
                              {"rhs", to_json(c.rhs)},
                              {"abs_residual", c.abs_residual},
                              {"rel_residual", c.rel_residual}});
        }
        samples.push_back({{"inputs", in},
                           {"lhs", to_json(worst->lhs)},
                           {"rhs", to_json(worst->rhs)},
                           {"abs_residual", worst->abs_residual},
                           {"rel_residual", worst->rel_residual},
                           {"checks", checks}});
    }
    return {{"name", r.name},
            {"paper_anchor", r.anchor},
            {"tol", r.tol},
            {"expected_holds", r.expected_holds},
            {"seed", r.seed},
            {"rejected", r.rejected},
            {"max_rel_residual", r.max_rel_residual},
            {"pass", r.pass},
            {"status", r.ok() ? "ok" : "fail"},
            {"samples", samples}};
}

inline nlohmann::json report_json(const std::vector<IdentityReport>& reps, std::uint64_t seed, int samples,
                                  std::optional<double> tol_override) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& r : reps) cases.push_back(to_json(r));
    nlohmann::json run = {{"seed", seed}, {"samples", samples}};
    run["tol"] = tol_override ? nlohmann::json(*tol_override) : nlohmann::json(nullptr);
    return {{"schema", "qmu-report/1"}, {"run", run}, {"cases", cases}};
}

}  // namespace qmu
