// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "qmu/registry.hpp"

namespace {

using qmu::IdentityReport;

const qmu::Registry& reg() {
    static const qmu::Registry r = qmu::register_all();
    return r;
}

/// A group of cases that must all hold at the pinned tolerance.
struct Group {
    std::vector<std::string> names;
    double tol;
    int samples = 20;
};

struct Outcome {
    bool pass = true;
    std::string detail;
};

void note(Outcome& o, const std::string& s) {
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += s;
}

Outcome holds(const std::vector<Group>& groups) {
    Outcome o;
    double worst = 0.0;
    size_t count = 0;
    for (const auto& g : groups) {
        for (const auto& r : qmu::run(reg(), g.names, g.samples, 42, g.tol)) {
            ++count;
            worst = std::max(worst, r.max_rel_residual);
            if (!r.expected_holds || !r.pass) {
                o.pass = false;
                char buf[200];
                std::snprintf(buf, sizeof buf, "%s max %.2e > %.0e", r.name.c_str(), r.max_rel_residual, g.tol);
                note(o, buf);
            }
        }
    }
    char buf[120];
    std::snprintf(buf, sizeof buf, "%zu cases, worst %.2e", count, worst);
    note(o, buf);
    return o;
}

/// Exactly one of the two cases passes at its own tolerance, and it is the one registered as holding.
Outcome one_of(const std::string& good, const std::string& bad) {
    Outcome o;
    auto reps = qmu::run(reg(), {good, bad}, 20, 42);
    const IdentityReport& g = reps[0].name == good ? reps[0] : reps[1];
    const IdentityReport& b = reps[0].name == good ? reps[1] : reps[0];
    o.pass = g.pass && !b.pass && g.expected_holds && !b.expected_holds;
    char buf[200];
    std::snprintf(buf, sizeof buf, "%s %s (%.2e), %s %s (%.2e)", good.c_str(), g.pass ? "holds" : "fails", g.max_rel_residual,
                  bad.c_str(), b.pass ? "holds" : "fails", b.max_rel_residual);
    note(o, buf);
    return o;
}

/// Every listed variant misses the pinned tolerance.
Outcome refuted(const std::vector<std::string>& names, double tol) {
    Outcome o;
    int failing = 0;
    for (const auto& r : qmu::run(reg(), names, 20, 42, tol)) {
        if (r.pass || r.expected_holds) {
            o.pass = false;
            note(o, r.name + " unexpectedly holds");
        } else {
            ++failing;
        }
    }
    note(o, std::to_string(failing) + " variant(s) fail as expected");
    return o;
}

Outcome both(Outcome a, const Outcome& b) {
    a.pass = a.pass && b.pass;
    note(a, b.detail);
    return a;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
    Outcome o;
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / ("qmu_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::string out[2];
    for (int i = 0; i < 2; ++i) {
        fs::path rep = dir / ("report" + std::to_string(i) + ".json");
        std::string cmd = std::string("\"") + QMU_CLI_PATH + "\" verify --suite all --samples 20 --seed 42 --report \"" +
                          rep.string() + "\" > /dev/null";
        int rc = std::system(cmd.c_str());
        int code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
        if (code != 0) {
            o.pass = false;
            note(o, "run " + std::to_string(i + 1) + " exit " + std::to_string(code));
        }
        out[i] = slurp(rep.string());
    }
    fs::remove_all(dir);
    if (out[0].empty() || out[0] != out[1]) {
        o.pass = false;
        note(o, "reports differ or are empty");
    } else {
        note(o, "two reports byte-identical (" + std::to_string(out[0].size()) + " bytes), exit 0");
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        Outcome (*check)();
    };
    const Criterion criteria[] = {
        {"special values mu(u,v;0), mu(u,v;1), <= 1e-10", [] { return holds({{{"def1.1-special"}, 1e-10}}); }},
        {"mu(u,v;alpha) formula suite, 20 points, <= 1e-8", [] { return holds({{{"thm1.2"}, 1e-8}}); }},
        {"four bilateral expressions of mu(x,y;a), <= 1e-10", [] { return holds({{{"thm1.3"}, 1e-10}}); }},
        {"mu(u,v;-k) = -i q^{-1/8} H_k for k <= 12, <= 1e-9; Gauss evaluation <= 1e-12",
         [] { return holds({{{"thm1.5"}, 1e-9, 10}, {{"thm1.5-gauss"}, 1e-12}}); }},
        {"S(r) forms and q-difference equations <= 1e-8; convolution identities <= 1e-9",
         [] {
             return both(holds({{{"thm1.6", "cor3.6-F-genfunc"}, 1e-8}, {{"cor3.6-eq3.11", "cor3.6-eq3.12"}, 1e-9}}),
                         refuted({"cor3.6-eq3.12-variant"}, 1e-9));
         }},
        {"q-Hermite-Weber solutions, connection rows, translation formula, <= 1e-8",
         [] {
             return holds({{{"sec2-lemma2.1-equation", "sec2-lemma2.1-connection", "sec2-lemma2.2", "sec2-thm2.3",
                             "sec2-translation"},
                            1e-8}});
         }},
        {"j-decomposition, log-derivative identity, reductions, <= 1e-9", [] { return holds({{{"cor3.1", "cor3.2"}, 1e-9}}); }},
        {"mu~ = nu~ and modular transformations at tau in {1.1i, 1.2i}, <= 1e-6",
         [] {
             return both(holds({{{"sec4-nu-tilde-equal", "sec4-mu-tilde-T", "sec4-mu-tilde-S", "sec4-nu-tilde-T",
                                  "sec4-nu-tilde-S"},
                                 1e-6}}),
                         refuted({"sec4-mu-tilde-S-variant", "sec4-nu-tilde-S-variant", "sec4-nu-tilde-variant"}, 1e-6));
         }},
        {"q-Appell system and Phi^(1) expressions <= 1e-8; Andrews' formula <= 1e-10",
         [] {
             return both(holds({{{"sec5-appell-system", "sec5-appell-system-zwegers", "sec5-appell-expr"}, 1e-8},
                                {{"sec5-split-0psi2", "sec5-mu-rewrite", "classic-andrews"}, 1e-10}}),
                         refuted({"sec5-appell-expr-variant", "sec5-split-0psi2-variant", "sec5-mu-rewrite-variant"}, 1e-8));
         }},
        {"1psi1, Kronecker, Bailey transformations, triple product, Gauss sum, <= 1e-10",
         [] {
             return both(holds({{{"classic-ramanujan", "classic-kronecker", "classic-bailey", "classic-degenerate",
                                  "core-triple-product", "classic-gauss-sum"},
                                 1e-10}}),
                         refuted({"classic-gauss-sum-variant"}, 1e-10));
         }},
        {"Hickerson identity and g3 decomposition, <= 1e-8",
         [] {
             return both(holds({{{"mock-hickerson", "mock-g3-decomposition"}, 1e-8}}),
                         refuted({"mock-g3-decomposition-variant"}, 1e-8));
         }},
        {"exactly one variant of the f0 constant and of the k-shift prefactor holds",
         [] { return both(one_of("thm1.1-const-iq18", "thm1.1-const-1"), one_of("cor1.4-eq1.44", "cor1.4-eq1.44-variant")); }},
        {"verify --suite all --samples 20 --seed 42 twice: identical JSON, exit 0", determinism},
    };

    int failed = 0, i = 0;
    for (const auto& c : criteria) {
        ++i;
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s  %2d  %s  [%s]\n", o.pass ? "PASS" : "FAIL", i, c.title, o.detail.c_str());
    }
    return failed == 0 ? 0 : 1;
}
