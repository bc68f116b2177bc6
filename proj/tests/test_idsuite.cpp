#include <fstream>
#include <set>
#include <sstream>

#include "qmu/registry.hpp"

#include "test_util.hpp"

using namespace qmu;

namespace {
const Registry& reg() {
    static const Registry r = register_all();
    return r;
}

std::set<std::string> split_anchors(const std::string& s) {
    std::set<std::string> out;
    size_t start = 0;
    for (;;) {
        size_t pos = s.find("; ", start);
        out.insert(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 2;
    }
    return out;
}
}  // namespace

TEST(Registry, LookupAndSize) {
    EXPECT_GE(reg().size(), 30u);
    EXPECT_EQ(reg().get("thm1.5").name, "thm1.5");
    EXPECT_EQ(reg().get("sec5-appell-system").name, "sec5-appell-system");
    EXPECT_THROW(reg().get("thm9.9"), UnknownIdentity);
}

TEST(Registry, DuplicateNamesRejected) {
    Registry r;
    IdentityCase c{"x", "a", "d", [](Draw&) { return std::vector<IdentityPair>{}; }, 1e-8};
    r.add(c);
    EXPECT_THROW(r.add(c), DuplicateName);
}

TEST(Registry, PrefixSelection) {
    auto names = reg().select({"thm1.2"});
    EXPECT_EQ(names.size(), 9u);
    EXPECT_EQ(names.front(), "thm1.2-eq1.28");
    EXPECT_THROW(reg().select({"nothing"}), UnknownIdentity);
}

TEST(Registry, EveryCaseHasAnchorDomainAndTolerance) {
    for (const auto& c : reg().cases()) {
        EXPECT_FALSE(c.anchor.empty()) << c.name;
        EXPECT_FALSE(c.domain.empty()) << c.name;
        EXPECT_GT(c.tol, 0.0) << c.name;
        EXPECT_LE(c.tol, 1e-6) << c.name;
    }
}

TEST(Run, SingleCasePasses) {
    auto reps = run(reg(), {"thm1.2-eq1.36"}, 20, 42);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_TRUE(reps[0].pass);
    EXPECT_EQ(reps[0].samples.size(), 20u);
}

TEST(Run, DeterministicReport) {
    auto a = report_json(run(reg(), {"thm1.2", "sec4"}, 5, 7), 7, 5, std::nullopt).dump();
    auto b = report_json(run(reg(), {"thm1.2", "sec4"}, 5, 7, std::nullopt, 1), 7, 5, std::nullopt).dump();
    EXPECT_EQ(a, b);
    auto c = report_json(run(reg(), {"thm1.2", "sec4"}, 5, 8), 8, 5, std::nullopt).dump();
    EXPECT_NE(a, c);
}

TEST(Run, ImpossibleToleranceFails) {
    auto reps = run(reg(), {"thm1.2-eq1.36"}, 5, 42, 1e-30);
    EXPECT_FALSE(reps[0].pass);
    EXPECT_FALSE(reps[0].ok());
}

TEST(Run, VariantsFailAndAreOk) {
    for (const char* name : {"thm1.1-const-1", "cor1.4-eq1.44-variant"}) {
        auto r = run(reg(), {name}, 20, 42)[0];
        EXPECT_FALSE(r.expected_holds) << name;
        EXPECT_FALSE(r.pass) << name;
        EXPECT_TRUE(r.ok()) << name;
    }
    for (const char* name : {"thm1.1-const-iq18", "cor1.4-eq1.44"}) EXPECT_TRUE(run(reg(), {name}, 20, 42)[0].pass) << name;
}

TEST(Report, SchemaFields) {
    auto j = report_json(run(reg(), {"def1.1-special"}, 3, 1), 1, 3, 1e-9);
    EXPECT_EQ(j["schema"], "qmu-report/1");
    EXPECT_EQ(j["run"]["seed"], 1);
    EXPECT_EQ(j["run"]["samples"], 3);
    EXPECT_EQ(j["run"]["tol"], 1e-9);
    const auto& c = j["cases"][0];
    for (const char* k : {"name", "paper_anchor", "tol", "expected_holds", "seed", "rejected", "max_rel_residual", "pass",
                          "status", "samples"})
        EXPECT_TRUE(c.contains(k)) << k;
    const auto& s = c["samples"][0];
    for (const char* k : {"inputs", "lhs", "rhs", "abs_residual", "rel_residual", "checks"}) EXPECT_TRUE(s.contains(k)) << k;
    EXPECT_TRUE(s["inputs"].contains("tau"));
}

TEST(Draw, SameSeedSameInputs) {
    Draw a(99), b(99);
    EXPECT_EQ(a.box("z", -1, 1, -1, 1), b.box("z", -1, 1, -1, 1));
    EXPECT_EQ(a.integer("k", 0, 12), b.integer("k", 0, 12));
}

TEST(Coverage, EveryManifestEntryHasACase) {
    std::set<std::string> anchors;
    for (const auto& c : reg().cases())
        for (const auto& a : split_anchors(c.anchor)) anchors.insert(a);
    std::ifstream f(QMU_MANIFEST);
    ASSERT_TRUE(f) << QMU_MANIFEST;
    std::string line;
    int entries = 0;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++entries;
        EXPECT_TRUE(anchors.count(line)) << "no case for " << line;
    }
    EXPECT_GT(entries, 50);
}
