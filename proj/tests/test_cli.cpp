#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "qmu/cli.hpp"

#include "test_util.hpp"

using namespace qmu;
using namespace qmu::cli;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "qmu");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

/// Runs the installed binary through the shell; stderr is folded into out.
Result spawn(const std::string& args) {
    std::string cmd = std::string("\"") + QMU_CLI_PATH + "\" " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out, ""};
}

size_t lines(const std::string& s) { return static_cast<size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(ComplexLiteral, Grammar) {
    EXPECT_EQ(parse_complex("1.5"), cplx(1.5, 0.0));
    EXPECT_EQ(parse_complex("0.9i"), cplx(0.0, 0.9));
    EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
    EXPECT_EQ(parse_complex("0.2+0.05i"), cplx(0.2, 0.05));
    EXPECT_EQ(parse_complex("-0.1-0.02i"), cplx(-0.1, -0.02));
    EXPECT_EQ(parse_complex("1e-3+2E2i"), cplx(1e-3, 200.0));
    for (const char* bad : {"", "i2", "1+2", "(1,2)", "1+2j", "1 + 2i", "--1", "1e-3i+2"}) EXPECT_THROW(parse_complex(bad), ParseError) << bad;
}

TEST(ComplexLiteral, RoundTrip) {
    for (cplx z : {cplx{0.1, 0.2}, cplx{-1e-300, 3.5}, cplx{1.0 / 3.0, -2.0 / 7.0}, cplx{5.0, 0.0}, cplx{0.0, -0.0}})
        EXPECT_EQ(parse_complex(format_complex(z)), z) << format_complex(z);
}

TEST(Range, IntegerAndReal) {
    EXPECT_EQ(parse_range("0..4")->size(), 5u);
    EXPECT_EQ(parse_range("0.05:0.30:0.05")->size(), 6u);
    EXPECT_EQ(parse_range("0.1:0.5:0.05")->size(), 9u);
    EXPECT_FALSE(parse_range("0.3").has_value());
    EXPECT_THROW(parse_range("0.1:0.5"), ParseError);
    EXPECT_THROW(parse_range("4..1"), ParseError);
    EXPECT_THROW(parse_range("0.5:0.1:0.1"), ParseError);
}

TEST(Eval, MuAlphaAtZero) {
    auto r = call({"eval", "mu_alpha", "--u", "0.2+0.05i", "--v", "-0.1+0.02i", "--alpha", "0", "--tau", "0.9i", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    cplx v{j["value"]["re"].get<double>(), j["value"]["im"].get<double>()};
    EXPECT_CLOSE(v, -I * ModularPoint({0.0, 0.9}).qpow(-0.125), 1e-10);
    EXPECT_EQ(j["function"], "mu_alpha");
    EXPECT_EQ(j["inputs"]["tau"]["im"], 0.9);
    EXPECT_TRUE(j.contains("err"));
    EXPECT_TRUE(j.contains("terms"));
}

TEST(Eval, HermiteDegreeOne) {
    auto r = call({"eval", "hermite", "--n", "1", "--w", "0.25", "--q", "0.3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["value"]["re"].get<double>(), 2.0 * std::cos(0.25 * pi), 1e-15);
    EXPECT_EQ(j["inputs"]["n"], 1);
}

TEST(Eval, PlainOutput) {
    auto r = call({"eval", "theta_q", "--x", "0.5", "--q", "0.2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("value"), std::string::npos);
    EXPECT_NE(r.out.find("terms"), std::string::npos);
}

TEST(Eval, EveryFunctionRuns) {
    const std::vector<std::vector<std::string>> calls = {
        {"mu", "--u", "0.2+0.05i", "--v", "-0.1", "--tau", "0.9i"},
        {"theta11", "--u", "0.3", "--tau", "0.1+0.9i"},
        {"qpoch", "--x", "0.5", "--q", "0.3", "--n", "-2"},
        {"phi", "--upper", "0.5,0.2i", "--lower", "0.3", "--q", "0.4", "--x", "0.5"},
        {"psi", "--upper", "1.5", "--lower", "0.4", "--q", "0.3", "--x", "0.7"},
        {"appell_phi1", "--a", "0.5", "--b1", "0.2", "--b2", "0.3", "--c", "0.6", "--q", "0.3", "--x", "0.4", "--y", "0.2i"},
        {"bessel_j2", "--nu", "0.5", "--x", "0.8", "--q", "0.4"},
        {"g3", "--x", "0.5+0.2i", "--q", "0.2"},
        {"mock_theta", "--which", "psi", "--q", "0.2"},
        {"S", "--r", "0.2", "--u", "0.1", "--v", "-0.1", "--tau", "0.9i", "--method", "closed"},
        {"f0", "--w", "0.2", "--alpha", "0.7", "--tau", "0.9i", "--lambda", "0.6+0.5i"},
        {"g0", "--w", "0.2", "--alpha", "0.7", "--tau", "0.9i"},
        {"R", "--u", "0.2", "--tau", "0.9i"},
        {"mu_tilde", "--u", "0.2", "--v", "-0.1", "--tau", "1.1i"},
        {"nu_tilde", "--u", "0.2", "--v", "-0.1", "--k", "2", "--tau", "1.1i"},
        {"kronecker", "--x", "0.5", "--y", "0.6", "--q", "0.2"},
        {"gauss_sum", "--N", "7"},
    };
    for (auto c : calls) {
        c.insert(c.begin(), "eval");
        c.push_back("--json");
        auto r = call(c);
        EXPECT_EQ(r.code, 0) << c[1] << ": " << r.err;
        if (r.code == 0) {
            EXPECT_NO_THROW(nlohmann::json::parse(r.out)) << c[1];
        }
    }
}

TEST(ExitCodes, ParseErrors) {
    EXPECT_EQ(call({"eval", "mu", "--u", "0.2+", "--v", "0.1", "--tau", "0.9i"}).code, kParse);
    EXPECT_EQ(call({"eval", "nosuch", "--u", "0.2"}).code, kParse);
    EXPECT_EQ(call({"eval", "mu", "--u", "0.2", "--tau", "0.9i"}).code, kParse);
    EXPECT_EQ(call({"eval", "mu", "--u", "0.2", "--v", "0.1", "--q", "0.1", "--tau", "0.9i"}).code, kParse);
    EXPECT_EQ(call({"eval", "mu", "--bogus", "1"}).code, kParse);
    EXPECT_EQ(call({"table", "hermite", "--n", "0..x", "--w", "0.25", "--q", "0.3"}).code, kParse);
    EXPECT_EQ(call({"table", "hermite", "--n", "2", "--w", "0.25", "--q", "0.3"}).code, kParse);
    EXPECT_EQ(call({"verify", "--suite", "nothing"}).code, kParse);
}

TEST(ExitCodes, PoleAndDomain) {
    auto r = call({"eval", "mu_alpha", "--u", "0.2+0.05i", "--v", "1+0.9i", "--alpha", "0.3", "--tau", "0.9i"});
    EXPECT_EQ(r.code, kDomain);
    EXPECT_NE(r.err.find("v within 1e-6 of Z+Z tau"), std::string::npos) << r.err;
    EXPECT_EQ(lines(r.err), 1u);
    EXPECT_EQ(call({"eval", "theta_q", "--x", "0.5", "--q", "1.2"}).code, kDomain);
    EXPECT_EQ(call({"eval", "mu", "--u", "0.2", "--v", "0.1", "--tau", "-0.9i"}).code, kDomain);
}

TEST(ExitCodes, BudgetViaEnvironment) {
    setenv("QMU_MAX_TERMS", "4", 1);
    auto r = call({"eval", "theta_q", "--x", "0.5", "--q", "0.9"});
    unsetenv("QMU_MAX_TERMS");
    EXPECT_EQ(r.code, kDivergent) << r.err;
    setenv("QMU_MAX_TERMS", "abc", 1);
    EXPECT_EQ(call({"eval", "theta_q", "--x", "0.5", "--q", "0.9"}).code, kParse);
    unsetenv("QMU_MAX_TERMS");
}

TEST(Table, HermiteCsvMatchesRecurrence) {
    auto r = call({"table", "hermite", "--n", "0..4", "--w", "0.25", "--q", "0.3", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "param,re,im,err");
    // H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}
    const double x = std::cos(0.25 * pi), q = 0.3;
    std::vector<double> h{1.0, 2.0 * x};
    for (int n = 1; n < 4; ++n) h.push_back(2.0 * x * h[n] - (1.0 - std::pow(q, n)) * h[n - 1]);
    int rows = 0;
    while (std::getline(in, line)) {
        int n;
        double re, im, err;
        ASSERT_EQ(std::sscanf(line.c_str(), "%d,%lf,%lf,%lf", &n, &re, &im, &err), 4) << line;
        EXPECT_EQ(n, rows);
        EXPECT_NEAR(re, h[static_cast<size_t>(n)], 1e-13);
        EXPECT_NEAR(im, 0.0, 1e-15);
        ++rows;
    }
    EXPECT_EQ(rows, 5);
}

TEST(Table, MockThetaRealSweep) {
    auto r = call({"table", "mock_theta", "--which", "f0", "--q", "0.05:0.30:0.05", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out), 7u);
}

TEST(Table, GaussSumJson) {
    auto r = call({"table", "gauss_sum", "--N", "1..10", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 10u);
    for (const auto& row : j) EXPECT_LE(row["err"].get<double>(), 1e-11);
    EXPECT_EQ(j[0]["param"], 1);
}

TEST(Verify, SmallSuitePassesAndWritesReport) {
    std::string path = ::testing::TempDir() + "qmu_cli_report.json";
    auto r = call({"verify", "--suite", "thm1.2", "--samples", "10", "--seed", "7", "--report", path});
    EXPECT_EQ(r.code, kOk) << r.out;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
    std::ifstream f(path);
    auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j["schema"], "qmu-report/1");
    EXPECT_EQ(j["cases"].size(), 9u);
    EXPECT_EQ(j["run"]["samples"], 10);
}

TEST(Verify, ImpossibleTolerance) {
    auto r = call({"verify", "--suite", "thm1.2", "--samples", "5", "--tol", "1e-30"});
    EXPECT_EQ(r.code, kVerifyFailed);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Spawn, ExitCodeContract) {
    EXPECT_EQ(spawn("eval hermite --n 1 --w 0.25 --q 0.3").code, 0);
    EXPECT_EQ(spawn("eval mu --u 1+ --v 0.1 --tau 0.9i").code, 2);
    auto pole = spawn("eval mu_alpha --u 0.2+0.05i --v 0 --alpha 0.5 --tau 0.9i");
    EXPECT_EQ(pole.code, 3);
    EXPECT_NE(pole.out.find("v within 1e-6 of Z+Z tau"), std::string::npos);
    EXPECT_EQ(spawn("verify --suite thm1.2-eq1.36 --samples 3 --tol 1e-30").code, 5);
    EXPECT_EQ(spawn("nosuchcommand").code, 2);
}

TEST(Spawn, JsonStableAcrossRuns) {
    std::string cmd = "eval S --r 0.2 --u 0.1+0.02i --v -0.1 --tau 0.05+0.9i --json";
    auto a = spawn(cmd), b = spawn(cmd);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(nlohmann::json::parse(a.out));
}
