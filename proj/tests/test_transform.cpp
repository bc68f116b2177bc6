#include "qmu/transform.hpp"

#include "test_util.hpp"

using namespace qmu;

namespace {
const HWParams kP{0.7, ModularPoint({0.1, 0.9}), {0.6, 0.5}};
const cplx kW{0.18, 0.04};
}  // namespace

TEST(HermiteWeber, AllFourSolutionsSatisfyTheEquation) {
    auto ev = [](auto fn) { return [fn](cplx w) { return fn(w, kP, precise_truncation()).value; }; };
    for (const auto& r : {hermite_weber_residual("f0", ev(f0_solution_w), kW, kP),
                          hermite_weber_residual("g0", ev(g0_solution_w), kW, kP),
                          hermite_weber_residual("f_inf", ev(finf_solution_w), kW, kP),
                          hermite_weber_residual("g_inf", ev(ginf_solution_w), kW, kP)})
        EXPECT_CLOSE(r.lhs, r.rhs, 1e-10) << r.label;
}

TEST(HermiteWeber, ResidualScoresAgainstLargestTerm) {
    // a function that fails the equation must not be hidden by the rearrangement
    auto bad = [](cplx w) { return std::exp(cplx{0.3, 0.0} * w); };
    auto r = hermite_weber_residual("bad", bad, kW, kP);
    EXPECT_GT(std::abs(r.lhs - r.rhs) / (std::abs(r.lhs) + std::abs(r.rhs)), 1e-3);
}

TEST(Connection, MatrixRowsHold) {
    for (const auto& r : connection_matrix_residual(kW, kP, precise_truncation())) EXPECT_CLOSE(r.lhs, r.rhs, 1e-9) << r.label;
}

TEST(Connection, ChangeOfLambda) {
    auto r = lambda_change_residual(kW, {-0.4, 0.7}, kP, precise_truncation());
    EXPECT_CLOSE(r.lhs, r.rhs, 1e-9);
}

TEST(HeineSystem, EquationsAndConnections) {
    const cplx q{0.25, 0.1}, a{0.5, 0.2}, b{-0.3, 0.4}, x{0.6, 0.3}, lam{0.7, -0.5};
    for (const auto& r : heine_system_suite(x, a, b, q, lam, precise_truncation())) EXPECT_CLOSE(r.lhs, r.rhs, 1e-9) << r.label;
}

TEST(FormalSeries, ShiftDilateBorel) {
    FormalPowerSeries f{{1.0, 2.0, 3.0}};
    const cplx q{0.5, 0.1}, x{0.3, 0.2};
    EXPECT_CLOSE(f.shift(2).eval(x).value, x * x * f.eval(x).value, 1e-15);
    EXPECT_CLOSE(f.dilate(q, 1).eval(x).value, f.eval(q * x).value, 1e-15);
    auto b = q_borel(f, q);
    EXPECT_CLOSE(b.coeffs[2], 3.0 * q, 1e-15);
}

TEST(FormalSeries, BorelOfHermiteWeberSeriesIsClosedForm) {
    const cplx q = std::polar(0.45, 0.7), a = std::polar(1.3, -0.4), xi = std::polar(0.2, 1.9) * std::abs(a);
    auto b = q_borel(hermite_weber_formal(a, q, 30), q);
    EXPECT_CLOSE(b.eval(xi).value, qpoch_inf(-xi, q).value / qpoch_inf(-xi / a, q).value, 1e-12);
}

TEST(QLaplace, RejectsZero) { EXPECT_THROW(q_laplace([](cplx) { return cplx{1.0}; }, 0.0, 1.0, 0.3), DomainError); }
