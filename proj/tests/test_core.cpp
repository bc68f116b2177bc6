#include "qmu/core.hpp"

#include "test_util.hpp"

using namespace qmu;

TEST(QPoch, FiniteTimesTailIsInfinite) {
    const cplx q{0.3, 0.2}, x{0.7, -0.4};
    cplx lhs = qpoch_inf(x, q).value;
    EXPECT_CLOSE(lhs, qpoch(x, q, 5) * qpoch_inf(x * ipow(q, 5), q).value, 1e-14);
}

TEST(QPoch, NegativeIndexIsReciprocal) {
    const cplx q{0.4, 0.1}, x{1.3, 0.5};
    EXPECT_CLOSE(qpoch(x, q, -3), 1.0 / qpoch(x * ipow(q, -3), q, 3), 1e-14);
    EXPECT_EQ(qpoch(x, q, 0), cplx{1.0});
}

TEST(QPoch, RejectsNomeOutsideDisk) { EXPECT_THROW(qpoch_inf(0.5, 1.0), DomainError); }

TEST(ThetaQ, ProductMatchesSum) {
    for (cplx x : {cplx{0.3, 0.8}, cplx{-2.0, 0.5}, cplx{0.05, -0.1}}) {
        const cplx q{0.2, 0.35};
        EXPECT_CLOSE(theta_q(x, q).value, theta_q_sum(x, q).value, 1e-12);
    }
}

TEST(ThetaQ, ShiftByQ) {
    const cplx q{0.25, -0.3}, x{0.6, 0.9};
    EXPECT_CLOSE(theta_q(x * q, q).value, theta_q(x, q).value / x, 1e-13);
}

TEST(Theta11, ProductMatchesSumAndIsOdd) {
    ModularPoint tau({0.1, 0.9});
    const cplx u{0.23, 0.07};
    EXPECT_CLOSE(theta11(u, tau).value, theta11_sum(u, tau).value, 1e-12);
    EXPECT_CLOSE(theta11(-u, tau).value, -theta11(u, tau).value, 1e-13);
    EXPECT_LT(std::abs(theta11(0.0, tau).value), 1e-15);
}

TEST(Theta11, QuasiPeriodicity) {
    ModularPoint tau({-0.2, 1.1});
    const cplx u{0.31, -0.12}, t = tau.tau();
    EXPECT_CLOSE(theta11(u + 1.0, tau).value, -theta11(u, tau).value, 1e-13);
    EXPECT_CLOSE(theta11(u + t, tau).value, -std::exp(-pi * I * t - 2.0 * pi * I * u) * theta11(u, tau).value, 1e-12);
}

TEST(ModularPointTest, RejectsLowerHalfPlane) {
    EXPECT_THROW(ModularPoint(cplx{0.1, 0.0}), DomainError);
    EXPECT_THROW(ModularPoint(cplx{0.1, -1.0}), DomainError);
}

TEST(Lattice, PoleMessageNamesTheVariable) {
    try {
        require_off_lattice(cplx{1.0, 0.9}, cplx{0.0, 0.9}, "v");
        FAIL() << "expected PoleHit";
    } catch (const PoleHit& e) {
        EXPECT_STREQ(e.what(), "v within 1e-6 of Z+Z tau");
    }
}

TEST(TruncationTest, BudgetIsEnforced) {
    Truncation t{1e-17, 5, 3};
    EXPECT_THROW(theta_q_sum(0.5, cplx{0.9, 0.0}, t), BudgetExceeded);
    EXPECT_THROW((Truncation{0.0, 10, 3}.validate()), DomainError);
    EXPECT_THROW((Truncation{1e-12, 2, 3}.validate()), DomainError);
}

TEST(Series, GrowingTermsAreDivergent) {
    EXPECT_THROW(sum_unilateral([](long n) { return cplx{std::pow(1.5, static_cast<double>(n))}; }, Truncation{}), Divergent);
}
