#include "qmu/hermite.hpp"
#include "qmu/mu.hpp"

#include "test_util.hpp"

using namespace qmu;

namespace {
const ModularPoint kTau({0.0, 0.9});
const cplx kU{0.2, 0.05}, kV{-0.1, 0.02};
}  // namespace

TEST(MuAlpha, DegreeZeroIsConstant) {
    cplx expect = -I * kTau.qpow(-0.125);
    EXPECT_CLOSE(mu_general(kU, kV, 0.0, kTau).value, expect, 1e-10);
}

TEST(MuAlpha, DegreeOneIsZwegers) {
    EXPECT_CLOSE(mu_general(kU, kV, 1.0, kTau).value, mu_zwegers(kU, kV, kTau).value, 1e-10);
}

TEST(MuAlpha, VOnLatticeIsPole) {
    try {
        mu_general(kU, cplx{1.0, 0.9}, 0.3, kTau);
        FAIL() << "expected PoleHit";
    } catch (const PoleHit& e) {
        EXPECT_STREQ(e.what(), "v within 1e-6 of Z+Z tau");
    }
}

TEST(MuAlpha, FourFormsAgree) {
    MuPoint p{kU, kV, 0.7, kTau};
    cplx ref = mu_general(p).value;
    for (auto f : {MuForm::Def, MuForm::Alt1, MuForm::Alt2, MuForm::Alt3})
        EXPECT_CLOSE(mu_general_expr(p, f).value, ref, 1e-10) << static_cast<int>(f);
    EXPECT_THROW(parse_mu_form("alt4"), DomainError);
}

TEST(MuAlpha, NegativeDegreeStaysFiniteAtHighK) {
    // the finite product folds its large factors into the exponent; k = 12 at small |q| used to overflow
    ModularPoint tau({0.0, 1.2});
    const cplx u{0.41, -0.065}, v{0.052, 0.0052};
    for (long k = 0; k <= 12; ++k) {
        cplx h = hermite_cq(k, {u - v, tau.q()});
        EXPECT_CLOSE(mu_negative_degree(k, u, v, tau).value, -I * tau.qpow(-0.125) * h, 1e-10) << "k = " << k;
    }
}

TEST(MuZwegers, SymmetryAndPeriodicity) {
    ModularPoint tau({0.15, 0.85});
    const cplx u{0.13, -0.04}, v{-0.21, 0.06};
    cplx m = mu_zwegers(u, v, tau).value;
    EXPECT_CLOSE(mu_zwegers(v, u, tau).value, m, 1e-12);
    EXPECT_CLOSE(mu_zwegers(u + 1.0, v, tau).value, -m, 1e-12);
    EXPECT_CLOSE(mu_zwegers(-u, -v, tau).value, m, 1e-12);
}

TEST(Kronecker, ProductMatchesSum) {
    const cplx q{0.2, 0.1}, x{0.5, 0.4}, y{0.5, -0.3};
    EXPECT_CLOSE(kronecker_k(x, y, q).value, kronecker_sum(x, y, q).value, 1e-12);
}

TEST(MockTheta, ParseAndEvaluate) {
    EXPECT_THROW(parse_mock_theta("f1"), DomainError);
    // f0(q) = 1 + q/(1+q) + q^4/((1+q)(1+q^2)) + O(q^9)
    const double q = 0.01;
    auto r = mock_theta(MockTheta::f0, q);
    EXPECT_NEAR(r.value.real(), 1.0 + q / (1.0 + q) + std::pow(q, 4) / ((1.0 + q) * (1.0 + q * q)), 1e-15);
}

TEST(G3, PoleOnSeries) { EXPECT_THROW(g3(1.0, 0.3), PoleHit); }
