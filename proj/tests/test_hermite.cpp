#include "qmu/hermite.hpp"

#include "test_util.hpp"

using namespace qmu;

TEST(Hermite, LowDegrees) {
    const cplx q = 0.3;
    const double w = 0.25;
    EXPECT_CLOSE(hermite_cq(0, {w, q}), 1.0, 1e-15);
    EXPECT_CLOSE(hermite_cq(1, {w, q}), 2.0 * std::cos(0.25 * pi), 1e-15);
    EXPECT_THROW(hermite_cq(-1, {w, q}), DomainError);
}

TEST(Hermite, ThreeTermRecurrence) {
    // H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}
    const cplx q{0.4, -0.2}, w{0.3, 0.1};
    HermiteArg arg{w, q};
    for (long n = 1; n < 15; ++n)
        EXPECT_CLOSE(hermite_cq(n + 1, arg), 2.0 * arg.x() * hermite_cq(n, arg) - (1.0 - ipow(q, n)) * hermite_cq(n - 1, arg), 1e-12);
}

TEST(Hermite, GaussEvaluation) {
    const cplx q{0.35, 0.2};
    for (long N = 1; N <= 6; ++N) EXPECT_CLOSE(hermite_cq(2 * N, {0.5, q}) * ipow(I, -2 * N), qpoch(q, q * q, N), 1e-12);
}

TEST(GaussSum, EqualsProduct) {
    for (long N = 1; N <= 30; ++N) {
        auto [s, p] = gauss_sum_product(N);
        EXPECT_LT(std::abs(s - p), 1e-10 * std::abs(p)) << "N = " << N;
    }
    EXPECT_THROW(gauss_sum_product(0), DomainError);
}

TEST(GenS, AllMethodsAgree) {
    ModularPoint tau({0.05, 0.9});
    const cplx r{0.2, 0.1}, u{0.17, 0.03}, v{-0.08, -0.02};
    cplx ref = gen_S(r, u, v, tau, {}, SMethod::Direct).value;
    for (auto m : {SMethod::Closed, SMethod::Appell, SMethod::MinusDegree})
        EXPECT_CLOSE(gen_S(r, u, v, tau, {}, m).value, ref, 1e-9) << static_cast<int>(m);
    EXPECT_THROW(parse_s_method("fast"), DomainError);
}

TEST(FCapital, TwoFormsAgree) {
    HermiteArg arg{{0.2, 0.05}, {0.3, 0.1}};
    for (long n = 0; n < 8; ++n) EXPECT_CLOSE(F_capital(n, arg), F_capital_phi(n, arg), 1e-12);
}
