#include "qmu/modular.hpp"

#include "test_util.hpp"

using namespace qmu;

TEST(EFunc, OddMonotoneBounded) {
    double prev = -1.0;
    for (double x = -4.0; x <= 4.0; x += 0.125) {
        double e = E_func(x);
        EXPECT_NEAR(E_func(-x), -e, 1e-15);
        EXPECT_LT(std::abs(e), 1.0 + 1e-15);
        EXPECT_GE(e, prev);
        prev = e;
    }
    EXPECT_NEAR(E_func(0.0), 0.0, 1e-16);
}

TEST(EFunc, MatchesQuadrature) {
    // E(x) = 2 int_0^x e^{-pi z^2} dz, composite Simpson
    for (double x : {0.1, 0.5, 1.3}) {
        const int n = 2000;
        double h = x / n, s = 0.0;
        for (int i = 0; i <= n; ++i) {
            double z = i * h, f = std::exp(-pi * z * z);
            s += (i == 0 || i == n) ? f : (i % 2 ? 4.0 * f : 2.0 * f);
        }
        EXPECT_NEAR(E_func(x), 2.0 * s * h / 3.0, 1e-13);
    }
}

TEST(RFunc, WindowDoublingStable) {
    ModularPoint tau({0.2, 0.8});
    const cplx u{0.3, -0.2};
    EXPECT_CLOSE(R_window(u, tau, 10), R_window(u, tau, 20), 1e-11);
    EXPECT_CLOSE(R_func(u, tau, precise_truncation()).value, R_window(u, tau, 40), 1e-11);
}

TEST(MuTilde, TTransformation) {
    ModularPoint tau({0.0, 1.1}), tau1({1.0, 1.1});
    const cplx u{0.21, 0.05}, v{-0.13, -0.04};
    EXPECT_CLOSE(mu_tilde(u, v, tau1).value, std::exp(-pi * I / 4.0) * mu_tilde(u, v, tau).value, 1e-8);
}

TEST(MuTilde, STransformation) {
    ModularPoint tau({0.0, 1.2});
    const cplx t = tau.tau(), u{0.21, 0.05}, v{-0.13, -0.04};
    ModularPoint ts(-1.0 / t);
    EXPECT_CLOSE(mu_tilde(u / t, v / t, ts).value, s_multiplier(u, v, t) * mu_tilde(u, v, tau).value, 1e-7);
    EXPECT_GT(rel_dist(mu_tilde(u / t, v / t, ts).value, s_multiplier_variant(u, v, t) * mu_tilde(u, v, tau).value), 1e-3);
}

TEST(NuTilde, EqualsMuTilde) {
    ModularPoint tau({0.1, 1.2});
    const cplx u{0.21, 0.05}, v{-0.13, -0.04};
    cplx m = mu_tilde(u, v, tau).value;
    for (long k = 1; k <= 3; ++k) EXPECT_CLOSE(nu_tilde(u, v, k, tau).value, m, 1e-8) << "k = " << k;
}
