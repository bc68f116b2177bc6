#include "qmu/hyper.hpp"

#include "test_util.hpp"

using namespace qmu;

TEST(Phi, QBinomialTheorem) {
    const cplx q{0.3, 0.25}, a{1.7, -0.4}, z{0.4, 0.3};
    EXPECT_CLOSE(phi({{a}, {}, q, z}, precise_truncation()).value, qpoch_inf(a * z, q).value / qpoch_inf(z, q).value, 1e-13);
}

TEST(Phi, TerminatingSeriesIsExact) {
    // 1phi0(q^{-n}; -; q, z) = (z q^{-n})_n
    const cplx q{0.4, -0.2}, z{0.9, 0.7};
    auto r = phi({{ipow(q, -4)}, {}, q, z});
    EXPECT_CLOSE(r.value, qpoch(z * ipow(q, -4), q, 4), 1e-12);
}

TEST(Phi, LowerParameterPole) { EXPECT_THROW(phi({{0.5}, {1.0 / cplx{0.3}}, cplx{0.3}, 0.2}), PoleHit); }

TEST(Psi, RamanujanSummation) {
    const cplx q{0.2, 0.3}, a{1.5, 0.6}, b{0.4, -0.3}, z{0.6, 0.4};
    ASSERT_LT(std::abs(b / a), std::abs(z));
    auto P = [&](cplx x) { return qpoch_inf(x, q).value; };
    cplx rhs = P(q) * P(b / a) * P(a * z) * P(q / (a * z)) / (P(b) * P(q / a) * P(z) * P(b / (a * z)));
    EXPECT_CLOSE(psi({{a}, {b}, q, z}).value, rhs, 1e-12);
}

TEST(Psi, SlowNegativeTailAtSmallNome) {
    // negative side of 0psi2 decays only like |x y / z|^n; the sum must not stop when q^{-2n} would overflow
    const cplx q = std::polar(0.0048, 0.94), x{0.6, 0.15}, y{-0.4, 0.2};
    const cplx z = x * y / std::polar(0.74, 0.1);
    auto r = psi({{}, {x, y}, q, z});
    cplx direct = 0.0;
    for (long n = -120; n <= 30; ++n) {
        // log-scale term z^n q^{n(n-1)} / ((x)_n (y)_n)
        cplx lt = static_cast<double>(n) * std::log(z) + static_cast<double>(n * (n - 1)) * std::log(q);
        if (n >= 0) {
            for (long j = 0; j < n; ++j) lt -= std::log((1.0 - x * ipow(q, j)) * (1.0 - y * ipow(q, j)));
        } else {
            for (long j = 1; j <= -n; ++j) lt += std::log(1.0 - x * std::exp(-static_cast<double>(j) * std::log(q))) +
                                                  std::log(1.0 - y * std::exp(-static_cast<double>(j) * std::log(q)));
        }
        direct += std::exp(lt);
    }
    EXPECT_CLOSE(r.value, direct, 1e-12);
}

TEST(Appell, ReducesToTwoPhiOne) {
    const cplx q{0.3, 0.1}, a{0.5, 0.2}, b1{0.3, -0.4}, c{0.6, 0.1}, x{0.4, 0.3};
    EXPECT_CLOSE(q_appell_phi1(a, b1, 0.3, c, q, x, 0.0).value, phi({{a, b1}, {c}, q, x}).value, 1e-13);
}

TEST(Appell, NeedsUnitDisk) { EXPECT_THROW(q_appell_phi1(0.5, 0.1, 0.1, 0.3, 0.3, 1.2, 0.1), DomainError); }

TEST(Appell, OscillatingShellsConverge) {
    // |x| = |y| near 0.86 with opposed phases: shell sums oscillate but the series converges
    const cplx q = std::polar(5.3e-4, 0.0), a = 1.2e-3;
    const cplx x = std::polar(0.86, 2.1), y = std::polar(0.85, -1.0);
    auto r = q_appell_phi1(a, 0.0, 0.0, a * q, q, x, y);
    EXPECT_TRUE(std::isfinite(std::abs(r.value)));
}

TEST(QBessel, TwoFormsAgree) {
    const cplx nu{0.4, 0.1}, x{0.8, 0.3}, q{0.3, 0.2};
    EXPECT_CLOSE(q_bessel_J2(nu, x, q).value, q_bessel_J2_phi11(nu, x, q).value, 1e-12);
}
