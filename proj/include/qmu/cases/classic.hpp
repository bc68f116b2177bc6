#pragma once

#include "qmu/cases/common.hpp"

namespace qmu::cases {

inline cplx complex_nome(Draw& d, double r0 = 0.1, double r1 = 0.5) { return d.polar("q", r0, r1, -pi, pi); }

/// Rejects 2psi2(A, B; C, D; q, z) parameter sets outside the annulus |CD/(ABz)| < |z| ... both tails < 0.9.
inline void psi22_converges(cplx A, cplx B, cplx C, cplx D, cplx z, cplx q) {
    reject_unless(std::abs(z) < 0.9 && std::abs(C * D / (A * B * z)) < 0.9, "2psi2 outside its annulus");
    off_qlattice(q, {{"A", A}, {"B", B}, {"C", C}, {"D", D}});
}

inline void add_core(Registry& reg) {
    reg.add({"core-qpoch-split", "unlabeled:q-Pochhammer", "q: |q| in [0.1,0.6); x: |x| in [0.2,1.5); n in -5..5",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d, 0.1, 0.6);
                 cplx x = d.polar("x", 0.2, 1.5, -pi, pi);
                 long n = d.integer("n", -5, 5);
                 if (n < 0) off_qlattice(q, {{"x", x}});
                 return {{"(x)_n (x q^n)_inf = (x)_inf", qpoch(x, q, n) * P(x * ipow(q, n), q), P(x, q)}};
             },
             1e-12});

    reg.add({"core-thetaq-shift", "unlabeled:theta_q", "q: |q| in [0.1,0.6); x: |x| in [0.3,3)",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d, 0.1, 0.6);
                 cplx x = d.polar("x", 0.3, 3.0, -pi, pi);
                 off_qlattice(q, {{"-x", -x}});
                 return {{"theta_q(qx) = theta_q(x)/x", tq(q * x, q), tq(x, q) / x},
                         {"theta_q(q^2 x) = q^{-1} x^{-2} theta_q(x)", tq(q * q * x, q), tq(x, q) / (q * x * x)}};
             },
             1e-12});

    reg.add({"core-theta11-quasiperiod", "unlabeled:theta11", "u default box; tau default",
             [](Draw& d) -> Rows {
                 ModularPoint tau = d.tau();
                 cplx u = d.coord("u");
                 off_lattice(tau, {{"u", u}});
                 cplx t = th(u, tau);
                 return {{"theta11(u+1) = -theta11(u)", th(u + 1.0, tau), -t},
                         {"theta11(u+tau) = -e^{-2 pi i u} q^{-1/2} theta11(u)", th(u + tau.tau(), tau),
                          -e2pi(-u) * tau.qpow(-0.5) * t},
                         {"theta11(-u) = -theta11(u)", th(-u, tau), -t}};
             },
             1e-12});

    reg.add({"core-triple-product", "unlabeled:theta_q; unlabeled:theta11",
             "q: |q| in [0.1,0.6); x: |x| in [0.3,3); tau: Re in [-0.5,0.5), Im in [0.1,1.2); u default box",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d, 0.1, 0.6);
                 cplx x = d.polar("x", 0.3, 3.0, -pi, pi);
                 ModularPoint tau(d.box("tau", -0.5, 0.5, 0.1, 1.2));
                 cplx u = d.coord("u");
                 return {{"theta_q product = sum", tq(x, q), theta_q_sum(x, q, T()).value},
                         {"theta11 product = sum", th(u, tau), theta11_sum(u, tau, T()).value}};
             },
             1e-12});
}

inline void add_classic(Registry& reg) {
    reg.add({"classic-heine", "unlabeled:Heine transformation",
             "q: |q| in [0.1,0.5); |a| in [0.6,0.9), |c| in [0.3,0.55), |b|,|x| in [0.1,0.6); |abx/c| < 0.8",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d);
                 cplx a = d.polar("a", 0.6, 0.9, -pi, pi);
                 cplx b = d.polar("b", 0.1, 0.6, -pi, pi);
                 cplx c = d.polar("c", 0.3, 0.55, -pi, pi);
                 cplx x = d.polar("x", 0.1, 0.6, -pi, pi);
                 reject_unless(std::abs(a * b * x / c) < 0.8 && std::abs(c / a) < 0.95, "outside Heine region");
                 cplx lhs = ph({a, b}, {c}, q, x);
                 return {{"first form", lhs, P(a * x, q) * P(c / a, q) / (P(x, q) * P(c, q)) * ph({a, a * b * x / c}, {a * x}, q, c / a)},
                         {"third form", lhs, P(a * b * x / c, q) / P(x, q) * ph({c / b, c / a}, {c}, q, a * b * x / c)}};
             },
             1e-10});

    reg.add({"classic-ramanujan", "unlabeled:Ramanujan 1psi1 summation",
             "q: |q| in [0.1,0.5); |a| in [0.5,0.95), |b| in [0.05,0.45), |z| in [0.2,0.9); |b/a| < 0.85|z|",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d);
                 cplx a = d.polar("a", 0.5, 0.95, -pi, pi);
                 cplx b = d.polar("b", 0.05, 0.45, -pi, pi);
                 cplx z = d.polar("z", 0.2, 0.9, -pi, pi);
                 reject_unless(std::abs(b / a) < 0.85 * std::abs(z), "outside |b/a| < |z|");
                 off_qlattice(q, {{"a", a}, {"b", b}, {"az", a * z}});
                 cplx rhs = P(a * z, q) * P(q / (a * z), q) * P(q, q) * P(b / a, q) /
                            (P(z, q) * P(b / (a * z), q) * P(b, q) * P(q / a, q));
                 return {{"1psi1 sum", ps({a}, {b}, q, z), rhs}};
             },
             1e-10});

    reg.add({"classic-kronecker", "eq:Kronecker formula",
             "q: |q| in [0.1,0.5); |x| in [0.2,0.95); |q| + 0.05 <= |y| < 0.95",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d);
                 cplx x = d.polar("x", 0.2, 0.95, -pi, pi);
                 cplx y = d.polar("y", std::abs(q) + 0.05, 0.95, -pi, pi);
                 off_qlattice(q, {{"x", x}, {"y", y}, {"xy", x * y}});
                 cplx k = kronecker_k(x, y, q, T()).value;
                 return {{"product = sum y^n/(1 - x q^n)", k, kronecker_sum(x, y, q, T()).value},
                         {"k(x,y) = k(y,x)", k, kronecker_k(y, x, q, T()).value},
                         {"1psi1(x; qx; q, y)/(1-x) = k", ps({x}, {q * x}, q, y) / (1.0 - x), k}};
             },
             1e-10});

    // Bailey's four 2psi2 transformations share one box in which all eight series converge.
    struct BaileyForm {
        const char* name;
        const char* anchor;
        int form;
    };
    for (auto f : {BaileyForm{"classic-bailey-1", "eq:Bailey trans0", 0}, BaileyForm{"classic-bailey-2", "eq:Bailey trans1", 1},
                   BaileyForm{"classic-bailey-3", "eq:Bailey trans2", 2}, BaileyForm{"classic-bailey-4", "eq:Bailey trans3", 3}}) {
        reg.add({f.name, f.anchor,
                 "q: |q| in [0.15,0.35); |a|,|b| in [0.7,0.95), |c|,|d| in [0.2,0.4), |z| in [0.45,0.75), phases in [-0.3,0.3)",
                 [form = f.form](Draw& d) -> Rows {
                     cplx q = complex_nome(d, 0.15, 0.35);
                     cplx a = d.polar("a", 0.7, 0.95, -0.3, 0.3);
                     cplx b = d.polar("b", 0.7, 0.95, -0.3, 0.3);
                     cplx c = d.polar("c", 0.2, 0.4, -0.3, 0.3);
                     cplx e = d.polar("d", 0.2, 0.4, -0.3, 0.3);
                     cplx z = d.polar("z", 0.45, 0.75, -0.3, 0.3);
                     psi22_converges(a, b, c, e, z, q);
                     cplx abz = a * b * z;
                     cplx lhs, rhs;
                     switch (form) {
                         case 0:
                             psi22_converges(a, abz / c, a * z, e, c / a, q);
                             rhs = P(a * z, q) * P(c / a, q) * P(e / b, q) * P(q * c / abz, q) /
                                   (P(z, q) * P(c, q) * P(q / b, q) * P(c * e / abz, q)) * ps({a, abz / c}, {a * z, e}, q, c / a);
                             break;
                         case 1:
                             psi22_converges(b, abz / e, b * z, c, e / b, q);
                             rhs = P(b * z, q) * P(e / b, q) * P(c / a, q) * P(q * e / abz, q) /
                                   (P(z, q) * P(e, q) * P(q / a, q) * P(c * e / abz, q)) * ps({b, abz / e}, {b * z, c}, q, e / b);
                             break;
                         case 2:
                             psi22_converges(a, abz / e, a * z, c, e / a, q);
                             rhs = P(a * z, q) * P(e / a, q) * P(c / b, q) * P(q * e / abz, q) /
                                   (P(z, q) * P(e, q) * P(q / b, q) * P(c * e / abz, q)) * ps({a, abz / e}, {a * z, c}, q, e / a);
                             break;
                         default:
                             psi22_converges(b, abz / c, b * z, e, c / b, q);
                             rhs = P(b * z, q) * P(c / b, q) * P(e / a, q) * P(q * c / abz, q) /
                                   (P(z, q) * P(c, q) * P(q / a, q) * P(c * e / abz, q)) * ps({b, abz / c}, {b * z, e}, q, c / b);
                     }
                     lhs = ps({a, b}, {c, e}, q, z);
                     return {{"2psi2 transformation", lhs, rhs}};
                 },
                 1e-10});
    }

    struct DegForm {
        const char* name;
        const char* anchor;
        int form;
    };
    for (auto f : {DegForm{"classic-degenerate-1", "eq:Bailey trans special1", 0},
                   DegForm{"classic-degenerate-2", "eq:Bailey trans special2", 1},
                   DegForm{"classic-degenerate-3", "eq:Bailey trans special3", 2}}) {
        reg.add({f.name, f.anchor, "q: |q| in [0.15,0.35); |a| in [0.5,0.9), |d| in [0.1,0.45), |z| in [0.3,0.9); |d/a| < 0.9",
                 [form = f.form](Draw& d) -> Rows {
                     cplx q = complex_nome(d, 0.15, 0.35);
                     cplx a = d.polar("a", 0.5, 0.9, -pi, pi);
                     cplx e = d.polar("d", 0.1, 0.45, -pi, pi);
                     cplx z = d.polar("z", 0.3, 0.9, -pi, pi);
                     reject_unless(std::abs(e / a) < 0.9, "|d/a| too large");
                     off_qlattice(q, {{"a", a}, {"d", e}, {"z", z}, {"az/d", a * z / e}, {"d/a", e / a}});
                     cplx lhs = ps({a}, {0.0, e}, q, z);
                     cplx rhs;
                     if (form == 0)
                         rhs = P(z, q) * P(e * q / (a * z), q) / (P(e, q) * P(q / a, q)) * ps({a * z / e}, {0.0, z}, q, e);
                     else if (form == 1)
                         rhs = P(e / a, q) * P(e * q / (a * z), q) / P(e, q) * ps({a, a * z / e}, {0.0, 0.0}, q, e / a);
                     else
                         rhs = P(z, q) * P(e / a, q) / P(q / a, q) * ps({}, {z, e}, q, a * z);
                     return {{"1psi2 transformation", lhs, rhs}};
                 },
                 1e-10});
    }

    reg.add({"classic-andrews", "eq:Andrews formula", "q: |q| in [0.1,0.5); all parameters |.| in [0.1,0.7)",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d);
                 cplx a = d.polar("a", 0.1, 0.7, -pi, pi);
                 cplx b = d.polar("b", 0.1, 0.7, -pi, pi);
                 cplx c = d.polar("c", 0.1, 0.7, -pi, pi);
                 cplx e1 = d.polar("d", 0.1, 0.7, -pi, pi);
                 cplx e2 = d.polar("e", 0.1, 0.7, -pi, pi);
                 cplx x = d.polar("x", 0.1, 0.7, -pi, pi);
                 cplx rhs = P(a * x, q) * P(b, q) * P(c, q) / (P(x, q) * P(e1, q) * P(e2, q)) *
                            q_appell_phi1(x, e1 / b, e2 / c, a * x, q, b, c, T()).value;
                 return {{"3phi2 = Phi^(1)", ph({a, b, c}, {e1, e2}, q, x), rhs}};
             },
             1e-10});

    reg.add({"classic-gauss-sum", "eq:Gauss sum product", "N in 1..30",
             [](Draw& d) -> Rows {
                 long N = d.integer("N", 1, 30);
                 auto [s, p] = gauss_sum_product(N);
                 return {{"sum over k = 0..2N", s, p}};
             },
             1e-10});

    reg.add({"classic-gauss-sum-variant", "eq:Gauss sum product", "N in 1..30; range k = 1..2N",
             [](Draw& d) -> Rows {
                 long N = d.integer("N", 1, 30);
                 auto [s, p] = gauss_sum_product(N);
                 return {{"sum over k = 1..2N", s - 1.0, p}};
             },
             1e-10, false});

    reg.add({"classic-qbessel", "q-Bessel",
             "q: |q| in [0.1,0.5); nu: Re in [-0.4,2.5), Im in [-0.3,0.3); x: |x| in [0.2,1.5), arg in (-2.5,2.5)",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d);
                 cplx nu = d.box("nu", -0.4, 2.5, -0.3, 0.3);
                 cplx x = d.polar("x", 0.2, 1.5, -2.5, 2.5);
                 return {{"0phi1 form = 1phi1 form", q_bessel_J2(nu, x, q, T()).value, q_bessel_J2_phi11(nu, x, q, T()).value}};
             },
             1e-10});
}

inline void add_mock(Registry& reg) {
    reg.add({"mock-hickerson", "unlabeled:Hickerson identity", "q real in [0.05,0.3)",
             [](Draw& d) -> Rows {
                 cplx q = d.real_nome("q", 0.05, 0.3);
                 cplx q5 = ipow(q, 5);
                 cplx rhs = -2.0 * q * q * g3(q * q, ipow(q, 10), T()).value +
                            P(q5, q5) * P(q5, ipow(q, 10)) / (P(q, q5) * P(ipow(q, 4), q5));
                 return {{"f0(q)", mock_theta(MockTheta::f0, q, T()).value, rhs}};
             },
             1e-10});

    // q^{-1/24} x^{3/2} g3(x; q) against the theta/mu decomposition; `factor` multiplies the right side.
    auto g3_case = [](cplx factor) {
        return [factor](Draw& d) -> Rows {
            double qr = d.real("q", 0.05, 0.3);
            ModularPoint tau(std::log(qr) / (2.0 * pi * I));
            ModularPoint tau3(3.0 * tau.tau());
            cplx u = d.box("u", -0.45, 0.45, -0.1, 0.1);
            off_lattice(tau, {{"u", u}});
            keep_off_lattice(3.0 * u, tau3.tau(), "3u");
            const cplx q = tau.q();
            const cplx x = e2pi(u);
            cplx lhs = tau.qpow(-1.0 / 24.0) * std::exp(3.0 * pi * I * u) * g3(x, q, T()).value;
            cplx q3 = ipow(q, 3);
            cplx pq3 = P(q3, q3);
            cplx rhs = tau.qpow(1.0 / 3.0) * pq3 * pq3 * pq3 / (P(q, q) * th(3.0 * u, tau3)) +
                       tau.qpow(-1.0 / 6.0) * x * Z(3.0 * u, tau.tau(), tau3) +
                       tau.qpow(-2.0 / 3.0) * x * x * Z(3.0 * u, 2.0 * tau.tau(), tau3);
            return {{"g3 decomposition", lhs, factor * rhs}};
        };
    };
    reg.add({"mock-g3-decomposition", "unlabeled:g3 decomposition", "q real in [0.05,0.3); u: Re in [-0.45,0.45), Im in [-0.1,0.1)",
             g3_case(-I), 1e-9});
    reg.add({"mock-g3-decomposition-variant", "unlabeled:g3 decomposition",
             "q real in [0.05,0.3); u: Re in [-0.45,0.45), Im in [-0.1,0.1); without the factor -i", g3_case(1.0), 1e-9, false});
}

}  // namespace qmu::cases
