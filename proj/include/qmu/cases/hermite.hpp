#pragma once

#include "qmu/cases/mu.hpp"

namespace qmu::cases {

inline void add_hermite(Registry& reg) {
    const std::string dom = "u, v default box; tau default";
    reg.add({"thm1.5", "thm:mu and CqH", dom + "; every k in 0..12 at each point",
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 Rows rows;
                 for (long k = 0; k <= 12; ++k) {
                     cplx h = hermite_cq(k, {s.u - s.v, s.tau.q()});
                     rows.push_back({"mu(u,v;-k) = -i q^{-1/8} H_k, k = " + std::to_string(k),
                                     mu_negative_degree(k, s.u, s.v, s.tau, T()).value, -I * s.tau.qpow(-0.125) * h});
                 }
                 return rows;
             },
             1e-9});

    reg.add({"thm1.5-gauss", "eq:Gauss evaluation", "q: |q| in [0.1,0.6); N in 1..6; w = 1/2",
             [](Draw& d) -> Rows {
                 cplx q = d.polar("q", 0.1, 0.6, -pi, pi);
                 long N = d.integer("N", 1, 6);
                 HermiteArg zero{0.5, q};
                 cplx even = hermite_cq(2 * N, zero) * ipow(I, -2 * N);
                 // the odd degree vanishes; compare against the size of its terms
                 auto f = detail::qfactorials(q, 2 * N - 1);
                 double scale = 0.0;
                 for (long l = 0; l < 2 * N; ++l) scale += std::abs(f[2 * N - 1] / (f[l] * f[2 * N - 1 - l]));
                 return {{"i^{-2N} H_{2N}(0|q) = (q;q^2)_N", even, qpoch(q, q * q, N)},
                         {"H_{2N-1}(0|q) = 0, scaled", 1.0 + hermite_cq(2 * N - 1, zero) / scale, 1.0}};
             },
             1e-12});

    reg.add({"hermite-recurrence", "q-Her Rec; q-Her initial",
             "q: |q| in [0.1,0.6); w: Re in [-1,1), Im in [-0.1,0.1); n in 1..20",
             [](Draw& d) -> Rows {
                 cplx q = d.polar("q", 0.1, 0.6, -pi, pi);
                 cplx w = d.box("w", -1.0, 1.0, -0.1, 0.1);
                 long n = d.integer("n", 1, 20);
                 HermiteArg a{w, q};
                 cplx x = a.x();
                 return {{"H_0 = 1", hermite_cq(0, a), 1.0},
                         {"H_1 = 2x", hermite_cq(1, a), 2.0 * x},
                         {"2x H_n = H_{n+1} + (1-q^n) H_{n-1}", 2.0 * x * hermite_cq(n, a),
                          hermite_cq(n + 1, a) + (1.0 - ipow(q, n)) * hermite_cq(n - 1, a)}};
             },
             1e-11});

    reg.add({"hermite-genfunc", "eq:gen func of CqH",
             "q: |q| in [0.1,0.6); r: |r| in [0.05,0.4); w: Re in [-1,1), Im in [-0.1,0.1)",
             [](Draw& d) -> Rows {
                 cplx q = d.polar("q", 0.1, 0.6, -pi, pi);
                 cplx r = d.polar("r", 0.05, 0.4, -pi, pi);
                 cplx w = d.box("w", -1.0, 1.0, -0.1, 0.1);
                 HermiteArg a{w, q};
                 cplx rn = 1.0, fn = 1.0;
                 EvalResult s = sum_unilateral(
                     [&](long n) {
                         if (n > 0) {
                             rn *= r;
                             fn *= 1.0 - ipow(q, n);
                         }
                         return hermite_cq(n, a) / fn * rn;
                     },
                     T());
                 cplx e = std::exp(I * pi * w);
                 return {{"sum H_n/(q)_n r^n", s.value, 1.0 / (P(r * e, q) * P(r / e, q))}};
             },
             1e-11});

    reg.add({"hermite-two-phi", "eq:Hermite 2 sum expression", dom + "; w = u - v; n in 0..8",
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 long n = d.integer("n", 0, 8);
                 cplx w = s.u - s.v;
                 return {{"H_n through two 1phi1", hermite_two_phi(n, w, s.tau, T()).value, hermite_cq(n, {w, s.tau.q()})}};
             },
             1e-10});
}

/// (u, v, tau, r) for the generating function S(r).
struct SDraw {
    cplx u, v, r;
    ModularPoint tau;
    cplx S(cplx rr, SMethod m = SMethod::Direct) const { return gen_S(rr, u, v, tau, T(), m).value; }
    cplx ep() const { return std::exp(pi * I * (u - v)) * r * tau.q(); }
    cplx em() const { return std::exp(-pi * I * (u - v)) * r * tau.q(); }
};

inline SDraw draw_S(Draw& d) {
    auto s = draw_zw(d);
    cplx r = d.polar("r", 0.05, 0.4, -pi, pi);
    return {s.u, s.v, r, s.tau};
}

inline void add_thm16(Registry& reg) {
    const std::string dom = "u, v default box; tau default; r: |r| in [0.05,0.4)";
    reg.add({"thm1.6-direct-closed", "thm:Sr; eq:gen Sr expression", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_S(d);
                 return {{"sum mu(k+1) r^k = 3phi2 form", s.S(s.r), s.S(s.r, SMethod::Closed)}};
             },
             1e-8});
    reg.add({"thm1.6-appell-form", "eq:Sr expression2", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_S(d);
                 return {{"sum mu(k+1) r^k = Phi^(1) form", s.S(s.r), s.S(s.r, SMethod::Appell)}};
             },
             1e-8});
    reg.add({"thm1.6-eq1.39", "eq:Sr expression3; eq:Sr expression3 divid", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_S(d);
                 return {{"sum mu(k+1) r^k = sum mu(1-m) q^m r^m/(q)_m form", s.S(s.r), s.S(s.r, SMethod::MinusDegree)}};
             },
             1e-8});
    reg.add({"thm1.6-qdiff1", "eq:Sr rec1; eq:N expression Sr", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_S(d);
                 const cplx q = s.tau.q();
                 const cplx c = I * s.r * s.tau.qpow(0.875);
                 cplx S0 = s.S(s.r);
                 // finite form with N = 3
                 cplx acc = 0.0, pn = 1.0;
                 for (long n = 0; n < 3; ++n) {
                     acc += ipow(q, n) * pn;
                     pn *= (1.0 - s.ep() * ipow(q, n)) * (1.0 - s.em() * ipow(q, n));
                 }
                 return {{"S(r) = (1-r e^{pi i w} q)(1-r e^{-pi i w} q) S(rq) - i r q^{7/8}", S0,
                          (1.0 - s.ep()) * (1.0 - s.em()) * s.S(s.r * q) - c},
                         {"S(r) by the N = 3 expansion", S0, pn * s.S(s.r * ipow(q, 3)) - c * acc}};
             },
             1e-8});
    reg.add({"thm1.6-qdiff2", "eq:Sr rec2", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_S(d);
                 const cplx q = s.tau.q();
                 cplx lhs = (1.0 - s.ep() * q) * (1.0 - s.em() * q) * s.S(s.r * q * q) + q * s.S(s.r);
                 cplx rhs = (1.0 + q * (1.0 - s.ep()) * (1.0 - s.em())) * s.S(s.r * q);
                 return {{"second-order equation for S(r)", lhs, rhs}};
             },
             1e-8});
}

inline void add_cor36(Registry& reg) {
    reg.add({"cor3.6-F-genfunc", "cor:Sr expressions",
             "tau default; w: Re in [-0.45,0.45), Im in [-0.15,0.15); r: |r| in [0.05,0.4); n in 0..4",
             [](Draw& d) -> Rows {
                 ModularPoint tau = d.tau();
                 cplx w = d.coord("w");
                 cplx r = d.polar("r", 0.05, 0.4, -pi, pi);
                 long n = d.integer("n", 0, 4);
                 const cplx q = tau.q(), tt = tau.tau();
                 HermiteArg a{w, q};
                 cplx rn = 1.0;
                 EvalResult s = sum_unilateral(
                     [&](long k) {
                         if (k > 0) rn *= r;
                         return F_capital(k, a) * rn;
                     },
                     T());
                 cplx e = std::exp(I * pi * w);
                 // Jackson J^(2)_{w/tau}(2 i e^{-pi i n tau}) with (x/2)^nu = e^{nu (pi i/2 - pi i n tau)}
                 double nd = static_cast<double>(n);
                 cplx half_pow = std::exp(w / tt * (pi * I / 2.0 - pi * I * nd * tt));
                 cplx J = q_bessel_J2_branch(e2pi(w + tt), half_pow, 2.0 * I * std::exp(-pi * I * nd * tt), q, T()).value;
                 cplx bessel = std::exp(-pi * I * w / (2.0 * tt)) * P(q, q) / qpoch(ipow(q, -n), q, n) * J;
                 return {{"sum F_{n+1} r^n", s.value, P(e * r * q, q) * P(r * q / e, q)},
                         {"F_{n+1} coefficient form = 1phi1 form", F_capital(n, a), F_capital_phi(n, a)},
                         {"F_{n+1} = q-Bessel form", F_capital(n, a), bessel}};
             },
             1e-10});

    // these two forms cancel strongly at larger |tau|, so Im tau stays small
    auto draw36 = [](Draw& d) {
        ModularPoint tau(d.box("tau", -0.1, 0.1, 0.1, 0.15));
        cplx u = d.coord("u"), v = d.coord("v");
        off_lattice(tau, {{"u", u}, {"v", v}, {"u-v", u - v}});
        return ZwDraw{u, v, tau};
    };
    const std::string dom = "u, v default box; tau: Re in [-0.1,0.1), Im in [0.1,0.15)";
    reg.add({"cor3.6-eq3.11", "eq:Sr expressions", dom + "; k in 0..6",
             [draw36](Draw& d) -> Rows {
                 auto s = draw36(d);
                 long k = d.integer("k", 0, 6);
                 const cplx q = s.tau.q();
                 HermiteArg a{s.u - s.v, q};
                 auto f = detail::qfactorials(q, k);
                 cplx rhs = 0.0;
                 for (long l = 0; l <= k; ++l)
                     rhs += ipow(q, l) / f[l] * F_capital(k - l, a) * M(s.u, s.v, static_cast<double>(1 - l), s.tau);
                 return {{"mu(u,v;k+1) convolution", M(s.u, s.v, static_cast<double>(k + 1), s.tau), rhs}};
             },
             1e-9});

    // right side -i q^{m - 1/8} H_{m-1}/(q)_m; the variant with q^{7/8} agrees only at m = 1
    auto eq312 = [draw36](bool corrected) {
        return [draw36, corrected](Draw& d) -> Rows {
            auto s = draw36(d);
            long m = d.integer("m", corrected ? 1 : 2, 6);
            const cplx q = s.tau.q();
            HermiteArg a{s.u - s.v, q};
            auto f = detail::qfactorials(q, m);
            cplx lhs = 0.0;
            for (long k = 0; k <= m; ++k)
                lhs += M(s.u, s.v, static_cast<double>(k + 1), s.tau) * hermite_cq(m - k, a) / f[m - k] * ipow(q, m - k);
            double ex = corrected ? static_cast<double>(m) - 0.125 : 0.875;
            return {{"sum mu(k+1) H_{m-k} q^{m-k}/(q)_{m-k}", lhs, -I * s.tau.qpow(ex) * hermite_cq(m - 1, a) / f[m]}};
        };
    };
    reg.add({"cor3.6-eq3.12", "eq:Sr expressions 2", dom + "; m in 1..6", eq312(true), 1e-9});
    reg.add({"cor3.6-eq3.12-variant", "eq:Sr expressions 2", dom + "; m in 2..6; exponent 7/8", eq312(false), 1e-9, false});
}

inline void add_cor31(Registry& reg) {
    const std::string dom = "u, v default box; tau default; alpha in (-2.5,2.5) off the integers";
    reg.add({"cor3.1-j-decomposition", "mu-j+j", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_mu(d);
                 cplx w = s.w();
                 cplx rhs = Phi(s.u, s.v, s.alpha, s.tau) * j_alpha(w, s.alpha, s.tau, T()).value + j_alpha(-w, s.alpha, s.tau, T()).value;
                 return {{"i q^{1/8} mu(u,v;alpha)", I * s.tau.qpow(0.125) * s.A(s.u, s.v), rhs}};
             },
             1e-9});
    reg.add({"cor3.1-j-forms", "q-Bessel", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_mu(d);
                 return {{"j through 1phi1 = j through J^(2)", j_alpha(s.w(), s.alpha, s.tau, T()).value,
                          j_alpha_bessel(s.w(), s.alpha, s.tau, T()).value}};
             },
             1e-9});
    reg.add({"cor3.1-second", "rmk q-Bessel", dom + "; z default box",
             [](Draw& d) -> Rows {
                 auto s = draw_mu(d);
                 cplx z = d.coord("z");
                 const cplx at = s.alpha * s.t();
                 off_lattice(s.tau, {{"z", z}, {"u+z", s.u + z}, {"v+z", s.v + z}, {"u+z-alpha tau", s.u + z - at},
                                     {"alpha tau", at}});
                 auto h = [&](cplx x) { return th(x, s.tau); };
                 cplx lhs = h(at) * h(s.w()) * h(z) * h(s.u + s.v + z - at) / (h(s.u - at) * h(s.v) * h(s.u + z - at) * h(s.v + z)) *
                            e2pi(s.alpha * s.w()) * j_alpha(s.w(), s.alpha + 1.0, s.tau, T()).value;
                 cplx iq = I * s.tau.qpow(0.125);
                 return {{"translation difference through j(w;alpha+1)", lhs,
                          iq * (s.A(s.u + z, s.v + z, s.alpha + 1) - s.A(s.u, s.v, s.alpha + 1))}};
             },
             1e-9});
    reg.add({"cor3.1-logderiv", "eq: Bmconect", "u, v default box; tau default",
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 const cplx q = s.tau.q(), w = s.u - s.v;
                 EvalResult S = sum_bilateral(
                     [&](long n) -> cplx {
                         if (n == 0) return 0.0;
                         return (n % 2 == 0 ? 1.0 : -1.0) * ipow(q, n * (n + 1) / 2) / (1.0 - ipow(q, n)) * e2pi(static_cast<double>(n) * w);
                     },
                     T());
                 cplx ld = (theta11_logderiv(s.u, s.tau, T()).value - theta11_logderiv(s.v, s.tau, T()).value) / (2.0 * pi * I);
                 return {{"theta11(u-v) mu(u,v)", th(w, s.tau) * Z(s.u, s.v, s.tau), ld + S.value}};
             },
             1e-9});
}

inline void add_cor32(Registry& reg) {
    reg.add({"cor3.2-reduction", "cor:mu a reduction; eq:mu a reduction",
             "u default box; tau default; alpha in (-2.5,2.5) off the integers",
             [](Draw& d) -> Rows {
                 ModularPoint tau = d.tau();
                 cplx u = d.coord("u");
                 double al = d.alpha();
                 const cplx tt = tau.tau(), v = u + 0.5;
                 off_lattice(tau, {{"u", u}, {"u+1/2", v}, {"u - (alpha-1) tau", u - (al - 1.0) * tt},
                                   {"u - (alpha+1) tau", u - (al + 1.0) * tt}});
                 return {{"mu(u,u+1/2;alpha-1)", M(u, v, al - 1.0, tau), (tau.qpow(-al) - 1.0) * M(u, v, al + 1.0, tau)}};
             },
             1e-9});
    reg.add({"cor3.2-closed", "cor:mu a reduction", "u default box; tau default; k in 0..3",
             [](Draw& d) -> Rows {
                 ModularPoint tau = d.tau();
                 cplx u = d.coord("u");
                 long k = d.integer("k", 0, 3);
                 const cplx h = 0.5, q = tau.q();
                 off_lattice(tau, {{"u", u}, {"u+1/2", u + h}, {"2u", 2.0 * u}});
                 cplx pq = P(q, q), pm = P(-q, q);
                 cplx M1 = I * tau.qpow(0.25) * pq * pq * pq * pq * pm * pm * th(2.0 * u, tau) /
                           (th(u, tau) * th(u, tau) * th(u + h, tau) * th(u + h, tau));
                 double kd = static_cast<double>(k);
                 return {{"mu(u,u+1/2) closed form", Z(u, u + h, tau), M1},
                         {"theta11(1/2)", th(h, tau), -2.0 * tau.qpow(0.125) * pq * pm * pm},
                         {"mu(u,u+1/2;2k)", M(u, u + h, 2.0 * kd, tau), -I * tau.qpow(-0.125) * ipow(q, k * k) / qpoch(q, q * q, k)},
                         {"mu(u,u+1/2;2k+1)", M(u, u + h, 2.0 * kd + 1.0, tau), ipow(q, k * (k + 1)) / qpoch(q * q, q * q, k) * M1}};
             },
             1e-9});
}

}  // namespace qmu::cases
