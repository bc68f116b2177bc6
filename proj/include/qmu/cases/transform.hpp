#pragma once

#include "qmu/cases/mu.hpp"

namespace qmu::cases {

/// (w, alpha, tau, lambda) for the q-Hermite-Weber solutions; x = e^{2 pi i w}.
struct HWDraw {
    cplx w;
    HWParams p;
    cplx q() const { return p.tau.q(); }
    cplx x() const { return e2pi(w); }
};

inline HWDraw draw_hw(Draw& d) {
    ModularPoint tau = d.tau();
    cplx w = d.coord("w");
    double al = d.alpha();
    cplx lam = d.polar("lambda", 0.3, 1.5, -pi, pi);
    HWParams p{al, tau, lam};
    const cplx q = tau.q(), x = e2pi(w), a = p.a();
    off_lattice(tau, {{"w", w}});
    off_qlattice(q, {{"-lambda/x", -lam / x}, {"-lambda x", -lam * x}, {"-lambda", -lam}, {"-lambda/a", -lam / a},
                     {"-a x/lambda", -a * x / lam}, {"-x lambda/a", -x * lam / a}, {"a", a}});
    return {w, p};
}

inline void add_sec2(Registry& reg) {
    const std::string dom =
        "w default box; tau default; alpha in (-2.5,2.5) off the integers; lambda: |lambda| in [0.3,1.5)";
    reg.add({"sec2-hermite-weber", "eq:q-Hermite; lem:lemma2", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_hw(d);
                 const auto& p = s.p;
                 auto ev = [&](auto fn) { return [&p, fn](cplx w) { return fn(w, p, T()).value; }; };
                 return {hermite_weber_residual("f0", ev(f0_solution_w), s.w, p),
                         hermite_weber_residual("g0", ev(g0_solution_w), s.w, p),
                         hermite_weber_residual("f_inf", ev(finf_solution_w), s.w, p),
                         hermite_weber_residual("g_inf", ev(ginf_solution_w), s.w, p)};
             },
             1e-9});

    auto draw21 = [](Draw& d) {
        cplx q = d.polar("q", 0.15, 0.4, -pi, pi);
        cplx a = d.polar("a", 0.2, 0.7, -pi, pi);
        cplx b = d.polar("b", 0.2, 0.7, -pi, pi);
        cplx x = d.polar("x", 0.3, 1.0, -2.5, 2.5);
        cplx lam = d.polar("lambda", 0.3, 1.5, -pi, pi);
        reject_unless(std::abs(a * b * x) < 0.9, "|abx| too large");
        reject_unless(std::abs(q) < 0.9 * std::min(std::abs(a), std::abs(b)), "|q/a| or |q/b| too large");
        off_qlattice(q, {{"b/a", b / a}, {"-lambda/x", -lam / x}, {"-lambda", -lam}, {"-a lambda", -a * lam},
                         {"-b lambda", -b * lam}, {"-a x/lambda", -a * x / lam}, {"-b x/lambda", -b * x / lam},
                         {"x", x}, {"ax", a * x}, {"bx", b * x}, {"abx", a * b * x}, {"a", a}, {"b", b}});
        return std::tuple{q, a, b, x, lam};
    };
    const std::string dom21 =
        "q: |q| in [0.15,0.4); a, b: |.| in [0.2,0.7) with |q| < 0.9 min(|a|,|b|); x: |x| in [0.3,1.0), arg in (-2.5,2.5), "
        "|abx| < 0.9; lambda: |lambda| in [0.3,1.5)";
    reg.add({"sec2-lemma2.1-equation", "lem:lemma1; eq:(26)", dom21,
             [draw21](Draw& d) -> Rows {
                 auto [q, a, b, x, lam] = draw21(d);
                 auto rows = heine_system_suite(x, a, b, q, lam, T());
                 return Rows(rows.begin(), rows.begin() + 4);
             },
             1e-8});
    reg.add({"sec2-lemma2.1-connection", "lem:lemma1; eq:prot connec", dom21,
             [draw21](Draw& d) -> Rows {
                 auto [q, a, b, x, lam] = draw21(d);
                 auto rows = heine_system_suite(x, a, b, q, lam, T());
                 return Rows(rows.begin() + 4, rows.end());
             },
             1e-8});

    reg.add({"sec2-lemma2.2", "lem:lemma2; amuconnect", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_hw(d);
                 return connection_matrix_residual(s.w, s.p, T());
             },
             1e-8});

    reg.add({"sec2-thm2.3", "thm:tuchimi connection; eq:tuchimi connection; eq:different variable",
             dom + "; lambda': |lambda'| in [0.3,1.5)",
             [](Draw& d) -> Rows {
                 auto s = draw_hw(d);
                 cplx lp = d.polar("lambda'", 0.3, 1.5, -pi, pi);
                 const cplx q = s.q(), x = s.x(), a = s.p.a(), lam = s.p.lambda;
                 off_qlattice(q, {{"-lambda'", -lp}, {"-lambda'/a", -lp / a}, {"-lambda'/x", -lp / x}, {"-x/lambda'", -x / lp},
                                  {"-a x/lambda'", -a * x / lp}, {"lambda'/(x lambda)", lp / (x * lam)},
                                  {"lambda lambda'/a", lam * lp / a}, {"-a/lambda", -a / lam}});
                 return {lambda_change_residual(s.w, lp, s.p, T())};
             },
             1e-8});

    reg.add({"sec2-translation", "eq:main results3; thm:tuchimi connection",
             "u, v, z default box; tau default; alpha in (-2.5,2.5) off the integers; lambda = -e^{2 pi i v}, "
             "lambda' = -e^{2 pi i (u+z)}",
             [](Draw& d) -> Rows {
                 auto s = draw_mu(d);
                 cplx z = d.coord("z");
                 const cplx at = s.alpha * s.t();
                 off_lattice(s.tau, {{"z", z}, {"u+z", s.u + z}, {"v+z", s.v + z}, {"u+z-alpha tau", s.u + z - at},
                                     {"v+z-alpha tau", s.v + z - at}, {"v - alpha tau", s.v - at}, {"alpha tau", at}});
                 HWParams p{s.alpha, s.tau, -e2pi(s.v)};
                 IdentityPair c = lambda_change_residual(s.w(), -e2pi(s.u + z), p, T());
                 cplx iq = I * s.tau.qpow(0.125);
                 return {{"connection right side / (i q^{1/8}) = mu(u+z,v+z)", c.rhs / iq, s.A(s.u + z, s.v + z)},
                         {"f_inf(x, -e^{2 pi i v}) = i q^{1/8} mu(v,u)", finf_solution_w(s.w(), p, T()).value, iq * s.A(s.v, s.u)}};
             },
             1e-8});

    reg.add({"sec2-intertwining", "eq:q-Laplace",
             "q: |q| in [0.1,0.5); polynomial f of degree 6 with coefficients in the unit box; x: |x| in [0.3,1.5); "
             "lambda: |lambda| in [0.3,1.5); m, n in 0..2",
             [](Draw& d) -> Rows {
                 cplx q = d.polar("q", 0.1, 0.5, -pi, pi);
                 FormalPowerSeries f;
                 for (int k = 0; k <= 6; ++k) f.coeffs.push_back(d.box("c" + std::to_string(k), -1, 1, -1, 1));
                 cplx x = d.polar("x", 0.3, 1.5, -pi, pi);
                 cplx lam = d.polar("lambda", 0.3, 1.5, -pi, pi);
                 long m = d.integer("m", 0, 2), n = d.integer("n", 0, 2);
                 off_qlattice(q, {{"-lambda/x", -lam / x}});
                 auto LB = [&](const FormalPowerSeries& g, cplx xx) {
                     FormalPowerSeries b = q_borel(g, q);
                     return q_laplace([&](cplx xi) { return b.eval(xi).value; }, xx, lam, q, T()).value;
                 };
                 FormalPowerSeries g = f.dilate(q, n).shift(m);
                 return {{"L+B+(x^m T^n f) = x^m T^n L+B+(f)", LB(g, x), ipow(x, m) * LB(f, ipow(q, n) * x)}};
             },
             1e-10});

    reg.add({"sec2-borel", "eq:q-Laplace; lem:lemma2",
             "q: |q| in [0.3,0.6); a: |a| in [0.5,2.0); xi: |xi| in [0.05,0.3)|a|; x: |x| in [0.3,1.5); lambda: |lambda| in [0.3,1.5)",
             [](Draw& d) -> Rows {
                 // the formal coefficients grow like |q|^{-n^2/2}; order 30 at |q| >= 0.3 stays finite
                 const cplx q = d.polar("q", 0.3, 0.6, -pi, pi);
                 const cplx a = d.polar("a", 0.5, 2.0, -pi, pi);
                 cplx xi = d.polar("xi", 0.05, 0.3, -pi, pi) * std::abs(a);
                 cplx x = d.polar("x", 0.3, 1.5, -pi, pi);
                 cplx lam = d.polar("lambda", 0.3, 1.5, -pi, pi);
                 off_qlattice(q, {{"-lambda/x", -lam / x}, {"-lambda/a", -lam / a}, {"a", a}});
                 FormalPowerSeries b = q_borel(hermite_weber_formal(a, q, 30), q);
                 auto closed = [&](cplx z) { return P(-z, q) / P(-z / a, q); };
                 return {{"B+(2phi0) at xi = (-xi)_inf/(-xi/a)_inf", b.eval(xi).value, closed(xi)},
                         {"L+ invariant under lambda -> lambda q", q_laplace(closed, x, lam * q, q, T()).value,
                          q_laplace(closed, x, lam, q, T()).value}};
             },
             1e-11});
}

}  // namespace qmu::cases
