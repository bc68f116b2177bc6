#pragma once

#include "qmu/cases/classic.hpp"
#include "qmu/cases/mu.hpp"

namespace qmu::cases {

/// (u, v, alpha, tau) with alpha > 0, so that |a| < 1 and the unilateral pieces converge.
struct XYDraw {
    MuDraw m;
    cplx q, x, y, a;
    cplx E() const { return std::exp(pi * I * m.alpha * m.w()); }
    cplx D() const { return tq(-y, q) * tq(-x / a, q); }
    cplx lhs() const { return I * m.tau.qpow(0.125) * m.A(m.u, m.v); }
};

inline XYDraw draw_xy(Draw& d) {
    auto m = draw_mu(d, 0.05, 2.5);
    const cplx q = m.tau.q(), x = e2pi(m.u), y = e2pi(m.v), a = m.tau.qpow(m.alpha);
    off_qlattice(q, {{"x", x}, {"y", y}, {"x/a", x / a}, {"y/a", y / a}});
    reject_unless(std::abs(a * q * q / (x * y)) < 0.9, "|a q^2/(xy)| too large");
    return {m, q, x, y, a};
}

inline cplx pp(std::initializer_list<cplx> xs, cplx q) {
    cplx p = 1.0;
    for (cplx z : xs) p *= P(z, q);
    return p;
}

inline void add_sec5(Registry& reg) {
    const std::string dom = "u, v default box; tau default; alpha in (0.05,2.5) off the integers; |a q^2/(xy)| < 0.9";

    reg.add({"sec5-split-2psi2", "unlabeled:bilateral splits", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_xy(d);
                 const cplx q = s.q, x = s.x, y = s.y, a = s.a;
                 cplx rhs = x * y / a * (1.0 - a / x) * (1.0 - a / y) * ph({x * q / a, y * q / a, q}, {0.0, 0.0}, q, a) +
                            ph({0.0, q}, {a * q / x, a * q / y}, q, -a * q * q / (x * y));
                 return {{"2psi2 = positive + negative part", ps({x / a, y / a}, {0.0, 0.0}, q, a), rhs}};
             },
             1e-10});

    // the positive part of the 0psi2 split carries xy/a; `factor` is the coefficient used
    auto split0 = [](bool corrected) {
        return [corrected](Draw& d) -> Rows {
            auto s = draw_xy(d);
            const cplx q = s.q, x = s.x, y = s.y, a = s.a;
            cplx c = corrected ? x * y / a : cplx{1.0};
            cplx rhs = c / ((1.0 - x) * (1.0 - y)) * ph({q}, {x * q, y * q}, q, x * y * q * q / a) +
                       ph({q / x, q / y, q}, {0.0, 0.0}, q, a);
            return {{"0psi2 = positive + negative part", ps({}, {x, y}, q, x * y / a), rhs}};
        };
    };
    reg.add({"sec5-split-0psi2", "unlabeled:bilateral splits", dom, split0(true), 1e-10});
    reg.add({"sec5-split-0psi2-variant", "unlabeled:bilateral splits", dom + "; without the factor xy/a", split0(false), 1e-10,
             false});

    auto rewrite = [](bool corrected) {
        return [corrected](Draw& d) -> Rows {
            auto s = draw_xy(d);
            const cplx q = s.q, x = s.x, y = s.y, a = s.a, E = s.E(), D = s.D();
            cplx neg2 = pp({a, q, a * q / x, a * q / y}, q) / D * ph({0.0, q}, {a * q / x, a * q / y}, q, -a * q * q / (x * y));
            cplx r1 = E * (x * y / a * pp({a, q, a / x, a / y}, q) / D * ph({x * q / a, y * q / a, q}, {0.0, 0.0}, q, a) + neg2);
            cplx c = corrected ? x * y / a : cplx{1.0};
            cplx r2 = E * (c * pp({a, q, x * q, y * q}, q) / D * ph({q}, {x * q, y * q}, q, x * y * q * q / a) +
                           pp({a, q, x, y}, q) / D * ph({q / x, q / y, q}, {0.0, 0.0}, q, a));
            if (!corrected) return Rows{{"0psi2 rewrite", s.lhs(), r2}};
            return Rows{{"2psi2 rewrite", s.lhs(), r1}, {"0psi2 rewrite", s.lhs(), r2}};
        };
    };
    reg.add({"sec5-mu-rewrite", "unlabeled:bilateral splits; Theorem 3", dom, rewrite(true), 1e-10});
    reg.add({"sec5-mu-rewrite-variant", "unlabeled:bilateral splits; Theorem 3", dom + "; 0psi2 rewrite without xy/a",
             rewrite(false), 1e-10, false});

    // corrected: + sign on the first Phi^(1) term and xy/a on the 1phi2 term of the second expression
    auto appell = [](bool corrected) {
        return [corrected](Draw& d) -> Rows {
            auto s = draw_xy(d);
            const cplx q = s.q, x = s.x, y = s.y, a = s.a, E = s.E(), D = s.D();
            reject_unless(std::abs(x * q / a) < 0.9 && std::abs(y * q / a) < 0.9, "|xq/a| or |yq/a| too large");
            reject_unless(std::abs(q / x) < 0.9 && std::abs(q / y) < 0.9, "|q/x| or |q/y| too large");
            cplx A1 = q_appell_phi1(a, 0.0, 0.0, a * q, q, x * q / a, y * q / a, T()).value;
            cplx A2 = q_appell_phi1(a, 0.0, 0.0, a * q, q, q / x, q / y, T()).value;
            double sg = corrected ? 1.0 : -1.0;
            cplx c = corrected ? x * y / a : cplx{1.0};
            cplx e1 = E * (sg * P(a * q, q) * tq(-y * q / a, q) / (P(q, q) * tq(-y * q, q)) * A1 +
                           pp({a, q, a * q / x, a * q / y}, q) / D * ph({0.0, q}, {a * q / x, a * q / y}, q, -a * q * q / (x * y)));
            cplx e2 = E * (c * pp({a, q, x * q, y * q}, q) / D * ph({q}, {x * q, y * q}, q, x * y * q * q / a) +
                           P(a * q, q) * tq(-x, q) / (P(q, q) * tq(-x / a, q)) * A2);
            return {{"Phi^(1)(xq/a, yq/a) expression", s.lhs(), e1}, {"Phi^(1)(q/x, q/y) expression", s.lhs(), e2}};
        };
    };
    const std::string domA = dom + "; |xq/a|, |yq/a|, |q/x|, |q/y| < 0.9";
    reg.add({"sec5-appell-expr", "q-Appell; eq:Andrews formula", domA, appell(true), 1e-8});
    reg.add({"sec5-appell-expr-variant", "q-Appell; eq:Andrews formula", domA + "; minus sign and no xy/a", appell(false), 1e-8,
             false});

    reg.add({"sec5-appell-system", "eq:q-Appell 2; eq:more reduce; eq:more reduce 2",
             "u, v default box; tau default; alpha in (-2.5,2.5) off the integers",
             [](Draw& d) -> Rows {
                 auto s = draw_mu(d);
                 const cplx t = s.t(), at = s.alpha * t;
                 const cplx q = s.tau.q(), x = e2pi(s.u), y = e2pi(s.v), a = s.tau.qpow(s.alpha);
                 off_lattice(s.tau, {{"v + alpha tau", s.v + at}});
                 // nu(q^i x, q^j y; a) in additive coordinates
                 auto nu = [&](double i, double j) {
                     cplx uu = s.u + i * t, vv = s.v + j * t, yy = e2pi(vv);
                     return std::exp(-pi * I * s.alpha * (uu - vv)) * tq(-a * yy, q) / tq(-yy, q) * s.A(uu + at, vv + at);
                 };
                 cplx n00 = nu(0, 0);
                 return {{"(1 - a T_x T_y) nu = 0", n00, a * nu(1, 1)},
                         {"[x(1 - T_y) - y(1 - T_x)] nu = 0", x * (n00 - nu(0, 1)), y * (n00 - nu(1, 0))}};
             },
             1e-8});

    reg.add({"sec5-appell-system-zwegers", "eq:q-Appell 3", "u, v default box; tau default; a = q",
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 const cplx t = s.tau.tau(), q = s.tau.q(), x = e2pi(s.u), y = e2pi(s.v);
                 off_lattice(s.tau, {{"v + tau", s.v + t}});
                 auto nz = [&](double i, double j) {
                     cplx uu = s.u + i * t, vv = s.v + j * t;
                     return -std::exp(-pi * I * (uu + vv)) * Z(uu, vv, s.tau);
                 };
                 cplx n00 = nz(0, 0);
                 cplx nu1 = std::exp(-pi * I * (s.u - s.v)) * tq(-q * y, q) / tq(-y, q) * M(s.u + t, s.v + t, 1.0, s.tau);
                 return {{"(1 - q T_x T_y) nu = 0", n00, q * nz(1, 1)},
                         {"[x(1 - T_y) - y(1 - T_x)] nu = 0", x * (n00 - nz(0, 1)), y * (n00 - nz(1, 0))},
                         {"nu(x,y;q) = -(xy)^{-1/2} mu(u,v)", nu1, n00}};
             },
             1e-8});

    reg.add({"sec5-appell-phi1-system", "eq:Asystem3; eq:q-Appell 2",
             "q: |q| in [0.1,0.5); a, b1, b2, c: |.| in [0.1,0.7); x, y: |.| in [0.1,0.6)",
             [](Draw& d) -> Rows {
                 cplx q = complex_nome(d);
                 cplx a = d.polar("a", 0.1, 0.7, -pi, pi);
                 cplx b1 = d.polar("b1", 0.1, 0.7, -pi, pi);
                 cplx b2 = d.polar("b2", 0.1, 0.7, -pi, pi);
                 cplx c = d.polar("c", 0.1, 0.7, -pi, pi);
                 cplx x = d.polar("x", 0.1, 0.6, -pi, pi);
                 cplx y = d.polar("y", 0.1, 0.6, -pi, pi);
                 auto rows = [&](cplx B1, cplx B2, cplx C, const std::string& tag) {
                     auto F = [&](long i, long j) { return q_appell_phi1(a, B1, B2, C, q, x * ipow(q, i), y * ipow(q, j), T()).value; };
                     cplx F00 = F(0, 0), F10 = F(1, 0), F01 = F(0, 1), F11 = F(1, 1), F21 = F(2, 1), F12 = F(1, 2);
                     cplx cq = C / q;
                     return Rows{{tag + "first equation", F00 - F10 - cq * F11 + cq * F21, x * (F00 - B1 * F10 - a * F11 + a * B1 * F21)},
                                 {tag + "second equation", F00 - F01 - cq * F11 + cq * F12, y * (F00 - B2 * F01 - a * F11 + a * B2 * F12)},
                                 {tag + "third equation", x * (F00 - B1 * F10 - F01 + B1 * F11), y * (F00 - B2 * F01 - F10 + B2 * F11)}};
                 };
                 Rows r = rows(b1, b2, c, "");
                 Rows s = rows(0.0, 0.0, a * q, "b1 = b2 = 0, c = aq: ");
                 r.insert(r.end(), s.begin(), s.end());
                 return r;
             },
             1e-10});
}

}  // namespace qmu::cases
