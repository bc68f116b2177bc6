#pragma once

#include "qmu/cases/common.hpp"

namespace qmu::cases {

/// Common (u, v, alpha, tau) draw for the mu-function identities.
struct MuDraw {
    cplx u, v;
    double alpha;
    ModularPoint tau;
    cplx t() const { return tau.tau(); }
    cplx w() const { return u - v; }
    cplx A(cplx uu, cplx vv, double al) const { return M(uu, vv, al, tau); }
    cplx A(cplx uu, cplx vv) const { return M(uu, vv, alpha, tau); }
};

inline MuDraw draw_mu(Draw& d, double lo = -2.5, double hi = 2.5) {
    ModularPoint tau = d.tau();
    cplx u = d.coord("u"), v = d.coord("v");
    double al = d.alpha("alpha", lo, hi);
    off_lattice(tau, {{"u", u}, {"v", v}, {"u-v", u - v}, {"u - alpha tau", u - al * tau.tau()},
                      {"v - alpha tau", v - al * tau.tau()}});
    return {u, v, al, tau};
}

/// (u, v, tau) for Zwegers' mu.
struct ZwDraw {
    cplx u, v;
    ModularPoint tau;
};

inline ZwDraw draw_zw(Draw& d) {
    ModularPoint tau = d.tau();
    cplx u = d.coord("u"), v = d.coord("v");
    off_lattice(tau, {{"u", u}, {"v", v}, {"u-v", u - v}});
    return {u, v, tau};
}

/// i q^{1/8} (q)^3 theta(z) theta(u+v+z) / (theta(u) theta(v) theta(u+z) theta(v+z))
inline cplx translation_theta(cplx u, cplx v, cplx z, const ModularPoint& tau) {
    cplx pq = P(tau.q(), tau.q());
    return I * tau.qpow(0.125) * pq * pq * pq * th(z, tau) * th(u + v + z, tau) /
           (th(u, tau) * th(v, tau) * th(u + z, tau) * th(v + z, tau));
}

/// Phi(u, v; alpha) of the symmetry laws.
inline cplx Phi(cplx u, cplx v, double al, const ModularPoint& tau) {
    return phi_factor(MuPoint{u, v, al, tau}, T());
}

inline void add_zwegers(Registry& reg) {
    const std::string dom = "u, v: Re in [-0.45,0.45), Im in [-0.15,0.15); tau in {0.9i, 1.2i, 0.15+0.85i}";
    reg.add({"zwegers-periodicity", "eq:mu periodicity", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 cplx m = Z(s.u, s.v, s.tau);
                 return {{"mu(u+1,v) = -mu(u,v)", Z(s.u + 1.0, s.v, s.tau), -m},
                         {"mu(u,v+1) = -mu(u,v)", Z(s.u, s.v + 1.0, s.tau), -m}};
             },
             1e-12});

    reg.add({"zwegers-quasi", "eq:mu pseudo periodicity", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 cplx w = s.u - s.v;
                 cplx rhs = -e2pi(w) * s.tau.qpow(0.5) * Z(s.u, s.v, s.tau) - I * std::exp(pi * I * w) * s.tau.qpow(0.375);
                 return {{"mu(u+tau,v)", Z(s.u + s.tau.tau(), s.v, s.tau), rhs}};
             },
             1e-12});

    reg.add({"zwegers-translation", "eq:mu translation", dom + "; z: same box as u",
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 cplx z = d.coord("z");
                 off_lattice(s.tau, {{"z", z}, {"u+z", s.u + z}, {"v+z", s.v + z}});
                 return {{"mu(u+z,v+z)", Z(s.u + z, s.v + z, s.tau),
                          Z(s.u, s.v, s.tau) + translation_theta(s.u, s.v, z, s.tau)}};
             },
             1e-11});

    reg.add({"zwegers-symmetry", "eq:mu symmetry; eq:mu symmetry2; eq:mu symmetry3", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 cplx m = Z(s.u, s.v, s.tau);
                 cplx t = s.tau.tau();
                 return {{"mu(u+tau,v+tau) = mu(u,v)", Z(s.u + t, s.v + t, s.tau), m},
                         {"mu(v,u) = mu(u,v)", Z(s.v, s.u, s.tau), m},
                         {"mu(-u,-v) = mu(u,v)", Z(-s.u, -s.v, s.tau), m}};
             },
             1e-12});

    reg.add({"zwegers-bilateral", "eq:sym mu func 1; eq:sym mu func 2; eq:sym mu func 3", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 const cplx q = s.tau.q();
                 const cplx x = e2pi(s.u), y = e2pi(s.v);
                 off_qlattice(q, {{"x", x}, {"y", y}});
                 cplx m = Z(s.u, s.v, s.tau);
                 cplx pre = I * s.tau.qpow(-0.125) * std::exp(pi * I * (s.u + s.v));
                 return {{"1psi2 form", m, pre / (tq(-x, q) * (1.0 - y)) * ps({y}, {0.0, q * y}, q, q * x)},
                         {"2psi2 form", m, pre / (P(x, q) * P(y, q)) * ps({x, y}, {0.0, 0.0}, q, q)},
                         {"0psi2 form", m,
                          pre / (P(q / x, q) * P(q / y, q) * (1.0 - x) * (1.0 - y)) * ps({}, {q * x, q * y}, q, q * x * y)}};
             },
             1e-11});

    reg.add({"zwegers-qdiff", "eq:mu q-diff", dom,
             [](Draw& d) -> Rows {
                 auto s = draw_zw(d);
                 const cplx t = s.tau.tau();
                 const cplx r = e2pi(s.u - s.v) * s.tau.q();
                 cplx rhs = s.tau.qpow(0.5) * (1.0 - r) * Z(s.u + t, s.v, s.tau) + r * Z(s.u, s.v, s.tau);
                 return {{"mu(u+2tau,v)", Z(s.u + 2.0 * t, s.v, s.tau), rhs}};
             },
             1e-11});

    reg.add({"def1.1-special", "def:mua; eq:Hhat initial0", dom + "; alpha in (-2.5,2.5) off the integers",
             [](Draw& d) -> Rows {
                 auto s = draw_mu(d);
                 cplx c = -I * s.tau.qpow(-0.125);
                 return {{"mu(u,v;0) = -i q^{-1/8}", s.A(s.u, s.v, 0.0), c},
                         {"mu(u,v;1) = mu(u,v)", s.A(s.u, s.v, 1.0), Z(s.u, s.v, s.tau)},
                         {"mu(u,v;-0) = -i q^{-1/8} H_0", mu_negative_degree(0, s.u, s.v, s.tau, T()).value,
                          c * hermite_cq(0, {s.w(), s.tau.q()})}};
             },
             1e-10});

    // constant i q^{1/8}, or the variant constant 1 which fails
    auto thm11 = [](bool corrected) {
        return [corrected](Draw& d) -> Rows {
            auto s = draw_mu(d);
            HWParams p{s.alpha, s.tau, -e2pi(s.u)};
            cplx c = corrected ? I * s.tau.qpow(0.125) : cplx{1.0};
            return {{"f0(e^{2 pi i (u-v)}, -e^{2 pi i u})", f0_solution_w(s.w(), p, T()).value, c * s.A(s.u, s.v)}};
        };
    };
    const std::string mdom = dom + "; alpha in (-2.5,2.5) off the integers";
    reg.add({"thm1.1-const-iq18", "thm:mu and q-Hermite--Weber; eq:mu and q-Hermite--Weber", mdom, thm11(true), 1e-10});
    reg.add({"thm1.1-const-1", "thm:mu and q-Hermite--Weber; eq:mu and q-Hermite--Weber", mdom + "; constant 1",
             thm11(false), 1e-10, false});
}

inline void add_thm12(Registry& reg) {
    const std::string dom =
        "u, v: Re in [-0.45,0.45), Im in [-0.15,0.15); tau in {0.9i, 1.2i, 0.15+0.85i}; alpha in (-2.5,2.5) off the integers";
    using Fn = std::function<Rows(const MuDraw&, Draw&)>;
    auto add = [&](const char* name, const char* anchor, Fn f) {
        reg.add({name, std::string("thm:Thm1; ") + anchor, dom, [f](Draw& d) { auto s = draw_mu(d); return f(s, d); }, 1e-8});
    };
    add("thm1.2-eq1.28", "eq:main results0", [](const MuDraw& s, Draw&) -> Rows {
        cplx t = s.t(), r = e2pi(s.w()) * s.tau.q();
        return {{"mu(u+2tau,v)", s.A(s.u + 2.0 * t, s.v),
                 (1.0 - r) * s.tau.qpow(s.alpha / 2) * s.A(s.u + t, s.v) + r * s.A(s.u, s.v)}};
    });
    add("thm1.2-eq1.29", "eq:main results1", [](const MuDraw& s, Draw&) -> Rows {
        cplx m = s.A(s.u, s.v);
        return {{"e^{-pi i alpha} mu(u+1,v)", std::exp(-pi * I * s.alpha) * s.A(s.u + 1.0, s.v), m},
                {"e^{pi i alpha} mu(u,v+1)", std::exp(pi * I * s.alpha) * s.A(s.u, s.v + 1.0), m}};
    });
    add("thm1.2-eq1.30", "eq:main results2", [](const MuDraw& s, Draw&) -> Rows {
        cplx h = s.tau.qpow(s.alpha / 2);
        return {{"mu(u+tau,v)", s.A(s.u + s.t(), s.v),
                 -e2pi(s.w()) * h * s.A(s.u, s.v) + std::exp(pi * I * s.w()) * h * s.A(s.u, s.v, s.alpha - 1)}};
    });
    add("thm1.2-eq1.31", "eq:main results2-2", [](const MuDraw& s, Draw&) -> Rows {
        cplx rhs = s.tau.qpow(s.alpha / 2) * s.A(s.u, s.v) -
                   2.0 * I * std::exp(-pi * I * s.w()) * std::sin(pi * s.alpha * s.t()) * s.A(s.u, s.v, s.alpha + 1);
        return {{"mu(u-tau,v)", s.A(s.u - s.t(), s.v), rhs}};
    });
    add("thm1.2-eq1.32", "eq:main results3", [](const MuDraw& s, Draw& d) -> Rows {
        cplx z = d.coord("z");
        const cplx t = s.t(), at = s.alpha * t, q = s.tau.q();
        off_lattice(s.tau, {{"z", z}, {"u+z", s.u + z}, {"v+z", s.v + z}, {"u+z-alpha tau", s.u + z - at}});
        auto h = [&](cplx x) { return th(x, s.tau); };
        cplx r1 = h(s.u + z) * h(s.v + z - at) / (h(s.u + z - at) * h(s.v + z)) * e2pi(s.alpha * s.w()) * s.A(s.v, s.u);
        cplx pq = P(q, q);
        cplx r2 = I * P(s.tau.qpow(s.alpha), q) * pq * pq * s.tau.qpow((1.0 - 4.0 * s.alpha) / 8.0) * h(z) * h(s.u + s.v + z - at) /
                  (h(s.u) * h(s.v - at) * h(s.u + z - at) * h(s.v + z)) * std::exp(pi * I * (s.alpha - 1.0) * s.w()) *
                  ph({s.tau.qpow(1.0 - s.alpha)}, {0.0}, q, e2pi(-s.w()) * q);
        return {{"mu(u+z,v+z)", s.A(s.u + z, s.v + z), r1 - r2}};
    });
    add("thm1.2-eq1.33", "eq:main results4", [](const MuDraw& s, Draw&) -> Rows {
        return {{"mu(u+tau,v+tau)", s.A(s.u + s.t(), s.v + s.t()), s.A(s.u, s.v)}};
    });
    add("thm1.2-eq1.34", "eq:main results4-2", [](const MuDraw& s, Draw&) -> Rows {
        return {{"Phi(u,v) mu(v,u)", Phi(s.u, s.v, s.alpha, s.tau) * s.A(s.v, s.u), s.A(s.u, s.v)}};
    });
    add("thm1.2-eq1.35", "eq:main results4-3", [](const MuDraw& s, Draw&) -> Rows {
        cplx at = s.alpha * s.t();
        return {{"Phi(u,v) mu(-u+alpha tau,-v+alpha tau)", Phi(s.u, s.v, s.alpha, s.tau) * s.A(-s.u + at, -s.v + at),
                 s.A(s.u, s.v)}};
    });
    add("thm1.2-eq1.36", "eq:main results5", [](const MuDraw& s, Draw&) -> Rows {
        return {{"2 cos pi(u-v) mu(u,v)", 2.0 * std::cos(pi * s.w()) * s.A(s.u, s.v),
                 (1.0 - s.tau.qpow(-s.alpha)) * s.A(s.u, s.v, s.alpha + 1) + s.A(s.u, s.v, s.alpha - 1)}};
    });
}

inline void add_thm13(Registry& reg) {
    reg.add({"thm1.3", "Theorem 3",
             "u, v default box; tau default; alpha in (0.05,2.5) off the integers (|a| < 1 for the 2psi2 form)",
             [](Draw& d) -> Rows {
                 auto s = draw_mu(d, 0.05, 2.5);
                 MuPoint p{s.u, s.v, s.alpha, s.tau};
                 const cplx q = s.tau.q();
                 off_qlattice(q, {{"x", p.x()}, {"y", p.y()}, {"x/a", p.x() / p.a()}, {"y/a", p.y() / p.a()}});
                 cplx m = s.A(s.u, s.v);
                 Rows r;
                 for (auto [f, name] : {std::pair{MuForm::Def, "1psi2 in y"}, std::pair{MuForm::Alt1, "1psi2 in x"},
                                        std::pair{MuForm::Alt2, "2psi2"}, std::pair{MuForm::Alt3, "0psi2"}})
                     r.push_back({name, mu_general_expr(p, f, T()).value, m});
                 return r;
             },
             1e-10});
}

/// (u, v, tau) with an integer degree k.
struct KDraw {
    cplx u, v;
    long k;
    ModularPoint tau;
    cplx K(cplx uu, cplx vv, long kk) const { return M(uu, vv, static_cast<double>(kk), tau); }
    cplx K(cplx uu, cplx vv) const { return K(uu, vv, k); }
    cplx w() const { return u - v; }
};

inline KDraw draw_k(Draw& d, long lo, long hi) {
    auto s = draw_zw(d);
    long k = d.integer("k", lo, hi);
    return {s.u, s.v, k, s.tau};
}

/// sum_{j=0}^{k-1} (-1)^{k-1-j} / ((q)_j (q)_{k-1-j}) q^{(k-1-j)^2/2} mu(u - j tau, v)
inline cplx eq144_sum(const KDraw& s) {
    const cplx q = s.tau.q();
    cplx S = 0.0;
    for (long j = 0; j < s.k; ++j) {
        long m = s.k - 1 - j;
        S += (m % 2 == 0 ? 1.0 : -1.0) / (qpoch(q, q, j) * qpoch(q, q, m)) * s.tau.qpow(0.5 * static_cast<double>(m * m)) *
             Z(s.u - static_cast<double>(j) * s.tau.tau(), s.v, s.tau);
    }
    return S;
}

inline void add_cor14(Registry& reg) {
    const std::string dom = "u, v default box; tau default";
    reg.add({"cor1.4-shifts", "cor:Thm1 k; eq:mu k 5", dom + "; k in -3..3",
             [](Draw& d) -> Rows {
                 auto s = draw_k(d, -3, 3);
                 const long k = s.k;
                 const cplx t = s.tau.tau(), w = s.w();
                 const cplx h = s.tau.qpow(0.5 * static_cast<double>(k));
                 const double sg = k % 2 == 0 ? 1.0 : -1.0;
                 cplx m = s.K(s.u, s.v);
                 return {{"mu(u+1,v;k) = (-1)^k mu", s.K(s.u + 1.0, s.v), sg * m},
                         {"mu(u,v+1;k) = (-1)^k mu", s.K(s.u, s.v + 1.0), sg * m},
                         {"mu(u+tau,v;k)", s.K(s.u + t, s.v), -e2pi(w) * h * m + std::exp(pi * I * w) * h * s.K(s.u, s.v, k - 1)},
                         {"mu(u-tau,v;k)", s.K(s.u - t, s.v),
                          h * m - 2.0 * I * std::exp(-pi * I * w) * std::sin(pi * static_cast<double>(k) * t) * s.K(s.u, s.v, k + 1)},
                         {"mu(u+tau,v+tau;k)", s.K(s.u + t, s.v + t), m},
                         {"mu(v,u;k)", s.K(s.v, s.u), m},
                         {"mu(-u,-v;k)", s.K(-s.u, -s.v), m},
                         {"2 cos pi(u-v) mu(u,v;k)", 2.0 * std::cos(pi * w) * m,
                          (1.0 - ipow(s.tau.q(), -k)) * s.K(s.u, s.v, k + 1) + s.K(s.u, s.v, k - 1)}};
             },
             1e-10});

    reg.add({"cor1.4-translation", "cor:Thm1 k", dom + "; z default box; k in 0..3",
             [](Draw& d) -> Rows {
                 auto s = draw_k(d, 0, 3);
                 cplx z = d.coord("z");
                 off_lattice(s.tau, {{"z", z}, {"u+z", s.u + z}, {"v+z", s.v + z}});
                 const long k = s.k;
                 const cplx q = s.tau.q();
                 cplx qk = ipow(q, -k);
                 cplx corr = translation_theta(s.u, s.v, z, s.tau) * std::exp(-pi * I * static_cast<double>(k) * s.w()) /
                             qpoch(qk, q, k) * ph({qk}, {0.0}, q, e2pi(s.w()) * q);
                 return {{"mu(u+z,v+z;k+1)", s.K(s.u + z, s.v + z, k + 1), s.K(s.u, s.v, k + 1) + corr}};
             },
             1e-10});

    reg.add({"cor1.4-finite-product", "cor:Thm1 k", dom + "; k in 1..3",
             [](Draw& d) -> Rows {
                 auto s = draw_k(d, 1, 3);
                 const cplx q = s.tau.q(), x = e2pi(s.u), tt = s.tau.tau();
                 auto term = [&](long n) {
                     double nd = static_cast<double>(n);
                     cplx p = 1.0;
                     for (long l = 0; l < s.k; ++l) p /= 1.0 - x * ipow(q, n - l);
                     return (n % 2 == 0 ? 1.0 : -1.0) * e2pi((nd + 0.5) * s.v + 0.5 * nd * (nd + 1.0) * tt) * p;
                 };
                 cplx rhs = std::exp(pi * I * static_cast<double>(s.k) * s.w()) / th(s.v, s.tau) * sum_bilateral(term, T()).value;
                 return {{"mu(u,v;k) finite product form", s.K(s.u, s.v), rhs}};
             },
             1e-10});

    // prefactor e^{pi i (k-1)(u-v+tau)}, or the variant e^{-pi i (k-1)(u-v-tau)} which fails for k >= 2
    auto eq144 = [](bool proof_form) {
        return [proof_form](Draw& d) -> Rows {
            auto s = draw_k(d, proof_form ? 1 : 2, 3);
            const cplx t = s.tau.tau();
            const double km = static_cast<double>(s.k - 1);
            cplx pre = proof_form ? std::exp(pi * I * km * (s.w() + t)) : std::exp(-pi * I * km * (s.w() - t));
            return {{"mu(u,v;k) as a sum of mu(u - j tau, v)", s.K(s.u, s.v), pre * eq144_sum(s)}};
        };
    };
    reg.add({"cor1.4-eq1.44", "eq:mu k 7", dom + "; k in 1..3; prefactor e^{pi i (k-1)(u-v+tau)}", eq144(true), 1e-10});
    reg.add({"cor1.4-eq1.44-variant", "eq:mu k 7", dom + "; k in 2..3; prefactor e^{-pi i (k-1)(u-v-tau)}", eq144(false),
             1e-10, false});
}

}  // namespace qmu::cases
